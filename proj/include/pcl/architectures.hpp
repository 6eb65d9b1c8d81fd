// architectures.hpp -- parametric generators for the six architecture styles
#pragma once

#include <string>
#include <vector>

#include "pcl/pcl_formula.hpp"
#include "pcl/system.hpp"

namespace pcl {

struct Architecture {
  System system;
  Pcl formula;
};

// Every slave is connected to a unique master through a {m,s} interaction; the
// formula asks for at least one connected slave.
Architecture gen_master_slave(int masters, int slaves);

// Publishers feed topics through {p,t_p}; subscribers listen through {s,t_s}.
// A configuration is accepted when some subscriber is fed through a topic with
// a publisher behind it, or some topic has a publisher.
Architecture gen_publish_subscribe(int publishers, int topics, int subscribers);

// Filters sit between two distinct pipes via {in_f,out_p} and {out_f,in_p};
// the two pipeline ends are a pipe with a dangling input and a pipe with a
// dangling output, contributed as separate coalesced parts.
Architecture gen_pipes_filters(int pipes, int filters);

// One node is the center; at least one other node is connected to it through
// a {p,p} interaction, and nothing else is allowed.
Architecture gen_star(int nodes);

// One blackboard and one controller: the blackboard informs the controller
// and every knowledge source, and at least one source writes back through the
// three-way {b2,s2,c2} interaction.
Architecture gen_blackboard(int sources);

// A client talks to a service through a coordinator: connect, request,
// respond. The side condition (configuration-level intersection) forbids a
// coordinator from serving two services.
Architecture gen_request_response(int services, int clients, int coordinators);

// Dispatch by style name; counts must match the style's arity.
Architecture generate(const std::string& style, const std::vector<int>& counts);

const std::vector<std::string>& architecture_styles();

}  // namespace pcl
