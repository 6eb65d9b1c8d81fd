// reconfig.hpp -- implementations of reconfigurable architectures and the
// trustworthiness, equivalence, and correction decisions
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pcl/buchi.hpp"
#include "pcl/satset.hpp"
#include "pcl/system.hpp"

namespace pcl {

// An ultimately periodic sequence of configurations: position l holds
// prefix[l] while l is inside the prefix and then cycles through the loop.
// Each position's configuration is the set of interactions active at that
// step, so this is the finite presentation of a reconfiguration sequence.
struct Implementation {
  std::vector<Config> prefix;
  std::vector<Config> loop;  // non-empty
};

Config config_of(const Implementation& impl, uint64_t l);

// presentation changes that leave the denoted sequence's tail untouched
Implementation rotate_loop(const Implementation& impl);
Implementation unroll_loop(const Implementation& impl);

// Activation maps, total over a universe's interaction list: active[id] tells
// whether interaction id is active at that step.
using Assignment = std::vector<bool>;

struct AssignmentLasso {
  std::vector<Assignment> prefix;
  std::vector<Assignment> loop;
};

// Converts each step to its active set. A step activating nothing has no
// configuration and is refused (EMPTY_CONFIGURATION).
Implementation implementation_from_assignments(const AssignmentLasso& steps, const Universe& u);
AssignmentLasso assignments_of(const Implementation& impl, const Universe& u);

// A dynamic reconfigurable architecture: a system, a formula over its ports,
// and an implementation over its interactions.
struct Dra {
  std::shared_ptr<const System> system;
  std::shared_ptr<const Universe> universe;  // the system's interaction space
  Pcl formula;
  Implementation implementation;
};

// Validates coherence (formula ports and configurations inside the system).
Dra make_dra(std::shared_ptr<const System> system, std::shared_ptr<const Universe> universe,
             Pcl formula, Implementation implementation);

struct TrustVerdict {
  bool trustworthy = false;
  // least g such that every position l > g satisfies the formula
  uint64_t stabilization = 0;
  // loop positions whose configurations violate the formula
  std::vector<std::size_t> loop_violations;
};

// Decides trustworthiness by running the implementation through the two-state
// acceptor built from the formula's satisfying set.
TrustVerdict is_trustworthy(const Dra& dra, Limits limits = {});

struct PartialTrustVerdict {
  bool partially_trustworthy = false;
  // least g such that every position l >= g contains a satisfying subset
  uint64_t stabilization = 0;
  // chosen satisfying subsets: one per prefix position from g on, one per loop position
  std::vector<Config> prefix_witness;
  std::vector<Config> loop_witness;
};

// Decides partial trustworthiness via the dominating-set acceptor. Witnesses
// are the lexicographically least satisfying subsets.
PartialTrustVerdict is_partially_trustworthy(const Dra& dra, Limits limits = {});

// Restricts a partially trustworthy implementation to satisfying subsets from
// the stabilization point on; positions already satisfying the formula are
// kept verbatim, as are pre-stabilization prefix positions. The result is
// trustworthy. Errors with NOT_PARTIALLY_TRUSTWORTHY otherwise.
Implementation correct(const Dra& dra, Limits limits = {});

struct DraEquivalence {
  bool equivalent = false;
  std::string reason;  // first failing conjunct when not equivalent
};

// Equal systems, equivalent formulas, and both implementations trustworthy,
// checked in that order.
DraEquivalence dra_equivalent(const Dra& a, const Dra& b, Limits limits = {});

}  // namespace pcl
