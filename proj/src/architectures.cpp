#include "pcl/architectures.hpp"

#include "pcl/error.hpp"
#include "pcl/pil.hpp"

namespace pcl {

namespace {

void require_positive(int count, const std::string& what) {
  if (count < 1) fail(errc::zero_count, what + " count must be at least 1, got " + std::to_string(count));
}

// the lifted characteristic monomial of one interaction over the system's ports
Pcl mono(const System& sys, std::vector<Port> ports) {
  return Pcl::lift(characteristic_monomial(Interaction(std::move(ports)), sys.ports()));
}

}  // namespace

Architecture gen_master_slave(int masters, int slaves) {
  require_positive(masters, "master");
  require_positive(slaves, "slave");
  System sys = System::instantiate({{{"Master", {"m"}, {}}, masters}, {{"Slave", {"s"}, {}}, slaves}});
  std::vector<Pcl> per_slave;
  for (int j = 1; j <= slaves; ++j) {
    std::vector<Pcl> links;
    for (int k = 1; k <= masters; ++k) links.push_back(mono(sys, {{"m", k}, {"s", j}}));
    per_slave.push_back(Pcl::unite_all(links));
  }
  return {std::move(sys), Pcl::disjoin_all(per_slave)};
}

Architecture gen_publish_subscribe(int publishers, int topics, int subscribers) {
  require_positive(publishers, "publisher");
  require_positive(topics, "topic");
  require_positive(subscribers, "subscriber");
  System sys = System::instantiate({{{"Publisher", {"p"}, {}}, publishers},
                                    {{"Topic", {"t_p", "t_s"}, {}}, topics},
                                    {{"Subscriber", {"s"}, {}}, subscribers}});
  auto topic_fed = [&](int j) {  // some publisher feeds topic j
    std::vector<Pcl> links;
    for (int k = 1; k <= publishers; ++k) links.push_back(mono(sys, {{"p", k}, {"t_p", j}}));
    return Pcl::disjoin_all(links);
  };
  auto subscriber_fed = [&](int r) {  // subscriber r listens to a fed topic
    std::vector<Pcl> options;
    for (int j = 1; j <= topics; ++j)
      options.push_back(Pcl::coalesce(mono(sys, {{"s", r}, {"t_s", j}}), topic_fed(j)));
    return Pcl::disjoin_all(options);
  };
  std::vector<Pcl> subs, feds;
  for (int r = 1; r <= subscribers; ++r) subs.push_back(subscriber_fed(r));
  for (int j = 1; j <= topics; ++j) feds.push_back(topic_fed(j));
  return {std::move(sys), Pcl::disjoin(Pcl::disjoin_all(subs), Pcl::disjoin_all(feds))};
}

Architecture gen_pipes_filters(int pipes, int filters) {
  require_positive(filters, "filter");
  if (pipes < 2)
    fail(errc::insufficient_pipes,
         "a filter needs two distinct pipes, got " + std::to_string(pipes));
  System sys = System::instantiate(
      {{{"Pipe", {"in_p", "out_p"}, {}}, pipes}, {{"Filter", {"in_f", "out_f"}, {}}, filters}});
  auto feed = [&](int f, int p) { return mono(sys, {{"in_f", f}, {"out_p", p}}); };   // filter f reads pipe p
  auto drain = [&](int f, int p) { return mono(sys, {{"out_f", f}, {"in_p", p}}); };  // filter f writes pipe p

  // each filter sits between two distinct pipes, with every other connection
  // of that filter excluded
  std::vector<Pcl> per_filter;
  for (int j = 1; j <= filters; ++j) {
    std::vector<Pcl> placements;
    for (int i1 = 1; i1 <= pipes; ++i1)
      for (int i2 = 1; i2 <= pipes; ++i2) {
        if (i2 == i1) continue;
        std::vector<Pcl> excluded;
        for (int other = 1; other <= pipes; ++other) {
          if (other != i1) excluded.push_back(Pcl::negation(feed(j, other)));
        }
        for (int other = 1; other <= pipes; ++other) {
          if (other != i2) excluded.push_back(Pcl::negation(drain(j, other)));
        }
        placements.push_back(Pcl::intersect(Pcl::coalesce(feed(j, i1), drain(j, i2)),
                                            Pcl::intersect_all(excluded)));
      }
    per_filter.push_back(Pcl::unite_all(placements));
  }
  Pcl assembled = Pcl::coalesce_all(per_filter);

  // each pipe's output feeds at most all-but-one of the filters
  std::vector<Pcl> per_pipe;
  for (int r = 1; r <= pipes; ++r) {
    std::vector<Pcl> alternatives;
    for (int j1 = 1; j1 <= filters; ++j1) {
      std::vector<Pcl> others;
      for (int j2 = 1; j2 <= filters; ++j2)
        if (j2 != j1) others.push_back(Pcl::negation(feed(j2, r)));
      alternatives.push_back(Pcl::intersect_all(others));
    }
    per_pipe.push_back(Pcl::unite_all(alternatives));
  }
  Pcl fan_in = Pcl::intersect_all(per_pipe);

  // the pipeline ends: a pipe whose output is consumed but whose input is
  // dangling, and a pipe whose input is fed but whose output is dangling;
  // the two ends are separate parts of the configuration, so they are
  // contributed by coalescing
  auto head_end = [&](int k) {
    std::vector<Pcl> fed, undrained;
    for (int i = 1; i <= filters; ++i) {
      fed.push_back(feed(i, k));
      undrained.push_back(Pcl::negation(drain(i, k)));
    }
    return Pcl::intersect(Pcl::unite_all(fed), Pcl::intersect_all(undrained));
  };
  auto tail_end = [&](int k) {
    std::vector<Pcl> drained, unfed;
    for (int i = 1; i <= filters; ++i) {
      drained.push_back(drain(i, k));
      unfed.push_back(Pcl::negation(feed(i, k)));
    }
    return Pcl::intersect(Pcl::unite_all(drained), Pcl::intersect_all(unfed));
  };
  std::vector<Pcl> end_pairs;
  for (int k1 = 1; k1 <= pipes; ++k1)
    for (int k2 = 1; k2 <= pipes; ++k2) {
      if (k2 == k1) continue;
      end_pairs.push_back(Pcl::coalesce(head_end(k1), tail_end(k2)));
    }
  Pcl ends = Pcl::unite_all(end_pairs);

  return {std::move(sys), Pcl::intersect(Pcl::intersect(assembled, fan_in), ends)};
}

Architecture gen_star(int nodes) {
  if (nodes < 2)
    fail(errc::insufficient_nodes, "a star needs a center and a peer, got " + std::to_string(nodes));
  System sys = System::instantiate({{{"Node", {"p"}, {}}, nodes}});
  std::vector<Pcl> per_center;
  for (int j = 1; j <= nodes; ++j) {
    std::vector<Pcl> spokes;
    for (int i = 1; i <= nodes; ++i)
      if (i != j) spokes.push_back(mono(sys, {{"p", j}, {"p", i}}));
    per_center.push_back(Pcl::disjoin_all(spokes));
  }
  return {std::move(sys), Pcl::unite_all(per_center)};
}

Architecture gen_blackboard(int sources) {
  require_positive(sources, "knowledge source");
  System sys = System::instantiate({{{"Blackboard", {"b1", "b2"}, {}}, 1},
                                    {{"Source", {"s1", "s2"}, {}}, sources},
                                    {{"Controller", {"c1", "c2"}, {}}, 1}});
  Pcl inform_controller = mono(sys, {{"b1", 1}, {"c1", 1}});
  std::vector<Pcl> informs, writes;
  for (int j = 1; j <= sources; ++j) {
    informs.push_back(mono(sys, {{"b1", 1}, {"s1", j}}));
    writes.push_back(mono(sys, {{"b2", 1}, {"s2", j}, {"c2", 1}}));
  }
  Pcl f = Pcl::coalesce(Pcl::coalesce(inform_controller, Pcl::coalesce_all(informs)),
                        Pcl::disjoin_all(writes));
  return {std::move(sys), f};
}

Architecture gen_request_response(int services, int clients, int coordinators) {
  require_positive(services, "service");
  require_positive(clients, "client");
  require_positive(coordinators, "coordinator");
  System sys = System::instantiate({{{"Service", {"get_s", "send"}, {}}, services},
                                    {{"Client", {"con_cl", "req", "rec"}, {}}, clients},
                                    {{"Coordinator", {"con_c", "get_c", "dsc"}, {}}, coordinators}});
  auto connect = [&](int k, int j) { return mono(sys, {{"con_cl", k}, {"con_c", j}}); };
  auto request = [&](int i, int k, int j) {
    return mono(sys, {{"get_s", i}, {"req", k}, {"get_c", j}});
  };
  auto respond = [&](int i, int k, int j) {
    return mono(sys, {{"send", i}, {"rec", k}, {"dsc", j}});
  };

  // connect + request + respond for service i with one client/coordinator pair
  auto session = [&](int i) {
    std::vector<Pcl> choices;
    for (int k = 1; k <= clients; ++k)
      for (int j = 1; j <= coordinators; ++j)
        choices.push_back(
            Pcl::coalesce(Pcl::coalesce(connect(k, j), request(i, k, j)), respond(i, k, j)));
    return Pcl::unite_all(choices);
  };

  // a coordinator handling a request may not handle one for another service;
  // all conjunctions here are configuration-level intersections
  std::vector<Pcl> guards;
  for (int i1 = 1; i1 <= services; ++i1)
    for (int k1 = 1; k1 <= clients; ++k1)
      for (int j1 = 1; j1 <= coordinators; ++j1) {
        std::vector<Pcl> exclusive;
        for (int i2 = 1; i2 <= services; ++i2) {
          if (i2 == i1) continue;
          for (int k2 = 1; k2 <= clients; ++k2)
            exclusive.push_back(Pcl::negation(request(i2, k2, j1)));
        }
        Pcl present = Pcl::intersect(Pcl::closure(request(i1, k1, j1)), Pcl::intersect_all(exclusive));
        guards.push_back(Pcl::unite(Pcl::negation(request(i1, k1, j1)), present));
      }
  Pcl guard = Pcl::intersect_all(guards);

  std::vector<Pcl> per_service;
  for (int i = 1; i <= services; ++i) per_service.push_back(Pcl::intersect(session(i), guard));
  return {std::move(sys), Pcl::disjoin_all(per_service)};
}

const std::vector<std::string>& architecture_styles() {
  static const std::vector<std::string> styles = {"master-slave",     "publish-subscribe",
                                                  "pipes-filters",    "star",
                                                  "blackboard",       "request-response"};
  return styles;
}

Architecture generate(const std::string& style, const std::vector<int>& counts) {
  auto need = [&](std::size_t n, const char* shape) {
    if (counts.size() != n)
      fail(errc::parse_error, style + " takes " + shape + ", got " +
                                  std::to_string(counts.size()) + " counts");
  };
  if (style == "master-slave") {
    need(2, "2 counts (masters,slaves)");
    return gen_master_slave(counts[0], counts[1]);
  }
  if (style == "publish-subscribe") {
    need(3, "3 counts (publishers,topics,subscribers)");
    return gen_publish_subscribe(counts[0], counts[1], counts[2]);
  }
  if (style == "pipes-filters") {
    need(2, "2 counts (pipes,filters)");
    return gen_pipes_filters(counts[0], counts[1]);
  }
  if (style == "star") {
    need(1, "1 count (nodes)");
    return gen_star(counts[0]);
  }
  if (style == "blackboard") {
    need(1, "1 count (knowledge sources)");
    return gen_blackboard(counts[0]);
  }
  if (style == "request-response") {
    need(3, "3 counts (services,clients,coordinators)");
    return gen_request_response(counts[0], counts[1], counts[2]);
  }
  fail(errc::parse_error, "unknown architecture style: " + style);
}

}  // namespace pcl
