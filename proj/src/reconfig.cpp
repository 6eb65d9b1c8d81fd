#include "pcl/reconfig.hpp"

#include <algorithm>

#include "pcl/error.hpp"

namespace pcl {

Config config_of(const Implementation& impl, uint64_t l) {
  if (impl.loop.empty()) fail(errc::empty_loop, "implementation has an empty loop");
  if (l < impl.prefix.size()) return impl.prefix[l];
  return impl.loop[(l - impl.prefix.size()) % impl.loop.size()];
}

Implementation rotate_loop(const Implementation& impl) {
  if (impl.loop.empty()) fail(errc::empty_loop, "implementation has an empty loop");
  Implementation out;
  out.prefix = impl.prefix;
  out.prefix.push_back(impl.loop.front());
  out.loop.assign(impl.loop.begin() + 1, impl.loop.end());
  out.loop.push_back(impl.loop.front());
  return out;
}

Implementation unroll_loop(const Implementation& impl) {
  if (impl.loop.empty()) fail(errc::empty_loop, "implementation has an empty loop");
  Implementation out = impl;
  out.loop.insert(out.loop.end(), impl.loop.begin(), impl.loop.end());
  return out;
}

namespace {

Config active_set(const Assignment& step, const Universe& u) {
  if (step.size() != u.size())
    fail(errc::invalid_interaction, "assignment is not total over the interaction list");
  std::vector<InteractionId> ids;
  for (InteractionId i = 0; i < u.size(); ++i)
    if (step[i]) ids.push_back(i);
  if (ids.empty())
    fail(errc::empty_configuration, "a step activating no interaction has no configuration");
  return Config{std::move(ids)};
}

}  // namespace

Implementation implementation_from_assignments(const AssignmentLasso& steps, const Universe& u) {
  if (steps.loop.empty()) fail(errc::empty_loop, "implementation has an empty loop");
  Implementation impl;
  for (const Assignment& s : steps.prefix) impl.prefix.push_back(active_set(s, u));
  for (const Assignment& s : steps.loop) impl.loop.push_back(active_set(s, u));
  return impl;
}

AssignmentLasso assignments_of(const Implementation& impl, const Universe& u) {
  auto to_assignment = [&](const Config& c) {
    Assignment a(u.size(), false);
    for (InteractionId id : c.ids) a[id] = true;
    return a;
  };
  AssignmentLasso out;
  for (const Config& c : impl.prefix) out.prefix.push_back(to_assignment(c));
  for (const Config& c : impl.loop) out.loop.push_back(to_assignment(c));
  return out;
}

Dra make_dra(std::shared_ptr<const System> system, std::shared_ptr<const Universe> universe,
             Pcl formula, Implementation implementation) {
  if (implementation.loop.empty()) fail(errc::empty_loop, "implementation has an empty loop");
  std::vector<Port> mentioned;
  formula.collect_ports(mentioned);
  for (const Port& p : mentioned)
    if (!system->port_id(p))
      fail(errc::universe_mismatch, "formula mentions port " + p.name() + " outside the system");
  auto check = [&](const Config& c) {
    if (c.ids.empty()) fail(errc::empty_configuration, "empty configuration in implementation");
    if (c.ids.back() >= universe->size())
      fail(errc::invalid_interaction, "configuration refers to an unknown interaction");
  };
  for (const Config& c : implementation.prefix) check(c);
  for (const Config& c : implementation.loop) check(c);
  return Dra{std::move(system), std::move(universe), std::move(formula), std::move(implementation)};
}

TrustVerdict is_trustworthy(const Dra& dra, Limits limits) {
  ConfigAcceptor acceptor = build_trust_automaton(dra.formula, *dra.universe, limits);
  TrustVerdict v;
  v.trustworthy = acceptor.accepts_word(dra.implementation.prefix, dra.implementation.loop);
  if (!v.trustworthy) {
    for (std::size_t i = 0; i < dra.implementation.loop.size(); ++i)
      if (!acceptor.good.contains(dra.implementation.loop[i])) v.loop_violations.push_back(i);
    return v;
  }
  // least g with every position beyond it satisfying: the last violating
  // prefix position, or 0 when nothing violates
  for (std::size_t i = 0; i < dra.implementation.prefix.size(); ++i)
    if (!acceptor.good.contains(dra.implementation.prefix[i])) v.stabilization = i;
  return v;
}

namespace {

// lexicographically least satisfying subset of gamma: the first normal-form
// disjunct contained in it (disjuncts are sorted)
std::optional<Config> least_satisfying_subset(const Config& gamma,
                                              const std::vector<Config>& disjuncts) {
  for (const Config& d : disjuncts)
    if (config_subset(d, gamma)) return d;
  return std::nullopt;
}

}  // namespace

PartialTrustVerdict is_partially_trustworthy(const Dra& dra, Limits limits) {
  FullNormalForm fnf = full_normal_form(dra.formula, *dra.universe, limits);
  ConfigAcceptor acceptor =
      make_config_acceptor(*dra.universe, SatSet::upward_closure(*dra.universe, fnf.disjuncts));

  PartialTrustVerdict v;
  v.partially_trustworthy =
      acceptor.accepts_word(dra.implementation.prefix, dra.implementation.loop);
  if (!v.partially_trustworthy) return v;

  const auto& prefix = dra.implementation.prefix;
  std::vector<std::optional<Config>> prefix_subsets;
  prefix_subsets.reserve(prefix.size());
  for (const Config& c : prefix) prefix_subsets.push_back(least_satisfying_subset(c, fnf.disjuncts));
  // least g such that every position from g on has a satisfying subset
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (!prefix_subsets[i]) v.stabilization = i + 1;
  for (std::size_t i = v.stabilization; i < prefix.size(); ++i)
    v.prefix_witness.push_back(*prefix_subsets[i]);
  for (const Config& c : dra.implementation.loop)
    v.loop_witness.push_back(*least_satisfying_subset(c, fnf.disjuncts));
  return v;
}

Implementation correct(const Dra& dra, Limits limits) {
  FullNormalForm fnf = full_normal_form(dra.formula, *dra.universe, limits);
  auto satisfies = [&](const Config& c) {
    return std::binary_search(fnf.disjuncts.begin(), fnf.disjuncts.end(), c);
  };
  for (const Config& c : dra.implementation.loop)
    if (!least_satisfying_subset(c, fnf.disjuncts))
      fail(errc::not_partially_trustworthy,
           "loop configuration " + dra.universe->config_name(c) + " has no satisfying subset");

  const auto& prefix = dra.implementation.prefix;
  uint64_t g = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (!least_satisfying_subset(prefix[i], fnf.disjuncts)) g = i + 1;

  auto restrict_config = [&](const Config& c) {
    if (satisfies(c)) return c;  // already satisfying: keep verbatim
    return *least_satisfying_subset(c, fnf.disjuncts);
  };
  Implementation out;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    out.prefix.push_back(i < g ? prefix[i] : restrict_config(prefix[i]));
  for (const Config& c : dra.implementation.loop) out.loop.push_back(restrict_config(c));
  return out;
}

DraEquivalence dra_equivalent(const Dra& a, const Dra& b, Limits limits) {
  if (!(*a.system == *b.system)) return {false, "systems differ"};
  if (!equivalent(a.formula, b.formula, *a.universe, limits).equivalent)
    return {false, "formulas not equivalent"};
  if (!is_trustworthy(a, limits).trustworthy)
    return {false, "first implementation not trustworthy"};
  if (!is_trustworthy(b, limits).trustworthy)
    return {false, "second implementation not trustworthy"};
  return {true, ""};
}

}  // namespace pcl
