#include "pcl/satset.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "pcl/error.hpp"

namespace pcl {

namespace {

std::shared_ptr<const std::vector<Config>> shared_sorted(std::vector<Config> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return std::make_shared<const std::vector<Config>>(std::move(v));
}

Config config_union(const Config& a, const Config& b) {
  std::vector<InteractionId> ids;
  ids.reserve(a.ids.size() + b.ids.size());
  std::set_union(a.ids.begin(), a.ids.end(), b.ids.begin(), b.ids.end(), std::back_inserter(ids));
  return Config{std::move(ids)};
}

}  // namespace

SatSet SatSet::none(const Universe& u) { return of_members(u, {}); }
SatSet SatSet::all(const Universe& u) { return excluding(u, {}); }

SatSet SatSet::of_members(const Universe& u, std::vector<Config> members) {
  SatSet s(u, Repr::Explicit);
  s.base_ = shared_sorted(std::move(members));
  return s;
}

SatSet SatSet::excluding(const Universe& u, std::vector<Config> non_members) {
  SatSet s(u, Repr::Complement);
  s.base_ = shared_sorted(std::move(non_members));
  return s;
}

SatSet SatSet::predicate(const Universe& u, std::function<bool(const Config&)> test) {
  SatSet s(u, Repr::Predicate);
  s.pred_ = std::move(test);
  return s;
}

SatSet SatSet::upward_closure(const Universe& u, std::vector<Config> bases) {
  if (bases.empty()) return none(u);
  auto shared = shared_sorted(std::move(bases));
  SatSet s(u, Repr::Predicate);
  s.pred_ = [shared](const Config& c) {
    for (const Config& base : *shared)
      if (config_subset(base, c)) return true;
    return false;
  };
  return s;
}

bool SatSet::contains(const Config& c) const {
  switch (repr_) {
    case Repr::Explicit: return std::binary_search(base_->begin(), base_->end(), c);
    case Repr::Complement: return !std::binary_search(base_->begin(), base_->end(), c);
    case Repr::Predicate: return pred_(c);
  }
  return false;
}

const std::vector<Config>& SatSet::members() const {
  if (repr_ != Repr::Explicit) throw std::logic_error("members() on a non-explicit set");
  return *base_;
}

const std::vector<Config>& SatSet::non_members() const {
  if (repr_ != Repr::Complement) throw std::logic_error("non_members() on a non-complement set");
  return *base_;
}

SatSet SatSet::complemented() const {
  switch (repr_) {
    case Repr::Explicit: {
      SatSet s(*universe_, Repr::Complement);
      s.base_ = base_;
      return s;
    }
    case Repr::Complement: {
      SatSet s(*universe_, Repr::Explicit);
      s.base_ = base_;
      return s;
    }
    case Repr::Predicate: {
      SatSet s(*universe_, Repr::Predicate);
      auto inner = pred_;
      s.pred_ = [inner](const Config& c) { return !inner(c); };
      return s;
    }
  }
  return *this;
}

SatSet SatSet::materialize(uint64_t config_cap) const {
  if (repr_ == Repr::Explicit) return *this;
  uint64_t count = universe_->config_count();
  if (count > config_cap)
    fail(errc::resource_limit, "materializing a set over " + std::to_string(count) +
                                   " configurations exceeds the cap of " + std::to_string(config_cap));
  std::vector<Config> members;
  ConfigEnumerator en(universe_->size());
  while (auto c = en.next())
    if (contains(*c)) members.push_back(std::move(*c));
  // enumeration is lexicographic, so the result is already sorted
  SatSet s(*universe_, Repr::Explicit);
  s.base_ = std::make_shared<const std::vector<Config>>(std::move(members));
  return s;
}

namespace {

// Bottom-up computation over the core grammar. Results are cached per node so
// that the desugared forms of derived operators, which duplicate their
// operands, are computed once.
class SatSetBuilder {
public:
  SatSetBuilder(const Universe& u, Limits limits) : u_(&u), limits_(limits) {}

  SatSet compute(const Pcl& f) {
    auto it = cache_.find(f.node_id());
    if (it != cache_.end()) return it->second;
    SatSet result = compute_uncached(f);
    cache_.emplace(f.node_id(), result);
    return result;
  }

private:
  const Universe* u_;
  Limits limits_;
  std::unordered_map<const void*, SatSet> cache_;

  SatSet compute_uncached(const Pcl& f) {
    switch (f.kind()) {
      case Pcl::Kind::True:
        return SatSet::all(*u_);
      case Pcl::Kind::Pil:
        return pil_leaf(f.pil());
      case Pcl::Kind::Not: {
        // intersection pattern: not(not a or not b) keeps explicit operands
        // explicit instead of flipping through two complements
        Pcl inner = f.child();
        if (inner.kind() == Pcl::Kind::Union && inner.lhs().kind() == Pcl::Kind::Not &&
            inner.rhs().kind() == Pcl::Kind::Not)
          return intersect_op(compute(inner.lhs().child()), compute(inner.rhs().child()));
        return compute(inner).complemented();
      }
      case Pcl::Kind::Union:
        return union_op(compute(f.lhs()), compute(f.rhs()));
      case Pcl::Kind::Coalesce: {
        if (f.lhs().kind() == Pcl::Kind::True && f.rhs().kind() == Pcl::Kind::True)
          return SatSet::all(*u_);
        // a coalescing with true is the upward closure of the other side
        if (f.rhs().kind() == Pcl::Kind::True) return closure_op(compute(f.lhs()));
        if (f.lhs().kind() == Pcl::Kind::True) return closure_op(compute(f.rhs()));
        return coalesce_op(compute(f.lhs()), compute(f.rhs()));
      }
    }
    return SatSet::none(*u_);
  }

  SatSet pil_leaf(const Pil& phi) {
    std::vector<InteractionId> sat_ids;
    for (InteractionId i = 0; i < u_->size(); ++i)
      if (pil_sat(u_->interaction(i), phi)) sat_ids.push_back(i);
    // a configuration satisfies a lifted formula iff all its interactions do,
    // so the denotation is the powerset of the satisfying interactions
    const uint64_t n = sat_ids.size();
    if (n <= 62 && ((1ull << n) - 1) <= limits_.config_cap) {
      std::vector<Config> members;
      ConfigEnumerator en(n);
      while (auto c = en.next()) {
        std::vector<InteractionId> ids;
        ids.reserve(c->ids.size());
        for (InteractionId pos : c->ids) ids.push_back(sat_ids[pos]);
        members.push_back(Config{std::move(ids)});
      }
      return SatSet::of_members(*u_, std::move(members));
    }
    auto words = std::make_shared<std::vector<uint64_t>>((u_->size() + 63) / 64, 0);
    for (InteractionId id : sat_ids) (*words)[id / 64] |= 1ull << (id % 64);
    return SatSet::predicate(*u_, [words](const Config& c) {
      for (InteractionId id : c.ids)
        if (!((*words)[id / 64] >> (id % 64) & 1)) return false;
      return true;
    });
  }

  SatSet union_op(const SatSet& a, const SatSet& b) {
    using R = SatSet::Repr;
    if (a.repr() == R::Explicit && b.repr() == R::Explicit) {
      std::vector<Config> merged;
      std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                     b.members().end(), std::back_inserter(merged));
      return SatSet::of_members(*u_, std::move(merged));
    }
    if (a.repr() == R::Explicit && b.repr() == R::Complement) return union_op(b, a);
    if (a.repr() == R::Complement && b.repr() == R::Explicit) {
      // everything outside N, plus E == everything outside (N minus E)
      std::vector<Config> rest;
      std::set_difference(a.non_members().begin(), a.non_members().end(), b.members().begin(),
                          b.members().end(), std::back_inserter(rest));
      return SatSet::excluding(*u_, std::move(rest));
    }
    if (a.repr() == R::Complement && b.repr() == R::Complement) {
      std::vector<Config> both;
      std::set_intersection(a.non_members().begin(), a.non_members().end(),
                            b.non_members().begin(), b.non_members().end(),
                            std::back_inserter(both));
      return SatSet::excluding(*u_, std::move(both));
    }
    return SatSet::predicate(*u_, [a, b](const Config& c) { return a.contains(c) || b.contains(c); });
  }

  SatSet intersect_op(const SatSet& a, const SatSet& b) {
    using R = SatSet::Repr;
    if (a.repr() == R::Explicit) {
      std::vector<Config> kept;
      for (const Config& c : a.members())
        if (b.contains(c)) kept.push_back(c);
      return SatSet::of_members(*u_, std::move(kept));
    }
    if (b.repr() == R::Explicit) return intersect_op(b, a);
    if (a.repr() == R::Complement && b.repr() == R::Complement) {
      std::vector<Config> either;
      std::set_union(a.non_members().begin(), a.non_members().end(), b.non_members().begin(),
                     b.non_members().end(), std::back_inserter(either));
      return SatSet::excluding(*u_, std::move(either));
    }
    return SatSet::predicate(*u_, [a, b](const Config& c) { return a.contains(c) && b.contains(c); });
  }

  SatSet closure_op(const SatSet& a) {
    return SatSet::upward_closure(*u_, a.materialize(limits_.config_cap).members());
  }

  SatSet coalesce_op(const SatSet& a, const SatSet& b) {
    SatSet ea = a.materialize(limits_.config_cap);
    SatSet eb = b.materialize(limits_.config_cap);
    const std::vector<Config>& ma = ea.members();
    const std::vector<Config>& mb = eb.members();
    if (!ma.empty() && !mb.empty() &&
        static_cast<uint64_t>(ma.size()) > limits_.config_cap / mb.size())
      fail(errc::resource_limit, "coalescing of " + std::to_string(ma.size()) + " x " +
                                     std::to_string(mb.size()) + " members exceeds the cap");
    std::set<Config> out;
    for (const Config& x : ma)
      for (const Config& y : mb) out.insert(config_union(x, y));
    return SatSet::of_members(*u_, std::vector<Config>(out.begin(), out.end()));
  }
};

void check_ports(const Pcl& f, const Universe& u) {
  std::vector<Port> mentioned;
  f.collect_ports(mentioned);
  for (const Port& p : mentioned)
    if (std::find(u.ports().begin(), u.ports().end(), p) == u.ports().end())
      fail(errc::universe_mismatch, "formula mentions port " + p.name() + " outside the universe");
}

}  // namespace

SatSet sat_set(const Pcl& f, const Universe& u, Limits limits) {
  check_ports(f, u);
  SatSet s = SatSetBuilder(u, limits).compute(f);
  // a predicate-backed final result is listed out whenever the space fits;
  // explicit and complement representations are already exact
  if (s.repr() == SatSet::Repr::Predicate && u.config_count() <= limits.config_cap)
    return s.materialize(limits.config_cap);
  return s;
}

FullNormalForm full_normal_form(const Pcl& f, const Universe& u, Limits limits) {
  SatSet s = sat_set(f, u, limits).materialize(limits.config_cap);
  return FullNormalForm{&u, s.members()};
}

Pcl fnf_to_formula(const FullNormalForm& fnf) {
  const Universe& u = *fnf.universe;
  if (fnf.disjuncts.empty()) return Pcl::negation(Pcl::truth());  // unsatisfiable
  std::vector<Pcl> disjuncts;
  for (const Config& c : fnf.disjuncts) {
    std::vector<Pcl> monomials;
    for (InteractionId id : c.ids)
      monomials.push_back(Pcl::lift(characteristic_monomial(u.interaction(id), u.ports())));
    disjuncts.push_back(Pcl::coalesce_all(monomials));
  }
  return Pcl::unite_all(disjuncts);
}

namespace {

// lexicographically least configuration outside `sorted` (a sorted list);
// nullopt when the list covers the whole space
std::optional<Config> least_outside(const Universe& u, const std::vector<Config>& sorted) {
  ConfigEnumerator en(u.size());
  while (auto c = en.next())
    if (!std::binary_search(sorted.begin(), sorted.end(), *c)) return c;
  return std::nullopt;  // reachable only when the space itself is small
}

std::optional<Config> least_of(std::optional<Config> a, std::optional<Config> b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? a : b;
}

}  // namespace

EquivalenceResult equivalent(const Pcl& f, const Pcl& g, const Universe& u, Limits limits) {
  SatSet a = sat_set(f, u, limits);
  SatSet b = sat_set(g, u, limits);
  using R = SatSet::Repr;

  if (a.repr() == R::Explicit && b.repr() == R::Explicit) {
    const auto& ma = a.members();
    const auto& mb = b.members();
    if (ma == mb) return {true, std::nullopt};
    std::vector<Config> diff;
    std::set_symmetric_difference(ma.begin(), ma.end(), mb.begin(), mb.end(),
                                  std::back_inserter(diff));
    return {false, diff.front()};
  }
  if (a.repr() == R::Complement && b.repr() == R::Explicit) return equivalent(g, f, u, limits);
  if (a.repr() == R::Explicit && b.repr() == R::Complement) {
    const auto& pos = a.members();
    const auto& neg = b.non_members();
    std::vector<Config> clash;  // satisfies f but excluded from g
    std::set_intersection(pos.begin(), pos.end(), neg.begin(), neg.end(),
                          std::back_inserter(clash));
    bool equal = clash.empty() &&
                 static_cast<uint64_t>(pos.size()) + neg.size() == u.config_count();
    if (equal) return {true, std::nullopt};
    // least disagreement is either in the clash or outside both lists
    std::vector<Config> covered;
    std::set_union(pos.begin(), pos.end(), neg.begin(), neg.end(), std::back_inserter(covered));
    auto witness = least_of(clash.empty() ? std::nullopt : std::optional<Config>(clash.front()),
                            least_outside(u, covered));
    return {false, witness};
  }
  if (a.repr() == R::Complement && b.repr() == R::Complement) {
    const auto& na = a.non_members();
    const auto& nb = b.non_members();
    if (na == nb) return {true, std::nullopt};
    std::vector<Config> diff;
    std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(),
                                  std::back_inserter(diff));
    return {false, diff.front()};
  }

  uint64_t count = u.config_count();
  if (count > limits.config_cap)
    fail(errc::resource_limit, "equivalence over " + std::to_string(count) +
                                   " configurations requires a higher cap");
  ConfigEnumerator en(u.size());
  while (auto c = en.next())
    if (a.contains(*c) != b.contains(*c)) return {false, *c};
  return {true, std::nullopt};
}

SatisfiabilityResult satisfiable(const Pcl& f, const Universe& u, Limits limits) {
  SatSet a = sat_set(f, u, limits);
  switch (a.repr()) {
    case SatSet::Repr::Explicit: {
      if (a.members().empty()) return {false, std::nullopt};
      return {true, a.members().front()};
    }
    case SatSet::Repr::Complement: {
      auto witness = least_outside(u, a.non_members());
      return {witness.has_value(), witness};
    }
    case SatSet::Repr::Predicate: {
      uint64_t count = u.config_count();
      if (count > limits.config_cap)
        fail(errc::resource_limit, "satisfiability over " + std::to_string(count) +
                                       " configurations requires a higher cap");
      ConfigEnumerator en(u.size());
      while (auto c = en.next())
        if (a.contains(*c)) return {true, *c};
      return {false, std::nullopt};
    }
  }
  return {false, std::nullopt};
}

SatSet dominating_set(const Pcl& f, const Universe& u, Limits limits) {
  FullNormalForm fnf = full_normal_form(f, u, limits);
  return SatSet::upward_closure(u, std::move(fnf.disjuncts));
}

}  // namespace pcl
