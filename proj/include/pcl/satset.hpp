// satset.hpp -- satisfying sets of PCL formulas: computation, normal form,
// equivalence, satisfiability, and dominating sets
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "pcl/eval.hpp"
#include "pcl/pcl_formula.hpp"
#include "pcl/universe.hpp"

namespace pcl {

// The denotation of a formula over a fixed universe: the set of configurations
// satisfying it. Three representations are used so that formulas built from
// monomials stay explicit even over configuration spaces far too large to
// enumerate:
//   Explicit    -- a sorted list of member configurations
//   Complement  -- a sorted list of the non-members
//   Predicate   -- a membership test
class SatSet {
public:
  enum class Repr { Explicit, Complement, Predicate };

  static SatSet none(const Universe& u);
  static SatSet all(const Universe& u);
  static SatSet of_members(const Universe& u, std::vector<Config> members);
  static SatSet excluding(const Universe& u, std::vector<Config> non_members);
  static SatSet predicate(const Universe& u, std::function<bool(const Config&)> test);
  // all configurations containing some base as a subset
  static SatSet upward_closure(const Universe& u, std::vector<Config> bases);

  Repr repr() const { return repr_; }
  const Universe& universe() const { return *universe_; }
  bool contains(const Config& c) const;

  bool is_explicit() const { return repr_ == Repr::Explicit; }
  const std::vector<Config>& members() const;      // Explicit only
  const std::vector<Config>& non_members() const;  // Complement only

  SatSet complemented() const;

  // Enumerate-and-filter into an Explicit set. Explicit sets are returned
  // unchanged; otherwise the whole configuration space is walked, which
  // requires it to fit under the cap.
  SatSet materialize(uint64_t config_cap) const;

private:
  SatSet(const Universe& u, Repr r) : universe_(&u), repr_(r) {}

  const Universe* universe_;
  Repr repr_;
  std::shared_ptr<const std::vector<Config>> base_;  // Explicit / Complement
  std::function<bool(const Config&)> pred_;          // Predicate
};

// Bottom-up satisfying-set computation. Interaction-formula leaves become
// powersets of their satisfying interactions (explicit while small), unions
// and intersections stay explicit whenever one side is, complements flip to
// the Complement representation, and coalescings combine explicit member lists
// pairwise. A coalescing with `true` becomes the upward closure of the other
// side. Steps that would require enumerating an oversized configuration space
// report RESOURCE_LIMIT.
SatSet sat_set(const Pcl& f, const Universe& u, Limits limits = {});

// A formula as a union of coalescings of full monomials, encoded by the set of
// configurations it is satisfied by: each disjunct is one configuration, and
// the rendered disjunct is satisfied by exactly that configuration.
struct FullNormalForm {
  const Universe* universe;
  std::vector<Config> disjuncts;  // sorted
};

FullNormalForm full_normal_form(const Pcl& f, const Universe& u, Limits limits = {});

// The formula a normal form denotes; its satisfying set over the same universe
// is exactly `fnf.disjuncts`.
Pcl fnf_to_formula(const FullNormalForm& fnf);

struct EquivalenceResult {
  bool equivalent;
  std::optional<Config> counterexample;  // lexicographically least disagreement
};

EquivalenceResult equivalent(const Pcl& f, const Pcl& g, const Universe& u, Limits limits = {});

struct SatisfiabilityResult {
  bool satisfiable;
  std::optional<Config> witness;  // lexicographically least member
};

SatisfiabilityResult satisfiable(const Pcl& f, const Universe& u, Limits limits = {});

// All configurations containing some normal-form disjunct of f as a subset;
// pointwise equal to sat_set(closure(f)).
SatSet dominating_set(const Pcl& f, const Universe& u, Limits limits = {});

}  // namespace pcl
