// pcl_formula.hpp -- propositional configuration logic: formulas over sets of interactions
#pragma once

#include <memory>
#include <span>
#include <vector>

#include "pcl/pil.hpp"

namespace pcl {

// Immutable PCL formula over a core grammar of five constructors:
// true | pil | not | union | coalesce. Every derived operator (intersection,
// closure, disjunction, implication) is desugared at construction, so two
// formulas are equal exactly when their cores coincide structurally.
class Pcl {
public:
  enum class Kind { True, Pil, Not, Union, Coalesce };

  static Pcl truth();
  static Pcl lift(const Pil& phi);
  static Pcl negation(const Pcl& f);
  static Pcl unite(const Pcl& a, const Pcl& b);
  static Pcl coalesce(const Pcl& a, const Pcl& b);

  // derived operators
  static Pcl intersect(const Pcl& a, const Pcl& b) {
    return negation(unite(negation(a), negation(b)));
  }
  static Pcl closure(const Pcl& f) { return coalesce(f, truth()); }
  static Pcl disjoin(const Pcl& a, const Pcl& b) { return unite(unite(a, b), coalesce(a, b)); }
  static Pcl implies(const Pcl& a, const Pcl& b) { return unite(negation(a), b); }

  // n-ary forms fold the binary operator from the left; the list must be
  // non-empty except for intersect_all, whose empty form is true
  static Pcl unite_all(std::span<const Pcl> fs);
  static Pcl coalesce_all(std::span<const Pcl> fs);
  static Pcl disjoin_all(std::span<const Pcl> fs);
  static Pcl intersect_all(std::span<const Pcl> fs);

  Kind kind() const;
  const Pil& pil() const;  // Pil
  Pcl child() const;       // Not
  Pcl lhs() const;         // Union / Coalesce
  Pcl rhs() const;         // Union / Coalesce

  bool operator==(const Pcl& other) const;  // structural equality of cores

  void collect_ports(std::vector<Port>& out) const;

  const void* node_id() const { return node_.get(); }

private:
  struct Node;
  explicit Pcl(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace pcl
