// pil.hpp -- propositional interaction logic: formulas evaluated on one interaction
#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pcl/port.hpp"

namespace pcl {

// Immutable PIL formula. The core grammar is true | p | negation | disjunction;
// conjunction and false are derived and desugared at construction. Double
// negation is removed structurally when a negation is built.
class Pil {
public:
  enum class Kind { True, Atom, Neg, Or };

  static Pil truth();
  static Pil atom(Port p);
  static Pil neg(const Pil& f);
  static Pil disj(const Pil& a, const Pil& b);

  static Pil falsity() { return neg(truth()); }
  static Pil conj(const Pil& a, const Pil& b) { return neg(disj(neg(a), neg(b))); }

  Kind kind() const;
  const Port& port() const;  // Atom
  Pil child() const;         // Neg
  Pil lhs() const;           // Or
  Pil rhs() const;           // Or

  bool operator==(const Pil& other) const;  // structural

  // A monomial is a conjunction of atoms and negated atoms.
  bool is_monomial() const;
  // Full monomial: every port of the universe occurs exactly once, positively
  // or negatively.
  bool is_full_monomial(std::span<const Port> universe) const;

  // For a monomial, its positive and negative literal sets (ports in formula
  // order). Empty optional if the formula is not a monomial.
  struct Literals {
    std::vector<Port> positive;
    std::vector<Port> negative;
  };
  std::optional<Literals> monomial_literals() const;

  void collect_ports(std::vector<Port>& out) const;

  // identity of the underlying node, usable as a cache key
  const void* node_id() const { return node_.get(); }

private:
  struct Node;
  explicit Pil(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Satisfaction on a single interaction: an atom holds iff its port is active.
bool pil_sat(const Interaction& a, const Pil& phi);
// Same, but checks that both formula and interaction live inside `universe`.
bool pil_sat(const Interaction& a, const Pil& phi, std::span<const Port> universe);

// The full monomial satisfied by exactly the interaction `a`.
Pil characteristic_monomial(const Interaction& a, std::span<const Port> universe);

}  // namespace pcl
