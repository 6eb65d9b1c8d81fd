#include "pcl/pil.hpp"

#include <algorithm>

#include "pcl/error.hpp"

namespace pcl {

Interaction::Interaction(std::vector<Port> ports) : ports_(std::move(ports)) {
  std::sort(ports_.begin(), ports_.end(),
            [](const Port& a, const Port& b) { return a.name() < b.name(); });
  ports_.erase(std::unique(ports_.begin(), ports_.end()), ports_.end());
}

bool Interaction::contains(const Port& p) const {
  return std::find(ports_.begin(), ports_.end(), p) != ports_.end();
}

std::vector<std::string> Interaction::names() const {
  std::vector<std::string> out;
  out.reserve(ports_.size());
  for (const Port& p : ports_) out.push_back(p.name());
  return out;
}

std::string Interaction::name() const {
  std::string out = "{";
  for (std::size_t i = 0; i < ports_.size(); ++i) {
    if (i) out += ",";
    out += ports_[i].name();
  }
  return out + "}";
}

bool operator<(const Interaction& a, const Interaction& b) {
  return a.names() < b.names();
}

struct Pil::Node {
  Kind kind;
  Port port;                       // Atom
  std::shared_ptr<const Node> a;   // Neg child / Or lhs
  std::shared_ptr<const Node> b;   // Or rhs
};

Pil Pil::truth() {
  static const auto node = std::make_shared<const Node>(Node{Kind::True, {}, nullptr, nullptr});
  return Pil(node);
}

Pil Pil::atom(Port p) {
  return Pil(std::make_shared<const Node>(Node{Kind::Atom, std::move(p), nullptr, nullptr}));
}

Pil Pil::neg(const Pil& f) {
  if (f.node_->kind == Kind::Neg) return Pil(f.node_->a);  // double negation cancels
  return Pil(std::make_shared<const Node>(Node{Kind::Neg, {}, f.node_, nullptr}));
}

Pil Pil::disj(const Pil& a, const Pil& b) {
  return Pil(std::make_shared<const Node>(Node{Kind::Or, {}, a.node_, b.node_}));
}

Pil::Kind Pil::kind() const { return node_->kind; }
const Port& Pil::port() const { return node_->port; }
Pil Pil::child() const { return Pil(node_->a); }
Pil Pil::lhs() const { return Pil(node_->a); }
Pil Pil::rhs() const { return Pil(node_->b); }

bool Pil::operator==(const Pil& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::True: return true;
    case Kind::Atom: return node_->port == other.node_->port;
    case Kind::Neg: return child() == other.child();
    case Kind::Or: return lhs() == other.lhs() && rhs() == other.rhs();
  }
  return false;
}

namespace {

// literal = p | !p ; conjunction pattern = neg(or(neg(a), neg(b)))
bool collect_monomial(const Pil& f, Pil::Literals& lits) {
  switch (f.kind()) {
    case Pil::Kind::Atom:
      lits.positive.push_back(f.port());
      return true;
    case Pil::Kind::Neg: {
      Pil inner = f.child();
      if (inner.kind() == Pil::Kind::Atom) {
        lits.negative.push_back(inner.port());
        return true;
      }
      if (inner.kind() == Pil::Kind::Or) {
        // conj(a, b) was built as neg(or(neg a, neg b)); undo one negation per
        // side (negation cancellation makes this exact)
        return collect_monomial(Pil::neg(inner.lhs()), lits) &&
               collect_monomial(Pil::neg(inner.rhs()), lits);
      }
      return false;
    }
    default:
      return false;
  }
}

}  // namespace

std::optional<Pil::Literals> Pil::monomial_literals() const {
  Literals lits;
  if (!collect_monomial(*this, lits)) return std::nullopt;
  return lits;
}

bool Pil::is_monomial() const { return monomial_literals().has_value(); }

bool Pil::is_full_monomial(std::span<const Port> universe) const {
  auto lits = monomial_literals();
  if (!lits) return false;
  std::vector<Port> seen = lits->positive;
  seen.insert(seen.end(), lits->negative.begin(), lits->negative.end());
  if (seen.size() != universe.size()) return false;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (const Port& p : universe)
    if (!std::binary_search(seen.begin(), seen.end(), p)) return false;
  return true;
}

void Pil::collect_ports(std::vector<Port>& out) const {
  switch (kind()) {
    case Kind::True: return;
    case Kind::Atom: out.push_back(port()); return;
    case Kind::Neg: child().collect_ports(out); return;
    case Kind::Or:
      lhs().collect_ports(out);
      rhs().collect_ports(out);
      return;
  }
}

bool pil_sat(const Interaction& a, const Pil& phi) {
  switch (phi.kind()) {
    case Pil::Kind::True: return true;
    case Pil::Kind::Atom: return a.contains(phi.port());
    case Pil::Kind::Neg: return !pil_sat(a, phi.child());
    case Pil::Kind::Or: return pil_sat(a, phi.lhs()) || pil_sat(a, phi.rhs());
  }
  return false;
}

namespace {

bool in_universe(const Port& p, std::span<const Port> universe) {
  return std::find(universe.begin(), universe.end(), p) != universe.end();
}

}  // namespace

bool pil_sat(const Interaction& a, const Pil& phi, std::span<const Port> universe) {
  std::vector<Port> mentioned;
  phi.collect_ports(mentioned);
  for (const Port& p : mentioned)
    if (!in_universe(p, universe))
      fail(errc::universe_mismatch, "formula mentions port " + p.name() + " outside the universe");
  for (const Port& p : a.ports())
    if (!in_universe(p, universe))
      fail(errc::universe_mismatch, "interaction uses port " + p.name() + " outside the universe");
  return pil_sat(a, phi);
}

Pil characteristic_monomial(const Interaction& a, std::span<const Port> universe) {
  for (const Port& p : a.ports())
    if (!in_universe(p, universe))
      fail(errc::universe_mismatch, "interaction uses port " + p.name() + " outside the universe");
  if (a.size() == 0) fail(errc::empty_configuration, "characteristic monomial of an empty interaction");
  bool first = true;
  Pil result = Pil::truth();
  for (const Port& p : universe) {
    Pil lit = a.contains(p) ? Pil::atom(p) : Pil::neg(Pil::atom(p));
    result = first ? lit : Pil::conj(result, lit);
    first = false;
  }
  return result;
}

}  // namespace pcl
