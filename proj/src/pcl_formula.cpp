#include "pcl/pcl_formula.hpp"

#include <stdexcept>

namespace pcl {

struct Pcl::Node {
  Kind kind;
  Pil pil = Pil::truth();
  std::shared_ptr<const Node> a = nullptr;
  std::shared_ptr<const Node> b = nullptr;
};

Pcl Pcl::truth() {
  static const auto node = std::make_shared<const Node>(Node{Kind::True, Pil::truth(), nullptr, nullptr});
  return Pcl(node);
}

Pcl Pcl::lift(const Pil& phi) {
  return Pcl(std::make_shared<const Node>(Node{Kind::Pil, phi, nullptr, nullptr}));
}

Pcl Pcl::negation(const Pcl& f) {
  return Pcl(std::make_shared<const Node>(Node{Kind::Not, Pil::truth(), f.node_, nullptr}));
}

Pcl Pcl::unite(const Pcl& a, const Pcl& b) {
  return Pcl(std::make_shared<const Node>(Node{Kind::Union, Pil::truth(), a.node_, b.node_}));
}

Pcl Pcl::coalesce(const Pcl& a, const Pcl& b) {
  return Pcl(std::make_shared<const Node>(Node{Kind::Coalesce, Pil::truth(), a.node_, b.node_}));
}

namespace {

template <class Op>
Pcl fold_left(std::span<const Pcl> fs, Op op, const char* what) {
  if (fs.empty()) throw std::invalid_argument(std::string(what) + " over an empty list");
  Pcl acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = op(acc, fs[i]);
  return acc;
}

}  // namespace

Pcl Pcl::unite_all(std::span<const Pcl> fs) { return fold_left(fs, &Pcl::unite, "union"); }
Pcl Pcl::coalesce_all(std::span<const Pcl> fs) { return fold_left(fs, &Pcl::coalesce, "coalescing"); }
Pcl Pcl::disjoin_all(std::span<const Pcl> fs) { return fold_left(fs, &Pcl::disjoin, "disjunction"); }

Pcl Pcl::intersect_all(std::span<const Pcl> fs) {
  if (fs.empty()) return truth();  // empty big-conjunction
  return fold_left(fs, &Pcl::intersect, "intersection");
}

Pcl::Kind Pcl::kind() const { return node_->kind; }
const Pil& Pcl::pil() const { return node_->pil; }
Pcl Pcl::child() const { return Pcl(node_->a); }
Pcl Pcl::lhs() const { return Pcl(node_->a); }
Pcl Pcl::rhs() const { return Pcl(node_->b); }

bool Pcl::operator==(const Pcl& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::True: return true;
    case Kind::Pil: return node_->pil == other.node_->pil;
    case Kind::Not: return child() == other.child();
    case Kind::Union:
    case Kind::Coalesce: return lhs() == other.lhs() && rhs() == other.rhs();
  }
  return false;
}

void Pcl::collect_ports(std::vector<Port>& out) const {
  switch (kind()) {
    case Kind::True: return;
    case Kind::Pil: pil().collect_ports(out); return;
    case Kind::Not: child().collect_ports(out); return;
    case Kind::Union:
    case Kind::Coalesce:
      lhs().collect_ports(out);
      rhs().collect_ports(out);
      return;
  }
}

}  // namespace pcl
