// port.hpp -- ports and interactions, the two bottom levels of the hierarchy
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcl {

// A port is a named communication point. Instanced ports carry the 1-based
// index of the component instance they belong to; instance 0 denotes a plain
// port in a free universe.
struct Port {
  std::string label;
  int instance = 0;

  std::string name() const {
    return instance > 0 ? label + "(" + std::to_string(instance) + ")" : label;
  }

  friend bool operator==(const Port& a, const Port& b) = default;
  friend auto operator<=>(const Port& a, const Port& b) = default;
};

// A non-empty set of ports that fire together. Ports are kept sorted by
// rendered name so that rendering and comparisons are canonical.
class Interaction {
public:
  Interaction() = default;
  explicit Interaction(std::vector<Port> ports);

  bool contains(const Port& p) const;
  const std::vector<Port>& ports() const { return ports_; }
  std::size_t size() const { return ports_.size(); }

  // sorted rendered port names, e.g. {"m(1)", "s(2)"}
  std::vector<std::string> names() const;
  std::string name() const;  // "{m(1),s(2)}"

  friend bool operator==(const Interaction& a, const Interaction& b) { return a.ports_ == b.ports_; }
  // lexicographic on sorted rendered names
  friend bool operator<(const Interaction& a, const Interaction& b);

private:
  std::vector<Port> ports_;  // sorted by name, no duplicates
};

}  // namespace pcl
