// system.hpp -- component types, instance expansion, and the induced interaction space
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pcl/port.hpp"

namespace pcl {

// Transition-system data attached to a component type. It is parsed and
// validated but never executed; all decisions in this library depend only on
// ports.
struct Lts {
  std::vector<std::string> states;
  std::string initial;
  std::vector<std::tuple<std::string, std::string, std::string>> transitions;  // (from, port, to)

  friend bool operator==(const Lts&, const Lts&) = default;
};

struct ComponentType {
  std::string name;
  std::vector<std::string> ports;  // labels, unique within the type
  std::optional<Lts> lts;

  friend bool operator==(const ComponentType&, const ComponentType&) = default;
};

// A component-based system: types with instance counts, expanded into the
// port set P with ports renamed label(j) for the j-th instance.
class System {
public:
  struct Entry {
    ComponentType type;
    int count = 1;
  };

  // one expanded component instance
  struct Instance {
    std::size_t type_index;
    int index;                        // 1-based within the type
    std::vector<uint32_t> port_ids;   // indices into ports()
  };

  static System instantiate(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<Instance>& instances() const { return instances_; }
  const std::vector<Port>& ports() const { return ports_; }

  std::optional<uint32_t> port_id(const Port& p) const;
  // instance owning a port id
  std::size_t instance_of_port(uint32_t port_id) const { return port_owner_[port_id]; }

  // structural comparison: same types (name, ports, lts) with same counts, in order
  friend bool operator==(const System& a, const System& b);

private:
  std::vector<Entry> entries_;
  std::vector<Instance> instances_;
  std::vector<Port> ports_;
  std::vector<std::size_t> port_owner_;
};

// True iff `a` draws its ports from the system and uses at most one port of
// each component instance.
bool validate_interaction(const System& sys, const Interaction& a);

// All interactions of the system (non-empty port sets, at most one port per
// instance), in lexicographic order of their sorted rendered port names.
std::vector<Interaction> interactions(const System& sys, uint64_t cap = 1u << 20);

// number of interactions, saturating at uint64 max
uint64_t interaction_count(const System& sys);

}  // namespace pcl
