// universe.hpp -- interned interaction universes and configurations over them
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "pcl/port.hpp"
#include "pcl/system.hpp"

namespace pcl {

using InteractionId = uint32_t;

// A non-empty set of interactions, stored as sorted indices into a Universe's
// canonical interaction list. Lexicographic comparison of the index vectors is
// the canonical configuration order used everywhere (witness selection,
// enumeration, rendering).
struct Config {
  std::vector<InteractionId> ids;  // sorted, unique

  static Config of(std::vector<InteractionId> raw);

  bool contains(InteractionId id) const;
  std::size_t size() const { return ids.size(); }

  friend bool operator==(const Config&, const Config&) = default;
  friend bool operator<(const Config& a, const Config& b) { return a.ids < b.ids; }
};

// a ⊆ b on sorted id vectors
bool config_subset(const Config& a, const Config& b);

struct ConfigHash {
  std::size_t operator()(const Config& c) const {
    std::size_t h = 1469598103934665603ull;
    for (InteractionId id : c.ids) {
      h ^= id + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// The interaction list a set of formulas and configurations is interpreted
// over, together with the ports the interactions are built from. Interactions
// are held in lexicographic order of sorted rendered port names.
class Universe {
public:
  // all non-empty subsets of the given ports
  static Universe over_ports(std::vector<Port> ports, uint64_t interaction_cap = 1u << 20);
  // an explicit interaction list (sorted and deduplicated here)
  static Universe over_interactions(std::vector<Port> ports, std::vector<Interaction> list);
  // the interaction space of a system
  static Universe of_system(const System& sys, uint64_t interaction_cap = 1u << 20);

  const std::vector<Port>& ports() const { return ports_; }
  const std::vector<Interaction>& interactions() const { return interactions_; }
  std::size_t size() const { return interactions_.size(); }
  const Interaction& interaction(InteractionId id) const { return interactions_[id]; }

  std::optional<InteractionId> find(const Interaction& a) const;

  // number of non-empty interaction subsets, saturating at uint64 max
  uint64_t config_count() const;

  Config config_of(const std::vector<Interaction>& interactions) const;  // errors: INVALID_INTERACTION, EMPTY_CONFIGURATION
  std::vector<Interaction> interactions_of(const Config& c) const;
  std::string config_name(const Config& c) const;

private:
  std::vector<Port> ports_;
  std::vector<Interaction> interactions_;
  std::map<std::vector<std::string>, InteractionId> index_;  // by sorted port names

  void build_index();
};

// Streams every configuration over a universe of `size` interactions, in
// canonical lexicographic order.
class ConfigEnumerator {
public:
  explicit ConfigEnumerator(std::size_t size) : size_(size) {}

  // nullopt once exhausted
  std::optional<Config> next();

private:
  std::size_t size_;
  std::vector<InteractionId> current_;
  bool started_ = false;
  bool done_ = false;
};

// Checked entry point: refuses universes whose configuration space exceeds the
// cap before yielding anything.
ConfigEnumerator enumerate_configurations(const Universe& u, uint64_t cap = 1u << 20);

}  // namespace pcl
