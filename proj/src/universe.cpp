#include "pcl/universe.hpp"

#include <algorithm>

#include "pcl/error.hpp"

namespace pcl {

Config Config::of(std::vector<InteractionId> raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  if (raw.empty()) fail(errc::empty_configuration, "a configuration must contain an interaction");
  return Config{std::move(raw)};
}

bool Config::contains(InteractionId id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

bool config_subset(const Config& a, const Config& b) {
  return std::includes(b.ids.begin(), b.ids.end(), a.ids.begin(), a.ids.end());
}

void Universe::build_index() {
  std::sort(interactions_.begin(), interactions_.end());
  interactions_.erase(std::unique(interactions_.begin(), interactions_.end()), interactions_.end());
  for (InteractionId i = 0; i < interactions_.size(); ++i) index_.emplace(interactions_[i].names(), i);
}

Universe Universe::over_ports(std::vector<Port> ports, uint64_t interaction_cap) {
  Universe u;
  u.ports_ = std::move(ports);
  uint64_t n = u.ports_.size();
  if (n >= 63 || ((1ull << n) - 1) > interaction_cap)
    fail(errc::resource_limit, "too many interactions over " + std::to_string(n) + " ports");
  std::vector<Port> current;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == u.ports_.size()) {
      if (!current.empty()) u.interactions_.emplace_back(current);
      return;
    }
    self(self, i + 1);
    current.push_back(u.ports_[i]);
    self(self, i + 1);
    current.pop_back();
  };
  rec(rec, 0);
  u.build_index();
  return u;
}

Universe Universe::over_interactions(std::vector<Port> ports, std::vector<Interaction> list) {
  Universe u;
  u.ports_ = std::move(ports);
  u.interactions_ = std::move(list);
  u.build_index();
  return u;
}

Universe Universe::of_system(const System& sys, uint64_t interaction_cap) {
  return over_interactions(sys.ports(), ::pcl::interactions(sys, interaction_cap));
}

std::optional<InteractionId> Universe::find(const Interaction& a) const {
  auto it = index_.find(a.names());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

uint64_t Universe::config_count() const {
  if (interactions_.size() >= 64) return UINT64_MAX;
  return (1ull << interactions_.size()) - 1;
}

Config Universe::config_of(const std::vector<Interaction>& list) const {
  std::vector<InteractionId> ids;
  for (const Interaction& a : list) {
    auto id = find(a);
    if (!id) fail(errc::invalid_interaction, "interaction " + a.name() + " is not part of the universe");
    ids.push_back(*id);
  }
  return Config::of(std::move(ids));
}

std::vector<Interaction> Universe::interactions_of(const Config& c) const {
  std::vector<Interaction> out;
  out.reserve(c.ids.size());
  for (InteractionId id : c.ids) out.push_back(interactions_[id]);
  return out;
}

std::string Universe::config_name(const Config& c) const {
  std::string out = "{";
  for (std::size_t i = 0; i < c.ids.size(); ++i) {
    if (i) out += ",";
    out += interactions_[c.ids[i]].name();
  }
  return out + "}";
}

std::optional<Config> ConfigEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (size_ == 0) {
      done_ = true;
      return std::nullopt;
    }
    current_ = {0};
    return Config{current_};
  }
  // lexicographic successor of a sorted index vector: extend with the next
  // index if possible, otherwise pop and increment
  if (current_.back() + 1 < size_) {
    current_.push_back(current_.back() + 1);
  } else {
    current_.pop_back();
    if (current_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    ++current_.back();
  }
  return Config{current_};
}

ConfigEnumerator enumerate_configurations(const Universe& u, uint64_t cap) {
  uint64_t count = u.config_count();
  if (count > cap)
    fail(errc::resource_limit, "configuration space has " + std::to_string(count) +
                                   " members, exceeding the cap of " + std::to_string(cap));
  return ConfigEnumerator(u.size());
}

}  // namespace pcl
