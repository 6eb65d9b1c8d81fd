// shared helpers for the test suites
#pragma once

#include <string>
#include <vector>

#include "pcl/eval.hpp"
#include "pcl/universe.hpp"

namespace pcl::test {

inline std::vector<Port> plain_ports(const std::vector<std::string>& labels) {
  std::vector<Port> out;
  for (const std::string& l : labels) out.push_back({l, 0});
  return out;
}

inline std::vector<Config> all_configs(const Universe& u) {
  std::vector<Config> out;
  ConfigEnumerator en(u.size());
  while (auto c = en.next()) out.push_back(std::move(*c));
  return out;
}

// non-empty subsets of a configuration
inline std::vector<Config> subconfigs(const Config& c) {
  std::vector<Config> out;
  const std::size_t k = c.ids.size();
  for (uint64_t mask = 1; mask < (1ull << k); ++mask) {
    std::vector<InteractionId> ids;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) ids.push_back(c.ids[i]);
    out.push_back(Config{std::move(ids)});
  }
  return out;
}

}  // namespace pcl::test
