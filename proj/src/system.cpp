#include "pcl/system.hpp"

#include <algorithm>
#include <set>

#include "pcl/error.hpp"

namespace pcl {

System System::instantiate(std::vector<Entry> entries) {
  System sys;
  std::set<std::string> type_names;
  for (const Entry& e : entries) {
    if (e.count < 1) fail(errc::zero_count, "type " + e.type.name + " has instance count " + std::to_string(e.count));
    if (!type_names.insert(e.type.name).second)
      fail(errc::duplicate_name, "duplicate type name " + e.type.name);
    if (e.type.ports.empty())
      fail(errc::zero_count, "type " + e.type.name + " declares no ports");
    std::set<std::string> labels;
    for (const std::string& l : e.type.ports)
      if (!labels.insert(l).second)
        fail(errc::duplicate_name, "duplicate port label " + l + " in type " + e.type.name);
    if (e.type.lts) {
      const Lts& lts = *e.type.lts;
      std::set<std::string> states(lts.states.begin(), lts.states.end());
      if (!states.count(lts.initial))
        fail(errc::parse_error, "lts initial state " + lts.initial + " not declared in type " + e.type.name);
      for (const auto& [from, port, to] : lts.transitions) {
        if (!states.count(from) || !states.count(to))
          fail(errc::parse_error, "lts transition uses undeclared state in type " + e.type.name);
        if (!labels.count(port))
          fail(errc::parse_error, "lts transition uses unknown port " + port + " in type " + e.type.name);
      }
    }
  }

  sys.entries_ = std::move(entries);
  std::set<std::string> names;
  for (std::size_t t = 0; t < sys.entries_.size(); ++t) {
    const Entry& e = sys.entries_[t];
    for (int j = 1; j <= e.count; ++j) {
      Instance inst{t, j, {}};
      for (const std::string& label : e.type.ports) {
        Port p{label, j};
        if (!names.insert(p.name()).second)
          fail(errc::duplicate_name, "port name collision: " + p.name());
        inst.port_ids.push_back(static_cast<uint32_t>(sys.ports_.size()));
        sys.port_owner_.push_back(sys.instances_.size());
        sys.ports_.push_back(std::move(p));
      }
      sys.instances_.push_back(std::move(inst));
    }
  }
  return sys;
}

std::optional<uint32_t> System::port_id(const Port& p) const {
  for (uint32_t i = 0; i < ports_.size(); ++i)
    if (ports_[i] == p) return i;
  return std::nullopt;
}

bool operator==(const System& a, const System& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].count != b.entries_[i].count) return false;
    if (!(a.entries_[i].type == b.entries_[i].type)) return false;
  }
  return true;
}

bool validate_interaction(const System& sys, const Interaction& a) {
  std::vector<std::size_t> owners;
  for (const Port& p : a.ports()) {
    auto id = sys.port_id(p);
    if (!id) fail(errc::unknown_port, "port " + p.name() + " is not part of the system");
    owners.push_back(sys.instance_of_port(*id));
  }
  std::sort(owners.begin(), owners.end());
  return std::adjacent_find(owners.begin(), owners.end()) == owners.end();
}

uint64_t interaction_count(const System& sys) {
  uint64_t count = 1;
  for (const System::Instance& inst : sys.instances()) {
    uint64_t factor = 1 + static_cast<uint64_t>(inst.port_ids.size());
    if (count > UINT64_MAX / factor) return UINT64_MAX;
    count *= factor;
  }
  return count - 1;
}

std::vector<Interaction> interactions(const System& sys, uint64_t cap) {
  uint64_t count = interaction_count(sys);
  if (count > cap)
    fail(errc::resource_limit, "interaction space has " + std::to_string(count) +
                                   " members, exceeding the cap of " + std::to_string(cap));

  // product over instances of (no port | one of its ports)
  std::vector<Interaction> out;
  std::vector<Port> current;
  auto rec = [&](auto&& self, std::size_t inst_idx) -> void {
    if (inst_idx == sys.instances().size()) {
      if (!current.empty()) out.emplace_back(current);
      return;
    }
    self(self, inst_idx + 1);  // instance not involved
    for (uint32_t pid : sys.instances()[inst_idx].port_ids) {
      current.push_back(sys.ports()[pid]);
      self(self, inst_idx + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pcl
