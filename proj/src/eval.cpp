#include "pcl/eval.hpp"

#include <algorithm>
#include <unordered_map>

#include "pcl/error.hpp"

namespace pcl {

namespace {

constexpr int kFlatMemoBits = 22;  // flat memo tables up to 4M entries per node

}  // namespace

struct Evaluator::Impl {
  const Universe* u;
  Pcl formula;
  Limits limits;
  bool mask_mode;  // |interactions| <= 62: configurations are single words

  struct NodeInfo {
    Pcl::Kind kind;
    int a = -1, b = -1;
    uint64_t leaf_mask = 0;                // Pil: satisfying interactions (mask mode)
    std::vector<uint64_t> leaf_words;      // Pil: satisfying interactions (vector mode)
    std::vector<int8_t> flat;              // memo, mask mode with few interactions
    std::unordered_map<uint64_t, bool> memo_mask;
    std::unordered_map<Config, bool, ConfigHash> memo_vec;
  };
  std::vector<NodeInfo> nodes;
  std::unordered_map<const void*, int> node_index;
  int root = -1;

  Impl(const Universe& universe, const Pcl& f, Limits lim)
      : u(&universe), formula(f), limits(lim), mask_mode(universe.size() <= 62) {
    std::vector<Port> mentioned;
    f.collect_ports(mentioned);
    for (const Port& p : mentioned) {
      if (std::find(u->ports().begin(), u->ports().end(), p) == u->ports().end())
        fail(errc::universe_mismatch,
             "formula mentions port " + p.name() + " outside the universe");
    }
    root = index_of(f);
  }

  int index_of(const Pcl& f) {
    auto it = node_index.find(f.node_id());
    if (it != node_index.end()) return it->second;
    NodeInfo info;
    info.kind = f.kind();
    switch (f.kind()) {
      case Pcl::Kind::True: break;
      case Pcl::Kind::Pil: {
        const std::size_t words = (u->size() + 63) / 64;
        info.leaf_words.assign(words, 0);
        for (InteractionId i = 0; i < u->size(); ++i)
          if (pil_sat(u->interaction(i), f.pil())) info.leaf_words[i / 64] |= 1ull << (i % 64);
        if (mask_mode) info.leaf_mask = info.leaf_words.empty() ? 0 : info.leaf_words[0];
        break;
      }
      case Pcl::Kind::Not:
        info.a = index_of(f.child());
        break;
      case Pcl::Kind::Union:
      case Pcl::Kind::Coalesce:
        info.a = index_of(f.lhs());
        info.b = index_of(f.rhs());
        break;
    }
    nodes.push_back(std::move(info));
    int idx = static_cast<int>(nodes.size()) - 1;
    node_index.emplace(f.node_id(), idx);
    return idx;
  }

  // ---- mask mode ----

  bool eval_mask(int n, uint64_t cfg) {
    NodeInfo& nd = nodes[n];
    switch (nd.kind) {
      case Pcl::Kind::True:
        return true;
      case Pcl::Kind::Pil:
        return (cfg & ~nd.leaf_mask) == 0;
      default:
        break;
    }
    if (u->size() <= kFlatMemoBits) {
      if (nd.flat.empty()) nd.flat.assign(1ull << u->size(), -1);
      int8_t& slot = nd.flat[cfg];
      if (slot >= 0) return slot != 0;
      bool r = compute_mask(nd, cfg);
      slot = r ? 1 : 0;
      return r;
    }
    auto it = nd.memo_mask.find(cfg);
    if (it != nd.memo_mask.end()) return it->second;
    bool r = compute_mask(nd, cfg);
    nd.memo_mask.emplace(cfg, r);
    return r;
  }

  bool compute_mask(NodeInfo& nd, uint64_t cfg) {
    switch (nd.kind) {
      case Pcl::Kind::Not:
        return !eval_mask(nd.a, cfg);
      case Pcl::Kind::Union:
        return eval_mask(nd.a, cfg) || eval_mask(nd.b, cfg);
      case Pcl::Kind::Coalesce:
        return coalesce_mask(nd, cfg);
      default:
        return true;  // unreachable
    }
  }

  bool coalesce_mask(NodeInfo& nd, uint64_t cfg) {
    uint64_t bits[62];
    int k = 0;
    for (uint64_t m = cfg; m; m &= m - 1) bits[k++] = m & ~(m - 1);
    uint64_t attempts = 0;
    auto rec = [&](auto&& self, int idx, uint64_t left, uint64_t right) -> bool {
      if (idx == k) {
        if (++attempts > limits.split_budget)
          fail(errc::resource_limit, "coalescing split budget exceeded");
        return left && right && eval_mask(nd.a, left) && eval_mask(nd.b, right);
      }
      uint64_t b = bits[idx];
      return self(self, idx + 1, left | b, right) || self(self, idx + 1, left, right | b) ||
             self(self, idx + 1, left | b, right | b);
    };
    return rec(rec, 0, 0, 0);
  }

  // ---- vector mode (more than 62 interactions) ----

  bool eval_vec(int n, const Config& cfg) {
    NodeInfo& nd = nodes[n];
    switch (nd.kind) {
      case Pcl::Kind::True:
        return true;
      case Pcl::Kind::Pil: {
        for (InteractionId id : cfg.ids)
          if (!(nd.leaf_words[id / 64] >> (id % 64) & 1)) return false;
        return true;
      }
      default:
        break;
    }
    auto it = nd.memo_vec.find(cfg);
    if (it != nd.memo_vec.end()) return it->second;
    bool r;
    switch (nd.kind) {
      case Pcl::Kind::Not: r = !eval_vec(nd.a, cfg); break;
      case Pcl::Kind::Union: r = eval_vec(nd.a, cfg) || eval_vec(nd.b, cfg); break;
      default: r = coalesce_vec(nd, cfg); break;
    }
    nd.memo_vec.emplace(cfg, r);
    return r;
  }

  bool coalesce_vec(NodeInfo& nd, const Config& cfg) {
    const std::size_t k = cfg.ids.size();
    if (k > 62) fail(errc::resource_limit, "coalescing over a configuration of " +
                                               std::to_string(k) + " interactions");
    uint64_t attempts = 0;
    auto part = [&](uint64_t mask) {
      std::vector<InteractionId> ids;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) ids.push_back(cfg.ids[i]);
      return Config{std::move(ids)};
    };
    auto rec = [&](auto&& self, std::size_t idx, uint64_t left, uint64_t right) -> bool {
      if (idx == k) {
        if (++attempts > limits.split_budget)
          fail(errc::resource_limit, "coalescing split budget exceeded");
        return left && right && eval_vec(nd.a, part(left)) && eval_vec(nd.b, part(right));
      }
      uint64_t b = 1ull << idx;
      return self(self, idx + 1, left | b, right) || self(self, idx + 1, left, right | b) ||
             self(self, idx + 1, left | b, right | b);
    };
    return rec(rec, 0, 0, 0);
  }

  bool sat(const Config& gamma) {
    if (gamma.ids.empty()) fail(errc::empty_configuration, "satisfaction is defined on non-empty configurations");
    if (gamma.ids.back() >= u->size())
      fail(errc::universe_mismatch, "configuration uses an interaction outside the universe");
    if (mask_mode) {
      uint64_t cfg = 0;
      for (InteractionId id : gamma.ids) cfg |= 1ull << id;
      return eval_mask(root, cfg);
    }
    return eval_vec(root, gamma);
  }
};

Evaluator::Evaluator(const Universe& u, const Pcl& f, Limits limits)
    : impl_(std::make_unique<Impl>(u, f, limits)) {}
Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

bool Evaluator::sat(const Config& gamma) { return impl_->sat(gamma); }
const Universe& Evaluator::universe() const { return *impl_->u; }
const Pcl& Evaluator::formula() const { return impl_->formula; }

bool pcl_sat(const Config& gamma, const Pcl& f, const Universe& u, Limits limits) {
  Evaluator ev(u, f, limits);
  return ev.sat(gamma);
}

}  // namespace pcl
