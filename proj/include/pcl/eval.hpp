// eval.hpp -- direct recursive satisfaction of PCL formulas on configurations
#pragma once

#include <cstdint>
#include <memory>

#include "pcl/pcl_formula.hpp"
#include "pcl/universe.hpp"

namespace pcl {

// Resource knobs shared across the library. Every exponential step is gated by
// one of these and reports RESOURCE_LIMIT instead of degrading.
struct Limits {
  uint64_t interaction_cap = 1u << 20;  // size of an interaction space
  uint64_t config_cap = 1u << 20;       // size of a materialized configuration set
  uint64_t split_budget = 43046721;     // 3^16 cover attempts per coalescing evaluation
};

// Evaluates one formula over one universe by the satisfaction clauses
// themselves: a lifted interaction formula holds when every interaction of the
// configuration satisfies it, and a coalescing holds when some assignment of
// the configuration's interactions to {left, right, both} yields two non-empty
// parts satisfying the operands. Cover enumeration is memoized per (node,
// configuration) and short-circuits on the first satisfying cover; each
// coalescing evaluation is limited to `split_budget` attempts.
//
// Results are pure functions of (formula, configuration); the memo is shared
// across calls and in the worst case only affects whether the budget is
// reached. One evaluator serves one thread.
class Evaluator {
public:
  Evaluator(const Universe& u, const Pcl& f, Limits limits = {});
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  bool sat(const Config& gamma);

  const Universe& universe() const;
  const Pcl& formula() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot evaluation with a fresh evaluator.
bool pcl_sat(const Config& gamma, const Pcl& f, const Universe& u, Limits limits = {});

}  // namespace pcl
