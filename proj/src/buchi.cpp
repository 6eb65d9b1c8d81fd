#include "pcl/buchi.hpp"

#include <algorithm>
#include <queue>

#include "pcl/error.hpp"

namespace pcl {

namespace {

void check_automaton(const BuchiAutomaton& a) {
  auto valid_state = [&](int q) { return q >= 0 && q < a.num_states; };
  if (a.initial.empty()) throw std::invalid_argument("automaton has no initial state");
  for (int q : a.initial)
    if (!valid_state(q)) throw std::invalid_argument("initial state out of range");
  for (int q : a.accepting)
    if (!valid_state(q)) throw std::invalid_argument("accepting state out of range");
  for (const auto& [q, s, r] : a.transitions) {
    if (!valid_state(q) || !valid_state(r)) throw std::invalid_argument("transition state out of range");
    if (s >= a.alphabet_size) throw std::invalid_argument("transition symbol out of range");
  }
}

// successors per (state, symbol)
std::vector<std::vector<std::vector<int>>> successor_table(const BuchiAutomaton& a) {
  std::vector<std::vector<std::vector<int>>> succ(
      a.num_states, std::vector<std::vector<int>>(a.alphabet_size));
  for (const auto& [q, s, r] : a.transitions) succ[q][s].push_back(r);
  return succ;
}

// nodes reachable from `start` in a graph given by an adjacency callback
std::vector<char> reachable_from(std::size_t node_count, const std::vector<std::size_t>& start,
                                 const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<char> seen(node_count, 0);
  std::queue<std::size_t> queue;
  for (std::size_t v : start)
    if (!seen[v]) {
      seen[v] = 1;
      queue.push(v);
    }
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop();
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push(w);
      }
  }
  return seen;
}

bool on_cycle(std::size_t v, const std::vector<std::vector<std::size_t>>& adj) {
  // v lies on a cycle iff v is reachable from one of its successors
  std::vector<char> seen = reachable_from(adj.size(), adj[v], adj);
  return seen[v] != 0;
}

}  // namespace

bool accepts(const BuchiAutomaton& a, const Lasso& w) {
  check_automaton(a);
  if (w.loop.empty()) fail(errc::empty_loop, "a lasso needs a non-empty loop");
  for (uint32_t s : w.prefix)
    if (s >= a.alphabet_size) fail(errc::unknown_symbol, "prefix symbol " + std::to_string(s));
  for (uint32_t s : w.loop)
    if (s >= a.alphabet_size) fail(errc::unknown_symbol, "loop symbol " + std::to_string(s));

  auto succ = successor_table(a);

  // states reachable exactly when the prefix has been consumed
  std::vector<char> current(a.num_states, 0);
  for (int q : a.initial) current[q] = 1;
  for (uint32_t s : w.prefix) {
    std::vector<char> next(a.num_states, 0);
    for (int q = 0; q < a.num_states; ++q)
      if (current[q])
        for (int r : succ[q][s]) next[r] = 1;
    current = std::move(next);
  }

  // product of states with loop positions
  const std::size_t L = w.loop.size();
  auto node = [&](int q, std::size_t i) { return static_cast<std::size_t>(q) * L + i; };
  std::vector<std::vector<std::size_t>> adj(static_cast<std::size_t>(a.num_states) * L);
  for (int q = 0; q < a.num_states; ++q)
    for (std::size_t i = 0; i < L; ++i)
      for (int r : succ[q][w.loop[i]]) adj[node(q, i)].push_back(node(r, (i + 1) % L));

  std::vector<std::size_t> start;
  for (int q = 0; q < a.num_states; ++q)
    if (current[q]) start.push_back(node(q, 0));
  std::vector<char> seen = reachable_from(adj.size(), start, adj);

  std::vector<char> accepting(a.num_states, 0);
  for (int q : a.accepting) accepting[q] = 1;
  for (int q = 0; q < a.num_states; ++q) {
    if (!accepting[q]) continue;
    for (std::size_t i = 0; i < L; ++i) {
      std::size_t v = node(q, i);
      if (seen[v] && on_cycle(v, adj)) return true;
    }
  }
  return false;
}

bool is_empty(const BuchiAutomaton& a) {
  check_automaton(a);
  std::vector<std::vector<std::size_t>> adj(a.num_states);
  for (const auto& [q, s, r] : a.transitions) adj[q].push_back(r);
  std::vector<std::size_t> start(a.initial.begin(), a.initial.end());
  std::vector<char> seen = reachable_from(adj.size(), start, adj);
  for (int q : a.accepting)
    if (seen[q] && on_cycle(q, adj)) return false;
  return true;
}

std::string dump_automaton(const BuchiAutomaton& a, const std::vector<std::string>& symbol_names) {
  auto sym = [&](uint32_t s) {
    return s < symbol_names.size() ? symbol_names[s] : std::to_string(s);
  };
  std::string out;
  for (int q = 0; q < a.num_states; ++q) {
    out += "state q" + std::to_string(q);
    if (std::find(a.initial.begin(), a.initial.end(), q) != a.initial.end()) out += " initial";
    if (std::find(a.accepting.begin(), a.accepting.end(), q) != a.accepting.end())
      out += " accepting";
    out += "\n";
  }
  for (const auto& [q, s, r] : a.transitions)
    out += "q" + std::to_string(q) + " --" + sym(s) + "--> q" + std::to_string(r) + "\n";
  return out;
}

namespace {

BuchiAutomaton trust_skeleton() {
  BuchiAutomaton a;
  a.num_states = 2;
  a.alphabet_size = 2;  // 0 = good configuration, 1 = anything else
  a.initial = {0};
  a.accepting = {1};
  a.transitions = {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}};
  return a;
}

}  // namespace

bool ConfigAcceptor::accepts_word(const std::vector<Config>& prefix,
                                  const std::vector<Config>& loop) const {
  if (loop.empty()) fail(errc::empty_loop, "a lasso needs a non-empty loop");
  Lasso w;
  auto classify = [&](const Config& c) -> uint32_t {
    if (c.ids.empty() || c.ids.back() >= universe->size())
      fail(errc::unknown_symbol, "configuration outside the automaton's universe");
    return good.contains(c) ? 0u : 1u;
  };
  for (const Config& c : prefix) w.prefix.push_back(classify(c));
  for (const Config& c : loop) w.loop.push_back(classify(c));
  return accepts(skeleton, w);
}

ConfigAcceptor make_config_acceptor(const Universe& u, SatSet good) {
  return ConfigAcceptor{&u, std::move(good), trust_skeleton()};
}

ConfigAcceptor build_trust_automaton(const Pcl& f, const Universe& u, Limits limits) {
  return make_config_acceptor(u, sat_set(f, u, limits));
}

ConfigAcceptor build_partial_trust_automaton(const Pcl& f, const Universe& u, Limits limits) {
  return make_config_acceptor(u, dominating_set(f, u, limits));
}

}  // namespace pcl
