// buchi.hpp -- nondeterministic Buchi automata, lasso acceptance, and the
// two-state acceptors behind the trust decisions
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcl/satset.hpp"

namespace pcl {

// A nondeterministic Buchi automaton over abstract symbols 0..alphabet_size-1.
struct BuchiAutomaton {
  int num_states = 0;
  uint32_t alphabet_size = 0;
  std::vector<int> initial;
  std::vector<int> accepting;
  std::vector<std::tuple<int, uint32_t, int>> transitions;
};

// Finite presentation of an ultimately periodic word: prefix followed by the
// loop repeated forever. The loop is non-empty; the prefix may be empty.
struct Lasso {
  std::vector<uint32_t> prefix;
  std::vector<uint32_t> loop;
};

// True iff some run over prefix.loop^w visits an accepting state infinitely
// often. Decided on the product of the automaton with the loop positions:
// a run is accepting exactly when, after reading the prefix, it can reach a
// product node holding an accepting state that lies on a product cycle.
bool accepts(const BuchiAutomaton& a, const Lasso& w);

// True iff the automaton accepts no word at all: no accepting state is both
// reachable and on a cycle.
bool is_empty(const BuchiAutomaton& a);

// Line-oriented debug form: states first, then transitions `q --sym--> q'`.
std::string dump_automaton(const BuchiAutomaton& a,
                           const std::vector<std::string>& symbol_names = {});

// The configuration-alphabet acceptors used by the trustworthiness decisions.
// The alphabet is the whole configuration space, so transitions are encoded by
// a membership test: symbol class 0 covers the configurations in `good`,
// class 1 everything else. State 0 loops on both classes, state 0 -> 1 and the
// accepting self-loop 1 -> 1 exist on class 0 only, which accepts exactly the
// words whose configurations eventually stay inside `good`.
struct ConfigAcceptor {
  const Universe* universe;
  SatSet good;
  BuchiAutomaton skeleton;

  bool accepts_word(const std::vector<Config>& prefix, const std::vector<Config>& loop) const;
};

ConfigAcceptor make_config_acceptor(const Universe& u, SatSet good);

// Acceptor for "eventually always satisfying": good = sat_set(f).
ConfigAcceptor build_trust_automaton(const Pcl& f, const Universe& u, Limits limits = {});

// Acceptor for "eventually always containing a satisfying subset":
// good = dominating_set(f).
ConfigAcceptor build_partial_trust_automaton(const Pcl& f, const Universe& u, Limits limits = {});

}  // namespace pcl
