// acceptance_test.cpp -- end-to-end acceptance suite; prints one line per
// criterion and exits non-zero if any of them fails
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "pcl/architectures.hpp"
#include "pcl/cli.hpp"
#include "pcl/error.hpp"
#include "pcl/reconfig.hpp"
#include "pcl/satset.hpp"
#include "pcl/textio.hpp"

using namespace pcl;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
int g_checked = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
  ++g_checked;
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Instance {
  std::string name;
  std::shared_ptr<const System> system;
  std::shared_ptr<const Universe> universe;
  Pcl formula = Pcl::truth();
  std::vector<Config> members;  // the formula's satisfying set

  bool enumerable(uint64_t cap = 1u << 20) const { return universe->config_count() <= cap; }
};

Instance make_instance(const std::string& name, Architecture arch) {
  Instance inst;
  inst.name = name;
  inst.system = std::make_shared<System>(std::move(arch.system));
  inst.universe = std::make_shared<Universe>(Universe::of_system(*inst.system));
  inst.formula = arch.formula;
  inst.members = sat_set(inst.formula, *inst.universe).materialize(1u << 20).members();
  return inst;
}

// The gallery at desk scale. The first seven are the semantics-oracle set;
// all nine feed the trust harness.
std::vector<Instance> gallery() {
  std::vector<Instance> out;
  out.push_back(make_instance("master-slave(1,1)", gen_master_slave(1, 1)));
  out.push_back(make_instance("master-slave(2,2)", gen_master_slave(2, 2)));
  out.push_back(make_instance("star(2)", gen_star(2)));
  out.push_back(make_instance("star(3)", gen_star(3)));
  out.push_back(make_instance("publish-subscribe(1,1,1)", gen_publish_subscribe(1, 1, 1)));
  out.push_back(make_instance("blackboard(1)", gen_blackboard(1)));
  out.push_back(make_instance("blackboard(2)", gen_blackboard(2)));
  out.push_back(make_instance("pipes-filters(2,1)", gen_pipes_filters(2, 1)));
  out.push_back(make_instance("request-response(1,1,1)", gen_request_response(1, 1, 1)));
  return out;
}

// deterministic configurations of size <= 2 over a universe
std::vector<Config> small_configs(const Universe& u) {
  std::vector<Config> out;
  for (InteractionId i = 0; i < u.size(); ++i) {
    out.push_back(Config{{i}});
    for (InteractionId j = i + 1; j < u.size(); ++j) out.push_back(Config{{i, j}});
  }
  return out;
}

// members plus one-interaction-removed and one-interaction-added variants
std::vector<Config> member_neighborhood(const Instance& inst) {
  const Universe& u = *inst.universe;
  std::set<Config> out(inst.members.begin(), inst.members.end());
  for (const Config& c : inst.members) {
    if (c.size() > 1)
      for (std::size_t drop = 0; drop < c.ids.size(); ++drop) {
        std::vector<InteractionId> ids;
        for (std::size_t i = 0; i < c.ids.size(); ++i)
          if (i != drop) ids.push_back(c.ids[i]);
        out.insert(Config{std::move(ids)});
      }
    for (InteractionId add = 0; add < std::min<std::size_t>(u.size(), 24); ++add) {
      if (c.contains(add)) continue;
      std::vector<InteractionId> ids = c.ids;
      ids.push_back(add);
      out.insert(Config::of(std::move(ids)));
    }
  }
  return {out.begin(), out.end()};
}

void criterion_1() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  std::vector<std::string> oracle_set = {
      "master-slave(1,1)", "master-slave(2,2)",        "star(2)",       "star(3)",
      "publish-subscribe(1,1,1)", "blackboard(1)",     "blackboard(2)"};
  for (const Instance& inst : gallery()) {
    if (std::find(oracle_set.begin(), oracle_set.end(), inst.name) == oracle_set.end()) continue;
    SatSet sat = sat_set(inst.formula, *inst.universe);
    Evaluator direct(*inst.universe, inst.formula, {});
    std::vector<Config> probes;
    if (inst.enumerable()) {
      ConfigEnumerator en(inst.universe->size());
      while (auto c = en.next()) probes.push_back(std::move(*c));
    } else {
      // the space dwarfs the cap, so agreement is checked on a deterministic
      // bounded slice: everything of size <= 2 plus the members and their
      // one-step perturbations
      probes = small_configs(*inst.universe);
      auto extra = member_neighborhood(inst);
      probes.insert(probes.end(), extra.begin(), extra.end());
    }
    for (const Config& gamma : probes) {
      if (sat.contains(gamma) != direct.sat(gamma)) {
        ok = false;
        detail = inst.name + " disagrees on " + inst.universe->config_name(gamma);
        break;
      }
    }
    if (!ok) break;
  }
  double elapsed = seconds_since(start);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1fs", elapsed);
  if (elapsed >= 60.0) {
    ok = false;
    if (detail.empty()) detail = "exceeded the 60 s budget";
  }
  report(1, "set semantics agree with direct evaluation on the gallery", ok,
         detail.empty() ? std::string(buf) : detail);
}

void criterion_2() {
  struct Expected {
    const char* name;
    std::size_t count;
  };
  const std::vector<Expected> expected = {
      {"master-slave(1,1)", 1}, {"master-slave(2,2)", 8},        {"star(2)", 1},
      {"star(3)", 6},           {"publish-subscribe(1,1,1)", 2}, {"blackboard(1)", 1},
      {"blackboard(2)", 3},     {"pipes-filters(2,1)", 2},       {"request-response(1,1,1)", 1}};
  bool ok = true;
  std::string detail;
  std::vector<Instance> instances = gallery();
  for (const Expected& e : expected) {
    auto it = std::find_if(instances.begin(), instances.end(),
                           [&](const Instance& i) { return i.name == e.name; });
    if (it->members.size() != e.count) {
      ok = false;
      detail = std::string(e.name) + " has " + std::to_string(it->members.size()) +
               " members, expected " + std::to_string(e.count);
      break;
    }
  }
  if (ok) {
    // the cross-checks pinned to specific members
    auto ms22 = std::find_if(instances.begin(), instances.end(),
                             [](const Instance& i) { return i.name == "master-slave(2,2)"; });
    int fully_connected = 0;
    for (const Config& c : ms22->members) {
      bool s1 = false, s2 = false;
      for (const Interaction& a : ms22->universe->interactions_of(c)) {
        if (a.contains({"s", 1})) s1 = true;
        if (a.contains({"s", 2})) s2 = true;
      }
      if (s1 && s2) ++fully_connected;
    }
    if (fully_connected != 4) {
      ok = false;
      detail = "master-slave(2,2) has " + std::to_string(fully_connected) +
               " fully-connected members, expected 4";
    }
    auto bb1 = std::find_if(instances.begin(), instances.end(),
                            [](const Instance& i) { return i.name == "blackboard(1)"; });
    if (bb1->members[0].size() != 3) {
      ok = false;
      detail = "blackboard(1) member size " + std::to_string(bb1->members[0].size());
    }
    auto rr = std::find_if(instances.begin(), instances.end(),
                           [](const Instance& i) { return i.name == "request-response(1,1,1)"; });
    if (rr->members[0].size() != 3) {
      ok = false;
      detail = "request-response(1,1,1) member size " + std::to_string(rr->members[0].size());
    }
  }
  report(2, "exact satisfying-set counts across the gallery", ok, detail);
}

void criterion_3() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (const Instance& inst : gallery()) {
    if (!inst.enumerable()) continue;
    FullNormalForm fnf = full_normal_form(inst.formula, *inst.universe);
    Pcl rendered_ast = fnf_to_formula(fnf);
    // through the concrete syntax and back
    std::string text = render_formula(rendered_ast, *inst.system);
    Pcl reparsed = parse_formula(text, *inst.system);
    EquivalenceResult eq = equivalent(inst.formula, reparsed, *inst.universe);
    if (!eq.equivalent) {
      ok = false;
      detail = inst.name + " is not equivalent to its normal form";
      break;
    }
    // each disjunct is satisfied by exactly one configuration
    for (const Config& d : fnf.disjuncts) {
      FullNormalForm single{inst.universe.get(), {d}};
      Pcl df = fnf_to_formula(single);
      SatSet ds = sat_set(df, *inst.universe);
      bool exact = ds.is_explicit() && ds.members().size() == 1 && ds.members()[0] == d;
      if (exact && inst.universe->config_count() <= 2047) {
        Evaluator direct(*inst.universe, df, {});
        ConfigEnumerator en(inst.universe->size());
        std::size_t hits = 0;
        while (auto c = en.next())
          if (direct.sat(*c)) {
            ++hits;
            exact = exact && *c == d;
          }
        exact = exact && hits == 1;
      }
      if (!exact) {
        ok = false;
        detail = inst.name + " has a disjunct not pinned to its configuration";
        break;
      }
    }
    if (!ok) break;
  }
  double elapsed = seconds_since(start);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1fs", elapsed);
  if (elapsed >= 120.0) {
    ok = false;
    if (detail.empty()) detail = "exceeded the 120 s budget";
  }
  report(3, "normal forms are equivalent and pin one configuration per disjunct", ok,
         detail.empty() ? std::string(buf) : detail);
}

Config random_config(const Universe& u, std::mt19937& rng) {
  std::size_t max_size = std::min<std::size_t>(6, u.size());
  std::size_t k = 1 + rng() % max_size;
  std::set<InteractionId> ids;
  while (ids.size() < k) ids.insert(static_cast<InteractionId>(rng() % u.size()));
  return Config{{ids.begin(), ids.end()}};
}

Implementation random_lasso(const Instance& inst, std::mt19937& rng) {
  auto position = [&]() -> Config {
    if (!inst.members.empty() && rng() % 100 < 40)
      return inst.members[rng() % inst.members.size()];
    return random_config(*inst.universe, rng);
  };
  Implementation impl;
  std::size_t prefix_len = rng() % 4;  // 0..3
  std::size_t loop_len = 1 + rng() % 3;
  for (std::size_t i = 0; i < prefix_len; ++i) impl.prefix.push_back(position());
  for (std::size_t i = 0; i < loop_len; ++i) impl.loop.push_back(position());
  return impl;
}

struct TrustHarness {
  Instance inst;
  std::vector<Implementation> lassos;
  ConfigAcceptor trust_acceptor;
  ConfigAcceptor partial_acceptor;
  std::unique_ptr<Evaluator> direct;

  explicit TrustHarness(Instance i, int lasso_count, uint32_t seed)
      : inst(std::move(i)),
        trust_acceptor(build_trust_automaton(inst.formula, *inst.universe)),
        partial_acceptor(build_partial_trust_automaton(inst.formula, *inst.universe)),
        direct(std::make_unique<Evaluator>(*inst.universe, inst.formula, Limits{})) {
    std::mt19937 rng(seed);
    for (int n = 0; n < lasso_count; ++n) lassos.push_back(random_lasso(inst, rng));
  }

  bool direct_loop_sat(const Implementation& impl) {
    for (const Config& c : impl.loop)
      if (!direct->sat(c)) return false;
    return true;
  }

  bool direct_loop_dominated(const Implementation& impl) {
    for (const Config& gamma : impl.loop) {
      bool has_subset = false;
      const std::size_t k = gamma.ids.size();
      for (uint64_t mask = 1; mask < (1ull << k) && !has_subset; ++mask) {
        std::vector<InteractionId> ids;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) ids.push_back(gamma.ids[i]);
        has_subset = direct->sat(Config{std::move(ids)});
      }
      if (!has_subset) return false;
    }
    return true;
  }

  Dra dra(const Implementation& impl) const {
    return make_dra(inst.system, inst.universe, inst.formula, impl);
  }
};

std::vector<TrustHarness> g_harnesses;

void build_harnesses() {
  uint32_t seed = 271828;
  for (Instance& inst : gallery()) g_harnesses.emplace_back(std::move(inst), 200, seed++);
}

void criterion_4() {
  bool ok = true;
  std::string detail;
  long total = 0;
  for (TrustHarness& h : g_harnesses) {
    for (const Implementation& impl : h.lassos) {
      ++total;
      bool automaton = h.trust_acceptor.accepts_word(impl.prefix, impl.loop);
      bool definitional = h.direct_loop_sat(impl);
      if (automaton != definitional) {
        ok = false;
        detail = h.inst.name + " disagrees on a lasso";
        break;
      }
      // the full decision agrees too
      if (is_trustworthy(h.dra(impl)).trustworthy != definitional) {
        ok = false;
        detail = h.inst.name + " verdict disagrees with the definitional check";
        break;
      }
    }
    if (!ok) break;
  }
  report(4, "trust acceptor matches the definitional check on " + std::to_string(total) +
             " random lassos", ok, detail);
}

void criterion_5() {
  bool ok = true;
  std::string detail;
  long total = 0;
  for (TrustHarness& h : g_harnesses) {
    for (const Implementation& impl : h.lassos) {
      ++total;
      bool automaton = h.partial_acceptor.accepts_word(impl.prefix, impl.loop);
      bool definitional = h.direct_loop_dominated(impl);
      if (automaton != definitional) {
        ok = false;
        detail = h.inst.name + " disagrees on a lasso";
        break;
      }
    }
    if (!ok) break;
  }
  if (ok) {
    // dominating set == closure satisfying set, exhaustively on the two
    // smallest instances
    for (const std::string& name : {std::string("master-slave(1,1)"), std::string("star(2)")}) {
      auto h = std::find_if(g_harnesses.begin(), g_harnesses.end(),
                            [&](const TrustHarness& x) { return x.inst.name == name; });
      SatSet dom = dominating_set(h->inst.formula, *h->inst.universe);
      SatSet closed = sat_set(Pcl::closure(h->inst.formula), *h->inst.universe);
      ConfigEnumerator en(h->inst.universe->size());
      while (auto c = en.next())
        if (dom.contains(*c) != closed.contains(*c)) {
          ok = false;
          detail = name + ": dominating set deviates from the closure set";
          break;
        }
    }
  }
  report(5, "partial-trust acceptor matches the satisfying-subset check on " +
             std::to_string(total) + " lassos", ok, detail);
}

void criterion_6() {
  bool ok = true;
  std::string detail;
  long corrected = 0;
  for (TrustHarness& h : g_harnesses) {
    for (const Implementation& impl : h.lassos) {
      Dra dra = h.dra(impl);
      if (!is_partially_trustworthy(dra).partially_trustworthy) continue;
      ++corrected;
      Implementation fixed = correct(dra);
      if (!is_trustworthy(h.dra(fixed)).trustworthy) {
        ok = false;
        detail = h.inst.name + ": corrected implementation is not trustworthy";
        break;
      }
      bool shrunk = fixed.prefix.size() == impl.prefix.size() &&
                    fixed.loop.size() == impl.loop.size();
      for (std::size_t i = 0; shrunk && i < fixed.prefix.size(); ++i)
        shrunk = config_subset(fixed.prefix[i], impl.prefix[i]);
      for (std::size_t i = 0; shrunk && i < fixed.loop.size(); ++i)
        shrunk = config_subset(fixed.loop[i], impl.loop[i]);
      if (!shrunk) {
        ok = false;
        detail = h.inst.name + ": correction is not a positionwise restriction";
        break;
      }
    }
    if (!ok) break;
  }
  report(6, "correction yields trustworthy restrictions (" + std::to_string(corrected) +
             " corrected lassos)", ok, detail);
}

void criterion_7() {
  bool ok = true;
  std::string detail;
  for (TrustHarness& h : g_harnesses) {
    for (const Implementation& impl : h.lassos) {
      Dra dra = h.dra(impl);
      if (is_trustworthy(dra).trustworthy &&
          !is_partially_trustworthy(dra).partially_trustworthy) {
        ok = false;
        detail = h.inst.name + ": trustworthy but not partially trustworthy";
        break;
      }
    }
    if (!ok) break;
  }
  report(7, "trustworthy always implies partially trustworthy", ok, detail);
}

void criterion_8() {
  bool ok = true;
  std::string detail;
  std::mt19937 rng(314159);
  int done = 0;
  while (done < 100 && ok) {
    TrustHarness& h = g_harnesses[rng() % g_harnesses.size()];
    Implementation impl = random_lasso(h.inst, rng);
    ++done;
    Dra base = h.dra(impl);
    bool t = is_trustworthy(base).trustworthy;
    bool p = is_partially_trustworthy(base).partially_trustworthy;
    for (const Implementation& variant : {rotate_loop(impl), unroll_loop(impl)}) {
      Dra v = h.dra(variant);
      if (is_trustworthy(v).trustworthy != t ||
          is_partially_trustworthy(v).partially_trustworthy != p) {
        ok = false;
        detail = h.inst.name + ": verdict changed under re-presentation";
        break;
      }
    }
  }
  report(8, "verdicts invariant under loop rotation and unrolling (100 lassos)", ok, detail);
}

void criterion_9() {
  bool ok = true;
  std::string detail;
  System sys = gen_master_slave(2, 2).system;
  const std::vector<std::string> fixtures = {
      "true", "<m(1)>", "<m(1),s(1)>", "<m(1),s(2)> or <m(2),s(2)>", "{m(1)}",
      "{m(1) & !s(1)}", "{m(1) | s(1)}", "{!m(1)}", "{false}", "{true}",
      "not <m(1)>", "~<m(1),s(1)>", "<m(1)> + <s(1)>", "<m(1)> + <m(2)> + <s(1)>",
      "<m(1)> and <s(1)>", "<m(1)> and <s(1)> and <m(2)>", "<m(1)> or <s(1)>",
      "<m(1)> or <m(2)> or <s(1)>", "dis(<m(1)>, <s(1)>)", "dis(<m(1)>, <m(2)>, <s(1)>)",
      "not (<m(1)> or <s(1)>)", "~{m(1)}", "not ~<m(1)>", "<m(1)> + <s(1)> and <m(2)>",
      "<m(1)> + (<s(1)> and <m(2)>)", "not (<m(1)> + <s(1)>)", "{m(1) & m(2) | s(1)}",
      "{!m(1) & !s(1)}", "~(<m(1)> or <s(1)>)", "dis(<m(1)> + <s(1)>, <m(2)>)"};
  auto strip = [](const std::string& s) {
    std::string out;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
  };
  for (const std::string& fixture : fixtures) {
    Pcl parsed = parse_formula(fixture, sys);
    std::string rendered = render_formula(parsed, sys);
    if (strip(rendered) != strip(fixture) || !(parse_formula(rendered, sys) == parsed)) {
      ok = false;
      detail = "fixture failed round-trip: " + fixture;
      break;
    }
  }
  if (ok) {
    std::vector<Architecture> gallery_archs;
    gallery_archs.push_back(gen_master_slave(2, 2));
    gallery_archs.push_back(gen_publish_subscribe(1, 1, 1));
    gallery_archs.push_back(gen_pipes_filters(2, 1));
    gallery_archs.push_back(gen_star(3));
    gallery_archs.push_back(gen_blackboard(2));
    gallery_archs.push_back(gen_request_response(1, 1, 1));
    for (const Architecture& arch : gallery_archs) {
      std::string rendered = render_formula(arch.formula, arch.system);
      if (!(parse_formula(rendered, arch.system) == arch.formula)) {
        ok = false;
        detail = "generated formula failed round-trip";
        break;
      }
    }
  }
  long crashes = 0;
  if (ok) {
    std::mt19937 rng(1618);
    const std::string alphabet = "ms12()<>{}+~!&|, ordaintfle\n\t\"@$\x01\x7f";
    for (int i = 0; i < 100000; ++i) {
      std::string text;
      std::size_t len = rng() % 48;
      for (std::size_t j = 0; j < len; ++j) text += alphabet[rng() % alphabet.size()];
      try {
        parse_formula(text, sys);
      } catch (const Error&) {
        // a rejected input is the expected outcome
      } catch (...) {
        ++crashes;
      }
    }
    if (crashes) {
      ok = false;
      detail = std::to_string(crashes) + " unexpected exceptions while fuzzing";
    }
  }
  report(9, "parser round-trips the fixture corpus and survives 100000 fuzz inputs", ok, detail);
}

void criterion_10() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;

  Architecture pf = gen_pipes_filters(2, 1);
  Universe u = Universe::of_system(pf.system);
  SatSet s = sat_set(pf.formula, u);
  double compositional = seconds_since(start);
  if (!(s.is_explicit() && s.members().size() == 2)) {
    ok = false;
    detail = "compositional satisfying set is wrong";
  }
  if (compositional >= 10.0) {
    ok = false;
    detail = "compositional route took too long";
  }

  int exit_code = -1;
  if (ok) {
    fs::path dir = fs::temp_directory_path() / "dracheck-acceptance";
    fs::create_directories(dir);
    fs::path sys_path = dir / "pf-system.json";
    fs::path formula_path = dir / "pf-formula.pcl";
    std::ofstream(sys_path) << render_system(pf.system);
    std::ofstream(formula_path) << render_formula(pf.formula, pf.system) << "\n";
    std::string cmd = std::string(DRACHECK_BIN) + " satset --system \"" + sys_path.string() +
                      "\" --formula \"" + formula_path.string() + "\" --brute >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (exit_code != 3) {
      ok = false;
      detail = "full enumeration exited with " + std::to_string(exit_code) + ", expected 3";
    }
    fs::remove_all(dir);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "compositional %.2fs, enumeration refused with exit %d",
                compositional, exit_code);
  report(10, "huge spaces: compositional route fast, enumeration route refused", ok,
         detail.empty() ? std::string(buf) : detail);
}

}  // namespace

int main() {
  auto start = Clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  build_harnesses();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%d/%d criteria passed in %.1fs\n", g_checked - g_failures, g_checked,
              seconds_since(start));
  return g_failures == 0 ? 0 : 1;
}
