#include "pcl/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "pcl/architectures.hpp"
#include "pcl/error.hpp"
#include "pcl/eval.hpp"
#include "pcl/reconfig.hpp"
#include "pcl/satset.hpp"
#include "pcl/textio.hpp"

namespace pcl {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot write " + path);
  out << content;
}

struct Options {
  std::string system_path, formula_path, config_text, impl_path;
  std::string system2_path, formula2_path, impl2_path;
  std::string out_path, out_system, out_formula;
  std::string output = "text";
  std::string style;
  std::vector<int> counts;
  uint64_t cap = 1u << 20;
  uint64_t split_budget = 43046721;
  bool brute = false;

  Limits limits() const { return Limits{cap, cap, split_budget}; }
  bool json_output() const { return output == "json"; }
};

struct Loaded {
  std::shared_ptr<const System> system;
  std::shared_ptr<const Universe> universe;
  Pcl formula = Pcl::truth();
};

Loaded load(const Options& opt, bool with_formula = true) {
  Loaded l;
  l.system = std::make_shared<System>(parse_system(slurp(opt.system_path)));
  l.universe = std::make_shared<Universe>(Universe::of_system(*l.system, opt.cap));
  if (with_formula) l.formula = parse_formula(slurp(opt.formula_path), *l.system);
  return l;
}

Dra load_dra(const Options& opt) {
  Loaded l = load(opt);
  Implementation impl = parse_implementation(slurp(opt.impl_path), *l.system, *l.universe);
  return make_dra(l.system, l.universe, l.formula, std::move(impl));
}

void emit(const Options& opt, std::ostream& out, const json& machine, const std::string& text) {
  if (opt.json_output())
    out << machine.dump(2) << "\n";
  else
    out << text;
}

json configs_json(const std::vector<Config>& cs, const Universe& u) {
  json out = json::array();
  for (const Config& c : cs) out.push_back(json::parse(render_config(c, u)));
  return out;
}

// ---- commands ----

int cmd_sat(const Options& opt, std::ostream& out) {
  Loaded l = load(opt);
  Config gamma = parse_config(opt.config_text, *l.system, *l.universe);
  bool verdict = pcl_sat(gamma, l.formula, *l.universe, opt.limits());
  emit(opt, out, json{{"format", 1}, {"command", "sat"}, {"verdict", verdict}},
       verdict ? "configuration satisfies the formula\n"
               : "configuration does not satisfy the formula\n");
  return verdict ? 0 : 1;
}

SatSet brute_force_satset(const Pcl& f, const Universe& u, Limits limits) {
  // the enumeration route: walk the whole configuration space and evaluate
  // each member directly
  ConfigEnumerator en = enumerate_configurations(u, limits.config_cap);
  Evaluator ev(u, f, limits);
  std::vector<Config> members;
  while (auto c = en.next())
    if (ev.sat(*c)) members.push_back(std::move(*c));
  return SatSet::of_members(u, std::move(members));
}

int cmd_satset(const Options& opt, std::ostream& out) {
  Loaded l = load(opt);
  SatSet s = opt.brute ? brute_force_satset(l.formula, *l.universe, opt.limits())
                       : sat_set(l.formula, *l.universe, opt.limits());
  SatSet e = s.materialize(opt.cap);
  std::string text = std::to_string(e.members().size()) + " satisfying configuration(s)\n";
  for (const Config& c : e.members()) text += "  " + l.universe->config_name(c) + "\n";
  emit(opt, out,
       json{{"format", 1},
            {"command", "satset"},
            {"count", e.members().size()},
            {"members", configs_json(e.members(), *l.universe)}},
       text);
  return 0;
}

int cmd_fnf(const Options& opt, std::ostream& out) {
  Loaded l = load(opt);
  FullNormalForm fnf = full_normal_form(l.formula, *l.universe, opt.limits());
  std::string rendered = render_formula(fnf_to_formula(fnf), *l.system);
  emit(opt, out,
       json{{"format", 1},
            {"command", "fnf"},
            {"formula", rendered},
            {"disjuncts", configs_json(fnf.disjuncts, *l.universe)}},
       rendered + "\n");
  return 0;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
  Loaded l = load(opt);
  Pcl g = parse_formula(slurp(opt.formula2_path), *l.system);
  EquivalenceResult r = equivalent(l.formula, g, *l.universe, opt.limits());
  json machine{{"format", 1}, {"command", "equiv"}, {"verdict", r.equivalent}};
  std::string text = r.equivalent ? "equivalent\n" : "not equivalent\n";
  if (r.counterexample) {
    machine["counterexample"] = json::parse(render_config(*r.counterexample, *l.universe));
    text += "  disagree on " + l.universe->config_name(*r.counterexample) + "\n";
  }
  emit(opt, out, machine, text);
  return r.equivalent ? 0 : 1;
}

int cmd_satisfiable(const Options& opt, std::ostream& out) {
  Loaded l = load(opt);
  SatisfiabilityResult r = satisfiable(l.formula, *l.universe, opt.limits());
  json machine{{"format", 1}, {"command", "satisfiable"}, {"verdict", r.satisfiable}};
  std::string text = r.satisfiable ? "satisfiable\n" : "unsatisfiable\n";
  if (r.witness) {
    machine["witness"] = json::parse(render_config(*r.witness, *l.universe));
    text += "  witness " + l.universe->config_name(*r.witness) + "\n";
  }
  emit(opt, out, machine, text);
  return r.satisfiable ? 0 : 1;
}

int cmd_trust(const Options& opt, std::ostream& out) {
  Dra dra = load_dra(opt);
  TrustVerdict v = is_trustworthy(dra, opt.limits());
  out << render_trust_report(v, dra, opt.json_output());
  return v.trustworthy ? 0 : 1;
}

int cmd_partial_trust(const Options& opt, std::ostream& out) {
  Dra dra = load_dra(opt);
  PartialTrustVerdict v = is_partially_trustworthy(dra, opt.limits());
  out << render_partial_report(v, dra, opt.json_output());
  return v.partially_trustworthy ? 0 : 1;
}

int cmd_correct(const Options& opt, std::ostream& out) {
  Dra dra = load_dra(opt);
  Implementation fixed = correct(dra, opt.limits());
  spit(opt.out_path, render_implementation(fixed, *dra.universe));
  emit(opt, out,
       json{{"format", 1}, {"command", "correct"}, {"verdict", "corrected"}, {"out", opt.out_path}},
       "corrected implementation written to " + opt.out_path + "\n");
  return 0;
}

int cmd_dra_equiv(const Options& opt, std::ostream& out) {
  Dra a = load_dra(opt);
  Options second = opt;
  second.system_path = opt.system2_path.empty() ? opt.system_path : opt.system2_path;
  second.formula_path = opt.formula2_path.empty() ? opt.formula_path : opt.formula2_path;
  second.impl_path = opt.impl2_path.empty() ? opt.impl_path : opt.impl2_path;
  Dra b = load_dra(second);
  DraEquivalence r = dra_equivalent(a, b, opt.limits());
  json machine{{"format", 1}, {"command", "dra-equiv"}, {"verdict", r.equivalent}};
  std::string text = r.equivalent ? "equivalent\n" : "not equivalent: " + r.reason + "\n";
  if (!r.equivalent) machine["reason"] = r.reason;
  emit(opt, out, machine, text);
  return r.equivalent ? 0 : 1;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  Architecture arch = generate(opt.style, opt.counts);
  std::string system_path =
      opt.out_system.empty() ? opt.style + "-system.json" : opt.out_system;
  std::string formula_path =
      opt.out_formula.empty() ? opt.style + "-formula.pcl" : opt.out_formula;
  spit(system_path, render_system(arch.system));
  spit(formula_path, render_formula(arch.formula, arch.system) + "\n");
  emit(opt, out,
       json{{"format", 1}, {"command", "gen"}, {"system", system_path}, {"formula", formula_path}},
       "wrote " + system_path + " and " + formula_path + "\n");
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dracheck: decision tools for dynamic reconfigurable architectures\n"
               "described in propositional configuration logic"};
  app.require_subcommand(1);
  Options opt;

  auto add_shared = [&](CLI::App* cmd) {
    cmd->add_option("--cap", opt.cap, "bound on every enumerated space (default 1048576)");
    cmd->add_option("--split-budget", opt.split_budget,
                    "cover attempts per coalescing evaluation (default 3^16)");
    cmd->add_option("--output", opt.output, "report style: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", opt.system_path, "system description file")->required();
  };
  auto add_formula = [&](CLI::App* cmd) {
    cmd->add_option("--formula", opt.formula_path, "formula file")->required();
  };
  auto add_impl = [&](CLI::App* cmd) {
    cmd->add_option("--impl", opt.impl_path, "implementation (lasso) file")->required();
  };

  int rc = 0;
  auto wire = [&](CLI::App* cmd, auto fn) {
    cmd->callback([&opt, &out, fn, &rc]() { rc = fn(opt, out); });
  };

  CLI::App* sat = app.add_subcommand("sat", "does a configuration satisfy a formula");
  add_system(sat);
  add_formula(sat);
  sat->add_option("--config", opt.config_text, "configuration as JSON, e.g. [[\"m(1)\",\"s(1)\"]]")
      ->required();
  add_shared(sat);
  wire(sat, cmd_sat);

  CLI::App* satset = app.add_subcommand("satset", "compute the satisfying set");
  add_system(satset);
  add_formula(satset);
  satset->add_flag("--brute", opt.brute, "enumerate the whole configuration space instead of composing");
  add_shared(satset);
  wire(satset, cmd_satset);

  CLI::App* fnf = app.add_subcommand("fnf", "compute the full normal form");
  add_system(fnf);
  add_formula(fnf);
  add_shared(fnf);
  wire(fnf, cmd_fnf);

  CLI::App* equiv = app.add_subcommand("equiv", "decide equivalence of two formulas");
  add_system(equiv);
  add_formula(equiv);
  equiv->add_option("--formula2", opt.formula2_path, "second formula file")->required();
  add_shared(equiv);
  wire(equiv, cmd_equiv);

  CLI::App* satisf = app.add_subcommand("satisfiable", "decide satisfiability");
  add_system(satisf);
  add_formula(satisf);
  add_shared(satisf);
  wire(satisf, cmd_satisfiable);

  CLI::App* trust = app.add_subcommand("trust", "decide trustworthiness of an implementation");
  add_system(trust);
  add_formula(trust);
  add_impl(trust);
  add_shared(trust);
  wire(trust, cmd_trust);

  CLI::App* partial = app.add_subcommand("partial-trust", "decide partial trustworthiness");
  add_system(partial);
  add_formula(partial);
  add_impl(partial);
  add_shared(partial);
  wire(partial, cmd_partial_trust);

  CLI::App* correct_cmd = app.add_subcommand("correct", "restrict an implementation until trustworthy");
  add_system(correct_cmd);
  add_formula(correct_cmd);
  add_impl(correct_cmd);
  correct_cmd->add_option("--out", opt.out_path, "where to write the corrected implementation")
      ->required();
  add_shared(correct_cmd);
  wire(correct_cmd, cmd_correct);

  CLI::App* dra_equiv = app.add_subcommand("dra-equiv", "decide equivalence of two architectures");
  add_system(dra_equiv);
  add_formula(dra_equiv);
  add_impl(dra_equiv);
  dra_equiv->add_option("--system2", opt.system2_path, "second system file (defaults to --system)");
  dra_equiv->add_option("--formula2", opt.formula2_path, "second formula file (defaults to --formula)");
  dra_equiv->add_option("--impl2", opt.impl2_path, "second implementation file (defaults to --impl)");
  add_shared(dra_equiv);
  wire(dra_equiv, cmd_dra_equiv);

  CLI::App* gen = app.add_subcommand("gen", "generate a named architecture");
  gen->add_option("style", opt.style, "one of: master-slave, publish-subscribe, pipes-filters, star, blackboard, request-response")
      ->required();
  gen->add_option("--counts", opt.counts, "instance counts, e.g. 2,2")
      ->required()
      ->delimiter(',');
  gen->add_option("--out-system", opt.out_system, "system output path (default <style>-system.json)");
  gen->add_option("--out-formula", opt.out_formula, "formula output path (default <style>-formula.pcl)");
  add_shared(gen);
  wire(gen, cmd_gen);

  std::vector<std::string> argv_storage;
  argv_storage.push_back("dracheck");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == errc::resource_limit) return 3;
    if (e.code() == errc::not_partially_trustworthy) return 1;
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace pcl
