#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>

#include "helpers.hpp"
#include "pcl/architectures.hpp"
#include "pcl/error.hpp"
#include "pcl/reconfig.hpp"
#include "pcl/textio.hpp"

using namespace pcl;

namespace {

System ms22() { return gen_master_slave(2, 2).system; }

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::parse_error;
}

// written in the renderer's canonical spelling, so they survive a
// parse/render trip verbatim up to whitespace
const std::vector<std::string> kFixtures = {
    "true",
    "<m(1)>",
    "<m(1),s(1)>",
    "<m(1),s(2)> or <m(2),s(2)>",
    "{m(1)}",
    "{m(1) & !s(1)}",
    "{m(1) | s(1)}",
    "{!m(1)}",
    "{false}",
    "{true}",
    "not <m(1)>",
    "~<m(1),s(1)>",
    "<m(1)> + <s(1)>",
    "<m(1)> + <m(2)> + <s(1)>",
    "<m(1)> and <s(1)>",
    "<m(1)> and <s(1)> and <m(2)>",
    "<m(1)> or <s(1)>",
    "<m(1)> or <m(2)> or <s(1)>",
    "dis(<m(1)>, <s(1)>)",
    "dis(<m(1)>, <m(2)>, <s(1)>)",
    "not (<m(1)> or <s(1)>)",
    "~{m(1)}",
    "not ~<m(1)>",
    "<m(1)> + <s(1)> and <m(2)>",
    "<m(1)> + (<s(1)> and <m(2)>)",
    "not (<m(1)> + <s(1)>)",
    "{m(1) & m(2) | s(1)}",
    "{!m(1) & !s(1)}",
    "~(<m(1)> or <s(1)>)",
    "dis(<m(1)> + <s(1)>, <m(2)>)",
};

}  // namespace

TEST_CASE("interaction literals and braces parse to the expected cores") {
  System sys = ms22();
  Pcl lit = parse_formula("<m(1),s(1)>", sys);
  Pcl expected =
      Pcl::lift(characteristic_monomial(Interaction({{"m", 1}, {"s", 1}}), sys.ports()));
  CHECK(lit == expected);

  Pcl braces = parse_formula("{m(1) & !s(1)}", sys);
  CHECK(braces ==
        Pcl::lift(Pil::conj(Pil::atom({"m", 1}), Pil::neg(Pil::atom({"s", 1})))));
}

TEST_CASE("precedence: not binds tighter than +, then and, then or") {
  System sys = ms22();
  Pcl f = parse_formula("not (<m(1)> or <s(1)>) + ~<m(1)>", sys);
  Pcl a = parse_formula("<m(1)>", sys);
  Pcl b = parse_formula("<s(1)>", sys);
  CHECK(f == Pcl::coalesce(Pcl::negation(Pcl::unite(a, b)), Pcl::closure(a)));

  Pcl g = parse_formula("<m(1)> or <s(1)> and <m(2)> + <s(2)>", sys);
  Pcl m2 = parse_formula("<m(2)>", sys);
  Pcl s2 = parse_formula("<s(2)>", sys);
  CHECK(g == Pcl::unite(a, Pcl::intersect(b, Pcl::coalesce(m2, s2))));
}

TEST_CASE("thirty-fixture corpus round-trips verbatim") {
  System sys = ms22();
  REQUIRE(kFixtures.size() == 30);
  for (const std::string& fixture : kFixtures) {
    Pcl parsed = parse_formula(fixture, sys);
    std::string rendered = render_formula(parsed, sys);
    CHECK_MESSAGE(strip_ws(rendered) == strip_ws(fixture), "fixture: ", fixture,
                  " rendered: ", rendered);
    CHECK(parse_formula(rendered, sys) == parsed);
  }
}

TEST_CASE("generated architecture formulas round-trip through text") {
  std::vector<Architecture> gallery;
  gallery.push_back(gen_master_slave(2, 2));
  gallery.push_back(gen_publish_subscribe(1, 1, 1));
  gallery.push_back(gen_pipes_filters(2, 1));
  gallery.push_back(gen_star(3));
  gallery.push_back(gen_blackboard(2));
  gallery.push_back(gen_request_response(1, 1, 1));
  for (const Architecture& arch : gallery) {
    std::string rendered = render_formula(arch.formula, arch.system);
    Pcl reparsed = parse_formula(rendered, arch.system);
    CHECK(reparsed == arch.formula);
    CHECK(render_formula(reparsed, arch.system) == rendered);
  }
}

TEST_CASE("random formulas round-trip structurally") {
  System sys = ms22();
  const auto& P = sys.ports();
  std::mt19937 rng(20240817);
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };

  std::function<Pil(int)> rand_pil = [&](int depth) -> Pil {
    if (depth == 0 || pick(3) == 0) {
      switch (pick(3)) {
        case 0: return Pil::truth();
        case 1: return Pil::falsity();
        default: return Pil::atom(P[pick(static_cast<int>(P.size()))]);
      }
    }
    switch (pick(3)) {
      case 0: return Pil::neg(rand_pil(depth - 1));
      case 1: return Pil::disj(rand_pil(depth - 1), rand_pil(depth - 1));
      default: return Pil::conj(rand_pil(depth - 1), rand_pil(depth - 1));
    }
  };
  std::function<Pcl(int)> rand_pcl = [&](int depth) -> Pcl {
    if (depth == 0 || pick(4) == 0) {
      if (pick(4) == 0) return Pcl::truth();
      return Pcl::lift(rand_pil(2));
    }
    switch (pick(6)) {
      case 0: return Pcl::negation(rand_pcl(depth - 1));
      case 1: return Pcl::unite(rand_pcl(depth - 1), rand_pcl(depth - 1));
      case 2: return Pcl::coalesce(rand_pcl(depth - 1), rand_pcl(depth - 1));
      case 3: return Pcl::intersect(rand_pcl(depth - 1), rand_pcl(depth - 1));
      case 4: return Pcl::closure(rand_pcl(depth - 1));
      default: return Pcl::disjoin(rand_pcl(depth - 1), rand_pcl(depth - 1));
    }
  };

  for (int i = 0; i < 300; ++i) {
    Pcl f = rand_pcl(4);
    std::string rendered = render_formula(f, sys);
    CHECK(parse_formula(rendered, sys) == f);
  }
}

TEST_CASE("parse errors carry a location") {
  System sys = ms22();
  try {
    parse_formula("<m(1)> or\n  or", sys);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(e.line() == 2);
  }
  CHECK(code_of([&] { parse_formula("<zz(1)>", sys); }) == errc::unknown_port);
  CHECK(code_of([&] { parse_formula("<m(0)>", sys); }) == errc::parse_error);
  CHECK(code_of([&] { parse_formula("{m(1)", sys); }) == errc::parse_error);
  CHECK(code_of([&] { parse_formula("<m(1)> ? <s(1)>", sys); }) == errc::parse_error);
  CHECK(code_of([&] { parse_formula("", sys); }) == errc::parse_error);
  CHECK(code_of([&] { parse_formula("!m(1)", sys); }) == errc::parse_error);
}

TEST_CASE("parser survives random byte soup") {
  System sys = ms22();
  std::mt19937 rng(7);
  const std::string alphabet = "ms12()<>{}+~!&|, ordaintf\n\t\"\\x7f\x01";
  for (int i = 0; i < 10000; ++i) {
    std::string text;
    int len = static_cast<int>(rng() % 40);
    for (int j = 0; j < len; ++j) text += alphabet[rng() % alphabet.size()];
    try {
      parse_formula(text, sys);
    } catch (const Error&) {
      // rejected input is fine; crashing is not
    }
  }
}

TEST_CASE("system files parse and render") {
  std::string text = R"x({"types":[
    {"name":"Master","ports":["m"],"instances":2},
    {"name":"Slave","ports":["s"],"instances":2}]})x";
  System sys = parse_system(text);
  CHECK(sys.ports().size() == 4);
  CHECK(sys == ms22());

  System back = parse_system(render_system(sys));
  CHECK(back == sys);

  CHECK(code_of([] {
          parse_system(R"x({"types":[{"name":"A","ports":["x"],"instances":0}]})x");
        }) == errc::zero_count);
  CHECK(code_of([] {
          parse_system(R"x({"types":[{"name":"A","ports":["x"],"instances":1},
                                    {"name":"A","ports":["y"],"instances":1}]})x");
        }) == errc::duplicate_name);
  CHECK(code_of([] { parse_system("{"); }) == errc::parse_error);
  CHECK(code_of([] { parse_system(R"x({"types":{}})x"); }) == errc::parse_error);
}

TEST_CASE("system files carry transition-system data") {
  std::string text = R"x({"types":[{"name":"Node","ports":["p"],"instances":2,
    "lts":{"states":["idle","busy"],"initial":"idle",
           "transitions":[["idle","p","busy"],["busy","p","idle"]]}}]})x";
  System sys = parse_system(text);
  REQUIRE(sys.entries()[0].type.lts.has_value());
  CHECK(sys.entries()[0].type.lts->transitions.size() == 2);
  System back = parse_system(render_system(sys));
  CHECK(back == sys);
}

TEST_CASE("implementation files") {
  System sys = ms22();
  Universe u = Universe::of_system(sys);

  Implementation impl =
      parse_implementation(R"x({"prefix":[],"loop":[[["m(1)","s(1)"]]]})x", sys, u);
  REQUIRE(impl.loop.size() == 1);
  CHECK(u.config_name(impl.loop[0]) == "{{m(1),s(1)}}");

  Implementation back = parse_implementation(render_implementation(impl, u), sys, u);
  CHECK(back.loop == impl.loop);
  CHECK(back.prefix == impl.prefix);

  CHECK(code_of([&] {
          parse_implementation(R"x({"prefix":[],"loop":[]})x", sys, u);
        }) == errc::empty_loop);
  CHECK(code_of([&] {
          parse_implementation(R"x({"prefix":[[]],"loop":[[["m(1)"]]]})x", sys, u);
        }) == errc::empty_configuration);
  CHECK(code_of([&] {
          parse_implementation(R"x({"prefix":[],"loop":[[["m(7)"]]]})x", sys, u);
        }) == errc::unknown_port);
  CHECK(code_of([&] { parse_implementation("nonsense", sys, u); }) == errc::parse_error);

  System pf = gen_pipes_filters(2, 1).system;
  Universe pu = Universe::of_system(pf);
  CHECK(code_of([&] {
          parse_implementation(R"x({"prefix":[],"loop":[[["in_p(1)","out_p(1)"]]]})x", pf, pu);
        }) == errc::invalid_interaction);
}

TEST_CASE("verdict reports") {
  Architecture arch = gen_master_slave(1, 1);
  auto sys = std::make_shared<System>(std::move(arch.system));
  auto u = std::make_shared<Universe>(Universe::of_system(*sys));
  Config sat = u->config_of({Interaction({{"m", 1}, {"s", 1}})});
  Config bad = u->config_of({Interaction({{"m", 1}})});

  Dra good = make_dra(sys, u, arch.formula, Implementation{{bad}, {sat}});
  TrustVerdict tv = is_trustworthy(good);
  std::string json_report = render_trust_report(tv, good, true);
  auto doc = nlohmann::json::parse(json_report);
  CHECK(doc["format"] == 1);
  CHECK(doc["verdict"] == "trustworthy");
  CHECK(doc["g"].get<uint64_t>() == 0);
  CHECK(render_trust_report(tv, good, false).find("trustworthy") == 0);

  Dra broken = make_dra(sys, u, arch.formula, Implementation{{}, {sat, bad}});
  TrustVerdict tv2 = is_trustworthy(broken);
  auto doc2 = nlohmann::json::parse(render_trust_report(tv2, broken, true));
  CHECK(doc2["verdict"] == "not_trustworthy");
  CHECK(doc2["violations"].size() == 1);

  Config dominated = u->config_of({Interaction({{"m", 1}, {"s", 1}}), Interaction({{"m", 1}})});
  Dra partial = make_dra(sys, u, arch.formula, Implementation{{}, {dominated}});
  PartialTrustVerdict pv = is_partially_trustworthy(partial);
  auto doc3 = nlohmann::json::parse(render_partial_report(pv, partial, true));
  CHECK(doc3["format"] == 1);
  CHECK(doc3["verdict"] == "partially_trustworthy");
  CHECK(doc3["witness"].size() == 1);
}

TEST_CASE("config literals parse and render") {
  System sys = ms22();
  Universe u = Universe::of_system(sys);
  Config c = parse_config(R"x([["m(1)","s(1)"],["m(2)"]])x", sys, u);
  CHECK(c.size() == 2);
  Config back = parse_config(render_config(c, u), sys, u);
  CHECK(back == c);
}
