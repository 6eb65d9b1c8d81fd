#include "pcl/textio.hpp"

#include <cctype>
#include <json.hpp>

#include "pcl/error.hpp"
#include "pcl/pil.hpp"

namespace pcl {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- lexing

struct Token {
  enum Type { Ident, Integer, LParen, RParen, LBrace, RBrace, Less, Greater, Comma, Plus, Tilde, Bang, Amp, Bar, End };
  Type type;
  std::string text;
  long value = 0;
  int line = 1, col = 1;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Type t, std::string s) {
    out.push_back({t, std::move(s), 0, line, col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      push(Token::Ident, text.substr(start, i - start));
      col += static_cast<int>(i - start);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      Token t{Token::Integer, text.substr(start, i - start), 0, line, col};
      if (t.text.size() > 9) throw Error(errc::parse_error, "integer literal too large", line, col);
      t.value = std::stol(t.text);
      out.push_back(t);
      col += static_cast<int>(i - start);
      continue;
    }
    Token::Type type;
    switch (c) {
      case '(': type = Token::LParen; break;
      case ')': type = Token::RParen; break;
      case '{': type = Token::LBrace; break;
      case '}': type = Token::RBrace; break;
      case '<': type = Token::Less; break;
      case '>': type = Token::Greater; break;
      case ',': type = Token::Comma; break;
      case '+': type = Token::Plus; break;
      case '~': type = Token::Tilde; break;
      case '!': type = Token::Bang; break;
      case '&': type = Token::Amp; break;
      case '|': type = Token::Bar; break;
      default:
        throw Error(errc::parse_error, std::string("unexpected character '") + c + "'", line, col);
    }
    push(type, std::string(1, c));
    ++col;
    ++i;
  }
  out.push_back({Token::End, "", 0, line, col});
  return out;
}

// ---------------------------------------------------------------- parsing

class FormulaParser {
public:
  FormulaParser(const std::string& text, const System& sys) : sys_(&sys), toks_(lex(text)) {}

  Pcl parse() {
    Pcl f = parse_or();
    expect(Token::End, "end of input");
    return f;
  }

private:
  const System* sys_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool at_keyword(const char* kw) const {
    return peek().type == Token::Ident && peek().text == kw;
  }
  [[noreturn]] void error(const std::string& msg) const {
    throw Error(errc::parse_error, msg + " (found '" + peek().text + "')", peek().line, peek().col);
  }
  void expect(Token::Type t, const char* what) {
    if (peek().type != t) error(std::string("expected ") + what);
    take();
  }

  Pcl parse_or() {
    Pcl f = parse_and();
    while (at_keyword("or")) {
      take();
      f = Pcl::unite(f, parse_and());
    }
    return f;
  }

  Pcl parse_and() {
    Pcl f = parse_sum();
    while (at_keyword("and")) {
      take();
      f = Pcl::intersect(f, parse_sum());
    }
    return f;
  }

  Pcl parse_sum() {
    Pcl f = parse_prefix();
    while (peek().type == Token::Plus) {
      take();
      f = Pcl::coalesce(f, parse_prefix());
    }
    return f;
  }

  Pcl parse_prefix() {
    if (at_keyword("not")) {
      take();
      return Pcl::negation(parse_prefix());
    }
    if (peek().type == Token::Tilde) {
      take();
      return Pcl::closure(parse_prefix());
    }
    return parse_atom();
  }

  Pcl parse_atom() {
    if (at_keyword("true")) {
      take();
      return Pcl::truth();
    }
    if (at_keyword("dis")) {
      take();
      expect(Token::LParen, "'('");
      std::vector<Pcl> args{parse_or()};
      while (peek().type == Token::Comma) {
        take();
        args.push_back(parse_or());
      }
      expect(Token::RParen, "')'");
      return Pcl::disjoin_all(args);
    }
    if (peek().type == Token::LParen) {
      take();
      Pcl f = parse_or();
      expect(Token::RParen, "')'");
      return f;
    }
    if (peek().type == Token::LBrace) {
      take();
      Pil phi = parse_pil_or();
      expect(Token::RBrace, "'}'");
      return Pcl::lift(phi);
    }
    if (peek().type == Token::Less) {
      take();
      std::vector<Port> ports{parse_port()};
      while (peek().type == Token::Comma) {
        take();
        ports.push_back(parse_port());
      }
      expect(Token::Greater, "'>'");
      return Pcl::lift(characteristic_monomial(Interaction(std::move(ports)), sys_->ports()));
    }
    error("expected a formula");
  }

  Pil parse_pil_or() {
    Pil f = parse_pil_and();
    while (peek().type == Token::Bar) {
      take();
      f = Pil::disj(f, parse_pil_and());
    }
    return f;
  }

  Pil parse_pil_and() {
    Pil f = parse_pil_prefix();
    while (peek().type == Token::Amp) {
      take();
      f = Pil::conj(f, parse_pil_prefix());
    }
    return f;
  }

  Pil parse_pil_prefix() {
    if (peek().type == Token::Bang) {
      take();
      return Pil::neg(parse_pil_prefix());
    }
    if (at_keyword("true")) {
      take();
      return Pil::truth();
    }
    if (at_keyword("false")) {
      take();
      return Pil::falsity();
    }
    if (peek().type == Token::LParen) {
      take();
      Pil f = parse_pil_or();
      expect(Token::RParen, "')'");
      return f;
    }
    if (peek().type == Token::Ident) return Pil::atom(parse_port());
    error("expected an interaction formula");
  }

  Port parse_port() {
    if (peek().type != Token::Ident) error("expected a port name");
    Token name = take();
    Port p{name.text, 0};
    if (peek().type == Token::LParen) {
      take();
      if (peek().type != Token::Integer) error("expected an instance index");
      Token idx = take();
      if (idx.value < 1)
        throw Error(errc::parse_error, "instance indices are 1-based", idx.line, idx.col);
      p.instance = static_cast<int>(idx.value);
      expect(Token::RParen, "')'");
    }
    if (!sys_->port_id(p))
      throw Error(errc::unknown_port, "port " + p.name() + " is not part of the system",
                  name.line, name.col);
    return p;
  }
};

// --------------------------------------------------------------- rendering

// precedence levels: or 0, and 1, + 2, prefix 3, atom 4
constexpr int kOr = 0, kAnd = 1, kSum = 2, kPrefix = 3, kAtom = 4;

class FormulaRenderer {
public:
  explicit FormulaRenderer(const System& sys) : sys_(&sys) {}

  std::string render(const Pcl& f, int min_level) {
    auto [text, level] = render_node(f);
    if (level < min_level) return "(" + text + ")";
    return text;
  }

private:
  const System* sys_;

  static bool is_intersection(const Pcl& f, Pcl* a, Pcl* b) {
    if (f.kind() != Pcl::Kind::Not) return false;
    Pcl inner = f.child();
    if (inner.kind() != Pcl::Kind::Union) return false;
    if (inner.lhs().kind() != Pcl::Kind::Not || inner.rhs().kind() != Pcl::Kind::Not) return false;
    *a = inner.lhs().child();
    *b = inner.rhs().child();
    return true;
  }

  static bool is_closure(const Pcl& f, Pcl* a) {
    if (f.kind() != Pcl::Kind::Coalesce || f.rhs().kind() != Pcl::Kind::True) return false;
    *a = f.lhs();
    return true;
  }

  // disjoin(a, b) = (a or b) or (a + b); collects the n-ary argument list
  static bool collect_disjunction(const Pcl& f, std::vector<Pcl>& args) {
    if (f.kind() != Pcl::Kind::Union) return false;
    Pcl left = f.lhs(), right = f.rhs();
    if (left.kind() != Pcl::Kind::Union || right.kind() != Pcl::Kind::Coalesce) return false;
    Pcl a = left.lhs(), b = left.rhs();
    if (!(right.lhs() == a) || !(right.rhs() == b)) return false;
    if (!collect_disjunction(a, args)) args.push_back(a);
    args.push_back(b);
    return true;
  }

  std::pair<std::string, int> render_node(const Pcl& f) {
    Pcl a = Pcl::truth(), b = Pcl::truth();
    std::vector<Pcl> dis_args;
    if (f.kind() == Pcl::Kind::True) return {"true", kAtom};
    if (f.kind() == Pcl::Kind::Pil) return {render_pil_atom(f.pil()), kAtom};
    if (collect_disjunction(f, dis_args)) {
      std::string text = "dis(";
      for (std::size_t i = 0; i < dis_args.size(); ++i) {
        if (i) text += ", ";
        text += render(dis_args[i], kOr);
      }
      return {text + ")", kAtom};
    }
    if (is_intersection(f, &a, &b))
      return {render(a, kAnd) + " and " + render(b, kAnd + 1), kAnd};
    if (is_closure(f, &a)) return {"~" + render(a, kPrefix), kPrefix};
    switch (f.kind()) {
      case Pcl::Kind::Not:
        return {"not " + render(f.child(), kPrefix), kPrefix};
      case Pcl::Kind::Union:
        return {render(f.lhs(), kOr) + " or " + render(f.rhs(), kOr + 1), kOr};
      case Pcl::Kind::Coalesce:
        return {render(f.lhs(), kSum) + " + " + render(f.rhs(), kSum + 1), kSum};
      default:
        return {"true", kAtom};
    }
  }

  std::string render_pil_atom(const Pil& phi) {
    // a full monomial naming an interaction prints as the interaction literal
    if (phi.is_full_monomial(sys_->ports())) {
      auto lits = phi.monomial_literals();
      if (!lits->positive.empty()) {
        Interaction a(lits->positive);
        std::string text = "<";
        const auto names = a.names();
        for (std::size_t i = 0; i < names.size(); ++i) {
          if (i) text += ",";
          text += names[i];
        }
        return text + ">";
      }
    }
    return "{" + render_pil(phi, 0) + "}";
  }

  // pil levels: | 0, & 1, ! 2, atom 3
  std::string render_pil(const Pil& phi, int min_level) {
    auto [text, level] = render_pil_node(phi);
    if (level < min_level) return "(" + text + ")";
    return text;
  }

  std::pair<std::string, int> render_pil_node(const Pil& phi) {
    switch (phi.kind()) {
      case Pil::Kind::True:
        return {"true", 3};
      case Pil::Kind::Atom:
        return {phi.port().name(), 3};
      case Pil::Kind::Neg: {
        Pil inner = phi.child();
        if (inner.kind() == Pil::Kind::True) return {"false", 3};
        if (inner.kind() == Pil::Kind::Or) {
          // the desugared form of a conjunction
          Pil a = Pil::neg(inner.lhs()), b = Pil::neg(inner.rhs());
          return {render_pil(a, 1) + " & " + render_pil(b, 2), 1};
        }
        return {"!" + render_pil(inner, 2), 2};
      }
      case Pil::Kind::Or:
        return {render_pil(phi.lhs(), 0) + " | " + render_pil(phi.rhs(), 1), 0};
    }
    return {"true", 3};
  }
};

Port parse_port_name(const std::string& name) {
  auto open = name.find('(');
  if (open == std::string::npos) return Port{name, 0};
  if (name.back() != ')') fail(errc::parse_error, "malformed port name: " + name);
  std::string label = name.substr(0, open);
  std::string idx = name.substr(open + 1, name.size() - open - 2);
  if (label.empty() || idx.empty() || idx.size() > 9 ||
      idx.find_first_not_of("0123456789") != std::string::npos)
    fail(errc::parse_error, "malformed port name: " + name);
  int instance = std::stoi(idx);
  if (instance < 1) fail(errc::parse_error, "instance indices are 1-based: " + name);
  return Port{label, instance};
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(errc::parse_error, "malformed JSON document");
  return doc;
}

}  // namespace

Pcl parse_formula(const std::string& text, const System& sys) {
  return FormulaParser(text, sys).parse();
}

std::string render_formula(const Pcl& f, const System& sys) {
  return FormulaRenderer(sys).render(f, 0);
}

System parse_system(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("types") || !doc["types"].is_array())
    fail(errc::parse_error, "system file needs a top-level \"types\" array");
  std::vector<System::Entry> entries;
  for (const json& t : doc["types"]) {
    if (!t.is_object() || !t.contains("name") || !t.contains("ports") || !t.contains("instances"))
      fail(errc::parse_error, "each type needs \"name\", \"ports\", and \"instances\"");
    if (!t["name"].is_string() || !t["ports"].is_array() || !t["instances"].is_number_integer())
      fail(errc::parse_error, "malformed type entry");
    ComponentType type;
    type.name = t["name"].get<std::string>();
    for (const json& p : t["ports"]) {
      if (!p.is_string()) fail(errc::parse_error, "port labels must be strings");
      type.ports.push_back(p.get<std::string>());
    }
    if (t.contains("lts")) {
      const json& l = t["lts"];
      if (!l.is_object() || !l.contains("states") || !l.contains("initial") ||
          !l.contains("transitions"))
        fail(errc::parse_error, "lts needs \"states\", \"initial\", and \"transitions\"");
      Lts lts;
      for (const json& s : l["states"]) lts.states.push_back(s.get<std::string>());
      lts.initial = l["initial"].get<std::string>();
      for (const json& tr : l["transitions"]) {
        if (!tr.is_array() || tr.size() != 3)
          fail(errc::parse_error, "lts transitions are [from, port, to] triples");
        lts.transitions.emplace_back(tr[0].get<std::string>(), tr[1].get<std::string>(),
                                     tr[2].get<std::string>());
      }
      type.lts = std::move(lts);
    }
    int count = t["instances"].get<int>();
    entries.push_back({std::move(type), count});
  }
  return System::instantiate(std::move(entries));
}

std::string render_system(const System& sys) {
  json types = json::array();
  for (const System::Entry& e : sys.entries()) {
    json t{{"name", e.type.name}, {"ports", e.type.ports}, {"instances", e.count}};
    if (e.type.lts) {
      json transitions = json::array();
      for (const auto& [from, port, to] : e.type.lts->transitions)
        transitions.push_back({from, port, to});
      t["lts"] = {{"states", e.type.lts->states},
                  {"initial", e.type.lts->initial},
                  {"transitions", transitions}};
    }
    types.push_back(std::move(t));
  }
  return json{{"types", types}}.dump(2) + "\n";
}

namespace {

Config config_from_json(const json& entry, const System& sys, const Universe& u) {
  if (!entry.is_array()) fail(errc::parse_error, "a configuration must be an array of interactions");
  if (entry.empty()) fail(errc::empty_configuration, "a configuration must contain an interaction");
  std::vector<Interaction> list;
  for (const json& ia : entry) {
    if (!ia.is_array() || ia.empty())
      fail(errc::invalid_interaction, "an interaction must be a non-empty array of port names");
    std::vector<Port> ports;
    for (const json& p : ia) {
      if (!p.is_string()) fail(errc::parse_error, "port names must be strings");
      Port port = parse_port_name(p.get<std::string>());
      if (!sys.port_id(port))
        fail(errc::unknown_port, "port " + port.name() + " is not part of the system");
      ports.push_back(std::move(port));
    }
    Interaction a(std::move(ports));
    if (!validate_interaction(sys, a))
      fail(errc::invalid_interaction,
           "interaction " + a.name() + " uses two ports of one component instance");
    list.push_back(std::move(a));
  }
  return u.config_of(list);
}

json config_to_json(const Config& c, const Universe& u) {
  json out = json::array();
  for (InteractionId id : c.ids) out.push_back(u.interaction(id).names());
  return out;
}

}  // namespace

Config parse_config(const std::string& text, const System& sys, const Universe& u) {
  return config_from_json(parse_json(text), sys, u);
}

std::string render_config(const Config& c, const Universe& u) {
  return config_to_json(c, u).dump();
}

Implementation parse_implementation(const std::string& text, const System& sys, const Universe& u) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("prefix") || !doc.contains("loop") ||
      !doc["prefix"].is_array() || !doc["loop"].is_array())
    fail(errc::parse_error, "implementation file needs \"prefix\" and \"loop\" arrays");
  if (doc["loop"].empty()) fail(errc::empty_loop, "the loop must contain a configuration");
  Implementation impl;
  for (const json& c : doc["prefix"]) impl.prefix.push_back(config_from_json(c, sys, u));
  for (const json& c : doc["loop"]) impl.loop.push_back(config_from_json(c, sys, u));
  return impl;
}

std::string render_implementation(const Implementation& impl, const Universe& u) {
  json prefix = json::array(), loop = json::array();
  for (const Config& c : impl.prefix) prefix.push_back(config_to_json(c, u));
  for (const Config& c : impl.loop) loop.push_back(config_to_json(c, u));
  return json{{"prefix", prefix}, {"loop", loop}}.dump(2) + "\n";
}

std::string render_trust_report(const TrustVerdict& v, const Dra& dra, bool as_json) {
  if (as_json) {
    json violations = json::array();
    for (std::size_t i : v.loop_violations) violations.push_back(i);
    json out{{"format", 1},
             {"verdict", v.trustworthy ? "trustworthy" : "not_trustworthy"},
             {"violations", violations}};
    if (v.trustworthy) out["g"] = v.stabilization;
    return out.dump(2) + "\n";
  }
  if (v.trustworthy)
    return "trustworthy: every position after g = " + std::to_string(v.stabilization) +
           " satisfies the formula\n";
  std::string out = "not trustworthy: violations recur at loop position(s)";
  for (std::size_t i : v.loop_violations) out += " " + std::to_string(i);
  out += "\n";
  for (std::size_t i : v.loop_violations)
    out += "  loop position " + std::to_string(i) + ": " +
           dra.universe->config_name(dra.implementation.loop[i]) + "\n";
  return out;
}

std::string render_partial_report(const PartialTrustVerdict& v, const Dra& dra, bool as_json) {
  const Universe& u = *dra.universe;
  if (as_json) {
    json out{{"format", 1},
             {"verdict", v.partially_trustworthy ? "partially_trustworthy"
                                                 : "not_partially_trustworthy"}};
    if (v.partially_trustworthy) {
      out["g"] = v.stabilization;
      json witness = json::array();
      std::size_t pos = v.stabilization;
      for (const Config& c : v.prefix_witness)
        witness.push_back({{"position", pos++}, {"config", config_to_json(c, u)}});
      for (std::size_t i = 0; i < v.loop_witness.size(); ++i)
        witness.push_back({{"loop_position", i}, {"config", config_to_json(v.loop_witness[i], u)}});
      out["witness"] = witness;
    }
    return out.dump(2) + "\n";
  }
  if (!v.partially_trustworthy) return "not partially trustworthy\n";
  std::string out =
      "partially trustworthy from g = " + std::to_string(v.stabilization) + "; witnesses:\n";
  std::size_t pos = v.stabilization;
  for (const Config& c : v.prefix_witness)
    out += "  position " + std::to_string(pos++) + ": " + u.config_name(c) + "\n";
  for (std::size_t i = 0; i < v.loop_witness.size(); ++i)
    out += "  loop position " + std::to_string(i) + ": " + u.config_name(v.loop_witness[i]) + "\n";
  return out;
}

}  // namespace pcl
