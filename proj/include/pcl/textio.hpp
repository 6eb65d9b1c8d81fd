// textio.hpp -- concrete syntax: the formula grammar, system and
// implementation files, and verdict reports
#pragma once

#include <string>

#include "pcl/pcl_formula.hpp"
#include "pcl/reconfig.hpp"
#include "pcl/system.hpp"
#include "pcl/universe.hpp"

namespace pcl {

// Formula grammar (loosest to tightest: or, and, +, prefix not/~):
//
//   pcl   := pcl2 { "or" pcl2 }
//   pcl2  := pcl3 { "and" pcl3 }
//   pcl3  := pcl4 { "+" pcl4 }
//   pcl4  := "not" pcl4 | "~" pcl4 | atom
//   atom  := "true" | "{" pil "}" | "<" port {"," port} ">" | "(" pcl ")"
//          | "dis" "(" pcl {"," pcl} ")"
//   pil   := pil2 { "|" pil2 } ;  pil2 := pil3 { "&" pil3 }
//   pil3  := "!" pil3 | "true" | "false" | port | "(" pil ")"
//   port  := ident [ "(" integer ")" ]
//
// The interaction literal <p,q> is sugar for the characteristic monomial of
// {p,q} over the system's full port set. Interaction-level formulas appear
// only inside braces; `!` negates at the interaction level, `not` at the
// configuration level.
Pcl parse_formula(const std::string& text, const System& sys);

// Inverts parse_formula; derived operators are printed back in their sugared
// form (and, ~, dis, interaction literals) whenever the core matches their
// desugaring.
std::string render_formula(const Pcl& f, const System& sys);

// System description files:
//   {"types":[{"name":"Master","ports":["m"],"instances":2,
//              "lts":{"states":[...],"initial":"...","transitions":[[q,port,q'],...]}?}, ...]}
System parse_system(const std::string& text);
std::string render_system(const System& sys);

// Implementation files: {"prefix":[config,...],"loop":[config,...]} where a
// config is an array of interactions and an interaction an array of port
// names. Every interaction must be legal for the system.
Implementation parse_implementation(const std::string& text, const System& sys, const Universe& u);
std::string render_implementation(const Implementation& impl, const Universe& u);

// One configuration as a JSON array of interactions, e.g. [["m(1)","s(1)"]].
Config parse_config(const std::string& text, const System& sys, const Universe& u);
std::string render_config(const Config& c, const Universe& u);

// Verdict reports; the machine form is JSON with a top-level "format": 1.
std::string render_trust_report(const TrustVerdict& v, const Dra& dra, bool as_json);
std::string render_partial_report(const PartialTrustVerdict& v, const Dra& dra, bool as_json);

}  // namespace pcl
