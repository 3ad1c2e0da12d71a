#pragma once

#include <string>

#include <json.hpp>

#include "cspleth/coeff_poly.hpp"
#include "cspleth/sym_func.hpp"
#include "cspleth/trunc_poly.hpp"
#include "cspleth/wgraph.hpp"

namespace cspleth {

// ordered_json keeps insertion order, so identical data gives identical
// bytes; every emitter here goes through it.
using Json = nlohmann::ordered_json;

// {"vertices":[{"id":"a","weight":2},...],"edges":[["a","b"],["a","a"]]}
Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

// Terse text: "a:2; b / a-b a-a"; weight defaults to 1, "/" and the edge
// list may be absent for edgeless graphs.
WeightedGraph graph_from_text(const std::string& text);
std::string graph_to_text(const WeightedGraph& g);

// Reads JSON when the string starts with '{', the terse format otherwise.
WeightedGraph graph_from_string(const std::string& text);

// Constants are exact rational strings ("-2", "3/2"); anything with q or t
// is a monomial list [{"q":0,"t":1,"value":"3/2"},...] with zero exponents
// omitted.  coeff_from_json also accepts plain JSON integers.
Json coeff_to_json(const CoeffPoly& c);
CoeffPoly coeff_from_json(const Json& j);

// {"basis":"p","terms":[{"partition":[2,1],"coeff":[...]},...]}
Json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

// Sums of rational-coefficient generator terms: "p[2,1] - 2 e[3] + 1/2 h[1]".
// All terms must share one basis.
SymFunc symfunc_from_text(const std::string& text);

// {"vars":[{"name":"x","index":1},...],"terms":[{"exps":[2,0],"coeff":...},
// ...]}; vars are name/index pairs so names ending in digits stay distinct.
Json trunc_to_json(const TruncPoly& p);
TruncPoly trunc_from_json(const Json& j);

std::string coeff_to_latex(const CoeffPoly& c);
std::string symfunc_to_latex(const SymFunc& f);
std::string trunc_to_latex(const TruncPoly& p);

}  // namespace cspleth
