#pragma once

#include <vector>

#include "cspleth/alphabet.hpp"
#include "cspleth/pleth_expr.hpp"
#include "cspleth/rational.hpp"
#include "cspleth/sym_func.hpp"
#include "cspleth/trunc_poly.hpp"
#include "cspleth/wgraph.hpp"

namespace cspleth {

// Chromatic symmetric function via signed edge subsets, in the p-basis.
SymFunc x_via_subsets(const WeightedGraph& g);

// Via stable set partitions, in the augmented monomial basis.
SymFunc x_via_stable_partitions(const WeightedGraph& g);

// Via deletion-contraction with per-call memoization, in the p-basis.
// A loop yields the zero function, matching both edge rules at once.
SymFunc x_via_delcon(const WeightedGraph& g);

// Tutte symmetric function, three independent routes over Q[t].
SymFunc xb_via_subsets(const WeightedGraph& g);
SymFunc xb_via_partitions(const WeightedGraph& g);
SymFunc xb_via_delcon(const WeightedGraph& g);

// Chromatic plethysm by direct enumeration: colourings first, then the
// count of compatible acyclic orientations (strict colour increase forces
// the arc; equal positive colours kill the colouring; equal negative
// colours leave the edge free).  The order of ordered_vars is the total
// ordering on the colour set.
TruncPoly x_pleth_combinatorial(const WeightedGraph& g,
                                const std::vector<SignedVar>& ordered_vars);
TruncPoly x_pleth_combinatorial(const WeightedGraph& g, const ExprPtr& e,
                                const Bounds& bounds);

// Tutte plethysm by direct enumeration: per colouring, strict increase
// forces a single arc, equal positive forces a bidirected edge, equal
// negative leaves three choices; each surviving acyclic biorientation
// contributes (1+t)^{bidirected} times (-1)^{components of the bidirected
// graph induced on negative-coloured vertices}.
TruncPoly xb_pleth_combinatorial(const WeightedGraph& g,
                                 const std::vector<SignedVar>& ordered_vars);
TruncPoly xb_pleth_combinatorial(const WeightedGraph& g, const ExprPtr& e,
                                 const Bounds& bounds);

// Proper-colouring count at n colours, evaluated plethystically.
Rational chromatic_polynomial(const WeightedGraph& g, long long n);

// Independent check: classical deletion-contraction, weights ignored.
BigInt classical_chromatic_eval(const WeightedGraph& g, long long n);

}  // namespace cspleth
