#pragma once

#include "cspleth/alphabet.hpp"
#include "cspleth/pleth_expr.hpp"
#include "cspleth/sym_func.hpp"
#include "cspleth/trunc_poly.hpp"

namespace cspleth {

// p_n evaluated on an expression by structural recursion: ONE -> 1,
// INT(c) -> c, PARAM(q) -> q^n, ALPHABET -> x_1^n + ... + x_N^n,
// SUM -> sum, PROD -> product, NEG -> negation, EPS -> (-1)^n * child.
TruncPoly pleth_p_on_expr(int n, const ExprPtr& e, const Bounds& bounds);

// Algebraic plethysm f[e]: expand f in the power-sum basis and apply
// pleth_p_on_expr part by part.  Linear in f; multiplicative over products
// of power sums.  Coefficients of f (including t and parameters) are
// scalars and pass through unchanged.
TruncPoly pleth(const SymFunc& f, const ExprPtr& e, const Bounds& bounds);

// Exact symbolic plethysm f[g] in the power-sum basis: p_n acts on
// g = sum d_mu p_mu by scaling every part of mu by n, leaving d_mu alone.
SymFunc pleth_symbolic(const SymFunc& f, const SymFunc& g);

}  // namespace cspleth
