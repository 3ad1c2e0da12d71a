#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cspleth/alphabet.hpp"
#include "cspleth/coeff_poly.hpp"
#include "cspleth/partition.hpp"
#include "cspleth/pleth_expr.hpp"
#include "cspleth/rational.hpp"
#include "cspleth/sym_func.hpp"
#include "cspleth/trunc_poly.hpp"
#include "cspleth/wgraph.hpp"

// Shared deterministic generator; modulo draws keep the stream identical
// across platforms.
struct TestRng {
  std::mt19937_64 gen;
  explicit TestRng(std::uint64_t seed) : gen(seed) {}
  int below(int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool flag() { return (gen() & 1) != 0; }
};

inline cspleth::Rational random_rational(TestRng& rng) {
  return cspleth::Rational(rng.range(-20, 20), rng.range(1, 10));
}

inline cspleth::Rational random_nonzero_rational(TestRng& rng) {
  cspleth::Rational r = random_rational(rng);
  return r == 0 ? cspleth::Rational(1) : r;
}

inline cspleth::CoeffPoly random_coeff(TestRng& rng) {
  cspleth::CoeffPoly c;
  int terms = rng.below(4);
  for (int i = 0; i < terms; ++i) {
    cspleth::ParamExp m{rng.below(3), rng.below(3)};
    c += cspleth::CoeffPoly::monomial(m, random_rational(rng));
  }
  return c;
}

inline cspleth::Partition random_partition(TestRng& rng, int max_len = 4, int max_part = 5) {
  std::vector<int> parts;
  int len = rng.below(max_len + 1);
  for (int i = 0; i < len; ++i) parts.push_back(rng.range(1, max_part));
  return cspleth::Partition(parts);
}

inline cspleth::SymFunc random_symfunc(TestRng& rng, cspleth::Basis basis, int max_terms = 3,
                                       int max_part = 4) {
  cspleth::SymFunc f(basis);
  int terms = rng.below(max_terms + 1);
  for (int i = 0; i < terms; ++i) {
    f.add_term(random_partition(rng, 3, max_part), random_coeff(rng));
  }
  return f;
}

inline cspleth::WeightedGraph random_graph(TestRng& rng, int max_vertices = 4, int max_weight = 3,
                                           bool allow_multi = false) {
  int n = rng.range(1, max_vertices);
  cspleth::WeightedGraph g;
  for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v + 1), rng.range(1, max_weight));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.flag()) g.add_edge_by_index(u, v);
    }
  }
  if (allow_multi) {
    int extra = rng.below(3);
    for (int i = 0; i < extra; ++i) g.add_edge_by_index(rng.below(n), rng.below(n));
  }
  return g;
}

inline cspleth::ExprPtr random_expr(TestRng& rng, int depth = 2) {
  using namespace cspleth;
  if (depth == 0 || rng.below(3) == 0) {
    switch (rng.below(5)) {
      case 0: return expr_one();
      case 1: return expr_int(rng.below(4));
      case 2: return expr_param("q");
      case 3: return expr_alpha("x", rng.flag() ? rng.range(1, 4) : -1);
      default: return expr_alpha("y", rng.flag() ? rng.range(1, 4) : -1);
    }
  }
  switch (rng.below(4)) {
    case 0: return expr_neg(random_expr(rng, depth - 1));
    case 1: return expr_eps(random_expr(rng, depth - 1));
    case 2: return expr_sum(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return expr_prod(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  }
}

inline std::string var_value_key(const cspleth::VarValue& value) {
  std::ostringstream out;
  out << (value.sign < 0 ? "-" : "+") << (value.eps_odd ? "e" : ".") << " q^" << value.q_exp;
  for (const auto& [var, exp] : value.var_exps) out << " " << var.to_string() << "^" << exp;
  return out.str();
}
