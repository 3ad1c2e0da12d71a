#include "cspleth/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cspleth/alphabet.hpp"
#include "cspleth/csf.hpp"
#include "cspleth/errors.hpp"
#include "cspleth/plethysm.hpp"
#include "cspleth/rational.hpp"
#include "cspleth/sym_func.hpp"
#include "cspleth/trunc_poly.hpp"
#include "cspleth/wgraph.hpp"

namespace cspleth {

namespace {

Bounds uniform_bounds(int n) {
  Bounds b;
  b.fallback = n;
  return b;
}

std::string graph_desc(const CorpusInstance& inst) {
  return "graph=" + inst.id;
}

std::string expr_desc(const ExprPtr& e) { return print_expr(e); }

std::optional<std::string> poly_diff(const std::string& label,
                                     const TruncPoly& lhs,
                                     const TruncPoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  auto d = lhs.first_difference(rhs);
  assert(d.has_value());
  std::ostringstream out;
  out << label << ": differ at " << d->monomial << ": lhs = "
      << d->lhs.to_string() << ", rhs = " << d->rhs.to_string();
  return out.str();
}

std::optional<std::string> sym_diff(const std::string& label, const SymFunc& lhs,
                                    const SymFunc& rhs) {
  int bound = std::max({1, lhs.max_degree(), rhs.max_degree()});
  SymFunc a = lhs.to_basis(Basis::P, bound);
  SymFunc b = rhs.to_basis(Basis::P, bound);
  if (a.terms() == b.terms()) return std::nullopt;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  Partition where;
  while (true) {
    if (ia == a.terms().end()) {
      where = ib->first;
      break;
    }
    if (ib == b.terms().end()) {
      where = ia->first;
      break;
    }
    if (ia->first < ib->first) {
      where = ia->first;
      break;
    }
    if (ib->first < ia->first) {
      where = ib->first;
      break;
    }
    if (!(ia->second == ib->second)) {
      where = ia->first;
      break;
    }
    ++ia;
    ++ib;
  }
  std::ostringstream out;
  out << label << ": differ at p" << where.to_string() << ": lhs = "
      << a.coefficient(where).to_string() << ", rhs = "
      << b.coefficient(where).to_string();
  return out.str();
}

IdentityReport finish(const std::string& identity, const std::string& instance,
                      const std::optional<std::string>& witness) {
  return {identity, instance, !witness.has_value(), witness.value_or("")};
}

// Number of ways to orient the free edges so that together with the forced
// arcs the digraph is acyclic.  A free loop admits no acyclic orientation,
// so it zeroes the count.
long long acyclic_extension_count(
    int n, std::vector<std::pair<int, int>>& arcs,
    const std::vector<std::pair<int, int>>& free_edges) {
  std::size_t base = arcs.size();
  int fm = static_cast<int>(free_edges.size());
  long long count = 0;
  for (unsigned long long mask = 0; mask < (1ull << fm); ++mask) {
    arcs.resize(base);
    for (int i = 0; i < fm; ++i) {
      auto [u, v] = free_edges[static_cast<std::size_t>(i)];
      if (mask >> i & 1) {
        arcs.emplace_back(v, u);
      } else {
        arcs.emplace_back(u, v);
      }
    }
    if (arcs_acyclic(n, arcs)) ++count;
  }
  arcs.resize(base);
  return count;
}

// Advances an odometer over {0..limit-1}^positions; false after the last.
bool advance(std::vector<int>& digits, int limit) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] + 1 < limit) {
      ++digits[i];
      return true;
    }
    digits[i] = 0;
  }
  return false;
}

// Component weights of the arcs restricted to the flagged vertices, peeled
// greedily from the minimum remaining label (reachability is recomputed
// after every peel because earlier components are marked used).
Partition source_lambda_restricted(
    const WeightedGraph& g, const std::vector<std::pair<int, int>>& arcs,
    const std::vector<char>& member) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [a, b] : arcs) {
    if (member[static_cast<std::size_t>(a)] &&
        member[static_cast<std::size_t>(b)]) {
      adj[static_cast<std::size_t>(a)].push_back(b);
    }
  }
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<int> parts;
  while (true) {
    int start = -1;
    for (int v = 0; v < n; ++v) {
      if (member[static_cast<std::size_t>(v)] &&
          !used[static_cast<std::size_t>(v)]) {
        start = v;
        break;
      }
    }
    if (start < 0) break;
    std::vector<int> stack{start};
    used[static_cast<std::size_t>(start)] = 1;
    int weight = g.weights[static_cast<std::size_t>(start)];
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int to : adj[static_cast<std::size_t>(v)]) {
        if (!used[static_cast<std::size_t>(to)]) {
          used[static_cast<std::size_t>(to)] = 1;
          weight += g.weights[static_cast<std::size_t>(to)];
          stack.push_back(to);
        }
      }
    }
    parts.push_back(weight);
  }
  return Partition(parts);
}

}  // namespace

std::vector<ExprPtr> stock_expressions() {
  const char* texts[] = {"1",      "-1",  "3",   "x[4]", "-x",
                         "eps(x)", "x+y", "q*x", "2*x",  "x*y"};
  std::vector<ExprPtr> out;
  for (const char* t : texts) out.push_back(parse_expr(t));
  return out;
}

IdentityReport check_three_way(const CorpusInstance& inst) {
  SymFunc a = x_via_subsets(inst.graph);
  SymFunc b = x_via_stable_partitions(inst.graph);
  SymFunc c = x_via_delcon(inst.graph);
  auto w = sym_diff("edge subsets vs stable partitions", a, b);
  if (!w) w = sym_diff("edge subsets vs deletion-contraction", a, c);
  return finish("x_three_way", graph_desc(inst), w);
}

IdentityReport check_xb_three_way(const CorpusInstance& inst) {
  SymFunc a = xb_via_subsets(inst.graph);
  SymFunc b = xb_via_partitions(inst.graph);
  SymFunc c = xb_via_delcon(inst.graph);
  auto w = sym_diff("edge subsets vs set partitions", a, b);
  if (!w) w = sym_diff("edge subsets vs deletion-contraction", a, c);
  return finish("xb_three_way", graph_desc(inst), w);
}

IdentityReport check_pleth_x(const CorpusInstance& inst, const ExprPtr& e,
                             int bound) {
  Bounds b = uniform_bounds(bound);
  TruncPoly lhs = x_pleth_combinatorial(inst.graph, e, b);
  TruncPoly rhs = pleth(x_via_subsets(inst.graph), e, b);
  auto w = poly_diff("enumeration vs algebraic", lhs, rhs);
  return finish("pleth_x",
                graph_desc(inst) + " expr=" + expr_desc(e) + " bound=" +
                    std::to_string(bound),
                w);
}

IdentityReport check_pleth_xb(const CorpusInstance& inst, const ExprPtr& e,
                              int bound) {
  Bounds b = uniform_bounds(bound);
  TruncPoly lhs = xb_pleth_combinatorial(inst.graph, e, b);
  TruncPoly rhs = pleth(xb_via_subsets(inst.graph), e, b);
  auto w = poly_diff("enumeration vs algebraic", lhs, rhs);
  if (!w) {
    w = poly_diff("t = -1 vs chromatic enumeration",
                  lhs.substitute_t(Rational(-1)),
                  x_pleth_combinatorial(inst.graph, e, b));
  }
  return finish("pleth_xb",
                graph_desc(inst) + " expr=" + expr_desc(e) + " bound=" +
                    std::to_string(bound),
                w);
}

IdentityReport check_worked_examples(const CorpusInstance& inst) {
  const WeightedGraph& g = inst.graph;
  Bounds b = uniform_bounds(1);
  TruncPoly at_one = x_pleth_combinatorial(g, expr_one(), b);
  TruncPoly expected = g.edge_count() > 0
                           ? TruncPoly()
                           : TruncPoly::constant(CoeffPoly(1));
  auto w = poly_diff("value at 1 vs edge indicator", at_one, expected);
  if (!w) {
    long long orientations =
        static_cast<long long>(acyclic_orientations(g).size());
    Rational target(orientations);
    if (g.vertex_count() % 2 != 0) target = -target;
    TruncPoly at_minus_one =
        x_pleth_combinatorial(g, expr_neg(expr_one()), b);
    w = poly_diff("value at -1 vs signed acyclic orientation count",
                  at_minus_one, TruncPoly::constant(CoeffPoly(target)));
  }
  if (!w) {
    for (long long n = 1; n <= 4; ++n) {
      Rational via_pleth = chromatic_polynomial(g, n);
      Rational classical(classical_chromatic_eval(g, n));
      if (via_pleth != classical) {
        std::ostringstream out;
        out << "chromatic polynomial at " << n << ": plethysm = "
            << rational_to_string(via_pleth) << ", deletion-contraction = "
            << rational_to_string(classical);
        w = out.str();
        break;
      }
    }
  }
  return finish("worked_examples", graph_desc(inst), w);
}

IdentityReport check_coproduct(const CorpusInstance& inst, const ExprPtr& f,
                               const ExprPtr& h, int bound) {
  Bounds b = uniform_bounds(bound);
  const WeightedGraph& g = inst.graph;
  TruncPoly lhs = x_pleth_combinatorial(g, expr_sum(f, h), b);
  TruncPoly rhs;
  int n = g.vertex_count();
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    std::vector<int> left, right;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) {
        left.push_back(v);
      } else {
        right.push_back(v);
      }
    }
    rhs += x_pleth_combinatorial(induced_subgraph(g, left), f, b) *
           x_pleth_combinatorial(induced_subgraph(g, right), h, b);
  }
  auto w = poly_diff("whole graph vs vertex bipartitions", lhs, rhs);
  return finish("coproduct",
                graph_desc(inst) + " f=" + expr_desc(f) + " h=" +
                    expr_desc(h) + " bound=" + std::to_string(bound),
                w);
}

IdentityReport check_xb_coproduct(const CorpusInstance& inst, const ExprPtr& f,
                                  const ExprPtr& h, int bound) {
  Bounds b = uniform_bounds(bound);
  const WeightedGraph& g = inst.graph;
  TruncPoly lhs = xb_pleth_combinatorial(g, expr_sum(f, h), b);
  TruncPoly rhs;
  int n = g.vertex_count();
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    std::vector<int> left, right;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) {
        left.push_back(v);
      } else {
        right.push_back(v);
      }
    }
    rhs += xb_pleth_combinatorial(induced_subgraph(g, left), f, b) *
           xb_pleth_combinatorial(induced_subgraph(g, right), h, b);
  }
  auto w = poly_diff("whole graph vs vertex bipartitions", lhs, rhs);
  return finish("xb_coproduct",
                graph_desc(inst) + " f=" + expr_desc(f) + " h=" +
                    expr_desc(h) + " bound=" + std::to_string(bound),
                w);
}

IdentityReport check_e_convolution(int n, const ExprPtr& f, const ExprPtr& h,
                                   int bound) {
  Bounds b = uniform_bounds(bound);
  ExprPtr sum = expr_sum(f, h);
  auto e_gen = [](int k) {
    return k == 0 ? SymFunc::one(Basis::E)
                  : SymFunc::generator(Basis::E, Partition::single(k));
  };
  TruncPoly whole = pleth(e_gen(n), sum, b);
  TruncPoly parts;
  for (int i = 0; i <= n; ++i) {
    parts += pleth(e_gen(i), f, b) * pleth(e_gen(n - i), h, b);
  }
  BigInt n_fact = factorial(n);
  TruncPoly k_whole = x_pleth_combinatorial(complete_graph(n), sum, b)
                          .scaled(CoeffPoly(Rational(1, n_fact)));
  TruncPoly k_parts;
  for (int i = 0; i <= n; ++i) {
    BigInt denom = factorial(i) * factorial(n - i);
    k_parts += (x_pleth_combinatorial(complete_graph(i), f, b) *
                x_pleth_combinatorial(complete_graph(n - i), h, b))
                   .scaled(CoeffPoly(Rational(1, denom)));
  }
  auto w = poly_diff("algebraic whole vs algebraic convolution", whole, parts);
  if (!w) w = poly_diff("algebraic vs complete graph", whole, k_whole);
  if (!w) {
    w = poly_diff("algebraic vs complete-graph convolution", whole, k_parts);
  }
  return finish("e_convolution",
                "n=" + std::to_string(n) + " f=" + expr_desc(f) + " h=" +
                    expr_desc(h) + " bound=" + std::to_string(bound),
                w);
}

IdentityReport check_h_convolution(int n, const ExprPtr& f, const ExprPtr& h,
                                   int bound) {
  Bounds b = uniform_bounds(bound);
  ExprPtr sum = expr_sum(f, h);
  auto h_gen = [](int k) {
    return k == 0 ? SymFunc::one(Basis::H)
                  : SymFunc::generator(Basis::H, Partition::single(k));
  };
  auto signed_scale = [](int k) {
    BigInt k_fact = factorial(k);
    Rational s(1, k_fact);
    return CoeffPoly(k % 2 == 0 ? s : -s);
  };
  TruncPoly whole = pleth(h_gen(n), sum, b);
  TruncPoly parts;
  for (int i = 0; i <= n; ++i) {
    parts += pleth(h_gen(i), f, b) * pleth(h_gen(n - i), h, b);
  }
  TruncPoly k_whole = x_pleth_combinatorial(complete_graph(n), expr_neg(sum), b)
                          .scaled(signed_scale(n));
  TruncPoly k_parts;
  for (int i = 0; i <= n; ++i) {
    TruncPoly left = x_pleth_combinatorial(complete_graph(i), expr_neg(f), b)
                         .scaled(signed_scale(i));
    TruncPoly right =
        x_pleth_combinatorial(complete_graph(n - i), expr_neg(h), b)
            .scaled(signed_scale(n - i));
    k_parts += left * right;
  }
  auto w = poly_diff("algebraic whole vs algebraic convolution", whole, parts);
  if (!w) w = poly_diff("algebraic vs negated complete graph", whole, k_whole);
  if (!w) {
    w = poly_diff("algebraic vs negated complete-graph convolution", whole,
                  k_parts);
  }
  return finish("h_convolution",
                "n=" + std::to_string(n) + " f=" + expr_desc(f) + " h=" +
                    expr_desc(h) + " bound=" + std::to_string(bound),
                w);
}

IdentityReport check_mtilde_convolution(const Partition& lambda,
                                        const ExprPtr& f, const ExprPtr& h,
                                        int bound) {
  Bounds b = uniform_bounds(bound);
  const std::vector<int>& parts = lambda.parts();
  int len = static_cast<int>(parts.size());
  TruncPoly lhs =
      x_pleth_combinatorial(weighted_complete_graph(lambda), expr_sum(f, h), b);
  std::map<std::vector<int>, TruncPoly> left_memo, right_memo;
  auto side = [&](std::map<std::vector<int>, TruncPoly>& memo,
                  const std::vector<int>& sel,
                  const ExprPtr& arg) -> const TruncPoly& {
    auto it = memo.find(sel);
    if (it == memo.end()) {
      SymFunc gen = sel.empty()
                        ? SymFunc::one(Basis::MTilde)
                        : SymFunc::generator(Basis::MTilde, Partition(sel));
      it = memo.emplace(sel, pleth(gen, arg, b)).first;
    }
    return it->second;
  };
  // Position subsets of the part list: a sub-multiset mu chosen with
  // multiplicity prod over i of binom(mult_i(lambda), mult_i(mu)).
  TruncPoly rhs;
  for (unsigned long long mask = 0; mask < (1ull << len); ++mask) {
    std::vector<int> mu, rest;
    for (int i = 0; i < len; ++i) {
      if (mask >> i & 1) {
        mu.push_back(parts[static_cast<std::size_t>(i)]);
      } else {
        rest.push_back(parts[static_cast<std::size_t>(i)]);
      }
    }
    rhs += side(left_memo, mu, f) * side(right_memo, rest, h);
  }
  auto w = poly_diff("weighted complete graph vs submultiset convolution", lhs,
                     rhs);
  return finish("mtilde_convolution",
                "lambda=" + lambda.to_string() + " f=" + expr_desc(f) + " h=" +
                    expr_desc(h) + " bound=" + std::to_string(bound),
                w);
}

IdentityReport check_omega_ascent(const CorpusInstance& inst, int bound) {
  const WeightedGraph& g = inst.graph;
  int n = g.vertex_count();
  SymFunc image = x_via_subsets(g).omega();
  if ((g.total_weight() - n) % 2 != 0) image = -image;
  TruncPoly lhs = image.expand(bound, "x", std::max(1, g.total_weight()));

  std::map<std::vector<int>, long long> counts;
  std::vector<int> kappa(static_cast<std::size_t>(n), 0);
  do {
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::pair<int, int>> free_edges;
    for (const auto& [u, v] : g.edges) {
      int cu = kappa[static_cast<std::size_t>(u)];
      int cv = kappa[static_cast<std::size_t>(v)];
      if (cu == cv) {
        free_edges.emplace_back(u, v);
      } else if (cu < cv) {
        arcs.emplace_back(u, v);
      } else {
        arcs.emplace_back(v, u);
      }
    }
    long long count = acyclic_extension_count(n, arcs, free_edges);
    if (count != 0) {
      std::vector<int> exps(static_cast<std::size_t>(bound), 0);
      for (int v = 0; v < n; ++v) {
        exps[static_cast<std::size_t>(kappa[static_cast<std::size_t>(v)])] +=
            g.weights[static_cast<std::size_t>(v)];
      }
      counts[exps] += count;
    }
  } while (advance(kappa, bound));

  std::vector<VarId> universe;
  for (int j = 1; j <= bound; ++j) universe.push_back({"x", j});
  TruncPoly rhs(universe);
  for (const auto& [exps, c] : counts) rhs.add_term(exps, CoeffPoly(c));

  auto w = poly_diff("sign-adjusted omega image vs weak ascents", lhs, rhs);
  return finish("omega_ascent",
                graph_desc(inst) + " bound=" + std::to_string(bound), w);
}

IdentityReport check_superification(const CorpusInstance& inst, int bound) {
  const WeightedGraph& g = inst.graph;
  int n = g.vertex_count();
  Bounds b = uniform_bounds(bound);
  TruncPoly lhs = pleth(x_via_subsets(g), parse_expr("x - eps(y)"), b);

  // Colour indices 0..bound-1 are the negative colours (value y_{c+1}),
  // bound..2*bound-1 the positive ones (value x_{c-bound+1}); the index
  // order is the total order on colours.
  std::vector<VarId> universe;
  for (int j = 1; j <= bound; ++j) universe.push_back({"x", j});
  for (int j = 1; j <= bound; ++j) universe.push_back({"y", j});
  std::sort(universe.begin(), universe.end());
  auto position = [&](const VarId& v) {
    return static_cast<std::size_t>(
        std::lower_bound(universe.begin(), universe.end(), v) -
        universe.begin());
  };
  std::map<std::vector<int>, long long> counts;
  std::vector<int> kappa(static_cast<std::size_t>(n), 0);
  do {
    std::vector<std::pair<int, int>> arcs;
    std::vector<std::pair<int, int>> free_edges;
    bool dead = false;
    for (const auto& [u, v] : g.edges) {
      int cu = kappa[static_cast<std::size_t>(u)];
      int cv = kappa[static_cast<std::size_t>(v)];
      if (cu == cv) {
        if (cu < bound) {
          free_edges.emplace_back(u, v);
        } else {
          dead = true;
          break;
        }
      } else if (cu < cv) {
        arcs.emplace_back(u, v);
      } else {
        arcs.emplace_back(v, u);
      }
    }
    if (dead) continue;
    long long count = acyclic_extension_count(n, arcs, free_edges);
    if (count == 0) continue;
    int negative_vertices = 0;
    int negative_weight = 0;
    std::vector<int> exps(universe.size(), 0);
    for (int v = 0; v < n; ++v) {
      int c = kappa[static_cast<std::size_t>(v)];
      int w = g.weights[static_cast<std::size_t>(v)];
      if (c < bound) {
        ++negative_vertices;
        negative_weight += w;
        exps[position({"y", c + 1})] += w;
      } else {
        exps[position({"x", c - bound + 1})] += w;
      }
    }
    long long signed_count =
        (negative_weight - negative_vertices) % 2 == 0 ? count : -count;
    counts[exps] += signed_count;
  } while (advance(kappa, 2 * bound));

  TruncPoly rhs(universe);
  for (const auto& [exps, c] : counts) {
    if (c != 0) rhs.add_term(exps, CoeffPoly(c));
  }

  auto w = poly_diff("algebraic superification vs signed enumeration", lhs,
                     rhs);
  return finish("superification",
                graph_desc(inst) + " bound=" + std::to_string(bound), w);
}

namespace {

// Weighted source expansion: (-1)^(w(G)-|V|) omega(X) is the plain
// orientation sum; the sign is invisible on unit weights.
int source_sign(const WeightedGraph& g) {
  return (g.total_weight() - g.vertex_count()) % 2 == 0 ? 1 : -1;
}

std::optional<std::string> source_components_one_labeling(
    const std::string& label, const WeightedGraph& g) {
  SymFunc lhs = x_via_subsets(g).omega();
  if (source_sign(g) < 0) lhs = -lhs;
  SymFunc rhs(Basis::P);
  for (const Orientation& o : acyclic_orientations(g)) {
    rhs.add_term(source_components(g, o).lambda, CoeffPoly(1));
  }
  return sym_diff(label, lhs, rhs);
}

std::optional<std::string> source_pleth_one_labeling(const std::string& label,
                                                     const WeightedGraph& g,
                                                     int bound) {
  Bounds b = uniform_bounds(bound);
  TruncPoly lhs = pleth(x_via_subsets(g).omega(), parse_expr("x + y"), b);
  if (source_sign(g) < 0) lhs = -lhs;

  int n = g.vertex_count();
  // Key: source-component weights on the zero-coloured set, then the y
  // exponent vector fixed by the positive colours.
  std::map<std::pair<std::vector<int>, std::vector<int>>, long long> counts;
  std::vector<int> kappa(static_cast<std::size_t>(n), 0);
  do {
    std::vector<std::pair<int, int>> forced;
    std::vector<std::pair<int, int>> free_edges;
    for (const auto& [u, v] : g.edges) {
      int cu = kappa[static_cast<std::size_t>(u)];
      int cv = kappa[static_cast<std::size_t>(v)];
      if (cu == cv) {
        free_edges.emplace_back(u, v);
      } else if (cu < cv) {
        forced.emplace_back(u, v);
      } else {
        forced.emplace_back(v, u);
      }
    }
    std::vector<int> y_exps(static_cast<std::size_t>(bound), 0);
    std::vector<char> zero_set(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      int c = kappa[static_cast<std::size_t>(v)];
      if (c == 0) {
        zero_set[static_cast<std::size_t>(v)] = 1;
      } else {
        y_exps[static_cast<std::size_t>(c - 1)] +=
            g.weights[static_cast<std::size_t>(v)];
      }
    }
    std::size_t base = forced.size();
    int fm = static_cast<int>(free_edges.size());
    for (unsigned long long mask = 0; mask < (1ull << fm); ++mask) {
      forced.resize(base);
      for (int i = 0; i < fm; ++i) {
        auto [u, v] = free_edges[static_cast<std::size_t>(i)];
        if (mask >> i & 1) {
          forced.emplace_back(v, u);
        } else {
          forced.emplace_back(u, v);
        }
      }
      if (!arcs_acyclic(n, forced)) continue;
      Partition lambda = source_lambda_restricted(g, forced, zero_set);
      counts[{lambda.parts(), y_exps}] += 1;
    }
  } while (advance(kappa, bound + 1));

  std::map<std::vector<int>, TruncPoly> power_sum_memo;
  TruncPoly rhs;
  for (const auto& [key, c] : counts) {
    const auto& [lambda_parts, y_exps] = key;
    auto it = power_sum_memo.find(lambda_parts);
    if (it == power_sum_memo.end()) {
      SymFunc p = SymFunc::generator(Basis::P, Partition(lambda_parts));
      it = power_sum_memo.emplace(lambda_parts, p.expand(bound, "x")).first;
    }
    std::vector<VarId> y_universe;
    for (int j = 1; j <= bound; ++j) y_universe.push_back({"y", j});
    TruncPoly y_mono(y_universe);
    y_mono.add_term(y_exps, CoeffPoly(c));
    rhs += it->second * y_mono;
  }
  return poly_diff(label, lhs, rhs);
}

}  // namespace

IdentityReport check_source_components(const CorpusInstance& inst) {
  auto w = source_components_one_labeling("original labeling", inst.graph);
  if (!w) {
    w = source_components_one_labeling("reversed labeling",
                                       relabel_reversed(inst.graph));
  }
  return finish("source_components", graph_desc(inst), w);
}

IdentityReport check_source_pleth(const CorpusInstance& inst, int bound) {
  auto w = source_pleth_one_labeling("original labeling", inst.graph, bound);
  if (!w) {
    w = source_pleth_one_labeling("reversed labeling",
                                  relabel_reversed(inst.graph), bound);
  }
  return finish("source_pleth",
                graph_desc(inst) + " bound=" + std::to_string(bound), w);
}

IdentityReport check_two_x(const CorpusInstance& inst, int bound) {
  const WeightedGraph& g = inst.graph;
  int n = g.vertex_count();
  TruncPoly lhs =
      x_pleth_combinatorial(g, parse_expr("x + x"), uniform_bounds(bound));
  SymFunc rhs_sym(Basis::MTilde);
  for (const std::vector<int>& assign : set_partitions(n)) {
    int block_count =
        n == 0 ? 0 : 1 + *std::max_element(assign.begin(), assign.end());
    std::vector<std::vector<int>> blocks(
        static_cast<std::size_t>(block_count));
    for (int v = 0; v < n; ++v) {
      blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(v)])]
          .push_back(v);
    }
    bool all_bipartite = true;
    int components = 0;
    for (const auto& block : blocks) {
      if (!induced_bipartite(g, block)) {
        all_bipartite = false;
        break;
      }
      components += static_cast<int>(induced_components(g, block).size());
    }
    if (!all_bipartite) continue;
    rhs_sym.add_term(partition_lambda(g, assign),
                     CoeffPoly(1LL << components));
  }
  TruncPoly rhs = rhs_sym.expand(bound, "x", std::max(1, g.total_weight()));
  auto w = poly_diff("doubled alphabet vs bipartite blocks", lhs, rhs);
  return finish("two_x", graph_desc(inst) + " bound=" + std::to_string(bound),
                w);
}

IdentityReport check_xb_antipode(const CorpusInstance& inst, int bound) {
  const WeightedGraph& g = inst.graph;
  Bounds b = uniform_bounds(bound);
  ExprPtr neg_x = expr_neg(expr_alpha("x"));
  int m = g.edge_count();
  if (m > 18) {
    throw CapacityError("antipode check needs 2^" + std::to_string(m) +
                        " contractions");
  }
  TruncPoly lhs = xb_pleth_combinatorial(g, neg_x, b);
  // Contractions of different edge sets often coincide, so cache by the
  // contracted graph's signature.
  std::map<std::string, TruncPoly> memo;
  auto x_of = [&](const WeightedGraph& h) -> const TruncPoly& {
    auto it = memo.find(h.signature());
    if (it == memo.end()) {
      it = memo.emplace(h.signature(), x_pleth_combinatorial(h, neg_x, b))
               .first;
    }
    return it->second;
  };
  CoeffPoly one_plus_t = CoeffPoly(1) + CoeffPoly::t();
  TruncPoly rhs;
  for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
    std::vector<int> pending;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) pending.push_back(i);
    }
    int chosen = static_cast<int>(pending.size());
    WeightedGraph cur = g;
    while (!pending.empty()) {
      int e = pending.front();
      pending.erase(pending.begin());
      cur = contract_edge(cur, e);
      for (int& rest : pending) {
        if (rest > e) --rest;
      }
    }
    rhs += x_of(cur).scaled(one_plus_t.pow(chosen));
  }
  auto w = poly_diff("negated alphabet vs contraction sum", lhs, rhs);
  return finish("xb_antipode",
                graph_desc(inst) + " bound=" + std::to_string(bound), w);
}

IdentityReport check_ordering(const CorpusInstance& inst, const ExprPtr& e,
                              int bound, std::uint64_t seed, int count) {
  const WeightedGraph& g = inst.graph;
  VarSet vs = var_set(e, uniform_bounds(bound));
  std::vector<SignedVar> base = default_order(vs);
  TruncPoly base_x = x_pleth_combinatorial(g, base);
  TruncPoly base_xb = xb_pleth_combinatorial(g, base);
  std::optional<std::string> w;
  for (int k = 0; k < count && !w; ++k) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    std::vector<SignedVar> order = seeded_order(vs, s);
    w = poly_diff("chromatic sum under seed " + std::to_string(s),
                  x_pleth_combinatorial(g, order), base_x);
    if (!w) {
      w = poly_diff("tutte sum under seed " + std::to_string(s),
                    xb_pleth_combinatorial(g, order), base_xb);
    }
  }
  return finish("ordering",
                graph_desc(inst) + " expr=" + expr_desc(e) + " bound=" +
                    std::to_string(bound) + " seed=" + std::to_string(seed) +
                    " orders=" + std::to_string(count),
                w);
}

namespace {

std::vector<IdentityReport> run_jobs(
    std::vector<std::function<IdentityReport()>> jobs, int threads) {
  std::vector<IdentityReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        out[i] = jobs[i]();
      } catch (const std::exception& err) {
        out[i] = {"exception", "job " + std::to_string(i), false, err.what()};
      }
    }
  };
  unsigned hardware = std::thread::hardware_concurrency();
  int t = threads > 0 ? threads : static_cast<int>(hardware ? hardware : 1);
  t = std::max(1, std::min(t, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int i = 0; i + 1 < t; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  std::stable_sort(out.begin(), out.end(),
                   [](const IdentityReport& a, const IdentityReport& b) {
                     if (a.identity != b.identity) {
                       return a.identity < b.identity;
                     }
                     return a.instance < b.instance;
                   });
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"three_way",     "xb_three_way", "pleth_x",       "pleth_xb",
          "worked_examples", "coproduct",  "xb_coproduct",  "convolution",
          "omega_ascent",  "superification", "source",      "two_x",
          "xb_antipode",   "ordering",     "all"};
}

bool is_suite_name(const std::string& name) {
  for (const std::string& s : suite_names()) {
    if (s == name) return true;
  }
  return false;
}

std::vector<IdentityReport> run_suite(const std::string& name,
                                      const SuiteOptions& opts) {
  if (name == "all") {
    std::vector<IdentityReport> out;
    for (const std::string& suite : suite_names()) {
      if (suite == "all") continue;
      std::vector<IdentityReport> part = run_suite(suite, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  const std::vector<CorpusInstance> corpus =
      opts.corpus.empty() ? extended_corpus() : opts.corpus;
  const int bound = opts.bound;
  std::vector<std::function<IdentityReport()>> jobs;

  auto per_graph = [&](auto make) {
    for (const CorpusInstance& inst : corpus) {
      jobs.push_back([inst, make] { return make(inst); });
    }
  };

  if (name == "three_way") {
    per_graph([](const CorpusInstance& inst) { return check_three_way(inst); });
  } else if (name == "xb_three_way") {
    per_graph(
        [](const CorpusInstance& inst) { return check_xb_three_way(inst); });
  } else if (name == "pleth_x") {
    for (const CorpusInstance& inst : corpus) {
      for (const ExprPtr& e : stock_expressions()) {
        jobs.push_back(
            [inst, e, bound] { return check_pleth_x(inst, e, bound); });
      }
    }
  } else if (name == "pleth_xb") {
    for (const CorpusInstance& inst : corpus) {
      for (const ExprPtr& e : stock_expressions()) {
        jobs.push_back(
            [inst, e, bound] { return check_pleth_xb(inst, e, bound); });
      }
    }
  } else if (name == "worked_examples") {
    per_graph(
        [](const CorpusInstance& inst) { return check_worked_examples(inst); });
  } else if (name == "coproduct" || name == "xb_coproduct") {
    bool tutte = name == "xb_coproduct";
    ExprPtr x = expr_alpha("x");
    ExprPtr y = expr_alpha("y");
    std::vector<std::pair<ExprPtr, ExprPtr>> pairs = {{x, y}, {x, x}};
    for (const CorpusInstance& inst : corpus) {
      for (const auto& [f, h] : pairs) {
        jobs.push_back([inst, f, h, bound, tutte] {
          return tutte ? check_xb_coproduct(inst, f, h, bound)
                       : check_coproduct(inst, f, h, bound);
        });
      }
    }
  } else if (name == "convolution") {
    ExprPtr x = expr_alpha("x");
    ExprPtr y = expr_alpha("y");
    std::vector<std::pair<ExprPtr, ExprPtr>> pairs = {{x, y}, {x, x}};
    for (int n = 1; n <= 6; ++n) {
      for (const auto& [f, h] : pairs) {
        jobs.push_back(
            [n, f, h, bound] { return check_e_convolution(n, f, h, bound); });
        jobs.push_back(
            [n, f, h, bound] { return check_h_convolution(n, f, h, bound); });
      }
    }
    for (int total = 1; total <= 6; ++total) {
      for (const Partition& lambda : Partition::all_of(total)) {
        jobs.push_back([lambda, x, y, bound] {
          return check_mtilde_convolution(lambda, x, y, bound);
        });
      }
    }
  } else if (name == "omega_ascent") {
    per_graph([bound](const CorpusInstance& inst) {
      return check_omega_ascent(inst, bound);
    });
  } else if (name == "superification") {
    per_graph([bound](const CorpusInstance& inst) {
      return check_superification(inst, bound);
    });
  } else if (name == "source") {
    for (const CorpusInstance& inst : corpus) {
      jobs.push_back([inst] { return check_source_components(inst); });
      jobs.push_back([inst, bound] { return check_source_pleth(inst, bound); });
    }
  } else if (name == "two_x") {
    per_graph(
        [bound](const CorpusInstance& inst) { return check_two_x(inst, bound); });
  } else if (name == "xb_antipode") {
    per_graph([bound](const CorpusInstance& inst) {
      return check_xb_antipode(inst, bound);
    });
  } else if (name == "ordering") {
    std::vector<ExprPtr> exprs = stock_expressions();
    std::size_t len = corpus.size();
    std::size_t sample = std::min<std::size_t>(50, len);
    for (std::size_t i = 0; i < sample; ++i) {
      const CorpusInstance& inst = corpus[i * len / sample];
      ExprPtr e = exprs[i % exprs.size()];
      std::uint64_t seed = opts.seed;
      jobs.push_back([inst, e, bound, seed] {
        return check_ordering(inst, e, bound, seed, 20);
      });
    }
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }

  return run_jobs(std::move(jobs), opts.threads);
}

}  // namespace cspleth
