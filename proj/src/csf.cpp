#include "cspleth/csf.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>

#include "cspleth/errors.hpp"

namespace cspleth {

namespace {

constexpr int kMaxSubsetEdges = 30;

void check_subset_capacity(const WeightedGraph& g) {
  if (g.edge_count() > kMaxSubsetEdges) {
    throw CapacityError("edge-subset expansion needs at most " +
                        std::to_string(kMaxSubsetEdges) + " edges, got " +
                        std::to_string(g.edge_count()));
  }
}

}  // namespace

SymFunc x_via_subsets(const WeightedGraph& g) {
  check_subset_capacity(g);
  SymFunc out(Basis::P);
  int m = g.edge_count();
  std::vector<bool> edge_in(static_cast<std::size_t>(m), false);
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    int bits = 0;
    for (int i = 0; i < m; ++i) {
      bool in = (mask >> i) & 1ULL;
      edge_in[static_cast<std::size_t>(i)] = in;
      if (in) ++bits;
    }
    out.add_term(components_lambda(g, edge_in),
                 CoeffPoly(bits % 2 == 0 ? 1 : -1));
  }
  return out;
}

SymFunc x_via_stable_partitions(const WeightedGraph& g) {
  SymFunc out(Basis::MTilde);
  for (const auto& assign : set_partitions(g.vertex_count())) {
    if (!partition_stable(g, assign)) continue;
    out.add_term(partition_lambda(g, assign), CoeffPoly(1));
  }
  return out;
}

namespace {

SymFunc x_delcon_rec(const WeightedGraph& g,
                     std::map<std::string, SymFunc>& memo) {
  std::string key = g.signature();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  SymFunc result(Basis::P);
  if (g.edge_count() == 0) {
    result.add_term(Partition(g.weights), CoeffPoly(1));
  } else if (g.is_loop(0)) {
    // Contraction of a loop equals its deletion, so the relation cancels.
    result = SymFunc::zero(Basis::P);
  } else {
    result = x_delcon_rec(delete_edge(g, 0), memo) -
             x_delcon_rec(contract_edge(g, 0), memo);
  }
  memo.emplace(std::move(key), result);
  return result;
}

SymFunc xb_delcon_rec(const WeightedGraph& g,
                      std::map<std::string, SymFunc>& memo) {
  std::string key = g.signature();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  SymFunc result(Basis::P);
  if (g.edge_count() == 0) {
    result.add_term(Partition(g.weights), CoeffPoly(1));
  } else if (g.is_loop(0)) {
    // Contraction of a loop equals its deletion, so both branches agree.
    result = xb_delcon_rec(delete_edge(g, 0), memo)
                 .scaled(CoeffPoly(1) + CoeffPoly::t(1));
  } else {
    result = xb_delcon_rec(delete_edge(g, 0), memo) +
             xb_delcon_rec(contract_edge(g, 0), memo).scaled(CoeffPoly::t(1));
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

SymFunc x_via_delcon(const WeightedGraph& g) {
  std::map<std::string, SymFunc> memo;
  return x_delcon_rec(g, memo);
}

SymFunc xb_via_subsets(const WeightedGraph& g) {
  check_subset_capacity(g);
  SymFunc out(Basis::P);
  int m = g.edge_count();
  std::vector<bool> edge_in(static_cast<std::size_t>(m), false);
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    int bits = 0;
    for (int i = 0; i < m; ++i) {
      bool in = (mask >> i) & 1ULL;
      edge_in[static_cast<std::size_t>(i)] = in;
      if (in) ++bits;
    }
    out.add_term(components_lambda(g, edge_in), CoeffPoly::t(bits));
  }
  return out;
}

SymFunc xb_via_partitions(const WeightedGraph& g) {
  SymFunc out(Basis::MTilde);
  CoeffPoly one_plus_t = CoeffPoly(1) + CoeffPoly::t(1);
  for (const auto& assign : set_partitions(g.vertex_count())) {
    out.add_term(partition_lambda(g, assign),
                 one_plus_t.pow(internal_edge_count(g, assign)));
  }
  return out;
}

SymFunc xb_via_delcon(const WeightedGraph& g) {
  std::map<std::string, SymFunc> memo;
  return xb_delcon_rec(g, memo);
}

namespace {

// Per-colour data shared by both combinatorial enumerations: the evaluated
// (prime-erased) value split into a q power, alphabet exponents aligned to
// the universe, the value's own negation parity, and the sign flag.
struct ColourData {
  std::vector<std::pair<int, int>> exps;  // (universe position, exponent)
  int q_exp = 0;
  bool eps_odd = false;
  bool negative = false;
};

struct ColourTable {
  std::vector<VarId> universe;
  std::vector<ColourData> colours;
};

ColourTable build_colour_table(const std::vector<SignedVar>& ordered_vars) {
  ColourTable table;
  std::vector<VarValue> values;
  values.reserve(ordered_vars.size());
  for (const auto& v : ordered_vars) {
    values.push_back(evaluate_signed_var(v));
    for (const auto& [id, e] : values.back().var_exps) {
      table.universe.push_back(id);
    }
  }
  std::sort(table.universe.begin(), table.universe.end());
  table.universe.erase(
      std::unique(table.universe.begin(), table.universe.end()),
      table.universe.end());
  auto position = [&](const VarId& id) {
    return static_cast<int>(std::lower_bound(table.universe.begin(),
                                             table.universe.end(), id) -
                            table.universe.begin());
  };
  for (std::size_t i = 0; i < ordered_vars.size(); ++i) {
    ColourData data;
    data.q_exp = values[i].q_exp;
    data.eps_odd = values[i].eps_odd;
    data.negative = ordered_vars[i].negative;
    for (const auto& [id, e] : values[i].var_exps) {
      data.exps.emplace_back(position(id), e);
    }
    table.colours.push_back(std::move(data));
  }
  return table;
}

// The monomial a colouring contributes, before orientation counting:
// exponents and q power are weight-scaled sums over vertices; parity holds
// (-1)^(sum of weights of vertices whose colour value is negated).
struct ColouringMonomial {
  std::vector<int> exps;
  int q_exp = 0;
  bool value_parity_odd = false;
};

ColouringMonomial colouring_monomial(const WeightedGraph& g,
                                     const ColourTable& table,
                                     const std::vector<int>& kappa) {
  ColouringMonomial mono;
  mono.exps.assign(table.universe.size(), 0);
  int parity = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int w = g.weights[static_cast<std::size_t>(v)];
    const ColourData& c =
        table.colours[static_cast<std::size_t>(kappa[static_cast<std::size_t>(v)])];
    mono.q_exp += c.q_exp * w;
    if (c.eps_odd) parity += w;
    for (const auto& [pos, e] : c.exps) {
      mono.exps[static_cast<std::size_t>(pos)] += e * w;
    }
  }
  mono.value_parity_odd = parity % 2 != 0;
  return mono;
}

bool next_colouring(std::vector<int>& kappa, int colour_count) {
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    if (kappa[i] + 1 < colour_count) {
      ++kappa[i];
      return true;
    }
    kappa[i] = 0;
  }
  return false;
}

}  // namespace

TruncPoly x_pleth_combinatorial(const WeightedGraph& g,
                                const std::vector<SignedVar>& ordered_vars) {
  ColourTable table = build_colour_table(ordered_vars);
  TruncPoly out(table.universe);
  int n = g.vertex_count();
  int colour_count = static_cast<int>(table.colours.size());
  if (colour_count == 0) {
    return n == 0 ? TruncPoly::constant(CoeffPoly(1)) : out;
  }
  std::vector<int> kappa(static_cast<std::size_t>(n), 0);
  do {
    bool dead = false;
    std::vector<std::pair<int, int>> forced;
    std::vector<std::pair<int, int>> free_edges;
    for (const auto& [u, v] : g.edges) {
      int a = kappa[static_cast<std::size_t>(u)];
      int b = kappa[static_cast<std::size_t>(v)];
      if (a == b) {
        if (!table.colours[static_cast<std::size_t>(a)].negative) {
          dead = true;
          break;
        }
        free_edges.emplace_back(u, v);
      } else if (a < b) {
        forced.emplace_back(u, v);
      } else {
        forced.emplace_back(v, u);
      }
    }
    if (dead) continue;
    long long count = 0;
    std::size_t f = free_edges.size();
    auto arcs = forced;
    arcs.resize(forced.size() + f);
    for (unsigned long long mask = 0; mask < (1ULL << f); ++mask) {
      for (std::size_t i = 0; i < f; ++i) {
        const auto& [u, v] = free_edges[i];
        arcs[forced.size() + i] = ((mask >> i) & 1ULL)
                                      ? std::make_pair(v, u)
                                      : std::make_pair(u, v);
      }
      if (arcs_acyclic(n, arcs)) ++count;
    }
    if (count == 0) continue;
    ColouringMonomial mono = colouring_monomial(g, table, kappa);
    Rational value(count);
    if (mono.value_parity_odd) value = -value;
    for (int v = 0; v < n; ++v) {
      if (table.colours[static_cast<std::size_t>(
                            kappa[static_cast<std::size_t>(v)])]
              .negative) {
        value = -value;
      }
    }
    out.add_term(mono.exps, CoeffPoly::monomial({mono.q_exp, 0}, value));
  } while (next_colouring(kappa, colour_count));
  return out;
}

TruncPoly x_pleth_combinatorial(const WeightedGraph& g, const ExprPtr& e,
                                const Bounds& bounds) {
  return x_pleth_combinatorial(g, default_order(var_set(e, bounds)));
}

TruncPoly xb_pleth_combinatorial(const WeightedGraph& g,
                                 const std::vector<SignedVar>& ordered_vars) {
  ColourTable table = build_colour_table(ordered_vars);
  TruncPoly out(table.universe);
  int n = g.vertex_count();
  int m = g.edge_count();
  int colour_count = static_cast<int>(table.colours.size());
  if (colour_count == 0) {
    return n == 0 ? TruncPoly::constant(CoeffPoly(1)) : out;
  }
  CoeffPoly one_plus_t = CoeffPoly(1) + CoeffPoly::t(1);
  std::vector<CoeffPoly> bidirected_factor{CoeffPoly(1)};
  for (int i = 1; i <= m; ++i) {
    bidirected_factor.push_back(bidirected_factor.back() * one_plus_t);
  }
  std::vector<int> kappa(static_cast<std::size_t>(n), 0);
  do {
    Biorientation assignment(static_cast<std::size_t>(m), 0);
    std::vector<int> free_edges;
    for (int i = 0; i < m; ++i) {
      const auto& [u, v] = g.edges[static_cast<std::size_t>(i)];
      int a = kappa[static_cast<std::size_t>(u)];
      int b = kappa[static_cast<std::size_t>(v)];
      if (a == b) {
        if (table.colours[static_cast<std::size_t>(a)].negative) {
          free_edges.push_back(i);
        } else {
          assignment[static_cast<std::size_t>(i)] = kBothDirections;
        }
      } else {
        // Stored edges have first <= second, so direction 0 is u -> v.
        assignment[static_cast<std::size_t>(i)] = a < b ? 0 : 1;
      }
    }
    CoeffPoly orientation_sum(0);
    std::size_t f = free_edges.size();
    std::vector<int> choice(f, 0);
    while (true) {
      for (std::size_t i = 0; i < f; ++i) {
        assignment[static_cast<std::size_t>(free_edges[i])] = choice[i];
      }
      if (biorientation_acyclic(g, assignment)) {
        int bidirected = 0;
        for (int x : assignment) {
          if (x == kBothDirections) ++bidirected;
        }
        // Components of the bidirected subgraph induced on vertices whose
        // colour carries the negative sign flag, isolated ones included.
        std::vector<int> parent(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
        auto find = [&](int x) {
          while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
          }
          return x;
        };
        std::vector<char> neg(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) {
          neg[static_cast<std::size_t>(v)] =
              table.colours[static_cast<std::size_t>(
                                kappa[static_cast<std::size_t>(v)])]
                  .negative;
        }
        for (int i = 0; i < m; ++i) {
          if (assignment[static_cast<std::size_t>(i)] != kBothDirections) {
            continue;
          }
          const auto& [u, v] = g.edges[static_cast<std::size_t>(i)];
          if (neg[static_cast<std::size_t>(u)] &&
              neg[static_cast<std::size_t>(v)]) {
            parent[static_cast<std::size_t>(find(u))] = find(v);
          }
        }
        int components = 0;
        for (int v = 0; v < n; ++v) {
          if (neg[static_cast<std::size_t>(v)] && find(v) == v) ++components;
        }
        CoeffPoly term = bidirected_factor[static_cast<std::size_t>(bidirected)];
        if (components % 2 != 0) term = -term;
        orientation_sum += term;
      }
      std::size_t i = 0;
      while (i < f && choice[i] == kBothDirections) {
        choice[i] = 0;
        ++i;
      }
      if (i == f) break;
      ++choice[i];
    }
    if (orientation_sum.is_zero()) continue;
    ColouringMonomial mono = colouring_monomial(g, table, kappa);
    if (mono.value_parity_odd) orientation_sum = -orientation_sum;
    out.add_term(mono.exps, orientation_sum *
                                CoeffPoly::monomial({mono.q_exp, 0}, 1));
  } while (next_colouring(kappa, colour_count));
  return out;
}

TruncPoly xb_pleth_combinatorial(const WeightedGraph& g, const ExprPtr& e,
                                 const Bounds& bounds) {
  return xb_pleth_combinatorial(g, default_order(var_set(e, bounds)));
}

Rational chromatic_polynomial(const WeightedGraph& g, long long n) {
  ExprPtr e = n >= 0 ? expr_int(n) : expr_neg(expr_int(-n));
  TruncPoly result = x_pleth_combinatorial(g, e, Bounds{});
  assert(result.vars().empty() || result.is_zero());
  if (result.is_zero()) return Rational(0);
  return result.terms().begin()->second.constant_value();
}

namespace {

BigInt classical_rec(const WeightedGraph& g, const BigInt& n,
                     std::map<std::string, BigInt>& memo) {
  if (g.has_loop()) return BigInt(0);
  std::string key = g.signature();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt result;
  if (g.edge_count() == 0) {
    result = boost::multiprecision::pow(
        n, static_cast<unsigned>(g.vertex_count()));
  } else {
    result = classical_rec(delete_edge(g, 0), n, memo) -
             classical_rec(contract_edge(g, 0), n, memo);
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

BigInt classical_chromatic_eval(const WeightedGraph& g, long long n) {
  std::map<std::string, BigInt> memo;
  return classical_rec(g, BigInt(n), memo);
}

}  // namespace cspleth
