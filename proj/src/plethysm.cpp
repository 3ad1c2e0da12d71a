#include "cspleth/plethysm.hpp"

#include <cassert>
#include <map>
#include <vector>

namespace cspleth {

TruncPoly pleth_p_on_expr(int n, const ExprPtr& e, const Bounds& bounds) {
  assert(n >= 1);
  switch (e->kind) {
    case ExprKind::One:
      return TruncPoly::constant(CoeffPoly(1));
    case ExprKind::Int:
      return TruncPoly::constant(CoeffPoly(e->value));
    case ExprKind::Param:
      return TruncPoly::constant(CoeffPoly::q(n));
    case ExprKind::Alpha: {
      int bound = bounds.resolve(e->name, e->bound);
      std::vector<VarId> universe;
      universe.reserve(static_cast<std::size_t>(bound));
      for (int i = 1; i <= bound; ++i) universe.push_back({e->name, i});
      TruncPoly result(universe);
      for (int i = 0; i < bound; ++i) {
        std::vector<int> exps(static_cast<std::size_t>(bound), 0);
        exps[static_cast<std::size_t>(i)] = n;
        result.add_term(exps, CoeffPoly(1));
      }
      return result;
    }
    case ExprKind::Neg:
      return -pleth_p_on_expr(n, e->a, bounds);
    case ExprKind::Eps: {
      TruncPoly inner = pleth_p_on_expr(n, e->a, bounds);
      return n % 2 == 0 ? inner : -inner;
    }
    case ExprKind::Sum:
      return pleth_p_on_expr(n, e->a, bounds) +
             pleth_p_on_expr(n, e->b, bounds);
    case ExprKind::Prod:
      return pleth_p_on_expr(n, e->a, bounds) *
             pleth_p_on_expr(n, e->b, bounds);
  }
  assert(false);
  return TruncPoly::constant(CoeffPoly(0));
}

TruncPoly pleth(const SymFunc& f, const ExprPtr& e, const Bounds& bounds) {
  SymFunc fp = f.to_basis(Basis::P);
  std::map<int, TruncPoly> part_memo;
  auto power_part = [&](int n) -> const TruncPoly& {
    auto it = part_memo.find(n);
    if (it == part_memo.end()) {
      it = part_memo.emplace(n, pleth_p_on_expr(n, e, bounds)).first;
    }
    return it->second;
  };
  TruncPoly result = TruncPoly::constant(CoeffPoly(0));
  for (const auto& [lambda, coeff] : fp.terms()) {
    TruncPoly term = TruncPoly::constant(CoeffPoly(1));
    for (int part : lambda.parts()) term = term * power_part(part);
    result = result + term.scaled(coeff);
  }
  return result;
}

SymFunc pleth_symbolic(const SymFunc& f, const SymFunc& g) {
  SymFunc fp = f.to_basis(Basis::P);
  SymFunc gp = g.to_basis(Basis::P);
  std::map<int, SymFunc> part_memo;
  auto power_part = [&](int n) -> const SymFunc& {
    auto it = part_memo.find(n);
    if (it == part_memo.end()) {
      SymFunc pn(Basis::P);
      for (const auto& [mu, coeff] : gp.terms()) {
        std::vector<int> scaled;
        scaled.reserve(mu.parts().size());
        for (int part : mu.parts()) scaled.push_back(part * n);
        pn.add_term(Partition(scaled), coeff);
      }
      it = part_memo.emplace(n, std::move(pn)).first;
    }
    return it->second;
  };
  SymFunc result(Basis::P);
  for (const auto& [lambda, coeff] : fp.terms()) {
    SymFunc term = SymFunc::one(Basis::P);
    for (int part : lambda.parts()) term = term * power_part(part);
    result = result + term.scaled(coeff);
  }
  return result;
}

}  // namespace cspleth
