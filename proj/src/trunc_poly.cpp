#include "cspleth/trunc_poly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace cspleth {

TruncPoly::TruncPoly(std::vector<VarId> universe) : vars_(std::move(universe)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

TruncPoly TruncPoly::constant(const CoeffPoly& c) {
  TruncPoly p;
  if (!c.is_zero()) p.terms_[{}] = c;
  return p;
}

TruncPoly TruncPoly::variable(const VarId& v) {
  TruncPoly p(std::vector<VarId>{v});
  p.terms_[{1}] = CoeffPoly(1);
  return p;
}

int TruncPoly::total_degree() const {
  int best = 0;
  for (const auto& [exps, c] : terms_) {
    best = std::max(best, std::accumulate(exps.begin(), exps.end(), 0));
  }
  return best;
}

void TruncPoly::add_term(const std::vector<int>& exps, const CoeffPoly& c) {
  assert(exps.size() == vars_.size());
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CoeffPoly TruncPoly::coefficient(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? CoeffPoly() : it->second;
}

TruncPoly TruncPoly::embedded(const std::vector<VarId>& universe) const {
  if (universe == vars_) return *this;
  TruncPoly out(universe);
  // Position of each old variable in the new universe.
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(out.vars_.begin(), out.vars_.end(), vars_[i]);
    assert(it != out.vars_.end() && *it == vars_[i]);
    where[i] = static_cast<std::size_t>(it - out.vars_.begin());
  }
  std::vector<int> key(out.vars_.size());
  for (const auto& [exps, c] : terms_) {
    std::fill(key.begin(), key.end(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) key[where[i]] = exps[i];
    out.terms_[key] = c;
  }
  return out;
}

std::pair<TruncPoly, TruncPoly> TruncPoly::aligned(const TruncPoly& a,
                                                   const TruncPoly& b) {
  if (a.vars_ == b.vars_) return {a, b};
  std::vector<VarId> merged = a.vars_;
  merged.insert(merged.end(), b.vars_.begin(), b.vars_.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return {a.embedded(merged), b.embedded(merged)};
}

TruncPoly TruncPoly::operator-() const {
  TruncPoly r = *this;
  for (auto& [exps, c] : r.terms_) c = -c;
  return r;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
  if (vars_ != o.vars_) {
    auto [a, b] = aligned(*this, o);
    *this = std::move(a);
    for (const auto& [exps, c] : b.terms_) add_term(exps, c);
    return *this;
  }
  for (const auto& [exps, c] : o.terms_) add_term(exps, c);
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o) { return *this += -o; }

TruncPoly TruncPoly::operator+(const TruncPoly& o) const {
  TruncPoly r = *this;
  r += o;
  return r;
}

TruncPoly TruncPoly::operator-(const TruncPoly& o) const {
  TruncPoly r = *this;
  r -= o;
  return r;
}

TruncPoly TruncPoly::operator*(const TruncPoly& o) const {
  auto [a, b] = aligned(*this, o);
  TruncPoly r(a.vars_);
  std::vector<int> key(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = ea[i] + eb[i];
      r.add_term(key, ca * cb);
    }
  }
  return r;
}

TruncPoly TruncPoly::scaled(const CoeffPoly& c) const {
  if (c.is_zero()) return TruncPoly(vars_);
  TruncPoly r = *this;
  for (auto& [exps, v] : r.terms_) v *= c;
  return r;
}

TruncPoly TruncPoly::pow(int n) const {
  TruncPoly r = TruncPoly::constant(CoeffPoly(1));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

TruncPoly TruncPoly::substitute_t(const Rational& value) const {
  TruncPoly r(vars_);
  for (const auto& [exps, c] : terms_) r.add_term(exps, c.substitute_t(value));
  return r;
}

bool TruncPoly::operator==(const TruncPoly& o) const {
  if (vars_ == o.vars_) return terms_ == o.terms_;
  auto [a, b] = aligned(*this, o);
  return a.terms_ == b.terms_;
}

std::optional<TruncPoly::Difference> TruncPoly::first_difference(
    const TruncPoly& o) const {
  auto [a, b] = aligned(*this, o);
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() ||
        (ia != a.terms_.end() && ia->first < ib->first)) {
      return Difference{monomial_string(a.vars_, ia->first), ia->second,
                        CoeffPoly()};
    }
    if (ia == a.terms_.end() || ib->first < ia->first) {
      return Difference{monomial_string(a.vars_, ib->first), CoeffPoly(),
                        ib->second};
    }
    if (!(ia->second == ib->second)) {
      return Difference{monomial_string(a.vars_, ia->first), ia->second,
                        ib->second};
    }
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

std::string TruncPoly::monomial_string(const std::vector<VarId>& vars,
                                       const std::vector<int>& exps) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i].to_string();
    if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
  }
  return s.empty() ? "1" : s;
}

std::string TruncPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const std::vector<int>, CoeffPoly>*> order;
  order.reserve(terms_.size());
  for (const auto& term : terms_) order.push_back(&term);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    int dx = std::accumulate(x->first.begin(), x->first.end(), 0);
    int dy = std::accumulate(y->first.begin(), y->first.end(), 0);
    if (dx != dy) return dx < dy;
    return x->first < y->first;
  });
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& [exps, coeff] = *order[i];
    if (i) out << " + ";
    std::string mono = monomial_string(vars_, exps);
    if (mono == "1") {
      std::string c = coeff.to_string();
      out << (coeff.needs_parens() ? "(" + c + ")" : c);
    } else if (coeff == CoeffPoly(1)) {
      out << mono;
    } else if (coeff == CoeffPoly(-1)) {
      out << "-" << mono;
    } else if (coeff.needs_parens()) {
      out << "(" << coeff.to_string() << ")*" << mono;
    } else {
      out << coeff.to_string() << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace cspleth
