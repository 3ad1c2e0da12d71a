#include "cspleth/coeff_poly.hpp"

#include <sstream>

namespace cspleth {

CoeffPoly::CoeffPoly(long long constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

CoeffPoly::CoeffPoly(const Rational& constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

CoeffPoly CoeffPoly::q(int exp) { return monomial({exp, 0}, 1); }

CoeffPoly CoeffPoly::t(int exp) { return monomial({0, exp}, 1); }

CoeffPoly CoeffPoly::monomial(ParamExp m, const Rational& c) {
  CoeffPoly p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

bool CoeffPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == ParamExp{0, 0});
}

Rational CoeffPoly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

void CoeffPoly::strip(ParamExp key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    terms_[m] += c;
    strip(m);
  }
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    terms_[m] -= c;
    strip(m);
  }
  return *this;
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& o) const {
  CoeffPoly r = *this;
  r += o;
  return r;
}

CoeffPoly CoeffPoly::operator-(const CoeffPoly& o) const {
  CoeffPoly r = *this;
  r -= o;
  return r;
}

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const {
  CoeffPoly r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      ParamExp m{ma.q + mb.q, ma.t + mb.t};
      r.terms_[m] += ca * cb;
      r.strip(m);
    }
  }
  return r;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o) {
  *this = *this * o;
  return *this;
}

CoeffPoly CoeffPoly::pow(int n) const {
  CoeffPoly r = 1;
  for (int i = 0; i < n; ++i) r *= *this;
  return r;
}

std::strong_ordering CoeffPoly::operator<=>(const CoeffPoly& o) const {
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (auto c = a->first <=> b->first; c != 0) return c;
    if (a->second < b->second) return std::strong_ordering::less;
    if (b->second < a->second) return std::strong_ordering::greater;
  }
  if (a != terms_.end()) return std::strong_ordering::greater;
  if (b != o.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

CoeffPoly CoeffPoly::substitute_t(const Rational& value) const {
  CoeffPoly r;
  for (const auto& [m, c] : terms_) {
    Rational scaled = c;
    for (int i = 0; i < m.t; ++i) scaled *= value;
    ParamExp key{m.q, 0};
    r.terms_[key] += scaled;
    r.strip(key);
  }
  return r;
}

bool CoeffPoly::needs_parens() const {
  if (terms_.size() > 1) return true;
  if (terms_.empty()) return false;
  const auto& [m, c] = *terms_.begin();
  if (m == ParamExp{0, 0}) return false;  // plain rational
  return c != 1;                          // e.g. "-t", "2*q"
}

std::string CoeffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string params;
    if (m.q > 0) params += m.q == 1 ? "q" : "q^" + std::to_string(m.q);
    if (m.t > 0) {
      if (!params.empty()) params += "*";
      params += m.t == 1 ? "t" : "t^" + std::to_string(m.t);
    }
    if (params.empty()) {
      out << rational_to_string(mag);
    } else if (mag == 1) {
      out << params;
    } else {
      out << rational_to_string(mag) << "*" << params;
    }
  }
  return out.str();
}

}  // namespace cspleth
