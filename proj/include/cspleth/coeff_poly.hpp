#pragma once

#include <compare>
#include <map>
#include <string>

#include "cspleth/rational.hpp"

namespace cspleth {

// Exponents of the two formal parameters carried by coefficients.  q enters
// through parameter symbols in plethysm expressions, t through the Tutte
// symmetric function.
struct ParamExp {
  int q = 0;
  int t = 0;
  auto operator<=>(const ParamExp&) const = default;
};

// Element of Q[q, t].  Invariant: no stored value is zero.
class CoeffPoly {
 public:
  CoeffPoly() = default;
  CoeffPoly(long long constant);           // NOLINT(google-explicit-constructor)
  CoeffPoly(const Rational& constant);     // NOLINT(google-explicit-constructor)
  static CoeffPoly q(int exp = 1);
  static CoeffPoly t(int exp = 1);
  static CoeffPoly monomial(ParamExp m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant(); zero-term poly reads as 0.
  Rational constant_value() const;

  CoeffPoly operator-() const;
  CoeffPoly& operator+=(const CoeffPoly& o);
  CoeffPoly& operator-=(const CoeffPoly& o);
  CoeffPoly operator+(const CoeffPoly& o) const;
  CoeffPoly operator-(const CoeffPoly& o) const;
  CoeffPoly operator*(const CoeffPoly& o) const;
  CoeffPoly& operator*=(const CoeffPoly& o);
  CoeffPoly pow(int n) const;

  bool operator==(const CoeffPoly& o) const { return terms_ == o.terms_; }
  // Total order so coefficient polynomials can key maps and break ties.
  std::strong_ordering operator<=>(const CoeffPoly& o) const;

  // Replaces t by the given rational value; q is untouched.
  CoeffPoly substitute_t(const Rational& value) const;

  const std::map<ParamExp, Rational>& terms() const { return terms_; }

  // "0", "3/2", "-t", "2*q*t^2 - 1"; terms ordered by (q, t) exponents.
  std::string to_string() const;
  // True when to_string() needs parentheses inside a product.
  bool needs_parens() const;

 private:
  std::map<ParamExp, Rational> terms_;
  void strip(ParamExp key);
};

}  // namespace cspleth
