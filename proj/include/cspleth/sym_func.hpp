#pragma once

#include <map>
#include <string>

#include "cspleth/coeff_poly.hpp"
#include "cspleth/partition.hpp"
#include "cspleth/trunc_poly.hpp"

namespace cspleth {

enum class Basis { P, E, H, M, MTilde };

std::string basis_name(Basis b);          // "p", "e", "h", "m", "mt"
Basis basis_from_name(const std::string& name);

// Degree ceiling for conversions that go through a truncated expansion or a
// per-degree transition matrix (anything touching the monomial bases, and
// the inverse routes into e/h).
inline constexpr int kDefaultDegreeBound = 12;

// Finite linear combination of basis elements indexed by partitions, with
// coefficients in Q[q, t].  Invariant: no stored coefficient is zero.
class SymFunc {
 public:
  explicit SymFunc(Basis basis = Basis::P) : basis_(basis) {}
  static SymFunc zero(Basis basis = Basis::P) { return SymFunc(basis); }
  static SymFunc one(Basis basis = Basis::P);
  static SymFunc generator(Basis basis, const Partition& index);

  Basis basis() const { return basis_; }
  const std::map<Partition, CoeffPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int max_degree() const;

  void add_term(const Partition& index, const CoeffPoly& c);
  CoeffPoly coefficient(const Partition& index) const;

  // Mixed-basis operands are converted to the power-sum basis first; same
  // basis addition is termwise, and multiplication in p/e/h concatenates
  // indices.
  SymFunc operator-() const;
  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const SymFunc& o) const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc scaled(const CoeffPoly& c) const;

  // The involution fixing e_n <-> h_n: acts on p_lambda by the sign
  // (-1)^(size - length).  Result is in the power-sum basis.
  SymFunc omega() const;

  SymFunc substitute_t(const Rational& value) const;

  SymFunc to_basis(Basis target, int degree_bound = kDefaultDegreeBound) const;

  // Image under x_i -> 0 for i > n_vars, as an explicit polynomial.
  TruncPoly expand(int n_vars, const std::string& var_name = "x",
                   int degree_bound = kDefaultDegreeBound) const;

  // Basis-independent equality (both sides are compared in p).
  bool equals(const SymFunc& o) const;

  // "p[1,1,1] - 2 p[2,1] + p[3]"; terms in partition order.
  std::string to_string() const;

 private:
  Basis basis_;
  std::map<Partition, CoeffPoly> terms_;
};

}  // namespace cspleth
