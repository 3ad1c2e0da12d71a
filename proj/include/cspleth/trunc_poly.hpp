#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cspleth/coeff_poly.hpp"

namespace cspleth {

// One commuting variable, e.g. x3 from the bounded alphabet x[5].
struct VarId {
  std::string name;
  int index = 0;
  auto operator<=>(const VarId&) const = default;
  std::string to_string() const { return name + std::to_string(index); }
};

// Polynomial in finitely many commuting variables with CoeffPoly
// coefficients.  Term keys are exponent vectors aligned to vars_, which is
// kept sorted and duplicate-free; stored coefficients are never zero.
class TruncPoly {
 public:
  TruncPoly() = default;
  explicit TruncPoly(std::vector<VarId> universe);
  static TruncPoly constant(const CoeffPoly& c);
  static TruncPoly variable(const VarId& v);

  const std::vector<VarId>& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;  // 0 for the zero polynomial

  // Requires exps.size() == vars().size().
  void add_term(const std::vector<int>& exps, const CoeffPoly& c);
  CoeffPoly coefficient(const std::vector<int>& exps) const;

  TruncPoly operator-() const;
  TruncPoly operator+(const TruncPoly& o) const;
  TruncPoly operator-(const TruncPoly& o) const;
  TruncPoly operator*(const TruncPoly& o) const;
  TruncPoly& operator+=(const TruncPoly& o);
  TruncPoly& operator-=(const TruncPoly& o);
  TruncPoly scaled(const CoeffPoly& c) const;
  TruncPoly pow(int n) const;
  TruncPoly substitute_t(const Rational& value) const;

  // Universe-insensitive: x1 + 0*x2 equals x1 over {x1}.
  bool operator==(const TruncPoly& o) const;

  struct Difference {
    std::string monomial;  // "x1^2*x2" or "1"
    CoeffPoly lhs, rhs;
  };
  // First differing coefficient in the merged-universe key order; nullopt
  // when equal.  Used to build failure witnesses.
  std::optional<Difference> first_difference(const TruncPoly& o) const;

  const std::map<std::vector<int>, CoeffPoly>& terms() const { return terms_; }

  // Terms in graded order (total degree, then key order); "0" when empty.
  std::string to_string() const;

  // Returns copies of both aligned to the union of their universes.
  static std::pair<TruncPoly, TruncPoly> aligned(const TruncPoly& a,
                                                 const TruncPoly& b);

 private:
  std::vector<VarId> vars_;
  std::map<std::vector<int>, CoeffPoly> terms_;

  TruncPoly embedded(const std::vector<VarId>& universe) const;
  static std::string monomial_string(const std::vector<VarId>& vars,
                                     const std::vector<int>& exps);
};

}  // namespace cspleth
