#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cspleth/coeff_poly.hpp"
#include "cspleth/pleth_expr.hpp"
#include "cspleth/trunc_poly.hpp"

namespace cspleth {

// One atom of a colour: the unit 1, a parameter symbol, or an alphabet
// variable; primes mark formal duplicates and are erased at evaluation.
struct VarFactor {
  enum class Kind { Unit, Param, Var };
  Kind kind = Kind::Unit;
  std::string name;  // Param / Var source name; empty for Unit
  int index = 0;     // Var: >= 1
  int primes = 0;
  auto operator<=>(const VarFactor&) const = default;
  std::string to_string() const;  // "1", "q", "x2", primes as trailing '
};

// A colour: product of atoms with two independent sign attributes.  The
// sign flag ("negative", written z-bar) contributes one global -1 per use;
// the value negation (epsilon) makes the value itself -z, contributing
// (-1)^weight.  Factors keep operand order so repeated subexpressions stay
// formally distinct; identity is full structural equality.
struct SignedVar {
  std::vector<VarFactor> factors;
  bool negative = false;
  bool eps_negated = false;
  auto operator<=>(const SignedVar&) const = default;
  std::string to_string() const;  // eps as leading '-', sign flag as '~'
};

// Resolves alphabet bounds: explicit per-name entries win, then the
// fallback; an unbounded alphabet with neither is an error.
struct Bounds {
  std::optional<int> fallback;
  std::map<std::string, int> per_name;
  int resolve(const std::string& name, int node_bound) const;
};

// Finite truncation of Var(f).  Elements are pairwise distinct formal
// objects, in deterministic construction order.
struct VarSet {
  std::vector<SignedVar> elements;
  std::map<std::string, int> bounds_used;
};

inline constexpr int kDefaultVarSetCap = 20000;

// The inductive Var(.) rules.  Throws UnboundedAlphabetError when a bound
// cannot be resolved and CapacityError past max_size.
VarSet var_set(const ExprPtr& e, const Bounds& bounds,
               int max_size = kDefaultVarSetCap);

// Prime-erased evaluation data of a colour.
struct VarValue {
  int sign = 1;        // the sign flag's global contribution
  bool eps_odd = false;
  int q_exp = 0;
  std::map<VarId, int> var_exps;
};

VarValue evaluate_signed_var(const SignedVar& v);

// Contribution sgn(v) * value^weight as (rational sign, q exponent, variable
// exponents scaled by weight), folded into the caller's monomial.
// sign = v.sign * (-1)^(eps_odd * weight).

// Deterministic order: lexicographic on sorted factor lists, then raw factor
// sequence, then the two sign attributes (flags matter only for pairs like
// x1 vs x1-bar, which the sorted lists cannot separate).
std::vector<SignedVar> default_order(const VarSet& vs);

// Fisher-Yates permutation of the default order; identical seeds give
// identical orders on every platform.
std::vector<SignedVar> seeded_order(const VarSet& vs, std::uint64_t seed);

}  // namespace cspleth
