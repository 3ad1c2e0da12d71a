#include "cspleth/alphabet.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>

#include "cspleth/errors.hpp"

namespace cspleth {

std::string VarFactor::to_string() const {
  std::string s;
  switch (kind) {
    case Kind::Unit:
      s = "1";
      break;
    case Kind::Param:
      s = name;
      break;
    case Kind::Var:
      s = name + std::to_string(index);
      break;
  }
  s.append(static_cast<std::size_t>(primes), '\'');
  return s;
}

std::string SignedVar::to_string() const {
  std::string s;
  if (negative) s += '~';
  if (eps_negated) s += '-';
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) s += '*';
    s += factors[i].to_string();
  }
  return s;
}

int Bounds::resolve(const std::string& name, int node_bound) const {
  if (node_bound >= 0) return node_bound;
  if (auto it = per_name.find(name); it != per_name.end()) return it->second;
  if (fallback) return *fallback;
  throw UnboundedAlphabetError("alphabet '" + name +
                               "' has no bound; give one as '" + name +
                               "[n]' or via --bound");
}

namespace {

void check_capacity(const std::vector<SignedVar>& out, int max_size) {
  if (static_cast<int>(out.size()) > max_size) {
    throw CapacityError("variable set exceeds " + std::to_string(max_size) +
                        " elements");
  }
}

// Inserts v, bumping the prime count of its last factor until it differs
// from every element already present.  Keeps formal multiplicity: the set
// for f+g has |A|+|B| elements, the set for f*g has |A|*|B|.
void insert_fresh(std::vector<SignedVar>& out, std::set<SignedVar>& seen,
                  SignedVar v, int max_size) {
  assert(!v.factors.empty());
  while (seen.count(v) != 0) ++v.factors.back().primes;
  seen.insert(v);
  out.push_back(std::move(v));
  check_capacity(out, max_size);
}

void build(const ExprPtr& e, const Bounds& bounds, int max_size, VarSet& vs,
           std::set<SignedVar>& seen) {
  switch (e->kind) {
    case ExprKind::One:
    case ExprKind::Int: {
      long long c = e->kind == ExprKind::One ? 1 : e->value;
      for (long long i = 0; i < c; ++i) {
        SignedVar v;
        v.factors.push_back({VarFactor::Kind::Unit, "", 0, 0});
        insert_fresh(vs.elements, seen, std::move(v), max_size);
      }
      return;
    }
    case ExprKind::Param: {
      SignedVar v;
      v.factors.push_back({VarFactor::Kind::Param, e->name, 0, 0});
      insert_fresh(vs.elements, seen, std::move(v), max_size);
      return;
    }
    case ExprKind::Alpha: {
      int n = bounds.resolve(e->name, e->bound);
      auto it = vs.bounds_used.find(e->name);
      if (it == vs.bounds_used.end()) {
        vs.bounds_used[e->name] = n;
      } else {
        it->second = std::max(it->second, n);
      }
      for (int i = 1; i <= n; ++i) {
        SignedVar v;
        v.factors.push_back({VarFactor::Kind::Var, e->name, i, 0});
        insert_fresh(vs.elements, seen, std::move(v), max_size);
      }
      return;
    }
    case ExprKind::Neg:
    case ExprKind::Eps: {
      VarSet inner;
      std::set<SignedVar> inner_seen;
      build(e->a, bounds, max_size, inner, inner_seen);
      for (auto& [name, n] : inner.bounds_used) {
        auto it = vs.bounds_used.find(name);
        if (it == vs.bounds_used.end()) {
          vs.bounds_used[name] = n;
        } else {
          it->second = std::max(it->second, n);
        }
      }
      for (auto& v : inner.elements) {
        if (e->kind == ExprKind::Neg) {
          v.negative = !v.negative;
        } else {
          v.eps_negated = !v.eps_negated;
        }
        insert_fresh(vs.elements, seen, std::move(v), max_size);
      }
      return;
    }
    case ExprKind::Sum: {
      build(e->a, bounds, max_size, vs, seen);
      build(e->b, bounds, max_size, vs, seen);
      return;
    }
    case ExprKind::Prod: {
      VarSet left, right;
      std::set<SignedVar> ls, rs;
      build(e->a, bounds, max_size, left, ls);
      build(e->b, bounds, max_size, right, rs);
      for (auto* part : {&left, &right}) {
        for (auto& [name, n] : part->bounds_used) {
          auto it = vs.bounds_used.find(name);
          if (it == vs.bounds_used.end()) {
            vs.bounds_used[name] = n;
          } else {
            it->second = std::max(it->second, n);
          }
        }
      }
      for (const auto& a : left.elements) {
        for (const auto& b : right.elements) {
          SignedVar v;
          v.factors = a.factors;
          v.factors.insert(v.factors.end(), b.factors.begin(),
                           b.factors.end());
          v.negative = a.negative != b.negative;
          v.eps_negated = a.eps_negated != b.eps_negated;
          insert_fresh(vs.elements, seen, std::move(v), max_size);
        }
      }
      return;
    }
  }
  assert(false);
}

}  // namespace

VarSet var_set(const ExprPtr& e, const Bounds& bounds, int max_size) {
  VarSet vs;
  std::set<SignedVar> seen;
  build(e, bounds, max_size, vs, seen);
  return vs;
}

VarValue evaluate_signed_var(const SignedVar& v) {
  VarValue val;
  val.sign = v.negative ? -1 : 1;
  val.eps_odd = v.eps_negated;
  for (const auto& f : v.factors) {
    switch (f.kind) {
      case VarFactor::Kind::Unit:
        break;
      case VarFactor::Kind::Param:
        ++val.q_exp;
        break;
      case VarFactor::Kind::Var:
        ++val.var_exps[VarId{f.name, f.index}];
        break;
    }
  }
  return val;
}

namespace {

std::vector<VarFactor> sorted_factors(const SignedVar& v) {
  auto fs = v.factors;
  std::sort(fs.begin(), fs.end());
  return fs;
}

bool order_less(const SignedVar& a, const SignedVar& b) {
  auto sa = sorted_factors(a);
  auto sb = sorted_factors(b);
  if (sa != sb) return sa < sb;
  if (a.factors != b.factors) return a.factors < b.factors;
  if (a.negative != b.negative) return b.negative;
  return !a.eps_negated && b.eps_negated;
}

}  // namespace

std::vector<SignedVar> default_order(const VarSet& vs) {
  auto out = vs.elements;
  std::sort(out.begin(), out.end(), order_less);
  return out;
}

std::vector<SignedVar> seeded_order(const VarSet& vs, std::uint64_t seed) {
  auto out = default_order(vs);
  std::mt19937_64 gen(seed);
  for (std::size_t i = out.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(gen() % i);
    std::swap(out[i - 1], out[j]);
  }
  return out;
}

}  // namespace cspleth
