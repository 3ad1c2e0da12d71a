#include "cspleth/sym_func.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <mutex>
#include <sstream>
#include <vector>

#include "cspleth/errors.hpp"

namespace cspleth {

namespace {

// Expansion of a single generator in the power-sum basis, rational coeffs.
using PMap = std::map<Partition, Rational>;

PMap pmap_scale(const PMap& a, const Rational& c) {
  PMap r;
  if (c == 0) return r;
  for (const auto& [idx, v] : a) r[idx] = v * c;
  return r;
}

void pmap_add(PMap& into, const PMap& o, const Rational& scale = 1) {
  for (const auto& [idx, v] : o) {
    Rational& slot = into[idx];
    slot += v * scale;
    if (slot == 0) into.erase(idx);
  }
}

PMap pmap_mul(const PMap& a, const PMap& b) {
  PMap r;
  for (const auto& [ia, va] : a) {
    for (const auto& [ib, vb] : b) {
      Partition m = ia.merged(ib);
      Rational& slot = r[m];
      slot += va * vb;
      if (slot == 0) r.erase(m);
    }
  }
  return r;
}

std::mutex g_newton_mutex;

// Newton's identity n e_n = sum_{i=1..n} (-1)^(i-1) p_i e_(n-i).
PMap e_in_p(int n) {
  static std::vector<PMap> cache = {{{Partition(), 1}}};
  std::lock_guard<std::mutex> lock(g_newton_mutex);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    PMap acc;
    for (int i = 1; i <= m; ++i) {
      PMap pi{{Partition::single(i), 1}};
      Rational sign = (i % 2 == 1) ? 1 : -1;
      pmap_add(acc, pmap_mul(pi, cache[m - i]), sign);
    }
    cache.push_back(pmap_scale(acc, Rational(1, m)));
  }
  return cache[n];
}

// Newton's identity n h_n = sum_{i=1..n} p_i h_(n-i).
PMap h_in_p(int n) {
  static std::vector<PMap> cache = {{{Partition(), 1}}};
  std::lock_guard<std::mutex> lock(g_newton_mutex);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    PMap acc;
    for (int i = 1; i <= m; ++i) {
      PMap pi{{Partition::single(i), 1}};
      pmap_add(acc, pmap_mul(pi, cache[m - i]));
    }
    cache.push_back(pmap_scale(acc, Rational(1, m)));
  }
  return cache[n];
}

PMap generator_in_p(Basis basis, const Partition& index) {
  PMap r{{Partition(), 1}};
  for (int part : index.parts()) {
    switch (basis) {
      case Basis::P:
        r = pmap_mul(r, PMap{{Partition::single(part), 1}});
        break;
      case Basis::E:
        r = pmap_mul(r, e_in_p(part));
        break;
      case Basis::H:
        r = pmap_mul(r, h_in_p(part));
        break;
      default:
        assert(false);
    }
  }
  return r;
}

using Mat = std::vector<std::vector<Rational>>;

Mat invert(Mat a) {
  const std::size_t n = a.size();
  Mat inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    assert(pivot < n && "transition matrix must be invertible");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Expansion of p_lambda at n_vars variables with coefficient 1.
TruncPoly expand_p_generator(const Partition& index, int n_vars,
                             const std::string& name) {
  std::vector<VarId> universe;
  universe.reserve(n_vars);
  for (int j = 1; j <= n_vars; ++j) universe.push_back({name, j});
  TruncPoly result = TruncPoly::constant(CoeffPoly(1));
  for (int part : index.parts()) {
    TruncPoly power_sum(universe);
    std::vector<int> exps(n_vars, 0);
    for (int j = 0; j < n_vars; ++j) {
      exps[j] = part;
      power_sum.add_term(exps, CoeffPoly(1));
      exps[j] = 0;
    }
    result = result * power_sum;
  }
  return result;
}

// Per-degree data for the invertible-matrix conversion routes.
struct EhData {
  std::vector<Partition> parts;
  Mat e2p, h2p;          // row i: generator with index parts[i], in p
  Mat inv_e2p, inv_h2p;  // matrix inverses of the above
};

struct MData {
  std::vector<Partition> parts;
  Mat p2m;      // row i: p_{parts[i]} collected in the m basis
  Mat inv_p2m;  // matrix inverse
};

std::shared_ptr<const EhData> eh_data(int degree) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const EhData>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  auto data = std::make_shared<EhData>();
  data->parts = Partition::all_of(degree);
  const std::size_t n = data->parts.size();
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[data->parts[i]] = i;
  data->e2p.assign(n, std::vector<Rational>(n, 0));
  data->h2p.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [idx, v] : generator_in_p(Basis::E, data->parts[i])) {
      data->e2p[i][index.at(idx)] = v;
    }
    for (const auto& [idx, v] : generator_in_p(Basis::H, data->parts[i])) {
      data->h2p[i][index.at(idx)] = v;
    }
  }
  data->inv_e2p = invert(data->e2p);
  data->inv_h2p = invert(data->h2p);
  cache[degree] = data;
  return data;
}

std::shared_ptr<const MData> m_data(int degree) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const MData>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  auto data = std::make_shared<MData>();
  data->parts = Partition::all_of(degree);
  const std::size_t n = data->parts.size();
  data->p2m.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    TruncPoly expansion = expand_p_generator(data->parts[i], degree, "x");
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> exps = data->parts[j].parts();
      exps.resize(degree, 0);
      CoeffPoly c = expansion.coefficient(exps);
      if (!c.is_zero()) data->p2m[i][j] = c.constant_value();
    }
  }
  data->inv_p2m = invert(data->p2m);
  cache[degree] = data;
  return data;
}

void check_degree_bound(int degree, int bound, const char* what) {
  if (degree > bound) {
    throw CapacityError(std::string(what) + " at degree " +
                        std::to_string(degree) + " exceeds the bound " +
                        std::to_string(bound));
  }
}

// Splits into homogeneous components keyed by degree.
std::map<int, std::map<Partition, CoeffPoly>> by_degree(
    const std::map<Partition, CoeffPoly>& terms) {
  std::map<int, std::map<Partition, CoeffPoly>> out;
  for (const auto& [idx, c] : terms) out[idx.size()][idx] = c;
  return out;
}

}  // namespace

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::P: return "p";
    case Basis::E: return "e";
    case Basis::H: return "h";
    case Basis::M: return "m";
    case Basis::MTilde: return "mt";
  }
  return "?";
}

Basis basis_from_name(const std::string& name) {
  if (name == "p") return Basis::P;
  if (name == "e") return Basis::E;
  if (name == "h") return Basis::H;
  if (name == "m") return Basis::M;
  if (name == "mt") return Basis::MTilde;
  throw ExprParseError("unknown basis '" + name + "'");
}

SymFunc SymFunc::one(Basis basis) {
  SymFunc f(basis);
  f.terms_[Partition()] = CoeffPoly(1);
  return f;
}

SymFunc SymFunc::generator(Basis basis, const Partition& index) {
  SymFunc f(basis);
  f.terms_[index] = CoeffPoly(1);
  return f;
}

int SymFunc::max_degree() const {
  int best = 0;
  for (const auto& [idx, c] : terms_) best = std::max(best, idx.size());
  return best;
}

void SymFunc::add_term(const Partition& index, const CoeffPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(index);
  if (it == terms_.end()) {
    terms_.emplace(index, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CoeffPoly SymFunc::coefficient(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? CoeffPoly() : it->second;
}

SymFunc SymFunc::operator-() const {
  SymFunc r(basis_);
  for (const auto& [idx, c] : terms_) r.terms_[idx] = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (basis_ != o.basis_) {
    *this = to_basis(Basis::P) + o.to_basis(Basis::P);
    return *this;
  }
  for (const auto& [idx, c] : o.terms_) add_term(idx, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc r = *this;
  r += o;
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  SymFunc r = *this;
  r -= o;
  return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
  bool multiplicative = basis_ == Basis::P || basis_ == Basis::E ||
                        basis_ == Basis::H;
  if (basis_ != o.basis_ || !multiplicative) {
    return to_basis(Basis::P) * o.to_basis(Basis::P);
  }
  SymFunc r(basis_);
  for (const auto& [ia, ca] : terms_) {
    for (const auto& [ib, cb] : o.terms_) {
      r.add_term(ia.merged(ib), ca * cb);
    }
  }
  return r;
}

SymFunc SymFunc::scaled(const CoeffPoly& c) const {
  SymFunc r(basis_);
  if (c.is_zero()) return r;
  for (const auto& [idx, v] : terms_) r.terms_[idx] = v * c;
  return r;
}

SymFunc SymFunc::omega() const {
  SymFunc p = to_basis(Basis::P);
  SymFunc r(Basis::P);
  for (const auto& [idx, c] : p.terms_) {
    bool flip = ((idx.size() - idx.length()) % 2) != 0;
    r.terms_[idx] = flip ? -c : c;
  }
  return r;
}

SymFunc SymFunc::substitute_t(const Rational& value) const {
  SymFunc r(basis_);
  for (const auto& [idx, c] : terms_) r.add_term(idx, c.substitute_t(value));
  return r;
}

SymFunc SymFunc::to_basis(Basis target, int degree_bound) const {
  if (basis_ == target) return *this;

  // Step 1: into the power-sum basis.
  SymFunc p(Basis::P);
  switch (basis_) {
    case Basis::P:
      p = *this;
      break;
    case Basis::E:
    case Basis::H:
      for (const auto& [idx, c] : terms_) {
        for (const auto& [pidx, v] : generator_in_p(basis_, idx)) {
          p.add_term(pidx, c * CoeffPoly(v));
        }
      }
      break;
    case Basis::M:
    case Basis::MTilde: {
      std::map<Partition, CoeffPoly> as_m;
      for (const auto& [idx, c] : terms_) {
        CoeffPoly scaled =
            basis_ == Basis::MTilde
                ? c * CoeffPoly(Rational(idx.multiplicity_factorial()))
                : c;
        as_m[idx] = scaled;
      }
      for (auto& [degree, component] : by_degree(as_m)) {
        if (degree == 0) {
          for (const auto& [idx, c] : component) p.add_term(idx, c);
          continue;
        }
        check_degree_bound(degree, degree_bound, "monomial-basis conversion");
        auto data = m_data(degree);
        std::map<Partition, std::size_t> index;
        for (std::size_t i = 0; i < data->parts.size(); ++i) {
          index[data->parts[i]] = i;
        }
        // f = sum_mu v_mu m_mu = sum_lambda u_lambda p_lambda where
        // v = (p2m)^T u, so u = ((p2m)^-1)^T v.
        for (std::size_t lam = 0; lam < data->parts.size(); ++lam) {
          CoeffPoly u;
          for (const auto& [mu, v] : component) {
            Rational w = data->inv_p2m[index.at(mu)][lam];
            if (w != 0) u += v * CoeffPoly(w);
          }
          p.add_term(data->parts[lam], u);
        }
      }
      break;
    }
  }
  if (target == Basis::P) return p;

  // Step 2: out of the power-sum basis.
  SymFunc out(target);
  switch (target) {
    case Basis::E:
    case Basis::H: {
      for (auto& [degree, component] : by_degree(p.terms_)) {
        if (degree == 0) {
          for (const auto& [idx, c] : component) out.add_term(idx, c);
          continue;
        }
        check_degree_bound(degree, degree_bound, "e/h-basis conversion");
        auto data = eh_data(degree);
        const Mat& inv = target == Basis::E ? data->inv_e2p : data->inv_h2p;
        std::map<Partition, std::size_t> index;
        for (std::size_t i = 0; i < data->parts.size(); ++i) {
          index[data->parts[i]] = i;
        }
        // f = sum_mu c_mu p_mu = sum_lambda d_lambda g_lambda with
        // c = (g2p)^T d, so d = ((g2p)^-1)^T c.
        for (std::size_t lam = 0; lam < data->parts.size(); ++lam) {
          CoeffPoly d;
          for (const auto& [mu, c] : component) {
            Rational w = inv[index.at(mu)][lam];
            if (w != 0) d += c * CoeffPoly(w);
          }
          out.add_term(data->parts[lam], d);
        }
      }
      return out;
    }
    case Basis::M:
    case Basis::MTilde: {
      for (auto& [degree, component] : by_degree(p.terms_)) {
        if (degree == 0) {
          for (const auto& [idx, c] : component) out.add_term(idx, c);
          continue;
        }
        check_degree_bound(degree, degree_bound, "monomial-basis conversion");
        // Expand the whole component at `degree` variables and read off the
        // coefficients of the weakly-decreasing monomials.
        std::vector<VarId> universe;
        for (int j = 1; j <= degree; ++j) universe.push_back({"x", j});
        TruncPoly expansion(universe);
        for (const auto& [idx, c] : component) {
          expansion += expand_p_generator(idx, degree, "x").scaled(c);
        }
        for (const Partition& mu : Partition::all_of(degree)) {
          std::vector<int> exps = mu.parts();
          exps.resize(degree, 0);
          CoeffPoly c = expansion.coefficient(exps);
          if (target == Basis::MTilde) {
            // m = (prod of multiplicities factorial)^-1 mtilde.
            c = c * CoeffPoly(Rational(1, mu.multiplicity_factorial()));
          }
          out.add_term(mu, c);
        }
      }
      return out;
    }
    case Basis::P:
      break;
  }
  assert(false);
  return out;
}

TruncPoly SymFunc::expand(int n_vars, const std::string& var_name,
                          int degree_bound) const {
  SymFunc p = to_basis(Basis::P, degree_bound);
  std::vector<VarId> universe;
  for (int j = 1; j <= n_vars; ++j) universe.push_back({var_name, j});
  TruncPoly result(universe);
  for (const auto& [idx, c] : p.terms()) {
    result += expand_p_generator(idx, n_vars, var_name).scaled(c);
  }
  return result;
}

bool SymFunc::equals(const SymFunc& o) const {
  SymFunc a = to_basis(Basis::P);
  SymFunc b = o.to_basis(Basis::P);
  return a.terms_ == b.terms_;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  const std::string name = basis_name(basis_);
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    std::string gen = name + idx.to_string();
    bool negative = false;
    std::string body;
    if (c.terms().size() == 1) {
      const auto& [m, v] = *c.terms().begin();
      negative = v < 0;
      Rational mag = negative ? Rational(-v) : v;
      CoeffPoly mag_poly = CoeffPoly::monomial(m, mag);
      body = mag_poly == CoeffPoly(1) ? gen : mag_poly.to_string() + " " + gen;
    } else {
      body = "(" + c.to_string() + ") " + gen;
    }
    if (first) {
      out << (negative ? "-" : "") << body;
    } else {
      out << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  return out.str();
}

}  // namespace cspleth
