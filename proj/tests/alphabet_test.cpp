#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cspleth/alphabet.hpp"
#include "cspleth/errors.hpp"
#include "cspleth/pleth_expr.hpp"
#include "test_support.hpp"

using namespace cspleth;

namespace {

std::vector<std::string> value_keys(const std::vector<SignedVar>& elements) {
  std::vector<std::string> keys;
  keys.reserve(elements.size());
  for (const auto& v : elements) keys.push_back(var_value_key(evaluate_signed_var(v)));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

TEST_CASE("bound resolution order") {
  Bounds b;
  b.fallback = 5;
  b.per_name["y"] = 2;
  CHECK(b.resolve("x", 3) == 3);
  CHECK(b.resolve("y", -1) == 2);
  CHECK(b.resolve("x", -1) == 5);
  Bounds none;
  CHECK_THROWS_AS(none.resolve("x", -1), UnboundedAlphabetError);
  CHECK(none.resolve("x", 4) == 4);
}

TEST_CASE("variable sets of atoms") {
  Bounds b;
  b.fallback = 3;
  VarSet xs = var_set(parse_expr("x"), b);
  REQUIRE(xs.elements.size() == 3);
  CHECK(xs.elements[0].to_string() == "x1");
  CHECK(xs.elements[2].to_string() == "x3");
  CHECK(xs.bounds_used.at("x") == 3);

  CHECK(var_set(parse_expr("1"), b).elements.size() == 1);
  CHECK(var_set(parse_expr("0"), b).elements.empty());
  VarSet threes = var_set(parse_expr("3"), b);
  REQUIRE(threes.elements.size() == 3);
  CHECK(threes.elements[0].to_string() == "1");
  CHECK(threes.elements[1].to_string() == "1'");
  CHECK(threes.elements[2].to_string() == "1''");

  VarSet qs = var_set(parse_expr("q"), b);
  REQUIRE(qs.elements.size() == 1);
  VarValue qv = evaluate_signed_var(qs.elements[0]);
  CHECK(qv.q_exp == 1);
  CHECK(qv.sign == 1);
  CHECK(qv.var_exps.empty());
}

TEST_CASE("sign attributes render and evaluate") {
  Bounds b;
  b.fallback = 1;
  VarSet neg = var_set(parse_expr("-x"), b);
  REQUIRE(neg.elements.size() == 1);
  CHECK(neg.elements[0].to_string() == "~x1");
  VarValue nv = evaluate_signed_var(neg.elements[0]);
  CHECK(nv.sign == -1);
  CHECK_FALSE(nv.eps_odd);

  VarSet eps = var_set(parse_expr("eps(x)"), b);
  REQUIRE(eps.elements.size() == 1);
  CHECK(eps.elements[0].to_string() == "-x1");
  VarValue ev = evaluate_signed_var(eps.elements[0]);
  CHECK(ev.sign == 1);
  CHECK(ev.eps_odd);
}

TEST_CASE("repeated summands stay formally distinct") {
  Bounds b;
  b.fallback = 2;
  VarSet vs = var_set(parse_expr("x + x"), b);
  REQUIRE(vs.elements.size() == 4);
  CHECK(vs.elements[2].to_string() == "x1'");
  CHECK(vs.elements[3].to_string() == "x2'");
  CHECK(var_value_key(evaluate_signed_var(vs.elements[0])) ==
        var_value_key(evaluate_signed_var(vs.elements[2])));

  Bounds five;
  five.fallback = 5;
  CHECK(var_set(parse_expr("x + x[3]"), five).elements.size() == 8);
  CHECK(var_set(parse_expr("x + x[3]"), five).bounds_used.at("x") == 5);
}

TEST_CASE("products concatenate factors") {
  Bounds b;
  VarSet vs = var_set(parse_expr("x[2]*y[2]"), b);
  REQUIRE(vs.elements.size() == 4);
  for (const auto& v : vs.elements) CHECK(v.factors.size() == 2);
  CHECK(vs.elements[0].to_string() == "x1*y1");
  CHECK(vs.elements[3].to_string() == "x2*y2");
}

TEST_CASE("capacity limits") {
  Bounds b;
  CHECK_THROWS_AS(var_set(parse_expr("x[30]"), b, 10), CapacityError);
  CHECK_THROWS_AS(var_set(parse_expr("x[1000000]"), b), CapacityError);
}

TEST_CASE("orders are deterministic") {
  Bounds b;
  VarSet vs = var_set(parse_expr("x[4] + y[4]"), b);
  auto base = default_order(vs);
  CHECK(base == default_order(vs));
  CHECK(base.size() == vs.elements.size());
  CHECK(seeded_order(vs, 7) == seeded_order(vs, 7));

  bool any_differ = false;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto shuffled = seeded_order(vs, seed);
    auto sorted_back = shuffled;
    std::sort(sorted_back.begin(), sorted_back.end());
    auto sorted_base = base;
    std::sort(sorted_base.begin(), sorted_base.end());
    CHECK(sorted_back == sorted_base);
    if (shuffled != base) any_differ = true;
  }
  CHECK(any_differ);
}

TEST_SUITE("properties") {
  TEST_CASE("sum sets have additive size") {
    constexpr size_t kIterations = 500;
    TestRng rng(501);
    Bounds b;
    b.fallback = 2;
    for (size_t i = 0; i < kIterations; ++i) {
      ExprPtr f = random_expr(rng, 2);
      ExprPtr g = random_expr(rng, 2);
      VarSet vf = var_set(f, b);
      VarSet vg = var_set(g, b);
      VarSet sum = var_set(expr_sum(f, g), b);
      CHECK(sum.elements.size() == vf.elements.size() + vg.elements.size());
    }
  }

  TEST_CASE("product sets multiply sizes and values") {
    constexpr size_t kIterations = 500;
    TestRng rng(502);
    Bounds b;
    b.fallback = 2;
    for (size_t i = 0; i < kIterations; ++i) {
      ExprPtr f = random_expr(rng, 2);
      ExprPtr g = random_expr(rng, 2);
      VarSet vf = var_set(f, b);
      VarSet vg = var_set(g, b);
      VarSet prod = var_set(expr_prod(f, g), b);
      CHECK(prod.elements.size() == vf.elements.size() * vg.elements.size());

      std::vector<std::string> expected;
      for (const auto& a : vf.elements) {
        VarValue va = evaluate_signed_var(a);
        for (const auto& c : vg.elements) {
          VarValue vc = evaluate_signed_var(c);
          VarValue combined;
          combined.sign = va.sign * vc.sign;
          combined.eps_odd = va.eps_odd != vc.eps_odd;
          combined.q_exp = va.q_exp + vc.q_exp;
          combined.var_exps = va.var_exps;
          for (const auto& [id, exp] : vc.var_exps) combined.var_exps[id] += exp;
          expected.push_back(var_value_key(combined));
        }
      }
      std::sort(expected.begin(), expected.end());
      CHECK(value_keys(prod.elements) == expected);
    }
  }

  TEST_CASE("double negation and double eps are identities") {
    constexpr size_t kIterations = 500;
    TestRng rng(503);
    Bounds b;
    b.fallback = 2;
    for (size_t i = 0; i < kIterations; ++i) {
      ExprPtr e = random_expr(rng, 2);
      VarSet base = var_set(e, b);
      CHECK(var_set(expr_neg(expr_neg(e)), b).elements == base.elements);
      CHECK(var_set(expr_eps(expr_eps(e)), b).elements == base.elements);
    }
  }
}
