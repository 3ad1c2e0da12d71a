#include <doctest.h>

#include <string>

#include "cspleth/errors.hpp"
#include "cspleth/pleth_expr.hpp"
#include "test_support.hpp"

using namespace cspleth;

TEST_CASE("expression constructors normalize") {
  CHECK(expr_int(1)->kind == ExprKind::One);
  CHECK(expr_int(0)->kind == ExprKind::Int);
  CHECK(expr_int(0)->value == 0);
  CHECK(expr_alpha("x")->bound == -1);
  CHECK(expr_alpha("x", 4)->bound == 4);
}

TEST_CASE("expression parsing shapes") {
  ExprPtr x = parse_expr("x");
  CHECK(x->kind == ExprKind::Alpha);
  CHECK(x->name == "x");
  CHECK(x->bound == -1);

  ExprPtr bounded = parse_expr("x[4]");
  CHECK(bounded->bound == 4);

  ExprPtr eps = parse_expr("eps(x + y)");
  REQUIRE(eps->kind == ExprKind::Eps);
  CHECK(eps->a->kind == ExprKind::Sum);

  ExprPtr qx = parse_expr("q*x");
  REQUIRE(qx->kind == ExprKind::Prod);
  CHECK(qx->a->kind == ExprKind::Param);
  CHECK(qx->b->kind == ExprKind::Alpha);

  ExprPtr minus = parse_expr("x - y");
  REQUIRE(minus->kind == ExprKind::Sum);
  CHECK(minus->b->kind == ExprKind::Neg);

  CHECK(parse_expr("1")->kind == ExprKind::One);
  CHECK(parse_expr("3")->value == 3);
  CHECK(parse_expr("-x")->kind == ExprKind::Neg);
  CHECK(parse_expr("((x))")->kind == ExprKind::Alpha);
  CHECK(expr_equal(parse_expr("2*x + q"), parse_expr("  2 * x + q ")));
  CHECK(expr_equal(parse_expr("x*y*z"),
                   expr_prod(expr_prod(expr_alpha("x"), expr_alpha("y")), expr_alpha("z"))));
}

TEST_CASE("expression parse errors") {
  CHECK_THROWS_AS(parse_expr(""), ExprParseError);
  CHECK_THROWS_AS(parse_expr("t"), ExprParseError);
  CHECK_THROWS_AS(parse_expr("x +"), ExprParseError);
  CHECK_THROWS_AS(parse_expr("x)"), ExprParseError);
  CHECK_THROWS_AS(parse_expr("(x"), ExprParseError);
  CHECK_THROWS_AS(parse_expr("eps x"), ExprParseError);
  CHECK_THROWS_AS(parse_expr("x["), ExprParseError);
  CHECK_THROWS_AS(parse_expr("x[2"), ExprParseError);
  CHECK_THROWS_AS(parse_expr("x[2000000]"), ExprParseError);
  CHECK_THROWS_AS(parse_expr("99999999999"), ExprParseError);
  CHECK_THROWS_AS(parse_expr("x $ y"), ExprParseError);
}

TEST_CASE("expression identity distinguishes bounds and names") {
  CHECK(expr_equal(parse_expr("x"), parse_expr("x")));
  CHECK_FALSE(expr_equal(parse_expr("x"), parse_expr("x[3]")));
  CHECK_FALSE(expr_equal(parse_expr("x"), parse_expr("y")));
  CHECK_FALSE(expr_equal(parse_expr("x + y"), parse_expr("y + x")));
  CHECK_FALSE(expr_equal(parse_expr("-x"), parse_expr("eps(x)")));
}

TEST_CASE("printing canonical forms") {
  const char* fixed[] = {"1",      "-1",  "3",   "x[4]", "-x",
                         "eps(x)", "x + y", "q*x", "2*x",  "x*y"};
  for (const char* text : fixed) {
    CHECK(print_expr(parse_expr(text)) == text);
  }
  CHECK(print_expr(parse_expr("x - y")) == "x - y");
  CHECK(print_expr(parse_expr("-(x + y)")) == "-(x + y)");
  CHECK(print_expr(parse_expr("(x + y)*z")) == "(x + y)*z");
  CHECK(print_expr(parse_expr("x*(y*z)")) == "x*(y*z)");
}

TEST_SUITE("properties") {
  TEST_CASE("printing and parsing are inverse") {
    constexpr size_t kIterations = 500;
    TestRng rng(401);
    for (size_t i = 0; i < kIterations; ++i) {
      ExprPtr e = random_expr(rng, 3);
      std::string text = print_expr(e);
      ExprPtr back = parse_expr(text);
      CHECK(expr_equal(back, e));
      CHECK(print_expr(back) == text);
    }
  }
}
