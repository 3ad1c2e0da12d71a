#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "cspleth/errors.hpp"
#include "cspleth/partition.hpp"
#include "cspleth/sym_func.hpp"
#include "test_support.hpp"

using namespace cspleth;

namespace {

SymFunc p_func(std::vector<std::pair<std::vector<int>, Rational>> terms) {
  SymFunc f(Basis::P);
  for (auto& [parts, c] : terms) f.add_term(Partition(parts), CoeffPoly(c));
  return f;
}

}  // namespace

TEST_CASE("partition construction sorts and validates") {
  CHECK(Partition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK(Partition().parts().empty());
  CHECK(Partition::single(4).parts() == std::vector<int>{4});
  CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-2}), std::invalid_argument);
}

TEST_CASE("partition accessors") {
  Partition lam({2, 2, 1, 1, 1});
  CHECK(lam.size() == 7);
  CHECK(lam.length() == 5);
  CHECK(lam.multiplicity(1) == 3);
  CHECK(lam.multiplicity(2) == 2);
  CHECK(lam.multiplicity(5) == 0);
  CHECK(lam.multiplicity_factorial() == 12);
  CHECK(lam.to_string() == "[2,2,1,1,1]");
  CHECK(Partition().to_string() == "[]");
  CHECK(Partition({2, 1}).merged(Partition({3, 1})) == Partition({3, 2, 1, 1}));
}

TEST_CASE("partition ordering") {
  CHECK(Partition() < Partition({1}));
  CHECK(Partition({1}) < Partition({1, 1}));
  CHECK(Partition({1, 1}) < Partition({2}));
  CHECK(Partition({2}) < Partition({2, 1}));
  CHECK(Partition({2, 1}) < Partition({3}));
}

TEST_CASE("partition enumeration counts") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) {
    auto all = Partition::all_of(n);
    CHECK(static_cast<int>(all.size()) == counts[n]);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& lam : all) CHECK(lam.size() == n);
    std::set<Partition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("basis names") {
  for (Basis b : {Basis::P, Basis::E, Basis::H, Basis::M, Basis::MTilde}) {
    CHECK(basis_from_name(basis_name(b)) == b);
  }
  CHECK(basis_name(Basis::MTilde) == "mt");
  CHECK_THROWS_AS(basis_from_name("z"), ExprParseError);
}

TEST_CASE("symmetric function basics") {
  CHECK(SymFunc::zero().is_zero());
  CHECK(SymFunc::zero().to_string() == "0");
  CHECK(SymFunc::one(Basis::P).to_string() == "p[]");
  SymFunc f = p_func({{{1, 1, 1}, 1}, {{2, 1}, -2}, {{3}, 1}});
  CHECK(f.to_string() == "p[1,1,1] - 2 p[2,1] + p[3]");
  CHECK(f.max_degree() == 3);
  CHECK(f.coefficient(Partition({2, 1})) == CoeffPoly(-2));
  CHECK(f.coefficient(Partition({4})).is_zero());
  f.add_term(Partition({3}), CoeffPoly(-1));
  CHECK(f.coefficient(Partition({3})).is_zero());
}

TEST_CASE("generators convert to power sums") {
  CHECK(SymFunc::generator(Basis::E, Partition::single(2))
            .to_basis(Basis::P)
            .equals(p_func({{{1, 1}, Rational(1, 2)}, {{2}, Rational(-1, 2)}})));
  CHECK(SymFunc::generator(Basis::H, Partition::single(2))
            .to_basis(Basis::P)
            .equals(p_func({{{1, 1}, Rational(1, 2)}, {{2}, Rational(1, 2)}})));
  CHECK(SymFunc::generator(Basis::E, Partition::single(3))
            .to_basis(Basis::P)
            .equals(p_func({{{1, 1, 1}, Rational(1, 6)},
                            {{2, 1}, Rational(-1, 2)},
                            {{3}, Rational(1, 3)}})));
}

TEST_CASE("augmented monomials scale plain monomials") {
  SymFunc mt = SymFunc::generator(Basis::MTilde, Partition({1, 1}));
  SymFunc m = mt.to_basis(Basis::M);
  SymFunc expected(Basis::M);
  expected.add_term(Partition({1, 1}), CoeffPoly(2));
  CHECK(m.basis() == Basis::M);
  CHECK(m.terms() == expected.terms());
  SymFunc mt21 = SymFunc::generator(Basis::MTilde, Partition({2, 1})).to_basis(Basis::M);
  CHECK(mt21.terms() == SymFunc::generator(Basis::M, Partition({2, 1})).terms());
}

TEST_CASE("expansions in few variables") {
  VarId x1{"x", 1}, x2{"x", 2};
  TruncPoly expected(std::vector<VarId>{x1, x2});
  expected.add_term({2, 0}, CoeffPoly(1));
  expected.add_term({0, 2}, CoeffPoly(1));
  CHECK(SymFunc::generator(Basis::P, Partition::single(2)).expand(2) == expected);

  TruncPoly sq(std::vector<VarId>{x1, x2});
  sq.add_term({2, 0}, CoeffPoly(1));
  sq.add_term({1, 1}, CoeffPoly(2));
  sq.add_term({0, 2}, CoeffPoly(1));
  CHECK(SymFunc::generator(Basis::P, Partition({1, 1})).expand(2) == sq);

  TruncPoly prod(std::vector<VarId>{x1, x2});
  prod.add_term({1, 1}, CoeffPoly(1));
  CHECK(SymFunc::generator(Basis::E, Partition::single(2)).expand(2) == prod);
  CHECK(SymFunc::generator(Basis::M, Partition({1, 1})).expand(2) == prod);
  CHECK(SymFunc::generator(Basis::MTilde, Partition({1, 1})).expand(2) == prod.scaled(CoeffPoly(2)));

  TruncPoly h2(std::vector<VarId>{x1, x2});
  h2.add_term({2, 0}, CoeffPoly(1));
  h2.add_term({1, 1}, CoeffPoly(1));
  h2.add_term({0, 2}, CoeffPoly(1));
  CHECK(SymFunc::generator(Basis::H, Partition::single(2)).expand(2) == h2);

  TruncPoly m21(std::vector<VarId>{x1, x2});
  m21.add_term({2, 1}, CoeffPoly(1));
  m21.add_term({1, 2}, CoeffPoly(1));
  CHECK(SymFunc::generator(Basis::M, Partition({2, 1})).expand(2) == m21);
}

TEST_CASE("omega swaps the multiplicative bases") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(SymFunc::generator(Basis::E, Partition::single(n))
              .omega()
              .equals(SymFunc::generator(Basis::H, Partition::single(n))));
  }
  SymFunc p21 = SymFunc::generator(Basis::P, Partition({2, 1}));
  CHECK(p21.omega().equals(-p21));
}

TEST_CASE("mixed basis arithmetic lands in power sums") {
  SymFunc e2 = SymFunc::generator(Basis::E, Partition::single(2));
  SymFunc h2 = SymFunc::generator(Basis::H, Partition::single(2));
  SymFunc sum = e2 + h2;
  CHECK(sum.basis() == Basis::P);
  CHECK(sum.equals(SymFunc::generator(Basis::P, Partition({1, 1}))));
  SymFunc prod = SymFunc::generator(Basis::P, Partition::single(2)) *
                 SymFunc::generator(Basis::P, Partition::single(1));
  CHECK(prod.equals(SymFunc::generator(Basis::P, Partition({2, 1}))));
  SymFunc m1 = SymFunc::generator(Basis::M, Partition::single(1));
  CHECK((m1 * m1).equals(SymFunc::generator(Basis::P, Partition({1, 1}))));
}

TEST_CASE("t substitution on symmetric functions") {
  SymFunc f(Basis::P);
  f.add_term(Partition::single(1), CoeffPoly(1) + CoeffPoly::t());
  CHECK(f.substitute_t(Rational(-1)).is_zero());
  CHECK(f.substitute_t(Rational(1))
            .equals(SymFunc::generator(Basis::P, Partition::single(1)).scaled(CoeffPoly(2))));
}

TEST_CASE("degree caps on monomial conversions") {
  SymFunc big = SymFunc::generator(Basis::P, Partition::single(13));
  CHECK_THROWS_AS(big.to_basis(Basis::M), CapacityError);
  SymFunc six = SymFunc::generator(Basis::P, Partition::single(6));
  CHECK_THROWS_AS(six.to_basis(Basis::MTilde, 5), CapacityError);
  CHECK_NOTHROW(six.to_basis(Basis::MTilde, 6));
}

TEST_SUITE("properties") {
  TEST_CASE("partition merge adds sizes and multiplicities") {
    constexpr size_t kIterations = 500;
    TestRng rng(201);
    for (size_t i = 0; i < kIterations; ++i) {
      Partition a = random_partition(rng);
      Partition b = random_partition(rng);
      Partition m = a.merged(b);
      CHECK(m.size() == a.size() + b.size());
      CHECK(m.length() == a.length() + b.length());
      for (int part = 1; part <= 5; ++part) {
        CHECK(m.multiplicity(part) == a.multiplicity(part) + b.multiplicity(part));
      }
      CHECK(a.merged(b) == b.merged(a));
    }
  }

  TEST_CASE("symmetric function ring laws") {
    constexpr size_t kIterations = 500;
    TestRng rng(202);
    for (size_t i = 0; i < kIterations; ++i) {
      SymFunc f = random_symfunc(rng, Basis::P);
      SymFunc g = random_symfunc(rng, Basis::P);
      SymFunc h = random_symfunc(rng, Basis::P);
      CHECK((f + g).equals(g + f));
      CHECK((f * g).equals(g * f));
      CHECK(((f + g) + h).equals(f + (g + h)));
      CHECK((f * (g + h)).equals(f * g + f * h));
      CHECK((f - f).is_zero());
      CHECK((f * SymFunc::one()).equals(f));
      CHECK((f * SymFunc::zero()).is_zero());
    }
  }

  TEST_CASE("omega is a ring involution") {
    constexpr size_t kIterations = 500;
    TestRng rng(203);
    for (size_t i = 0; i < kIterations; ++i) {
      SymFunc f = random_symfunc(rng, Basis::P);
      SymFunc g = random_symfunc(rng, Basis::P);
      CHECK(f.omega().omega().equals(f));
      CHECK((f * g).omega().equals(f.omega() * g.omega()));
      CHECK((f + g).omega().equals(f.omega() + g.omega()));
    }
  }

  TEST_CASE("basis conversions round trip") {
    constexpr size_t kIterations = 500;
    TestRng rng(204);
    const Basis bases[] = {Basis::P, Basis::E, Basis::H, Basis::M, Basis::MTilde};
    for (size_t i = 0; i < kIterations; ++i) {
      Basis source = bases[rng.below(5)];
      Basis target = bases[rng.below(5)];
      SymFunc f = random_symfunc(rng, source);
      SymFunc g = f.to_basis(target);
      CHECK(g.basis() == target);
      CHECK(g.equals(f));
    }
  }

  TEST_CASE("expansion is a ring map") {
    constexpr size_t kIterations = 500;
    TestRng rng(205);
    const Basis bases[] = {Basis::P, Basis::E, Basis::H, Basis::M, Basis::MTilde};
    for (size_t i = 0; i < kIterations; ++i) {
      SymFunc f = random_symfunc(rng, bases[rng.below(5)], 2, 3);
      SymFunc g = random_symfunc(rng, bases[rng.below(5)], 2, 3);
      int n = rng.range(1, 3);
      CHECK((f + g).expand(n, "x", 24) == f.expand(n, "x", 24) + g.expand(n, "x", 24));
      CHECK((f * g).expand(n, "x", 24) == f.expand(n, "x", 24) * g.expand(n, "x", 24));
    }
  }

  TEST_CASE("expansion agrees across bases") {
    constexpr size_t kIterations = 500;
    TestRng rng(206);
    const Basis bases[] = {Basis::P, Basis::E, Basis::H, Basis::M, Basis::MTilde};
    for (size_t i = 0; i < kIterations; ++i) {
      SymFunc f = random_symfunc(rng, Basis::P);
      Basis target = bases[rng.below(5)];
      int n = rng.range(1, 3);
      CHECK(f.expand(n) == f.to_basis(target).expand(n));
    }
  }

  TEST_CASE("equality separates distinct functions") {
    constexpr size_t kIterations = 500;
    TestRng rng(207);
    for (size_t i = 0; i < kIterations; ++i) {
      SymFunc f = random_symfunc(rng, Basis::P);
      CHECK(f.equals(f));
      SymFunc bumped = f + SymFunc::generator(Basis::P, random_partition(rng, 2, 4));
      CHECK_FALSE(bumped.equals(f));
    }
  }

  TEST_CASE("max degree matches the stored terms") {
    constexpr size_t kIterations = 500;
    TestRng rng(208);
    for (size_t i = 0; i < kIterations; ++i) {
      SymFunc f = random_symfunc(rng, Basis::P);
      int expected = 0;
      for (const auto& [idx, c] : f.terms()) expected = std::max(expected, idx.size());
      CHECK(f.max_degree() == expected);
    }
  }
}
