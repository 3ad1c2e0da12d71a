#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "cspleth/corpus.hpp"
#include "cspleth/errors.hpp"
#include "cspleth/serialize.hpp"
#include "test_support.hpp"

using namespace cspleth;

TEST_CASE("corpus sizes and determinism") {
  auto corpus = default_corpus();
  CHECK(corpus.size() == 326);
  CHECK(multigraph_instances().size() == 6);
  CHECK(extended_corpus().size() == 332);

  auto again = default_corpus();
  std::set<std::string> ids;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(corpus[i].id == again[i].id);
    CHECK(corpus[i].graph.signature() == again[i].graph.signature());
    ids.insert(corpus[i].id);
  }
  CHECK(ids.size() == corpus.size());
}

TEST_CASE("corpus instance shapes") {
  auto corpus = default_corpus();
  int five_vertex = 0;
  for (const auto& inst : corpus) {
    CHECK(inst.graph.vertex_count() >= 1);
    CHECK(inst.graph.vertex_count() <= 5);
    CHECK_FALSE(inst.graph.has_loop());
    if (inst.graph.vertex_count() == 5) {
      ++five_vertex;
      CHECK(inst.graph.total_weight() <= 9);
    }
    if (inst.graph.vertex_count() <= 4) {
      for (int w : inst.graph.weights) CHECK(w <= 3);
    }
  }
  CHECK(five_vertex == 25);

  bool any_loop = false;
  bool any_parallel = false;
  for (const auto& inst : multigraph_instances()) {
    CHECK(inst.id.front() == 'm');
    if (inst.graph.has_loop()) any_loop = true;
    std::set<std::pair<int, int>> seen;
    for (const auto& e : inst.graph.edges) {
      if (!seen.insert(e).second && e.first != e.second) any_parallel = true;
    }
  }
  CHECK(any_loop);
  CHECK(any_parallel);
}

TEST_CASE("stock graph builders") {
  CHECK(complete_graph(4).vertex_count() == 4);
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK(complete_graph(0).vertex_count() == 0);
  CHECK(path_graph(1).edge_count() == 0);
  CHECK(path_graph(4).edge_count() == 3);

  WeightedGraph wk = weighted_complete_graph(Partition({3, 1}));
  CHECK(wk.vertex_count() == 2);
  CHECK(wk.edge_count() == 1);
  CHECK(wk.weights == std::vector<int>{3, 1});
}

TEST_CASE("graph text parsing") {
  WeightedGraph g = graph_from_text("a:2; b / a-b a-a");
  CHECK(g.ids == std::vector<std::string>{"a", "b"});
  CHECK(g.weights == std::vector<int>{2, 1});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 0}});

  WeightedGraph lone = graph_from_text("only_vertex:4");
  CHECK(lone.vertex_count() == 1);
  CHECK(lone.edge_count() == 0);

  CHECK(graph_to_text(g) == "a:2; b:1 / a-b a-a");

  CHECK_THROWS_AS(graph_from_text(""), GraphFormatError);
  CHECK_THROWS_AS(graph_from_text("a / a-b / b"), GraphFormatError);
  CHECK_THROWS_AS(graph_from_text("a:0"), GraphFormatError);
  CHECK_THROWS_AS(graph_from_text("a:x"), GraphFormatError);
  CHECK_THROWS_AS(graph_from_text("a; a"), GraphFormatError);
  CHECK_THROWS_AS(graph_from_text("a$"), GraphFormatError);
  CHECK_THROWS_AS(graph_from_text("a; b / a-z"), GraphFormatError);
  CHECK_THROWS_AS(graph_from_text("a; b / a-"), GraphFormatError);
  CHECK_THROWS_AS(graph_from_text("a; b / a-b-c"), GraphFormatError);
}

TEST_CASE("graph JSON parsing") {
  Json j = Json::parse(R"({"vertices":[{"id":"a","weight":2},{"id":"b"}],
                           "edges":[["a","b"]]})");
  WeightedGraph g = graph_from_json(j);
  CHECK(g.weights == std::vector<int>{2, 1});
  CHECK(g.edge_count() == 1);

  CHECK_THROWS_AS(graph_from_json(Json::parse("[]")), GraphFormatError);
  CHECK_THROWS_AS(graph_from_json(Json::parse("{}")), GraphFormatError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[{"id":7}]})")),
                  GraphFormatError);
  CHECK_THROWS_AS(
      graph_from_json(Json::parse(R"({"vertices":[{"id":"a","weight":0}]})")),
      GraphFormatError);
  CHECK_THROWS_AS(
      graph_from_json(Json::parse(R"({"vertices":[{"id":"a"}],"edges":[["a"]]})")),
      GraphFormatError);

  CHECK(graph_from_string(R"({"vertices":[{"id":"a"}]})").vertex_count() == 1);
  CHECK(graph_from_string("a; b / a-b").edge_count() == 1);
  CHECK_THROWS_AS(graph_from_string("{bad"), GraphFormatError);
}

TEST_CASE("coefficient JSON forms") {
  CHECK(coeff_to_json(CoeffPoly(Rational(3, 2))) == Json("3/2"));
  CHECK(coeff_from_json(Json(5)) == CoeffPoly(5));
  Json arr = coeff_to_json(CoeffPoly::t());
  REQUIRE(arr.is_array());
  CHECK(arr[0]["t"] == 1);
  CHECK_FALSE(arr[0].contains("q"));
  CHECK(arr[0]["value"] == "1");

  CHECK_THROWS_AS(coeff_from_json(Json::parse("{}")), ExprParseError);
  CHECK_THROWS_AS(coeff_from_json(Json::parse(R"([{"q":-1,"value":"1"}])")),
                  ExprParseError);
  CHECK_THROWS_AS(coeff_from_json(Json::parse(R"([{"q":2}])")), ExprParseError);
  CHECK_THROWS_AS(coeff_from_json(Json("x")), ExprParseError);
}

TEST_CASE("symmetric function text forms") {
  SymFunc f = symfunc_from_text("p[1,1,1] - 2 p[2,1] + p[3]");
  CHECK(f.basis() == Basis::P);
  CHECK(f.to_string() == "p[1,1,1] - 2 p[2,1] + p[3]");

  SymFunc g = symfunc_from_text("-1/2 e[2] + 3");
  CHECK(g.basis() == Basis::E);
  CHECK(g.coefficient(Partition::single(2)) == CoeffPoly(Rational(-1, 2)));
  CHECK(g.coefficient(Partition()) == CoeffPoly(3));

  CHECK(symfunc_from_text("mt[2]").basis() == Basis::MTilde);
  CHECK(symfunc_from_text("2p[1]").equals(
      SymFunc::generator(Basis::P, Partition::single(1)).scaled(CoeffPoly(2))));
  CHECK(symfunc_from_text("h[]").equals(SymFunc::one()));

  CHECK_THROWS_AS(symfunc_from_text(""), ExprParseError);
  CHECK_THROWS_AS(symfunc_from_text("p[1] + e[1]"), ExprParseError);
  CHECK_THROWS_AS(symfunc_from_text("p[0]"), ExprParseError);
  CHECK_THROWS_AS(symfunc_from_text("p[1] 2"), ExprParseError);
  CHECK_THROWS_AS(symfunc_from_text("z[1]"), ExprParseError);
  CHECK_THROWS_AS(symfunc_from_text("p[1] +"), ExprParseError);
  CHECK_THROWS_AS(symfunc_from_text("p 1"), ExprParseError);
}

TEST_CASE("latex rendering") {
  CHECK(coeff_to_latex(CoeffPoly(Rational(3, 2))) == "\\frac{3}{2}");
  CHECK(coeff_to_latex(CoeffPoly(Rational(-1, 2))) == "-\\frac{1}{2}");
  CHECK(coeff_to_latex(CoeffPoly(1) + CoeffPoly::t()) == "1 + t");
  CHECK(coeff_to_latex(CoeffPoly::q(2) * CoeffPoly::t() * CoeffPoly(2)) ==
        "2q^{2}t");
  CHECK(coeff_to_latex(CoeffPoly()) == "0");

  SymFunc f(Basis::P);
  f.add_term(Partition({2, 1}), CoeffPoly(-2));
  CHECK(symfunc_to_latex(f) == "-2p_{(2,1)}");
  CHECK(symfunc_to_latex(SymFunc::one()) == "1");
  SymFunc mt = SymFunc::generator(Basis::MTilde, Partition({1, 1}));
  CHECK(symfunc_to_latex(mt) == "\\widetilde{m}_{(1,1)}");
  SymFunc param(Basis::P);
  param.add_term(Partition::single(2), CoeffPoly(1) + CoeffPoly::t());
  CHECK(symfunc_to_latex(param) == "\\left(1 + t\\right)p_{(2)}");

  TruncPoly poly(std::vector<VarId>{{"x", 1}, {"y", 2}});
  poly.add_term({2, 1}, CoeffPoly(1));
  CHECK(trunc_to_latex(poly) == "x_{1}^{2}y_{2}");
  CHECK(trunc_to_latex(TruncPoly()) == "0");
}

TEST_SUITE("properties") {
  TEST_CASE("graph serialization round trips") {
    constexpr size_t kIterations = 500;
    TestRng rng(901);
    for (size_t i = 0; i < kIterations; ++i) {
      WeightedGraph g = random_graph(rng, 5, 3, true);
      WeightedGraph via_json = graph_from_json(graph_to_json(g));
      CHECK(via_json.ids == g.ids);
      CHECK(via_json.weights == g.weights);
      CHECK(via_json.edges == g.edges);
      WeightedGraph via_text = graph_from_text(graph_to_text(g));
      CHECK(via_text.signature() == g.signature());
      CHECK(graph_from_string(graph_to_json(g).dump()).signature() == g.signature());
    }
  }

  TEST_CASE("coefficient JSON round trips") {
    constexpr size_t kIterations = 500;
    TestRng rng(902);
    for (size_t i = 0; i < kIterations; ++i) {
      CoeffPoly c = random_coeff(rng);
      CHECK(coeff_from_json(coeff_to_json(c)) == c);
    }
  }

  TEST_CASE("symmetric function JSON round trips") {
    constexpr size_t kIterations = 500;
    TestRng rng(903);
    const Basis bases[] = {Basis::P, Basis::E, Basis::H, Basis::M, Basis::MTilde};
    for (size_t i = 0; i < kIterations; ++i) {
      SymFunc f = random_symfunc(rng, bases[rng.below(5)]);
      SymFunc back = symfunc_from_json(symfunc_to_json(f));
      CHECK(back.basis() == f.basis());
      CHECK(back.terms() == f.terms());
    }
  }

  TEST_CASE("rational symmetric function text round trips") {
    constexpr size_t kIterations = 500;
    TestRng rng(904);
    const Basis bases[] = {Basis::P, Basis::E, Basis::H, Basis::M, Basis::MTilde};
    for (size_t i = 0; i < kIterations; ++i) {
      SymFunc f(bases[rng.below(5)]);
      int terms = rng.below(4);
      for (int k = 0; k < terms; ++k) {
        f.add_term(random_partition(rng), CoeffPoly(random_nonzero_rational(rng)));
      }
      SymFunc back = symfunc_from_text(f.to_string());
      if (f.is_zero()) {
        CHECK(back.is_zero());
      } else {
        CHECK(back.basis() == f.basis());
        CHECK(back.terms() == f.terms());
      }
    }
  }

  TEST_CASE("polynomial JSON round trips") {
    constexpr size_t kIterations = 500;
    TestRng rng(905);
    for (size_t i = 0; i < kIterations; ++i) {
      std::vector<VarId> universe{{"x", 1}, {"x", 2}, {"y", 1}};
      TruncPoly p(universe);
      int terms = rng.below(4);
      for (int k = 0; k < terms; ++k) {
        std::vector<int> exps{rng.below(3), rng.below(3), rng.below(3)};
        p.add_term(exps, random_coeff(rng));
      }
      TruncPoly back = trunc_from_json(trunc_to_json(p));
      CHECK(back == p);
      CHECK(back.vars() == p.vars());
    }
  }
}
