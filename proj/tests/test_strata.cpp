#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qvs/levelrank.hpp"
#include "qvs/strata.hpp"

using namespace qvs;

namespace {

QuiverGraph a2_graph() {
  QuiverGraph g;
  g.labels = {"0", "1"};
  g.edges = {{0, 1}};
  return g;
}

}  // namespace

TEST_CASE("Levi strata on a finite graph") {
  const QuiverGraph g = a2_graph();
  // empty contracted set: the single full stratum (criterion permitting)
  const auto full = enumerate_strata_levi(g, {1, 1}, {1, 1}, {}, 4);
  REQUIRE(full.size() == 1);
  CHECK(full[0].v0 == DimVector{1, 1});

  // contracted first vertex: both candidates survive
  const auto two = enumerate_strata_levi(g, {1, 1}, {1, 1}, {0}, 4);
  REQUIRE(two.size() == 2);
  CHECK(two[0].v0 == DimVector{0, 1});
  CHECK(two[1].v0 == DimVector{1, 1});
  CHECK(two[0].residual == DimVector{1, 0});
  CHECK(!two[0].residualEvaluated);

  const auto zero = enumerate_strata_levi(g, {0, 0}, {1, 1}, {0}, 4);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].v0 == DimVector{0, 0});
}

TEST_CASE("degenerate full-Levi case on an affine graph") {
  const QuiverGraph g = cycle_graph(2);
  for (Int a = 0; a <= 2; ++a)
    for (Int b = 0; b <= 2; ++b) {
      const auto strata =
          enumerate_strata_levi(g, {a, b}, {1, 0}, {0, 1}, 6);
      for (const auto& s : strata) CHECK(s.v0 == DimVector{0, 0});
    }
}

TEST_CASE("level-zero strata on the 2-cycle") {
  const QuiverGraph g = cycle_graph(2);

  // v = delta at level 1, nothing contracted: one floating point
  const auto s1 = enumerate_strata_ale(g, {1, 1}, {1, 0}, {}, 6);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0].v0 == DimVector{0, 0});
  CHECK(s1[0].lambda == std::vector<Int>{1});
  CHECK(s1[0].m.empty());
  CHECK(s1[0].n.empty());

  const auto s0 = enumerate_strata_ale(g, {0, 0}, {1, 0}, {}, 6);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0].v0 == DimVector{0, 0});
  CHECK(s0[0].lambda.empty());

  // v = e0 with the nonzero vertex contracted: only the B_c slot fits
  const auto se = enumerate_strata_ale(g, {1, 0}, {1, 0}, {1}, 6);
  REQUIRE(se.size() == 1);
  CHECK(se[0].v0 == DimVector{0, 0});
  CHECK(se[0].lambda.empty());
  CHECK(se[0].m.empty());
  REQUIRE(se[0].n.size() == 1);
  CHECK(se[0].n.at(0) == 1);

  // reconstruction across a richer grid
  for (Int a = 0; a <= 3; ++a)
    for (Int b = 0; b <= 3; ++b)
      for (const auto& s : enumerate_strata_ale(g, {a, b}, {1, 1}, {1}, 8))
        CHECK(stratum_total(g, {1}, s) == DimVector{a, b});
}

TEST_CASE("local models of the worked examples") {
  const QuiverGraph g = cycle_graph(2);
  const CartanMatrix C = cartan_from_graph(g);

  // a single floating point: the one-loop block
  const LocalModel jm = local_model(
      C, {{DimVector{0, 0}, 1}, {DimVector{1, 1}, 1}}, {1, 0});
  CHECK(jm.hatCartan.c == std::vector<std::vector<Int>>{{0}});
  CHECK(classify_blocks(jm.hatCartan) ==
        std::vector<BlockKind>{BlockKind::jordan});
  CHECK(jm.hatW == DimVector{1});  // t(delta) w

  // the contracted 2-cycle: B_c and S_1 pieces rebuild the affine shape
  const LocalModel am = local_model(
      C, {{DimVector{0, 0}, 1}, {DimVector{1, 0}, 1}, {DimVector{0, 1}, 1}},
      {1, 0});
  CHECK(am.hatCartan.c ==
        std::vector<std::vector<Int>>{{2, -2}, {-2, 2}});
  CHECK(classify_blocks(am.hatCartan) ==
        std::vector<BlockKind>{BlockKind::affineType});

  // sub-Cartan block on contracted vertices of the 3-cycle
  const QuiverGraph g3 = cycle_graph(3);
  const CartanMatrix C3 = cartan_from_graph(g3);
  const LocalModel sm = local_model(
      C3,
      {{DimVector{0, 0, 0}, 1}, {DimVector{0, 1, 0}, 1}, {DimVector{0, 0, 1}, 2}},
      {1, 0, 0});
  CHECK(sm.hatCartan.c == std::vector<std::vector<Int>>{{2, -1}, {-1, 2}});
  CHECK(classify_blocks(sm.hatCartan) ==
        std::vector<BlockKind>{BlockKind::finiteType});
  CHECK(sm.hatV == DimVector{1, 2});

  CHECK_THROWS_AS(
      local_model(C, {{DimVector{0, 0}, 2}, {DimVector{1, 1}, 1}}, {1, 0}),
      PreconditionError);
}

TEST_CASE("fiber dimension bound") {
  CHECK(fiber_dim_bound(4, 4) == 0);
  CHECK(fiber_dim_bound(4, 2) == 1);
  CHECK_THROWS_AS(fiber_dim_bound(2, 4), PreconditionError);
  CHECK_THROWS_AS(fiber_dim_bound(3, 2), PreconditionError);
}
