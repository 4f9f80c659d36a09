#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qvs/modrep.hpp"

using namespace qvs;

namespace {

QuiverGraph a1_graph() {
  QuiverGraph g;
  g.labels = {"0"};
  return g;
}

QuiverGraph jordan_quiver() {
  QuiverGraph g;
  g.labels = {"0"};
  g.edges = {{0, 0}};
  return g;
}

QuiverGraph affine_a1() {
  QuiverGraph g;
  g.labels = {"0", "1"};
  g.edges = {{0, 1}, {0, 1}};
  return g;
}

// A1 module with dim V = dim W = 1 and prescribed scalars a, b.
GradedModule a1_module(uint8_t aVal, uint8_t bVal) {
  GradedModule m;
  m.graph = a1_graph();
  m.vDims = {1};
  m.wDims = {1};
  m.q = 2;
  FqMat a(2, 1, 1), b(2, 1, 1);
  a.at(0, 0) = aVal;
  b.at(0, 0) = bVal;
  m.a = {a};
  m.b = {b};
  return m;
}

}  // namespace

TEST_CASE("moment map formula") {
  // all-zero module
  std::mt19937_64 rng(1);
  GradedModule zero = random_module(affine_a1(), {1, 1}, {1, 1}, 2, rng);
  for (auto& x : zero.B) x.a.assign(x.a.size(), 0);
  for (auto& x : zero.a) x.a.assign(x.a.size(), 0);
  for (auto& x : zero.b) x.a.assign(x.a.size(), 0);
  for (const auto& mu : moment_map(zero))
    for (uint8_t v : mu.a) CHECK(v == 0);

  // no edges: the moment map is a b at each vertex (row convention)
  GradedModule m = a1_module(1, 1);
  const auto mu = moment_map(m);
  CHECK(mu[0].at(0, 0) == 1);

  // Jordan quiver with a = b = 0: the commutator of the two arrows
  GradedModule jm;
  jm.graph = jordan_quiver();
  jm.vDims = {2};
  jm.wDims = {0};
  jm.q = 3;
  FqMat x(3, 2, 2), y(3, 2, 2);
  x.at(0, 1) = 1;          // nilpotent
  y.at(1, 0) = 1;          // transpose nilpotent; [x, y] != 0
  jm.B = {x, y};
  jm.a = {FqMat(3, 0, 2)};
  jm.b = {FqMat(3, 2, 0)};
  const auto muJ = moment_map(jm);
  bool nonzero = false;
  for (uint8_t v : muJ[0].a) nonzero |= (v != 0);
  CHECK(nonzero);
}

TEST_CASE("submodule enumeration on a framed point") {
  // b = 0, a = 0: both flavors appear
  {
    const auto subs = enumerate_submodules(a1_module(0, 0));
    // (V,0), (0,W), (V,W)
    CHECK(subs.size() == 3);
  }
  // b != 0 removes (V, 0)
  {
    const auto subs = enumerate_submodules(a1_module(0, 1));
    CHECK(subs.size() == 2);
    for (const auto& s : subs) {
      const bool vZero = dim_is_zero(s.dims());
      CHECK((s.withW || vZero == false) == s.withW);  // only W flavors left
      CHECK(s.withW);
    }
  }
  // dim V = 0: only (0, W)
  {
    GradedModule m;
    m.graph = a1_graph();
    m.vDims = {0};
    m.wDims = {1};
    m.q = 2;
    m.a = {FqMat(2, 1, 0)};
    m.b = {FqMat(2, 0, 1)};
    const auto subs = enumerate_submodules(m);
    CHECK(subs.size() == 1);
    CHECK(subs[0].withW);
  }
}

TEST_CASE("stability verdicts on framed points") {
  const StabilityParam zt{{Rat(1)}, Rat(-1)};  // normalized for v = w = (1)
  CHECK(stability_verdict(a1_module(0, 1), zt) == Verdict::stable);
  CHECK(stability_verdict(a1_module(0, 0), zt) == Verdict::unstable);
  // zero parameter: everything is semistable
  const StabilityParam z0{{Rat(0)}, Rat(0)};
  for (uint8_t a = 0; a < 2; ++a)
    for (uint8_t b = 0; b < 2; ++b)
      CHECK(stability_verdict(a1_module(a, b), z0) != Verdict::unstable);
}

TEST_CASE("slope see-saw for submodules") {
  std::mt19937_64 rng(5);
  const QuiverGraph g = affine_a1();
  for (int trial = 0; trial < 60; ++trial) {
    const DimVector v{1 + static_cast<Int>(rng() % 2),
                      1 + static_cast<Int>(rng() % 2)};
    const DimVector w{1, static_cast<Int>(rng() % 2)};
    const GradedModule m = random_module(g, v, w, 2, rng);
    StabilityParam zt;
    zt.zeta = {Rat(static_cast<Int>(rng() % 5) - 2),
               Rat(static_cast<Int>(rng() % 5) - 2)};
    zt.zetaInf = Rat(static_cast<Int>(rng() % 5) - 2);
    const Rat total = slope(zt, v, true);
    for (const auto& s : enumerate_submodules(m)) {
      const DimVector qd = dim_sub(v, s.dims());
      const bool qW = !s.withW;
      if (dim_is_zero(qd) && !qW) continue;
      const Rat su = slope(zt, s.dims(), s.withW);
      const Rat qu = slope(zt, qd, qW);
      CHECK((su <= total) == (qu >= total));
      CHECK((su == total) == (qu == total));
    }
  }
}

TEST_CASE("verdicts are invariant under whole-parameter shifts") {
  std::mt19937_64 rng(9);
  const QuiverGraph g = affine_a1();
  for (int trial = 0; trial < 40; ++trial) {
    const DimVector v{static_cast<Int>(rng() % 3),
                      1 + static_cast<Int>(rng() % 2)};
    const DimVector w{1, static_cast<Int>(rng() % 2)};
    const GradedModule m = random_module(g, v, w, 2, rng);
    StabilityParam zt;
    zt.zeta = {Rat(static_cast<Int>(rng() % 5) - 2),
               Rat(static_cast<Int>(rng() % 5) - 2)};
    zt.zetaInf = Rat(static_cast<Int>(rng() % 3) - 1);
    const Rat c = Rat(static_cast<Int>(rng() % 7) - 3);
    StabilityParam shifted = zt;
    for (auto& x : shifted.zeta) x += c;
    *shifted.zetaInf += c;
    CHECK(stability_verdict(m, zt) == stability_verdict(m, shifted));
  }
}

TEST_CASE("the worked HN filtration") {
  // B = a = b = 0 at dim V = dim W = 1 splits as (0,W) then (V,0)
  const GradedModule m = a1_module(0, 0);
  const StabilityParam zt{{Rat(1)}, Rat(-1)};
  const HNFiltration hn = hn_filtration(m, zt);
  REQUIRE(hn.pieces() == 2);
  CHECK(hn.kW == 0);
  CHECK(hn.grSlopes[0] == Rat(-1));
  CHECK(hn.grSlopes[1] == Rat(1));
  CHECK(hn.grDims[0] == DimVector{0});
  CHECK(hn.grDims[1] == DimVector{1});
  CHECK(hn.flag.size() == 3);
  CHECK(hn.flag[1][0].rows == 1);  // V^1 = V with the framing dropped

  // semistable module: trivial flag
  const HNFiltration triv = hn_filtration(a1_module(0, 1), zt);
  CHECK(triv.pieces() == 1);

  // direct sum of two stable modules of distinct slopes
  GradedModule sum;
  sum.graph = a1_graph();
  sum.vDims = {2};
  sum.wDims = {1};
  sum.q = 2;
  FqMat a(2, 1, 2), b(2, 2, 1);
  b.at(0, 0) = 1;  // V = <e1> pairs with W, <e2> floats free
  sum.a = {a};
  sum.b = {b};
  const StabilityParam zs{{Rat(1)}, Rat(-2)};
  const HNFiltration hs = hn_filtration(sum, zs);
  CHECK(hs.pieces() == 2);
  CHECK(hs.grDims[1] == DimVector{1});
  CHECK(hs.grSlopes[0] < hs.grSlopes[1]);
}

TEST_CASE("exhaustive flag search matches the greedy filtration") {
  std::mt19937_64 rng(13);
  const QuiverGraph g = affine_a1();
  for (int trial = 0; trial < 25; ++trial) {
    const DimVector v{static_cast<Int>(rng() % 3),
                      static_cast<Int>(rng() % 2)};
    const DimVector w{1, 0};
    const GradedModule m = random_module(g, v, w, 2, rng);
    StabilityParam zt;
    zt.zeta = {Rat(1), Rat(-1)};
    zt.zetaInf = Rat(static_cast<Int>(rng() % 3) - 1);
    CHECK(count_hn_flags(m, zt) == 1);
  }
}

TEST_CASE("composition factors at the zero parameter") {
  // b != 0, a = 0 at zeta = 0: factors are the vertex simple and (0, W)
  const GradedModule m = a1_module(0, 1);
  const StabilityParam z0{{Rat(0)}, Rat(0)};
  const auto factors = jh_factors(m, z0);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].dims == DimVector{0});
  CHECK(factors[0].withW);
  CHECK(factors[1].dims == DimVector{1});
  CHECK(!factors[1].withW);

  // two copies of the vertex simple
  GradedModule twoS;
  twoS.graph = a1_graph();
  twoS.vDims = {2};
  twoS.wDims = {0};
  twoS.q = 2;
  twoS.a = {FqMat(2, 0, 2)};
  twoS.b = {FqMat(2, 2, 0)};
  const auto f2 = jh_factors(twoS, StabilityParam{{Rat(0)}, Rat(0)});
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].dims == DimVector{1});
  CHECK(f2[1].dims == DimVector{1});
  CHECK(f2[0].isoKey == f2[1].isoKey);

  // stable module: a single factor
  const auto f1 = jh_factors(a1_module(0, 1), StabilityParam{{Rat(1)}, Rat(-1)});
  CHECK(f1.size() == 1);
  CHECK(f1[0].withW);

  CHECK_THROWS_AS(jh_factors(a1_module(0, 0), StabilityParam{{Rat(1)}, Rat(-1)}),
                  PreconditionError);
}

TEST_CASE("same-face verdicts agree over the ternary field too") {
  std::mt19937_64 rng(17);
  const QuiverGraph g = affine_a1();
  const CartanMatrix C = cartan_from_graph(g);
  const std::vector<std::vector<Rat>> pool{
      {Rat(1), Rat(1)},  {Rat(1), Rat(-1)}, {Rat(2), Rat(-2)},
      {Rat(0), Rat(1)},  {Rat(3), Rat(3)},  {Rat(-1), Rat(1)},
      {Rat(1), Rat(0)},  {Rat(2), Rat(0)}};
  for (int trial = 0; trial < 30; ++trial) {
    const DimVector v{1 + static_cast<Int>(rng() % 2),
                      static_cast<Int>(rng() % 3)};
    const DimVector w{1, 1};
    const GradedModule m = random_module(g, v, w, 3, rng);
    std::vector<Face> faces;
    std::vector<Verdict> verdicts;
    for (const auto& zs : pool) {
      const StabilityParam z = normalize({zs, {}}, v, w);
      faces.push_back(face_of(z, v, w, C));
      verdicts.push_back(stability_verdict(m, z));
    }
    for (size_t i = 0; i < faces.size(); ++i)
      for (size_t j = i + 1; j < faces.size(); ++j)
        if (faces[i] == faces[j]) CHECK(verdicts[i] == verdicts[j]);
  }
}

TEST_CASE("budget guard") {
  std::mt19937_64 rng(2);
  const GradedModule big = random_module(affine_a1(), {6, 6}, {1, 1}, 2, rng);
  CHECK_THROWS_AS(enumerate_submodules(big), BudgetError);
}
