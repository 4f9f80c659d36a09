#pragma once

// Generalized Young diagrams, Maya diagrams, transposition, charge and
// degree bookkeeping, the level-rank weight-multiplicity identity, and
// tensor multiplicities computed by truncated character branching.

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "qvs/crystal.hpp"
#include "qvs/roots.hpp"

namespace qvs {

// lambda_1 >= ... >= lambda_l (integers, possibly negative) with the
// level constraint lambda_1 - lambda_l <= r.
struct GYD {
  int l = 1;
  int r = 1;
  std::vector<Int> parts;

  void validate() const;
  Int size() const;  // |lambda|
  bool operator==(const GYD& o) const {
    return l == o.l && r == o.r && parts == o.parts;
  }
  bool operator<(const GYD& o) const { return parts < o.parts; }
};

// Level-r dominant weight of the rank-l affine algebra:
// (r - l1 + ll) Lambda_0 + sum (l_p - l_{p+1}) Lambda_p.
DimVector gyd_to_weight(const GYD& lam);

// Finite deviation record from the vacuum half-filling.  Sites are
// (i, p, t) with 1 <= i <= r, 1 <= p <= l and t = n + 1/2 integral.
struct MayaDiagram {
  int l = 1;
  int r = 1;
  std::set<std::array<Int, 3>> blackAbove;  // filled sites with n > 0
  std::set<std::array<Int, 3>> whiteBelow;  // empty sites with n < 0

  bool operator==(const MayaDiagram& o) const {
    return l == o.l && r == o.r && blackAbove == o.blackAbove &&
           whiteBelow == o.whiteBelow;
  }
};

// Site (i, p, n) filled iff r(n - 1/2) + i <= lambda_p.
MayaDiagram gyd_to_maya(const GYD& lam);

// Transposition of each (l x r) rectangle, on the level of sites.
MayaDiagram maya_transpose(const MayaDiagram& m);

// Transposed diagram in Y^l_r, computed in closed form.
GYD transpose(const GYD& lam);

Int charge(const MayaDiagram& m);
Rat degree(const MayaDiagram& m);

// The unique diagram with the given weight and size congruent mod l to
// |lam|, scaled to |mu| = |lam|.  Throws DepthInconclusiveError-free
// congruence failure as PreconditionError.
GYD unique_mu_lift(const GYD& lam, const DimVector& muBarWeight);

struct DualityReport {
  BigInt lhsDim = 0;
  BigInt rhsDim = 0;
  Rat t = 0;
  bool degreeRelationHolds = false;
};

// Weight multiplicity of V(lam-bar) at the weight lam-bar minus the
// root combination vX (rank-l side), against the tensor Hom dimension
// on the rank-r side located through the Maya degree bookkeeping.
DualityReport duality_dims(const GYD& lam, const DimVector& vX, Int depth);

// Multiplicity of V(lam-bar) in V(lam1-bar) (x) V(lam2-bar) at the
// delta-lift fixed by the degree bookkeeping; zero unless
// |lam| = |lam1| + |lam2|.
BigInt tensor_multiplicity(const GYD& lam, const GYD& lam1, const GYD& lam2,
                           Int depth);

// Truncated decomposition of V(w1) (x) V(w2) into highest-weight
// components on a loop-free affine Cartan matrix: content -> number of
// components headed there.
std::map<DimVector, BigInt> decompose_tensor(const CartanMatrix& C,
                                             const DimVector& w1,
                                             const DimVector& w2, Int depth);

// Cyclic affine type-A graph on n >= 2 vertices (two parallel edges
// when n = 2).
QuiverGraph cycle_graph(int n);

}  // namespace qvs
