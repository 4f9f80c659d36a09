#pragma once

// Slope functions, the finite root-candidate set R+(v), the face/chamber
// classification of stability parameters, and the sample-parameter
// constructors for Levi and level-zero faces.

#include <optional>
#include <vector>

#include "qvs/quiver.hpp"

namespace qvs {

struct StabilityParam {
  std::vector<Rat> zeta;
  std::optional<Rat> zetaInf;

  Rat dot(const DimVector& v) const {
    Rat s = 0;
    for (size_t i = 0; i < zeta.size(); ++i) s += zeta[i] * v[i];
    return s;
  }
  bool operator==(const StabilityParam& o) const {
    return zeta == o.zeta && zetaInf == o.zetaInf;
  }
};

// theta value of a (sub)module of dimension data (v, withW).  Requires
// v != 0 or withW.
Rat slope(const StabilityParam& zt, const DimVector& v, bool withW);

// Fixes zetaInf so that the total slope of (v, w) vanishes.  For w = 0
// the standing assumption zeta.v = 0 is enforced and zetaInf is set to 0.
StabilityParam normalize(const StabilityParam& zeta, const DimVector& v,
                         const DimVector& w);

// { theta in Z^I_{>=0} \ {0} : t(theta) C theta <= 2, theta <= v },
// sorted lexicographically.
std::vector<DimVector> rplus(const DimVector& v, const CartanMatrix& C);

struct Face {
  std::vector<DimVector> rZero, rPlus, rMinus;  // each sorted
  DimVector dimVector;
  bool wIsZero = false;

  bool operator==(const Face& o) const {
    return rZero == o.rZero && rPlus == o.rPlus && rMinus == o.rMinus &&
           dimVector == o.dimVector && wIsZero == o.wIsZero;
  }
};

// Partitions R+(v) by the sign of zeta.theta.  When w = 0 the candidate
// v itself is removed from the set and zeta.v = 0 is required.
Face face_of(const StabilityParam& zeta, const DimVector& v,
             const DimVector& w, const CartanMatrix& C);

bool is_chamber(const Face& f);

// Whether fBullet lies in the closure of f: every strict sign of
// fBullet must already be the strict sign of f.
bool in_closure(const Face& fBullet, const Face& f);

enum class FaceKind { levi, aleOpen, aleBullet };

struct FaceSpec {
  FaceKind kind;
  std::vector<int> partZero;  // I^0, resp. I_0^0
  StabilityParam sampleZeta;
};

// zeta_i = 0 on I0 and 1 elsewhere; the face lies in the closure of the
// all-positive chamber.
FaceSpec levi_face(const QuiverGraph& g, const std::vector<int>& I0);

// Level-zero face of an affine graph: zeta.delta = 0, zeta_i = 0 for
// i in I00 (a subset of the nonzero vertices), zeta_i = 1 on the rest of
// I_0, and zeta_0 determined by orthogonality to delta.  I00 empty gives
// the open level-zero face.
FaceSpec ale_face(const QuiverGraph& g, const std::vector<int>& I00);

// A chamber parameter adjacent to the open level-zero face: keeps
// zeta_i for i != 0 and pushes zeta.delta to -1/(1+sum v)^2, small
// enough that no theta in R+(v) outside Z delta changes sign.
StabilityParam gieseker_zeta(const QuiverGraph& g, const DimVector& v);

}  // namespace qvs
