#include "qvs/stability.hpp"

#include <algorithm>

namespace qvs {

Rat slope(const StabilityParam& zt, const DimVector& v, bool withW) {
  const Int total = dim_height(v) + (withW ? 1 : 0);
  if (total == 0)
    throw PreconditionError("slope of the zero pair is undefined");
  Rat num = zt.dot(v);
  if (withW) num += zt.zetaInf.value_or(Rat(0));
  return num / Rat(total);
}

StabilityParam normalize(const StabilityParam& zeta, const DimVector& v,
                         const DimVector& w) {
  StabilityParam out = zeta;
  if (dim_is_zero(w)) {
    if (zeta.dot(v) != 0)
      throw PreconditionError("w = 0 requires zeta.v = 0");
    out.zetaInf = Rat(0);
  } else {
    out.zetaInf = -zeta.dot(v);
  }
  return out;
}

std::vector<DimVector> rplus(const DimVector& v, const CartanMatrix& C) {
  std::vector<DimVector> out;
  const int n = static_cast<int>(v.size());
  DimVector theta(n, 0);
  // Box enumeration of 0 <= theta <= v.
  while (true) {
    if (!dim_is_zero(theta) && cartan_pair(C, theta, theta) <= 2)
      out.push_back(theta);
    int k = n - 1;
    while (k >= 0 && theta[k] == v[k]) theta[k--] = 0;
    if (k < 0) break;
    ++theta[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Face face_of(const StabilityParam& zeta, const DimVector& v,
             const DimVector& w, const CartanMatrix& C) {
  Face f;
  f.dimVector = v;
  f.wIsZero = dim_is_zero(w);
  if (f.wIsZero && zeta.dot(v) != 0)
    throw PreconditionError("w = 0 requires zeta.v = 0");
  for (const auto& theta : rplus(v, C)) {
    if (f.wIsZero && theta == v) continue;
    const Rat s = zeta.dot(theta);
    if (s == 0)
      f.rZero.push_back(theta);
    else if (s > 0)
      f.rPlus.push_back(theta);
    else
      f.rMinus.push_back(theta);
  }
  return f;
}

bool is_chamber(const Face& f) { return f.rZero.empty(); }

namespace {
bool subset_of(const std::vector<DimVector>& a,
               const std::vector<DimVector>& b) {
  // both sorted
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
}  // namespace

bool in_closure(const Face& fBullet, const Face& f) {
  if (fBullet.dimVector != f.dimVector || fBullet.wIsZero != f.wIsZero)
    throw PreconditionError("faces computed against different (v, w)");
  return subset_of(fBullet.rPlus, f.rPlus) &&
         subset_of(fBullet.rMinus, f.rMinus);
}

FaceSpec levi_face(const QuiverGraph& g, const std::vector<int>& I0) {
  FaceSpec spec;
  spec.kind = FaceKind::levi;
  spec.partZero = I0;
  std::sort(spec.partZero.begin(), spec.partZero.end());
  spec.sampleZeta.zeta.assign(g.n(), Rat(1));
  for (int i : I0) {
    if (i < 0 || i >= g.n()) throw PreconditionError("I0 vertex out of range");
    spec.sampleZeta.zeta[i] = 0;
  }
  return spec;
}

FaceSpec ale_face(const QuiverGraph& g, const std::vector<int>& I00) {
  const CartanMatrix C = cartan_from_graph(g);
  const DimVector delta = affine_delta(C);
  FaceSpec spec;
  spec.kind = I00.empty() ? FaceKind::aleOpen : FaceKind::aleBullet;
  spec.partZero = I00;
  std::sort(spec.partZero.begin(), spec.partZero.end());
  spec.sampleZeta.zeta.assign(g.n(), Rat(1));
  for (int i : I00) {
    if (i <= 0 || i >= g.n())
      throw PreconditionError("I00 must avoid the 0-vertex");
    spec.sampleZeta.zeta[i] = 0;
  }
  // zeta.delta = 0 determines the 0-entry.
  Rat rest = 0;
  for (int i = 1; i < g.n(); ++i) rest += spec.sampleZeta.zeta[i] * delta[i];
  spec.sampleZeta.zeta[0] = -rest / Rat(delta[0]);
  return spec;
}

StabilityParam gieseker_zeta(const QuiverGraph& g, const DimVector& v) {
  const auto circ = ale_face(g, {});
  const CartanMatrix C = cartan_from_graph(g);
  const DimVector delta = affine_delta(C);
  StabilityParam zt = circ.sampleZeta;
  const Rat eps = Rat(1, (1 + dim_height(v)) * (1 + dim_height(v)));
  // zeta.delta = -eps, adjusting only the 0-entry.
  zt.zeta[0] -= eps / Rat(delta[0]);
  return zt;
}

}  // namespace qvs
