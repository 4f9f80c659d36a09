#pragma once

// Explicit quiver modules over F_2 / F_3 and brute-force verdicts:
// submodule enumeration, (semi)stability, Harder-Narasimhan and
// Jordan-Hoelder filtrations.  This is the desk-scale ground truth the
// face lemmas are checked against.

#include <optional>
#include <random>
#include <vector>

#include "qvs/fq.hpp"
#include "qvs/quiver.hpp"
#include "qvs/stability.hpp"

namespace qvs {

// Arrows: every edge contributes two, indexed 2e (as stored / oriented
// direction, sign +1) and 2e+1 (reverse, sign -1).
struct Arrow {
  int from, to;
  int sign;
};
std::vector<Arrow> arrows_of(const QuiverGraph& g);

struct GradedModule {
  QuiverGraph graph;
  DimVector vDims, wDims;
  int q = 2;
  std::vector<FqMat> B;  // one matrix per arrow, maps V_from -> V_to
  std::vector<FqMat> a;  // W_i -> V_i
  std::vector<FqMat> b;  // V_i -> W_i
  bool momentChecked = false;

  void validate_shapes() const;
};

// mu(B, a, b)_i = sum_{in(h)=i} eps(h) B_h B_hbar + a_i b_i
std::vector<FqMat> moment_map(const GradedModule& m);

// Whether the moment map vanishes; the returned copy carries the
// asserted flag.  Stability never needs this, so it stays optional.
bool moment_vanishes(const GradedModule& m);
GradedModule with_moment_checked(const GradedModule& m);

GradedModule random_module(const QuiverGraph& g, const DimVector& v,
                           const DimVector& w, int q, std::mt19937_64& rng);

struct Submodule {
  std::vector<FqMat> basis;  // RREF basis per vertex
  bool withW = false;

  DimVector dims() const {
    DimVector d;
    for (const auto& m : basis) d.push_back(m.rows);
    return d;
  }
};

// All submodules (V', 0) with V' in Ker b and B-invariant, and (V', W)
// with Im a in V' and B-invariant.  (0, 0) is excluded; (V, W) is
// included.  Uses a candidate budget of 10^6 graded subspaces.
std::vector<Submodule> enumerate_submodules(const GradedModule& m);

enum class Verdict { stable, strictlySemistable, unstable };

// Verdict against an explicit (zeta, zetaInf); comparisons are made
// against the slope of (V, W) itself, so unnormalized parameters keep
// their meaning and the whole-parameter shift invariance of the slope
// condition is visible.
Verdict stability_verdict(const GradedModule& m, const StabilityParam& zt);

struct HNFiltration {
  // flag[k] = basis of V^k inside the ambient V (flag[0] = V, last = 0),
  // stored per vertex; kW = last index still carrying W.
  std::vector<std::vector<FqMat>> flag;
  Int kW = 0;
  std::vector<Rat> grSlopes;
  std::vector<DimVector> grDims;

  Int pieces() const { return static_cast<Int>(grSlopes.size()); }
};

HNFiltration hn_filtration(const GradedModule& m, const StabilityParam& zt);

struct JHFactor {
  DimVector dims;
  bool withW = false;
  std::vector<uint8_t> isoKey;  // canonical form bytes at tiny dims

  bool operator<(const JHFactor& o) const {
    if (dims != o.dims) return dims < o.dims;
    if (withW != o.withW) return withW < o.withW;
    return isoKey < o.isoKey;
  }
  bool operator==(const JHFactor& o) const {
    return dims == o.dims && withW == o.withW && isoKey == o.isoKey;
  }
};

// Factors of a Jordan-Hoelder flag of a semistable module, sorted.
// tieBreakHigh selects the other extreme flag so independence of the
// choice can be checked.
std::vector<JHFactor> jh_factors(const GradedModule& m,
                                 const StabilityParam& zt,
                                 bool tieBreakHigh = false);

// Restriction of m to a graded subspace, with or without the framing.
GradedModule restrict_module(const GradedModule& m,
                             const std::vector<FqMat>& basis, bool withW);
// Quotient of m by a graded subspace; keepW selects whether the framing
// survives (it does when the subspace entered without W).
GradedModule quotient_module(const GradedModule& m,
                             const std::vector<FqMat>& basis, bool keepW);

// Canonical representative bytes of the iso class under the product of
// GL(V_i) (brute force; tiny dimensions only).
std::vector<uint8_t> canonical_iso_key(const GradedModule& m);

// All flags satisfying the HN axioms for (m, zt); used by the
// uniqueness cross-check.
Int count_hn_flags(const GradedModule& m, const StabilityParam& zt);

}  // namespace qvs
