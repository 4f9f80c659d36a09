#pragma once

// Positive roots with multiplicities via the Peterson recurrence and
// weight multiplicities of integrable highest-weight modules via the
// Freudenthal recurrence, both over exact arithmetic.  These are the
// character-side oracles backing every "is a weight" / "is a root" test.

#include <map>
#include <utility>
#include <vector>

#include "qvs/quiver.hpp"

namespace qvs {

struct RootDatum {
  CartanMatrix cartan;
  Int heightBound = 0;
  std::map<DimVector, BigInt> roots;  // positive roots of height <= bound

  bool is_root(const DimVector& x) const {
    auto it = roots.find(x);
    return it != roots.end() && it->second > 0;
  }
  BigInt mult(const DimVector& x) const {
    auto it = roots.find(x);
    return it == roots.end() ? BigInt(0) : it->second;
  }
};

// All positive roots of height <= bound with exact multiplicities.
// Rejects Cartan matrices with loop vertices (diagonal != 2).
RootDatum positive_roots(const CartanMatrix& C, Int bound);

struct WeightMultTable {
  CartanMatrix cartan;
  DimVector highest;
  Int depthBound = 0;
  std::map<DimVector, BigInt> mults;  // content v -> dim V(w)_{w-v}

  // Multiplicity lookup; content outside the depth bound is unknown,
  // never zero.
  BigInt at(const DimVector& v) const;
  bool is_weight(const DimVector& v) const { return at(v) > 0; }
};

// Weight multiplicities of V(w) at w - v for all v with sum(v) <= depth.
// Requires w dominant (nonnegative) and a loop-free Cartan matrix.
WeightMultTable freudenthal(const DimVector& w, const CartanMatrix& C,
                            Int depth);

// Root multiplicity of v + e_inf in the quiver extended by the framing
// w; agrees with freudenthal(w, C, .).at(v).
BigInt root_mult_extended(const QuiverGraph& g, const DimVector& w,
                          const DimVector& v);

// Applies simple reflections at negative pairings until dominant.
// Returns the dominant representative and the number of reflections.
std::pair<AffineWeight, Int> dominant_conjugate(const AffineWeight& wv,
                                                const CartanMatrix& C);

}  // namespace qvs
