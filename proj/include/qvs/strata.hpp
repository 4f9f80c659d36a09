#pragma once

// Stratum enumeration at Levi and level-zero faces, the local-model
// data (hat Cartan matrix and dimension vectors) around a stratum, and
// the semismallness fiber bound.

#include <map>
#include <string>
#include <vector>

#include "qvs/nonempty.hpp"

namespace qvs {

struct LeviStratum {
  DimVector v0;
  DimVector residual;       // v - v0, supported on I0
  bool residualEvaluated;   // true when the residual is forced trivial
};

// All v0 <= v with v - v0 supported on I0 and a nonempty framed piece.
// On an affine graph with I0 != I the residual carries no extra stratum
// data; otherwise it is reported unevaluated for the subgraph.
std::vector<LeviStratum> enumerate_strata_levi(const QuiverGraph& g,
                                               const DimVector& v,
                                               const DimVector& w,
                                               const std::vector<int>& I0,
                                               Int depth);

struct StratumIndex {
  DimVector v0;
  std::vector<Int> lambda;      // partition, weakly decreasing
  std::map<int, Int> m;         // vertex in I00 -> multiplicity
  std::map<int, Int> n;         // component index -> multiplicity

  bool operator<(const StratumIndex& o) const {
    if (v0 != o.v0) return v0 < o.v0;
    if (lambda != o.lambda) return lambda < o.lambda;
    if (m != o.m) return m < o.m;
    return n < o.n;
  }
};

// Reconstructs v = v0 + |lambda| delta + sum m_i e_i + sum n_c
// (delta - alpha_h^c); inverse of the enumeration constraint.
DimVector stratum_total(const QuiverGraph& g, const std::vector<int>& I00,
                        const StratumIndex& s);

// All stratum indices for (v, w) at the level-zero face of I00.
std::vector<StratumIndex> enumerate_strata_ale(const QuiverGraph& g,
                                               const DimVector& v,
                                               const DimVector& w,
                                               const std::vector<int>& I00,
                                               Int depth);

struct LocalModel {
  CartanMatrix hatCartan;  // on the non-framed pieces
  DimVector hatV;          // multiplicities
  DimVector hatW;          // framed couplings
};

// Local model from the decomposition pieces; pieces[0] is the framed
// piece with multiplicity 1.  Checks the coupling identity
// hatW_k - sum_l hatC_kl hatV_l = t(v^k)(w - Cv) internally.
LocalModel local_model(const CartanMatrix& C,
                       const std::vector<std::pair<DimVector, Int>>& pieces,
                       const DimVector& w);

// Pieces of the local model at a point of an explicit stratum.
std::vector<std::pair<DimVector, Int>> stratum_pieces(
    const QuiverGraph& g, const std::vector<int>& I00, const StratumIndex& s);

enum class BlockKind { finiteType, affineType, jordan };

// Connected blocks of a hat Cartan matrix, classified.
std::vector<BlockKind> classify_blocks(const CartanMatrix& hatC);

// (ambient - stratum) / 2 with parity and ordering checks.
Int fiber_dim_bound(Int ambientDim, Int stratumDim);

}  // namespace qvs
