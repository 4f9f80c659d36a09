#pragma once

// Arithmetic nonemptiness criteria for the stable locus: the root-
// decomposition test over a stability parameter, the classification of
// level-zero stable dimension vectors on affine graphs, and the affine
// stratum criteria it specializes to.

#include <optional>
#include <string>
#include <vector>

#include "qvs/roots.hpp"
#include "qvs/stability.hpp"

namespace qvs {

struct CBWitness {
  DimVector v0;
  std::vector<DimVector> betas;
  std::string reason;  // set when failure is not a decomposition
};

struct CBVerdict {
  bool nonempty = false;
  std::optional<CBWitness> witness;
  long long decompositionsChecked = 0;
};

// Nonemptiness of the stable locus for (v, w) at zeta.  For w = 0 the
// normalization zeta.v = 0 is required; for w != 0 the graph must be
// loop-free and "is a weight" questions are answered by a multiplicity
// table of depth >= sum(v) (smaller depth raises
// DepthInconclusiveError).
CBVerdict cb_stable_nonempty(const QuiverGraph& g, const DimVector& v,
                             const DimVector& w, const StabilityParam& zeta,
                             Int depth);

// Level-zero stable dimension vectors for the face with zeta_i = 0
// exactly on I00: delta (tag 'a'), the coordinate vectors on I00
// (tag 'b'), and delta minus the highest root of each component of I00
// (tag 'c').
std::vector<std::pair<DimVector, char>> ale_stable_dimvectors(
    const QuiverGraph& g, const std::vector<int>& I00);

// Connected components of the full subgraph on a vertex subset, each
// sorted, ordered by smallest member.
std::vector<std::vector<int>> subgraph_components(const QuiverGraph& g,
                                                  const std::vector<int>& verts);

// Highest root of the finite subsystem on one component.
DimVector component_highest_root(const QuiverGraph& g,
                                 const std::vector<int>& comp);

// Stratum criterion at a level-zero face of an affine graph (w != 0):
// orbit membership (level 1) or weight membership (level >= 2) plus the
// nonnegativity of the pairings against delta - alpha_h^c and e_i.
bool affine_stratum_nonempty(const QuiverGraph& g, const DimVector& v,
                             const DimVector& w, const std::vector<int>& I00,
                             Int depth);

// Stratum criterion at a Levi face (zeta_i = 0 exactly on I0): w - v an
// I0-dominant weight of V(w), with the degenerate exclusion v = 0 when
// I0 is everything on an affine graph of level 1.
bool levi_stratum_nonempty(const QuiverGraph& g, const DimVector& v,
                           const DimVector& w, const std::vector<int>& I0,
                           Int depth);

}  // namespace qvs
