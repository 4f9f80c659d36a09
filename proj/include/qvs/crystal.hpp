#pragma once

// Affine type-A crystal combinatorics: level-1 crystals realized on
// r-regular colored partitions, tensor products with one-element weight
// shifts per factor, restriction to a subset of residues, and counting
// of fully-highest-weight elements.

#include <optional>
#include <vector>

#include "qvs/errors.hpp"
#include "qvs/quiver.hpp"

namespace qvs {

// An element of the level-1 crystal with highest weight at residue
// residueShift: an r-regular partition (no part repeated rank times or
// more) whose box (row k, col c) carries residue (c - k + shift) mod r.
struct ColoredPartition {
  std::vector<Int> parts;  // weakly decreasing, positive
  int residueShift = 0;
  int rank = 2;

  bool operator==(const ColoredPartition& o) const {
    return parts == o.parts && residueShift == o.residueShift &&
           rank == o.rank;
  }
  bool operator<(const ColoredPartition& o) const { return parts < o.parts; }

  Int boxes() const;
  DimVector content() const;  // residue counts, size = rank
  void validate() const;
};

// Single-partition crystal statistics and operators for residue i.
Int cp_epsilon(const ColoredPartition& p, int i);
Int cp_phi(const ColoredPartition& p, int i);
std::optional<ColoredPartition> cp_e(const ColoredPartition& p, int i);
std::optional<ColoredPartition> cp_f(const ColoredPartition& p, int i);

// All elements with at most depth boxes, generated from the empty
// partition; per-weight counts match the weight multiplicities of the
// level-1 module.
std::vector<ColoredPartition> crystal_b_lambda(int r, int i0, Int depth);

struct TensorElement {
  std::vector<ColoredPartition> factors;
  std::vector<std::vector<Int>> fockShifts;  // one partition per factor

  bool operator==(const TensorElement& o) const {
    return factors == o.factors && fockShifts == o.fockShifts;
  }
  bool operator<(const TensorElement& o) const;
  Int fockTotal() const;
};

struct CrystalWeight {
  Int level = 0;
  DimVector alphaContent;   // pure crystal content, no shift
  Int extraDeltaShift = 0;  // total weight additionally lowered by n delta

  bool operator==(const CrystalWeight& o) const {
    return level == o.level && alphaContent == o.alphaContent &&
           extraDeltaShift == o.extraDeltaShift;
  }
};

CrystalWeight tensor_weight(const TensorElement& t);
// Content including the delta shifts (delta = all-ones in type A).
DimVector tensor_total_content(const TensorElement& t);

enum class CrystalDir { e, f };

Int tensor_epsilon(const TensorElement& t, int i);
Int tensor_phi(const TensorElement& t, int i);
std::optional<TensorElement> kashiwara(const TensorElement& t, int i,
                                       CrystalDir dir);

// All tensor elements (with shift records) of total content height at
// most depth, in canonical order.
std::vector<TensorElement> tensor_crystal(int r,
                                          const std::vector<int>& residues,
                                          Int depth);

// Elements killed by e_i for every i in I0, paired with their weights.
std::vector<std::pair<TensorElement, CrystalWeight>> levi_highest(
    int r, const std::vector<int>& residues, Int depth,
    const std::vector<int>& I0);

// Number of fully-highest-weight elements of total content v, counting
// one representative per family of whole-component weight shifts; this
// is the tensor Hom multiplicity on the level-(number of factors) side.
BigInt mv_count(int r, const std::vector<int>& residues, const DimVector& v,
                Int depth);

// Highest-weight count of the plain tensor product (no shift records)
// at exact content v; helper for mv_count and the duality check.
BigInt hw_count_plain(int r, const std::vector<int>& residues,
                      const DimVector& v);

}  // namespace qvs
