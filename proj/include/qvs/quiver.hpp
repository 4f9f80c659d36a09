#pragma once

// Graphs, Cartan matrices, dimension vectors and weight pairings.
// Vertices carry string labels; everything numeric is exact.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qvs/errors.hpp"
#include "qvs/numeric.hpp"

namespace qvs {

using DimVector = std::vector<Int>;

DimVector dim_add(const DimVector& a, const DimVector& b);
DimVector dim_sub(const DimVector& a, const DimVector& b);
DimVector dim_scale(Int c, const DimVector& a);
bool dim_leq(const DimVector& a, const DimVector& b);  // componentwise
bool dim_nonneg(const DimVector& a);
bool dim_is_zero(const DimVector& a);
Int dim_height(const DimVector& a);  // sum of entries
DimVector unit_vector(int n, int i);
std::string dim_to_string(const DimVector& a);

struct QuiverGraph {
  std::vector<std::string> labels;
  // Unordered edges as index pairs; repetition encodes multiplicity and
  // an equal pair is a loop.
  std::vector<std::pair<int, int>> edges;
  // Optional orientation: oriented[e] true means edges[e].first ->
  // edges[e].second, false the reverse.  Absent = orient as stored.
  std::optional<std::vector<bool>> orientation;

  int n() const { return static_cast<int>(labels.size()); }
  int vertex_index(const std::string& label) const;
  Int loops_at(int i) const;
  Int edges_between(int i, int j) const;
  bool loop_free() const;
  void validate() const;
};

struct CartanMatrix {
  std::vector<std::vector<Int>> c;

  int n() const { return static_cast<int>(c.size()); }
  Int at(int i, int j) const { return c[i][j]; }
  void validate() const;
};

CartanMatrix cartan_from_graph(const QuiverGraph& g);

// C * v
DimVector cartan_apply(const CartanMatrix& C, const DimVector& v);
// t(x) C y
Int cartan_pair(const CartanMatrix& C, const DimVector& x, const DimVector& y);

// p(x) = 1 - (1/2) t(x) C x.  Integral for Cartan matrices coming from
// graphs (even diagonal offsets).
Int p_value(const DimVector& x, const CartanMatrix& C);

// Weight w - v carried as a (framing, content) pair of coefficient
// vectors plus an explicit degree shift when one is tracked separately.
struct AffineWeight {
  DimVector framing;   // coefficients of the fundamental weights
  DimVector content;   // coefficients of the simple roots subtracted
  Rat extraDegree = 0;

  bool operator==(const AffineWeight& o) const {
    return framing == o.framing && content == o.content &&
           extraDegree == o.extraDegree;
  }
};

// <h_i, w - v> = w_i - (Cv)_i
Int pairing(int i, const AffineWeight& wv, const CartanMatrix& C);

struct ExtendedQuiver {
  QuiverGraph base;
  DimVector framing;
  QuiverGraph result;  // vertices of base plus a final framing vertex
};

// Adds a new vertex joined to vertex i by w_i edges.  The new vertex is
// the last index of the resulting graph.
ExtendedQuiver extend_quiver(const QuiverGraph& g, const DimVector& w);

// Expected dimension of the smooth stable locus: t(v)(2w - Cv) when
// w != 0, else 2 - t(v)Cv.
Int expected_dim(const DimVector& v, const DimVector& w,
                 const CartanMatrix& C);

// Exact type detection via principal minors.
bool is_finite_type(const CartanMatrix& C);
bool is_affine_type(const CartanMatrix& C);

// The primitive kernel vector of an affine Cartan matrix, normalized so
// the 0-entry equals 1.  Throws PreconditionError if the matrix is not
// affine (kernel dimension != 1) or the normalized vector is not a
// positive integer vector.
DimVector affine_delta(const CartanMatrix& C);

}  // namespace qvs
