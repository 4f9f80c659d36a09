#pragma once

// Dense linear algebra over the prime fields F_2 and F_3, sized for
// exhaustive small-dimension searches.  Subspaces are held in reduced
// row-echelon form so equality and containment are canonical.

#include <cstdint>
#include <vector>

#include "qvs/errors.hpp"
#include "qvs/numeric.hpp"

namespace qvs {

struct FqMat {
  int q = 2;
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> a;  // row-major

  FqMat() = default;
  FqMat(int q_, int r, int c) : q(q_), rows(r), cols(c), a(r * c, 0) {}

  uint8_t at(int i, int j) const { return a[i * cols + j]; }
  uint8_t& at(int i, int j) { return a[i * cols + j]; }

  bool operator==(const FqMat& o) const {
    return q == o.q && rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator<(const FqMat& o) const { return a < o.a; }
};

FqMat fq_identity(int q, int n);
FqMat fq_mul(const FqMat& x, const FqMat& y);
FqMat fq_add(const FqMat& x, const FqMat& y);
FqMat fq_neg(const FqMat& x);
// Reduced row echelon form with zero rows dropped.
FqMat fq_rref(const FqMat& x);
int fq_rank(const FqMat& x);
// Basis of the right kernel, as rows.
FqMat fq_kernel(const FqMat& x);
// Vertical stack.
FqMat fq_vstack(const FqMat& x, const FqMat& y);
// Row-span containment test (arguments need not be in RREF).
bool fq_span_contains(const FqMat& space, const FqMat& vectors);

// All subspaces of F_q^n as RREF basis matrices (0 x n for the zero
// space), ordered by dimension then lexicographically.
std::vector<FqMat> fq_subspaces(int q, int n);

// Is v a member of the row span?
bool fq_in_span(const FqMat& space, const std::vector<uint8_t>& v);

// Solve the change-of-coordinates: coordinates of each row of vecs in
// terms of the rows of basis (basis rows independent, vecs inside span).
FqMat fq_coordinates(const FqMat& basis, const FqMat& vecs);

// A complement basis: rows extending basis to all of F_q^n, expressed in
// the standard coordinates.
FqMat fq_complement(const FqMat& basis, int n);

}  // namespace qvs
