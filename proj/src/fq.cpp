#include "qvs/fq.hpp"

#include <algorithm>
#include <numeric>

namespace qvs {

namespace {
inline uint8_t inv_mod(int q, uint8_t x) {
  // q is 2 or 3; inverse of nonzero x
  return q == 2 ? 1 : x;  // in F_3,exponent 1*1=1, 2*2=4=1
}
}  // namespace

FqMat fq_identity(int q, int n) {
  FqMat m(q, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMat fq_mul(const FqMat& x, const FqMat& y) {
  if (x.cols != y.rows || x.q != y.q)
    throw ConsistencyError("matrix shape mismatch in fq_mul");
  FqMat r(x.q, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const int xv = x.at(i, k);
      if (!xv) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = static_cast<uint8_t>((r.at(i, j) + xv * y.at(k, j)) % x.q);
    }
  return r;
}

FqMat fq_add(const FqMat& x, const FqMat& y) {
  if (x.rows != y.rows || x.cols != y.cols || x.q != y.q)
    throw ConsistencyError("matrix shape mismatch in fq_add");
  FqMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i)
    r.a[i] = static_cast<uint8_t>((r.a[i] + y.a[i]) % x.q);
  return r;
}

FqMat fq_neg(const FqMat& x) {
  FqMat r = x;
  for (auto& v : r.a) v = static_cast<uint8_t>((x.q - v) % x.q);
  return r;
}

FqMat fq_rref(const FqMat& x) {
  FqMat m = x;
  int row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    const uint8_t inv = inv_mod(m.q, m.at(row, col));
    for (int j = 0; j < m.cols; ++j)
      m.at(row, j) = static_cast<uint8_t>(m.at(row, j) * inv % m.q);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || !m.at(i, col)) continue;
      const int f = m.at(i, col);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = static_cast<uint8_t>(
            (m.at(i, j) + (m.q - f) * m.at(row, j)) % m.q);
    }
    pivots.push_back(col);
    ++row;
  }
  FqMat out(m.q, row, m.cols);
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

int fq_rank(const FqMat& x) { return fq_rref(x).rows; }

FqMat fq_kernel(const FqMat& x) {
  const FqMat r = fq_rref(x);
  std::vector<int> pivots;
  std::vector<bool> is_pivot(x.cols, false);
  for (int i = 0; i < r.rows; ++i)
    for (int j = 0; j < r.cols; ++j)
      if (r.at(i, j)) {
        pivots.push_back(j);
        is_pivot[j] = true;
        break;
      }
  FqMat out(x.q, 0, x.cols);
  for (int freec = 0; freec < x.cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<uint8_t> v(x.cols, 0);
    v[freec] = 1;
    for (int i = 0; i < r.rows; ++i)
      v[pivots[i]] = static_cast<uint8_t>((x.q - r.at(i, freec)) % x.q);
    out.a.insert(out.a.end(), v.begin(), v.end());
    ++out.rows;
  }
  return out;
}

FqMat fq_vstack(const FqMat& x, const FqMat& y) {
  if (x.cols != y.cols || x.q != y.q)
    throw ConsistencyError("matrix shape mismatch in fq_vstack");
  FqMat r(x.q, x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), r.a.begin());
  std::copy(y.a.begin(), y.a.end(), r.a.begin() + x.a.size());
  return r;
}

bool fq_span_contains(const FqMat& space, const FqMat& vectors) {
  if (vectors.rows == 0) return true;
  return fq_rank(fq_vstack(space, vectors)) == fq_rank(space);
}

std::vector<FqMat> fq_subspaces(int q, int n) {
  // Enumerate RREF matrices: choose pivot columns, then fill free
  // entries (row i, column j) with j > pivot_i and j not a pivot.
  std::vector<FqMat> out;
  out.emplace_back(q, 0, n);  // zero subspace
  for (int k = 1; k <= n; ++k) {
    std::vector<int> piv(k);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
      // free positions
      std::vector<std::pair<int, int>> free_pos;
      std::vector<bool> is_pivot(n, false);
      for (int c : piv) is_pivot[c] = true;
      for (int i = 0; i < k; ++i)
        for (int j = piv[i] + 1; j < n; ++j)
          if (!is_pivot[j]) free_pos.emplace_back(i, j);
      long long count = 1;
      for (size_t t = 0; t < free_pos.size(); ++t) count *= q;
      for (long long code = 0; code < count; ++code) {
        FqMat m(q, k, n);
        for (int i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
        long long c = code;
        for (const auto& [i, j] : free_pos) {
          m.at(i, j) = static_cast<uint8_t>(c % q);
          c /= q;
        }
        out.push_back(std::move(m));
      }
      // next pivot combination
      int t = k - 1;
      while (t >= 0 && piv[t] == n - k + t) --t;
      if (t < 0) break;
      ++piv[t];
      for (int s = t + 1; s < k; ++s) piv[s] = piv[s - 1] + 1;
    }
  }
  return out;
}

bool fq_in_span(const FqMat& space, const std::vector<uint8_t>& v) {
  FqMat one(space.q, 1, space.cols);
  one.a = v;
  return fq_span_contains(space, one);
}

FqMat fq_coordinates(const FqMat& basis, const FqMat& vecs) {
  // Solve x * basis = vecs row by row via elimination on [basis^T | vecs^T].
  const int q = basis.q;
  const int n = basis.cols;
  FqMat aug(q, n, basis.rows + vecs.rows);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < basis.rows; ++i) aug.at(j, i) = basis.at(i, j);
    for (int i = 0; i < vecs.rows; ++i)
      aug.at(j, basis.rows + i) = vecs.at(i, j);
  }
  const FqMat r = fq_rref(aug);
  FqMat coords(q, vecs.rows, basis.rows);
  for (int i = 0; i < r.rows; ++i) {
    int pivcol = -1;
    for (int j = 0; j < r.cols; ++j)
      if (r.at(i, j)) {
        pivcol = j;
        break;
      }
    if (pivcol < 0) continue;
    if (pivcol >= basis.rows)
      throw ConsistencyError("vector outside span in fq_coordinates");
    for (int v = 0; v < vecs.rows; ++v)
      coords.at(v, pivcol) = r.at(i, basis.rows + v);
  }
  return coords;
}

FqMat fq_complement(const FqMat& basis, int n) {
  FqMat cur = fq_rref(basis);
  FqMat out(basis.q, 0, n);
  for (int j = 0; j < n; ++j) {
    std::vector<uint8_t> e(n, 0);
    e[j] = 1;
    if (!fq_in_span(cur, e)) {
      FqMat one(basis.q, 1, n);
      one.a = e;
      cur = fq_rref(fq_vstack(cur, one));
      out = fq_vstack(out, one);
    }
  }
  return out;
}

}  // namespace qvs
