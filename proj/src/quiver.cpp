#include "qvs/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qvs {

DimVector dim_add(const DimVector& a, const DimVector& b) {
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

DimVector dim_sub(const DimVector& a, const DimVector& b) {
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

DimVector dim_scale(Int c, const DimVector& a) {
  DimVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool dim_leq(const DimVector& a, const DimVector& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool dim_nonneg(const DimVector& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x >= 0; });
}

bool dim_is_zero(const DimVector& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

Int dim_height(const DimVector& a) {
  return std::accumulate(a.begin(), a.end(), Int(0));
}

DimVector unit_vector(int n, int i) {
  DimVector r(n, 0);
  r[i] = 1;
  return r;
}

std::string dim_to_string(const DimVector& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

int QuiverGraph::vertex_index(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (labels[i] == label) return i;
  throw ParseError("unknown vertex label: " + label);
}

Int QuiverGraph::loops_at(int i) const {
  Int k = 0;
  for (const auto& e : edges)
    if (e.first == i && e.second == i) ++k;
  return k;
}

Int QuiverGraph::edges_between(int i, int j) const {
  Int k = 0;
  for (const auto& e : edges)
    if ((e.first == i && e.second == j) || (e.first == j && e.second == i))
      ++k;
  return k;
}

bool QuiverGraph::loop_free() const {
  for (const auto& e : edges)
    if (e.first == e.second) return false;
  return true;
}

void QuiverGraph::validate() const {
  for (const auto& e : edges) {
    if (e.first < 0 || e.first >= n() || e.second < 0 || e.second >= n())
      throw ParseError("edge endpoint out of range");
  }
  if (orientation && orientation->size() != edges.size())
    throw ParseError("orientation must cover every edge exactly once");
}

void CartanMatrix::validate() const {
  for (int i = 0; i < n(); ++i) {
    if (static_cast<int>(c[i].size()) != n())
      throw ConsistencyError("Cartan matrix is not square");
    if (c[i][i] > 2 || (c[i][i] - 2) % 2 != 0)
      throw ConsistencyError("diagonal entry must be 2 minus an even count");
    for (int j = 0; j < n(); ++j) {
      if (c[i][j] != c[j][i]) throw ConsistencyError("Cartan matrix not symmetric");
      if (i != j && c[i][j] > 0)
        throw ConsistencyError("off-diagonal entries must be nonpositive");
    }
  }
}

CartanMatrix cartan_from_graph(const QuiverGraph& g) {
  const int n = g.n();
  CartanMatrix C;
  C.c.assign(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) {
    C.c[i][i] = 2 - 2 * g.loops_at(i);
    for (int j = 0; j < n; ++j)
      if (i != j) C.c[i][j] = -g.edges_between(i, j);
  }
  C.validate();
  return C;
}

DimVector cartan_apply(const CartanMatrix& C, const DimVector& v) {
  const int n = C.n();
  DimVector r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += C.at(i, j) * v[j];
  return r;
}

Int cartan_pair(const CartanMatrix& C, const DimVector& x, const DimVector& y) {
  Int s = 0;
  for (int i = 0; i < C.n(); ++i)
    for (int j = 0; j < C.n(); ++j) s += x[i] * C.at(i, j) * y[j];
  return s;
}

Int p_value(const DimVector& x, const CartanMatrix& C) {
  const Int q = cartan_pair(C, x, x);
  if (q % 2 != 0) throw ConsistencyError("t(x)Cx is odd");
  return 1 - q / 2;
}

Int pairing(int i, const AffineWeight& wv, const CartanMatrix& C) {
  if (i < 0 || i >= C.n()) throw PreconditionError("vertex out of range");
  Int s = wv.framing[i];
  for (int j = 0; j < C.n(); ++j) s -= C.at(i, j) * wv.content[j];
  return s;
}

ExtendedQuiver extend_quiver(const QuiverGraph& g, const DimVector& w) {
  if (!dim_nonneg(w)) throw PreconditionError("framing vector must be nonnegative");
  ExtendedQuiver ext;
  ext.base = g;
  ext.framing = w;
  ext.result = g;
  const int inf = g.n();
  ext.result.labels.push_back("inf");
  for (int i = 0; i < g.n(); ++i)
    for (Int k = 0; k < w[i]; ++k) ext.result.edges.emplace_back(inf, i);
  ext.result.orientation.reset();
  return ext;
}

Int expected_dim(const DimVector& v, const DimVector& w,
                 const CartanMatrix& C) {
  if (dim_is_zero(w)) return 2 - cartan_pair(C, v, v);
  Int s = 0;
  for (int i = 0; i < C.n(); ++i) s += v[i] * 2 * w[i];
  return s - cartan_pair(C, v, v);
}

namespace {

// Determinant of an integer matrix, exact, by Bareiss fraction-free
// elimination.
BigInt int_det(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  int sign = 1;
  BigInt divisor = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / divisor;
      m[i][k] = 0;
    }
    divisor = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt principal_minor(const CartanMatrix& C, const std::vector<int>& idx) {
  std::vector<std::vector<BigInt>> m(idx.size(),
                                     std::vector<BigInt>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j)
      m[i][j] = C.at(idx[i], idx[j]);
  return int_det(std::move(m));
}

}  // namespace

bool is_finite_type(const CartanMatrix& C) {
  // Sylvester: positive definite iff all leading principal minors > 0.
  std::vector<int> idx;
  for (int k = 0; k < C.n(); ++k) {
    idx.push_back(k);
    if (principal_minor(C, idx) <= 0) return false;
  }
  return true;
}

bool is_affine_type(const CartanMatrix& C) {
  // Positive semidefinite (all principal minors >= 0) with 1-dimensional
  // kernel, i.e. det = 0 and some (n-1)-minor > 0.
  const int n = C.n();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) idx.push_back(k);
    if (principal_minor(C, idx) < 0) return false;
  }
  std::vector<int> all(n);
  for (int k = 0; k < n; ++k) all[k] = k;
  if (principal_minor(C, all) != 0) return false;
  std::vector<int> head(all.begin(), all.end() - 1);
  return principal_minor(C, head) > 0;
}

DimVector affine_delta(const CartanMatrix& C) {
  if (!is_affine_type(C))
    throw PreconditionError("graph is not of affine type");
  const int n = C.n();
  // Solve C x = 0 with x_0 = 1 over the rationals.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rat(C.at(i, j));
  // Pin x_0 = 1.
  for (int i = 0; i < n; ++i) m[i][n] = -m[i][0];
  // Gaussian elimination on columns 1..n-1.
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 1; col < n && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    const Rat p = m[row][col];
    for (int j = col; j <= n; ++j) m[row][j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (int j = col; j <= n; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  if (row != n - 1)
    throw PreconditionError("kernel dimension is not 1; graph rejected");
  std::vector<Rat> x(n, 0);
  x[0] = 1;
  for (int rr = 0; rr < row; ++rr) x[pivot_col_of_row[rr]] = m[rr][n];
  DimVector delta(n);
  for (int i = 0; i < n; ++i) {
    const BigInt num = boost::multiprecision::numerator(x[i]);
    const BigInt den = boost::multiprecision::denominator(x[i]);
    if (den != 1 || num <= 0)
      throw PreconditionError("kernel vector is not positive integral");
    delta[i] = static_cast<Int>(num);
  }
  return delta;
}

}  // namespace qvs
