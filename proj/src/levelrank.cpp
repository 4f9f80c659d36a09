#include "qvs/levelrank.hpp"

#include <algorithm>

namespace qvs {

namespace {

Int floordiv(Int a, Int b) {
  Int q = a / b, rem = a % b;
  return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

void GYD::validate() const {
  if (l < 1 || r < 1) throw PreconditionError("need l, r >= 1");
  if (static_cast<int>(parts.size()) != l)
    throw PreconditionError("diagram must have exactly l rows");
  for (int p = 0; p + 1 < l; ++p)
    if (parts[p] < parts[p + 1])
      throw PreconditionError("rows must be weakly decreasing");
  if (parts.front() - parts.back() > r)
    throw PreconditionError("level constraint lambda_1 - lambda_l <= r violated");
}

Int GYD::size() const {
  Int s = 0;
  for (Int x : parts) s += x;
  return s;
}

DimVector gyd_to_weight(const GYD& lam) {
  lam.validate();
  DimVector w(lam.l, 0);
  w[0] = lam.r - lam.parts.front() + lam.parts.back();
  for (int p = 1; p < lam.l; ++p) w[p] = lam.parts[p - 1] - lam.parts[p];
  return w;
}

MayaDiagram gyd_to_maya(const GYD& lam) {
  lam.validate();
  MayaDiagram m;
  m.l = lam.l;
  m.r = lam.r;
  for (int p = 1; p <= lam.l; ++p) {
    const Int lp = lam.parts[p - 1];
    for (int i = 1; i <= lam.r; ++i) {
      // filled iff r(t - 1) + i <= lambda_p with t = n + 1/2
      const Int tmax = floordiv(lp - i, lam.r) + 1;
      for (Int t = 1; t <= tmax; ++t)
        m.blackAbove.insert({Int(i), Int(p), t});
      for (Int t = tmax + 1; t <= 0; ++t)
        m.whiteBelow.insert({Int(i), Int(p), t});
    }
  }
  return m;
}

MayaDiagram maya_transpose(const MayaDiagram& m) {
  MayaDiagram t;
  t.l = m.r;
  t.r = m.l;
  for (const auto& s : m.blackAbove)
    t.blackAbove.insert({s[1], s[0], s[2]});
  for (const auto& s : m.whiteBelow)
    t.whiteBelow.insert({s[1], s[0], s[2]});
  return t;
}

GYD transpose(const GYD& lam) {
  lam.validate();
  GYD out;
  out.l = lam.r;
  out.r = lam.l;
  out.parts.resize(lam.r);
  // row i of the transposed diagram: number of filled sites above zero
  // minus empty sites below, which collapses to a floor sum
  for (int i = 1; i <= lam.r; ++i) {
    Int mu = 0;
    for (int p = 1; p <= lam.l; ++p)
      mu += floordiv(lam.parts[p - 1] - i, lam.r) + 1;
    out.parts[i - 1] = mu;
  }
  out.validate();
  return out;
}

Int charge(const MayaDiagram& m) {
  return static_cast<Int>(m.blackAbove.size()) -
         static_cast<Int>(m.whiteBelow.size());
}

Rat degree(const MayaDiagram& m) {
  // -sum over filled n>0 of n, plus sum over empty n<0 of n; n = t - 1/2
  Rat d = 0;
  for (const auto& s : m.blackAbove) d -= Rat(2 * s[2] - 1, 2);
  for (const auto& s : m.whiteBelow) d += Rat(2 * s[2] - 1, 2);
  return d;
}

GYD unique_mu_lift(const GYD& lam, const DimVector& muBarWeight) {
  lam.validate();
  if (static_cast<int>(muBarWeight.size()) != lam.l)
    throw PreconditionError("weight rank mismatch");
  Int level = 0;
  for (Int x : muBarWeight) {
    if (x < 0) throw PreconditionError("weight must be dominant");
    level += x;
  }
  if (level != lam.r) throw PreconditionError("weight level mismatch");
  GYD mu;
  mu.l = lam.l;
  mu.r = lam.r;
  mu.parts.assign(lam.l, 0);
  for (int p = lam.l - 2; p >= 0; --p)
    mu.parts[p] = mu.parts[p + 1] + muBarWeight[p + 1];
  const Int diff = lam.size() - mu.size();
  if (diff % lam.l != 0)
    throw PreconditionError("size congruence fails: not a weight of the module");
  const Int k = diff / lam.l;
  for (auto& x : mu.parts) x += k;
  mu.validate();
  return mu;
}

QuiverGraph cycle_graph(int n) {
  if (n < 2) throw PreconditionError("cycle needs at least 2 vertices");
  QuiverGraph g;
  for (int i = 0; i < n; ++i) g.labels.push_back(std::to_string(i));
  if (n == 2) {
    g.edges = {{0, 1}, {0, 1}};
  } else {
    for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  }
  return g;
}

namespace {

// Solve C x = target with x[0] pinned, exactly; nullopt when there is
// no integral solution.
std::optional<DimVector> solve_content(const CartanMatrix& C,
                                       const DimVector& target, Int pin0) {
  const int n = C.n();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, 0));
  std::vector<Rat> rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs[i] = Rat(target[i]) - Rat(C.at(i, 0) * pin0);
    for (int j = 1; j < n; ++j) m[i][j - 1] = Rat(C.at(i, j));
  }
  // Gaussian elimination on n-1 unknowns with n equations.
  std::vector<Rat> x(n - 1, 0);
  std::vector<int> pivRow;
  int row = 0;
  std::vector<int> pivCol;
  for (int col = 0; col < n - 1 && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    std::swap(rhs[piv], rhs[row]);
    const Rat p = m[row][col];
    for (int j = col; j < n - 1; ++j) m[row][j] /= p;
    rhs[row] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (int j = col; j < n - 1; ++j) m[i][j] -= f * m[row][j];
      rhs[i] -= f * rhs[row];
    }
    pivCol.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivCol.size()) != n - 1) return std::nullopt;
  for (int i = row; i < n; ++i)
    if (rhs[i] != 0) return std::nullopt;  // inconsistent
  for (int rr = 0; rr < n - 1; ++rr) x[pivCol[rr]] = rhs[rr];
  DimVector out(n);
  out[0] = pin0;
  for (int j = 1; j < n; ++j) {
    const BigInt num = boost::multiprecision::numerator(x[j - 1]);
    const BigInt den = boost::multiprecision::denominator(x[j - 1]);
    if (den != 1) return std::nullopt;
    out[j] = static_cast<Int>(num);
  }
  return out;
}

std::map<DimVector, BigInt> product_character(const WeightMultTable& t1,
                                              const WeightMultTable& t2,
                                              Int depth) {
  std::map<DimVector, BigInt> prod;
  for (const auto& [u, mu] : t1.mults) {
    if (dim_height(u) > depth) continue;
    for (const auto& [v, mv] : t2.mults) {
      if (dim_height(u) + dim_height(v) > depth) continue;
      prod[dim_add(u, v)] += mu * mv;
    }
  }
  return prod;
}

}  // namespace

std::map<DimVector, BigInt> decompose_tensor(const CartanMatrix& C,
                                             const DimVector& w1,
                                             const DimVector& w2, Int depth) {
  const WeightMultTable t1 = freudenthal(w1, C, depth);
  const WeightMultTable t2 = freudenthal(w2, C, depth);
  std::map<DimVector, BigInt> residual = product_character(t1, t2, depth);
  const DimVector wSum = dim_add(w1, w2);

  // process contents by height, peeling full characters at dominant heads
  std::vector<DimVector> order;
  for (const auto& [v, c] : residual) order.push_back(v);
  std::sort(order.begin(), order.end(), [](const DimVector& a, const DimVector& b) {
    const Int ha = dim_height(a), hb = dim_height(b);
    return ha != hb ? ha < hb : a < b;
  });

  std::map<DimVector, BigInt> heads;
  for (const auto& v : order) {
    const BigInt c = residual[v];
    if (c == 0) continue;
    const DimVector wHead = dim_sub(wSum, cartan_apply(C, v));
    const bool dominant = dim_nonneg(wHead);
    if (!dominant) {
      if (c != 0)
        throw ConsistencyError(
            "nonzero residual at a non-dominant weight during branching");
      continue;
    }
    if (c < 0) throw ConsistencyError("negative branching multiplicity");
    heads[v] = c;
    const WeightMultTable th = freudenthal(wHead, C, depth - dim_height(v));
    for (const auto& [u, mu] : th.mults) {
      const DimVector vu = dim_add(v, u);
      if (dim_height(vu) > depth) continue;
      residual[vu] -= c * mu;
    }
  }
  return heads;
}

DualityReport duality_dims(const GYD& lam, const DimVector& vX, Int depth) {
  lam.validate();
  if (lam.l < 2 || lam.r < 2)
    throw PreconditionError("need l, r >= 2");
  if (!dim_nonneg(vX) || static_cast<int>(vX.size()) != lam.l)
    throw PreconditionError("content vector must be nonnegative of rank l");
  if (dim_height(vX) > depth)
    throw DepthInconclusiveError("content exceeds depth");

  const QuiverGraph gX = cycle_graph(lam.l);
  const CartanMatrix CX = cartan_from_graph(gX);
  const DimVector wLam = gyd_to_weight(lam);

  // dominance of the target weight
  const DimVector muW = dim_sub(wLam, cartan_apply(CX, vX));
  if (!dim_nonneg(muW))
    throw PreconditionError("target weight must be dominant");

  DualityReport rep;

  // weight-multiplicity side
  const WeightMultTable tab = freudenthal(wLam, CX, depth);
  rep.lhsDim = tab.at(vX);

  // tensor-Hom side
  const GYD mu = unique_mu_lift(lam, muW);
  const GYD tlam = transpose(lam);
  const Rat dLam = degree(gyd_to_maya(lam));
  const Rat dMu = degree(gyd_to_maya(mu));

  rep.t = Rat(-vX[0]) - dMu;
  // degree relation: <dX, lam - mu> = -<dY, tlam + t delta> + d(M(lam))
  // - d(M(mu)) with the canonical lifts <dX, lam> = 0 and
  // <dY, tlam> = d(M(lam)).
  const Rat lhsRel = Rat(vX[0]);
  const Rat rhsRel = -(dLam + rep.t) + dLam - dMu;
  rep.degreeRelationHolds = lhsRel == rhsRel;

  std::vector<int> residues;
  for (int p = 0; p < lam.l; ++p) {
    Int res = mu.parts[p] % lam.r;
    if (res < 0) res += lam.r;
    residues.push_back(static_cast<int>(res));
  }

  // classical content on the rank-r side
  const QuiverGraph gY = cycle_graph(lam.r);
  const CartanMatrix CY = cartan_from_graph(gY);
  const DimVector wT = gyd_to_weight(tlam);
  DimVector target(lam.r, 0);
  for (int res : residues) ++target[res];
  for (int j = 0; j < lam.r; ++j) target[j] -= wT[j];

  const Rat slice = Rat(vX[0]) + dMu - dLam;
  const BigInt sliceNum = boost::multiprecision::numerator(slice);
  const BigInt sliceDen = boost::multiprecision::denominator(slice);
  if (sliceDen != 1)
    throw ConsistencyError("degree slice is not integral");
  const Int T = static_cast<Int>(sliceNum);

  const auto sol = solve_content(CY, target, 0);
  if (!sol) {
    rep.rhsDim = 0;
    return rep;
  }
  DimVector vTotal = *sol;
  for (auto& x : vTotal) x += T;
  if (!dim_nonneg(vTotal)) {
    rep.rhsDim = 0;
    return rep;
  }
  if (dim_height(vTotal) > depth)
    throw DepthInconclusiveError("dual-side content exceeds depth");
  rep.rhsDim = mv_count(lam.r, residues, vTotal, depth);
  return rep;
}

BigInt tensor_multiplicity(const GYD& lam, const GYD& lam1, const GYD& lam2,
                           Int depth) {
  lam.validate();
  lam1.validate();
  lam2.validate();
  if (lam.l != lam1.l || lam.l != lam2.l)
    throw PreconditionError("row counts must agree");
  if (lam.r != lam1.r + lam2.r)
    throw PreconditionError("levels must satisfy r = r1 + r2");
  if (lam.size() != lam1.size() + lam2.size()) return 0;

  // With the canonical per-Fock lifts the sought copies sit at the
  // product-relative depth with vanishing 0-content; the Maya degree
  // difference locates the dual-side depth and must be integral for
  // size-matched triples.
  const Rat slice = degree(gyd_to_maya(lam)) - degree(gyd_to_maya(lam1)) -
                    degree(gyd_to_maya(lam2));
  if (boost::multiprecision::denominator(slice) != 1)
    throw ConsistencyError("degree bookkeeping is not integral");

  const QuiverGraph g = cycle_graph(lam.l);
  const CartanMatrix C = cartan_from_graph(g);
  const DimVector w = gyd_to_weight(lam);
  const DimVector w1 = gyd_to_weight(lam1);
  const DimVector w2 = gyd_to_weight(lam2);

  const DimVector target = dim_sub(dim_add(w1, w2), w);
  const auto sol = solve_content(C, target, 0);
  if (!sol || !dim_nonneg(*sol)) return 0;
  if (dim_height(*sol) > depth)
    throw DepthInconclusiveError("tensor content exceeds depth");

  const auto heads = decompose_tensor(C, w1, w2, depth);
  auto it = heads.find(*sol);
  return it == heads.end() ? BigInt(0) : it->second;
}

}  // namespace qvs
