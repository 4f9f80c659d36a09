#include "qvs/modrep.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qvs {

std::vector<Arrow> arrows_of(const QuiverGraph& g) {
  std::vector<Arrow> out;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    int u = g.edges[e].first, v = g.edges[e].second;
    if (g.orientation && !(*g.orientation)[e]) std::swap(u, v);
    out.push_back({u, v, +1});
    out.push_back({v, u, -1});
  }
  return out;
}

void GradedModule::validate_shapes() const {
  const auto arrows = arrows_of(graph);
  if (B.size() != arrows.size())
    throw ConsistencyError("arrow matrix count mismatch");
  for (size_t h = 0; h < arrows.size(); ++h) {
    if (B[h].rows != vDims[arrows[h].from] || B[h].cols != vDims[arrows[h].to])
      throw ConsistencyError("arrow matrix shape mismatch");
  }
  for (int i = 0; i < graph.n(); ++i) {
    if (a[i].rows != wDims[i] || a[i].cols != vDims[i])
      throw ConsistencyError("framing-in matrix shape mismatch");
    if (b[i].rows != vDims[i] || b[i].cols != wDims[i])
      throw ConsistencyError("framing-out matrix shape mismatch");
  }
}

std::vector<FqMat> moment_map(const GradedModule& m) {
  const auto arrows = arrows_of(m.graph);
  std::vector<FqMat> mu;
  for (int i = 0; i < m.graph.n(); ++i) {
    FqMat acc(m.q, static_cast<int>(m.vDims[i]), static_cast<int>(m.vDims[i]));
    for (size_t h = 0; h < arrows.size(); ++h) {
      if (arrows[h].to != i) continue;
      const size_t hbar = h ^ 1;
      // eps(h) B_h B_hbar acting V_i -> V_i; with maps written as
      // row-action matrices the composite is M[hbar] * M[h].
      FqMat term = fq_mul(m.B[hbar], m.B[h]);
      if (arrows[h].sign < 0) term = fq_neg(term);
      acc = fq_add(acc, term);
    }
    acc = fq_add(acc, fq_mul(m.b[i], m.a[i]));
    mu.push_back(std::move(acc));
  }
  return mu;
}

bool moment_vanishes(const GradedModule& m) {
  for (const auto& mu : moment_map(m))
    for (uint8_t x : mu.a)
      if (x) return false;
  return true;
}

GradedModule with_moment_checked(const GradedModule& m) {
  if (!moment_vanishes(m))
    throw PreconditionError("moment map does not vanish");
  GradedModule out = m;
  out.momentChecked = true;
  return out;
}

GradedModule random_module(const QuiverGraph& g, const DimVector& v,
                           const DimVector& w, int q, std::mt19937_64& rng) {
  GradedModule m;
  m.graph = g;
  m.vDims = v;
  m.wDims = w;
  m.q = q;
  auto fill = [&](FqMat& mat) {
    for (auto& x : mat.a) x = static_cast<uint8_t>(rng() % q);
  };
  for (const auto& arr : arrows_of(g)) {
    FqMat mat(q, static_cast<int>(v[arr.from]), static_cast<int>(v[arr.to]));
    fill(mat);
    m.B.push_back(std::move(mat));
  }
  for (int i = 0; i < g.n(); ++i) {
    FqMat ai(q, static_cast<int>(w[i]), static_cast<int>(v[i]));
    FqMat bi(q, static_cast<int>(v[i]), static_cast<int>(w[i]));
    fill(ai);
    fill(bi);
    m.a.push_back(std::move(ai));
    m.b.push_back(std::move(bi));
  }
  return m;
}

namespace {

bool graded_b_invariant(const GradedModule& m,
                        const std::vector<FqMat>& basis) {
  const auto arrows = arrows_of(m.graph);
  for (size_t h = 0; h < arrows.size(); ++h) {
    const FqMat img = fq_mul(basis[arrows[h].from], m.B[h]);
    if (!fq_span_contains(basis[arrows[h].to], img)) return false;
  }
  return true;
}

bool inside_ker_b(const GradedModule& m, const std::vector<FqMat>& basis) {
  for (int i = 0; i < m.graph.n(); ++i) {
    const FqMat img = fq_mul(basis[i], m.b[i]);
    for (const auto& x : img.a)
      if (x) return false;
  }
  return true;
}

bool contains_im_a(const GradedModule& m, const std::vector<FqMat>& basis) {
  for (int i = 0; i < m.graph.n(); ++i)
    if (!fq_span_contains(basis[i], m.a[i])) return false;
  return true;
}

bool graded_zero(const std::vector<FqMat>& basis) {
  for (const auto& b : basis)
    if (b.rows) return false;
  return true;
}

bool sub_contained(const Submodule& s, const Submodule& t) {
  if (s.withW && !t.withW) return false;
  for (size_t i = 0; i < s.basis.size(); ++i)
    if (!fq_span_contains(t.basis[i], s.basis[i])) return false;
  return true;
}

}  // namespace

std::vector<Submodule> enumerate_submodules(const GradedModule& m) {
  const int n = m.graph.n();
  std::vector<std::vector<FqMat>> per_vertex;
  long long budget = 1;
  for (int i = 0; i < n; ++i) {
    per_vertex.push_back(fq_subspaces(m.q, static_cast<int>(m.vDims[i])));
    budget *= static_cast<long long>(per_vertex.back().size());
    if (budget > 1000000)
      throw BudgetError("graded-subspace enumeration budget exceeded");
  }
  const bool hasW = !dim_is_zero(m.wDims);

  std::vector<Submodule> out;
  std::vector<FqMat> cur(n);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      if (!graded_b_invariant(m, cur)) return;
      const bool zero = graded_zero(cur);
      if (!hasW) {
        if (!zero) out.push_back({cur, false});
        return;
      }
      if (!zero && inside_ker_b(m, cur)) out.push_back({cur, false});
      if (contains_im_a(m, cur)) out.push_back({cur, true});
      return;
    }
    for (const auto& s : per_vertex[pos]) {
      cur[pos] = s;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

Rat submodule_slope(const StabilityParam& zt, const Submodule& s) {
  return slope(zt, s.dims(), s.withW);
}

bool is_whole(const GradedModule& m, const Submodule& s, bool hasW) {
  return s.withW == hasW && s.dims() == m.vDims;
}

}  // namespace

Verdict stability_verdict(const GradedModule& m, const StabilityParam& zt) {
  const bool hasW = !dim_is_zero(m.wDims);
  const Rat total = slope(zt, m.vDims, hasW);
  bool strictly = false;
  for (const auto& s : enumerate_submodules(m)) {
    if (is_whole(m, s, hasW)) continue;
    const Rat sl = submodule_slope(zt, s);
    if (sl > total) return Verdict::unstable;
    if (sl == total) strictly = true;
  }
  return strictly ? Verdict::strictlySemistable : Verdict::stable;
}

GradedModule restrict_module(const GradedModule& m,
                             const std::vector<FqMat>& basis, bool withW) {
  const auto arrows = arrows_of(m.graph);
  GradedModule r;
  r.graph = m.graph;
  r.q = m.q;
  for (const auto& bm : basis) r.vDims.push_back(bm.rows);
  r.wDims = withW ? m.wDims : DimVector(m.graph.n(), 0);
  for (size_t h = 0; h < arrows.size(); ++h) {
    const FqMat img = fq_mul(basis[arrows[h].from], m.B[h]);
    r.B.push_back(fq_coordinates(basis[arrows[h].to], img));
  }
  for (int i = 0; i < m.graph.n(); ++i) {
    if (withW) {
      r.a.push_back(fq_coordinates(basis[i], m.a[i]));
      r.b.push_back(fq_mul(basis[i], m.b[i]));
    } else {
      r.a.push_back(FqMat(m.q, 0, basis[i].rows));
      r.b.push_back(FqMat(m.q, basis[i].rows, 0));
    }
  }
  return r;
}

GradedModule quotient_module(const GradedModule& m,
                             const std::vector<FqMat>& basis, bool keepW) {
  const int n = m.graph.n();
  const auto arrows = arrows_of(m.graph);
  // complement lifts and projections
  std::vector<FqMat> lift(n), full(n);
  for (int i = 0; i < n; ++i) {
    lift[i] = fq_complement(basis[i], static_cast<int>(m.vDims[i]));
    full[i] = fq_vstack(fq_rref(basis[i]), lift[i]);
  }
  auto project = [&](int i, const FqMat& vecs) {
    // coordinates in basis+lift, keep the lift block
    const FqMat co = fq_coordinates(full[i], vecs);
    FqMat out(m.q, vecs.rows, lift[i].rows);
    const int off = fq_rref(basis[i]).rows;
    for (int r = 0; r < vecs.rows; ++r)
      for (int c = 0; c < lift[i].rows; ++c) out.at(r, c) = co.at(r, off + c);
    return out;
  };
  GradedModule qm;
  qm.graph = m.graph;
  qm.q = m.q;
  for (int i = 0; i < n; ++i) qm.vDims.push_back(lift[i].rows);
  qm.wDims = keepW ? m.wDims : DimVector(n, 0);
  for (size_t h = 0; h < arrows.size(); ++h) {
    const FqMat img = fq_mul(lift[arrows[h].from], m.B[h]);
    qm.B.push_back(project(arrows[h].to, img));
  }
  for (int i = 0; i < n; ++i) {
    if (keepW) {
      qm.a.push_back(project(i, m.a[i]));
      qm.b.push_back(fq_mul(lift[i], m.b[i]));
    } else {
      qm.a.push_back(FqMat(m.q, 0, lift[i].rows));
      qm.b.push_back(FqMat(m.q, lift[i].rows, 0));
    }
  }
  return qm;
}

namespace {

// Maximal destabilizing submodule: maximal slope, then the unique
// containment-maximal candidate among that slope.
Submodule max_destabilizer(const StabilityParam& zt,
                           const std::vector<Submodule>& subs) {
  Rat best;
  bool first = true;
  for (const auto& s : subs) {
    const Rat sl = submodule_slope(zt, s);
    if (first || sl > best) {
      best = sl;
      first = false;
    }
  }
  std::vector<const Submodule*> top;
  for (const auto& s : subs)
    if (submodule_slope(zt, s) == best) top.push_back(&s);
  for (const Submodule* cand : top) {
    bool contains_all = true;
    for (const Submodule* other : top)
      if (!sub_contained(*other, *cand)) {
        contains_all = false;
        break;
      }
    if (contains_all) return *cand;
  }
  throw ConsistencyError("no maximal element among max-slope submodules");
}

std::vector<FqMat> pullback(const std::vector<FqMat>& subBasis,
                            const std::vector<FqMat>& lift,
                            const std::vector<FqMat>& quotientSpace) {
  // preimage of a quotient subspace: sub + (quotient rows expressed
  // through the lift)
  std::vector<FqMat> out;
  for (size_t i = 0; i < subBasis.size(); ++i) {
    FqMat up = quotientSpace[i].rows
                   ? fq_mul(quotientSpace[i], lift[i])
                   : FqMat(subBasis[i].q, 0, subBasis[i].cols);
    out.push_back(fq_rref(fq_vstack(subBasis[i], up)));
  }
  return out;
}

}  // namespace

HNFiltration hn_filtration(const GradedModule& m, const StabilityParam& zt) {
  const bool hasW = !dim_is_zero(m.wDims);
  HNFiltration hn;
  const auto subs = enumerate_submodules(m);
  if (subs.empty()) {  // zero module, empty flag
    hn.flag.push_back({});
    for (int i = 0; i < m.graph.n(); ++i)
      hn.flag.back().push_back(FqMat(m.q, 0, static_cast<int>(m.vDims[i])));
    hn.kW = 0;
    return hn;
  }
  const Submodule dest = max_destabilizer(zt, subs);
  std::vector<FqMat> destBasis;
  for (int i = 0; i < m.graph.n(); ++i) destBasis.push_back(fq_rref(dest.basis[i]));

  std::vector<FqMat> whole;
  for (int i = 0; i < m.graph.n(); ++i)
    whole.push_back(fq_rref(fq_identity(m.q, static_cast<int>(m.vDims[i]))));

  if (is_whole(m, dest, hasW)) {
    // semistable: trivial flag V > 0
    std::vector<FqMat> zero;
    for (int i = 0; i < m.graph.n(); ++i)
      zero.push_back(FqMat(m.q, 0, static_cast<int>(m.vDims[i])));
    hn.flag = {whole, zero};
    hn.kW = 0;
    hn.grSlopes = {slope(zt, m.vDims, hasW)};
    hn.grDims = {m.vDims};
    return hn;
  }

  // recurse on the quotient, then pull its flag back
  std::vector<FqMat> lift(m.graph.n());
  for (int i = 0; i < m.graph.n(); ++i)
    lift[i] = fq_complement(destBasis[i], static_cast<int>(m.vDims[i]));
  const GradedModule qm = quotient_module(m, destBasis, !dest.withW);
  const HNFiltration sub = hn_filtration(qm, zt);

  for (const auto& level : sub.flag)
    hn.flag.push_back(pullback(destBasis, lift, level));
  hn.flag.push_back([&] {
    std::vector<FqMat> zero;
    for (int i = 0; i < m.graph.n(); ++i)
      zero.push_back(FqMat(m.q, 0, static_cast<int>(m.vDims[i])));
    return zero;
  }());
  hn.kW = dest.withW ? static_cast<Int>(sub.grSlopes.size()) : sub.kW;
  hn.grSlopes = sub.grSlopes;
  hn.grSlopes.push_back(submodule_slope(zt, dest));
  hn.grDims = sub.grDims;
  hn.grDims.push_back(dest.dims());
  for (size_t k = 0; k + 1 < hn.grSlopes.size(); ++k)
    if (!(hn.grSlopes[k] < hn.grSlopes[k + 1]))
      throw ConsistencyError("HN slopes failed to increase strictly");
  return hn;
}

std::vector<uint8_t> canonical_iso_key(const GradedModule& m) {
  // brute-force minimum over the product of GL(V_i); dimensions stay tiny
  const int n = m.graph.n();
  static std::map<std::pair<int, int>, std::vector<FqMat>> gl_cache;
  std::vector<const std::vector<FqMat>*> gls(n);
  for (int i = 0; i < n; ++i) {
    auto key = std::make_pair(m.q, static_cast<int>(m.vDims[i]));
    auto it = gl_cache.find(key);
    if (it == gl_cache.end()) {
      std::vector<FqMat> list;
      const int d = key.second;
      FqMat g(m.q, d, d);
      long long count = 1;
      for (int t = 0; t < d * d; ++t) count *= m.q;
      for (long long code = 0; code < count; ++code) {
        long long c = code;
        for (auto& x : g.a) {
          x = static_cast<uint8_t>(c % m.q);
          c /= m.q;
        }
        if (fq_rank(g) == d) list.push_back(g);
      }
      it = gl_cache.emplace(key, std::move(list)).first;
    }
    gls[i] = &it->second;
  }

  auto serialize = [&](const GradedModule& mm) {
    std::vector<uint8_t> bytes;
    for (Int d : mm.vDims) bytes.push_back(static_cast<uint8_t>(d));
    for (Int d : mm.wDims) bytes.push_back(static_cast<uint8_t>(d));
    for (const auto& mat : mm.B)
      bytes.insert(bytes.end(), mat.a.begin(), mat.a.end());
    for (const auto& mat : mm.a)
      bytes.insert(bytes.end(), mat.a.begin(), mat.a.end());
    for (const auto& mat : mm.b)
      bytes.insert(bytes.end(), mat.a.begin(), mat.a.end());
    return bytes;
  };

  const auto arrows = arrows_of(m.graph);
  std::vector<uint8_t> best;
  std::vector<int> pick(n, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      // transform: x -> x g_i; map matrices conjugate accordingly
      std::vector<FqMat> ginv(n);
      for (int i = 0; i < n; ++i) {
        const FqMat& g = (*gls[i])[pick[i]];
        // inverse by augmenting with identity
        FqMat aug(m.q, g.rows, 2 * g.cols);
        for (int r = 0; r < g.rows; ++r) {
          for (int c = 0; c < g.cols; ++c) aug.at(r, c) = g.at(r, c);
          aug.at(r, g.cols + r) = 1;
        }
        const FqMat rr = fq_rref(aug);
        FqMat inv(m.q, g.rows, g.cols);
        for (int r = 0; r < g.rows; ++r)
          for (int c = 0; c < g.cols; ++c) inv.at(r, c) = rr.at(r, g.cols + c);
        ginv[i] = inv;
      }
      GradedModule t = m;
      for (size_t h = 0; h < arrows.size(); ++h)
        t.B[h] = fq_mul(fq_mul(ginv[arrows[h].from], m.B[h]),
                        (*gls[arrows[h].to])[pick[arrows[h].to]]);
      for (int i = 0; i < n; ++i) {
        t.a[i] = fq_mul(m.a[i], (*gls[i])[pick[i]]);
        t.b[i] = fq_mul(ginv[i], m.b[i]);
      }
      auto bytes = serialize(t);
      if (best.empty() || bytes < best) best = std::move(bytes);
      return;
    }
    for (size_t k = 0; k < gls[pos]->size(); ++k) {
      pick[pos] = static_cast<int>(k);
      rec(pos + 1);
    }
  };
  rec(0);
  return best;
}

std::vector<JHFactor> jh_factors(const GradedModule& m,
                                 const StabilityParam& zt, bool tieBreakHigh) {
  const bool hasW = !dim_is_zero(m.wDims);
  if (dim_is_zero(m.vDims) && !hasW) return {};
  if (stability_verdict(m, zt) == Verdict::unstable)
    throw PreconditionError("Jordan-Hoelder requires a semistable module");
  const Rat total = slope(zt, m.vDims, hasW);

  std::vector<JHFactor> out;
  GradedModule cur = m;
  while (true) {
    const bool curW = !dim_is_zero(cur.wDims);
    if (dim_is_zero(cur.vDims) && !curW) break;
    const auto subs = enumerate_submodules(cur);
    // stable equal-slope submodules, minimal dimension first
    const Submodule* picked = nullptr;
    for (const auto& s : subs) {
      if (submodule_slope(zt, s) != total) continue;
      const GradedModule rm = restrict_module(cur, s.basis, s.withW);
      if (stability_verdict(rm, zt) != Verdict::stable) continue;
      if (!picked) {
        picked = &s;
        continue;
      }
      const Int da = dim_height(s.dims()) + (s.withW ? 1 : 0);
      const Int db = dim_height(picked->dims()) + (picked->withW ? 1 : 0);
      if (da < db) {
        picked = &s;
      } else if (da == db) {
        // tie-break on the concatenated basis bytes
        auto bytes = [](const Submodule& x) {
          std::vector<uint8_t> v;
          for (const auto& mat : x.basis)
            v.insert(v.end(), mat.a.begin(), mat.a.end());
          v.push_back(x.withW ? 1 : 0);
          return v;
        };
        const bool swap =
            tieBreakHigh ? bytes(s) > bytes(*picked) : bytes(s) < bytes(*picked);
        if (swap) picked = &s;
      }
    }
    if (!picked)
      throw ConsistencyError("semistable module without a stable subobject");
    const GradedModule fac = restrict_module(cur, picked->basis, picked->withW);
    JHFactor f;
    f.dims = picked->dims();
    f.withW = picked->withW;
    f.isoKey = canonical_iso_key(fac);
    out.push_back(std::move(f));
    cur = quotient_module(cur, picked->basis, !picked->withW);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int count_hn_flags(const GradedModule& m, const StabilityParam& zt) {
  const bool hasW = !dim_is_zero(m.wDims);
  std::function<Int(const GradedModule&, bool, const Rat*, bool)> count =
      [&](const GradedModule& cur, bool curW, const Rat* lower,
          bool isTop) -> Int {
    // Option: end the flag here (cur itself is the deepest piece).
    Int total = 0;
    const bool curZero = dim_is_zero(cur.vDims) && !curW;
    if (!curZero) {
      const Rat sl = slope(zt, cur.vDims, curW);
      if ((!lower || *lower < sl) &&
          stability_verdict(cur, zt) != Verdict::unstable)
        total += 1;
      // Option: pick the next flag member as a proper nonzero submodule
      // whose quotient piece is semistable with slope above the bound.
      for (const auto& s : enumerate_submodules(cur)) {
        if (is_whole(cur, s, curW)) continue;
        const GradedModule qm = quotient_module(cur, s.basis, !s.withW);
        const bool qW = !dim_is_zero(qm.wDims);
        if (dim_is_zero(qm.vDims) && !qW) continue;  // pairs must decrease
        const Rat grSlope = slope(zt, qm.vDims, qW);
        if (lower && !(*lower < grSlope)) continue;
        if (stability_verdict(qm, zt) == Verdict::unstable) continue;
        const GradedModule rm = restrict_module(cur, s.basis, s.withW);
        total += count(rm, s.withW, &grSlope, false);
      }
    }
    (void)isTop;
    return total;
  };
  return count(m, hasW, nullptr, true);
}

}  // namespace qvs
