#include "qvs/strata.hpp"

#include <algorithm>
#include <functional>

namespace qvs {

std::vector<LeviStratum> enumerate_strata_levi(const QuiverGraph& g,
                                               const DimVector& v,
                                               const DimVector& w,
                                               const std::vector<int>& I0,
                                               Int depth) {
  if (!g.loop_free()) throw PreconditionError("requires a loop-free graph");
  const CartanMatrix C = cartan_from_graph(g);
  const bool affine = is_affine_type(C);
  const bool fullI0 = static_cast<int>(I0.size()) == g.n();

  std::vector<bool> inI0(g.n(), false);
  for (int i : I0) inI0[i] = true;

  std::vector<LeviStratum> out;
  // v0 <= v with v - v0 supported on I0
  DimVector v0 = v;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == g.n()) {
      if (levi_stratum_nonempty(g, v0, w, I0, depth))
        out.push_back({v0, dim_sub(v, v0), affine && !fullI0});
      return;
    }
    if (!inI0[pos]) {
      rec(pos + 1);
      return;
    }
    const Int keep = v0[pos];
    for (Int k = 0; k <= v[pos]; ++k) {
      v0[pos] = k;
      rec(pos + 1);
    }
    v0[pos] = keep;
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const LeviStratum& a, const LeviStratum& b) { return a.v0 < b.v0; });
  return out;
}

DimVector stratum_total(const QuiverGraph& g, const std::vector<int>& I00,
                        const StratumIndex& s) {
  const CartanMatrix C = cartan_from_graph(g);
  const DimVector delta = affine_delta(C);
  DimVector v = s.v0;
  Int lam = 0;
  for (Int part : s.lambda) lam += part;
  v = dim_add(v, dim_scale(lam, delta));
  for (const auto& [i, mult] : s.m)
    v = dim_add(v, dim_scale(mult, unit_vector(g.n(), i)));
  const auto comps = subgraph_components(g, I00);
  for (const auto& [c, mult] : s.n) {
    const DimVector bc = dim_sub(delta, component_highest_root(g, comps[c]));
    v = dim_add(v, dim_scale(mult, bc));
  }
  return v;
}

std::vector<StratumIndex> enumerate_strata_ale(const QuiverGraph& g,
                                               const DimVector& v,
                                               const DimVector& w,
                                               const std::vector<int>& I00,
                                               Int depth) {
  const CartanMatrix C = cartan_from_graph(g);
  if (dim_is_zero(w)) throw PreconditionError("requires w != 0");
  const DimVector delta = affine_delta(C);
  const auto comps = subgraph_components(g, I00);
  std::vector<DimVector> bvecs;
  for (const auto& comp : comps)
    bvecs.push_back(dim_sub(delta, component_highest_root(g, comp)));
  std::vector<int> i00sorted = I00;
  std::sort(i00sorted.begin(), i00sorted.end());

  // partitions of k in reverse-lexicographic order
  auto partitions_of = [](Int k) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    std::function<void(Int, Int)> rec = [&](Int rem, Int maxPart) {
      if (rem == 0) {
        out.push_back(cur);
        return;
      }
      for (Int p = std::min(rem, maxPart); p >= 1; --p) {
        cur.push_back(p);
        rec(rem - p, p);
        cur.pop_back();
      }
    };
    rec(k, k);
    return out;
  };

  std::vector<StratumIndex> out;
  const Int kMax = dim_height(v);

  // choose |lambda| = kk, then the n_c, then the m_i, with v0 the rest
  std::function<void(size_t, DimVector, std::map<int, Int>&)> chooseN;
  std::function<void(size_t, DimVector, std::map<int, Int>&, std::map<int, Int>&)>
      chooseM;

  for (Int kk = 0; kk <= kMax; ++kk) {
    const DimVector afterLam = dim_sub(v, dim_scale(kk, delta));
    if (!dim_nonneg(afterLam)) break;
    std::map<int, Int> nsel;
    chooseN = [&](size_t ci, DimVector rem, std::map<int, Int>& nmap) {
      if (ci == bvecs.size()) {
        std::map<int, Int> msel;
        chooseM(0, rem, nmap, msel);
        return;
      }
      for (Int t = 0;; ++t) {
        DimVector r2 = dim_sub(rem, dim_scale(t, bvecs[ci]));
        if (!dim_nonneg(r2)) break;
        if (t > 0) nmap[static_cast<int>(ci)] = t;
        chooseN(ci + 1, r2, nmap);
        nmap.erase(static_cast<int>(ci));
      }
    };
    chooseM = [&](size_t mi, DimVector rem, std::map<int, Int>& nmap,
                  std::map<int, Int>& mmap) {
      if (mi == i00sorted.size()) {
        // rem is the candidate v0
        if (!affine_stratum_nonempty(g, rem, w, I00, depth)) return;
        for (const auto& lam : partitions_of(kk)) {
          StratumIndex s;
          s.v0 = rem;
          s.lambda = lam;
          s.m = mmap;
          s.n = nmap;
          out.push_back(std::move(s));
        }
        return;
      }
      const int vertex = i00sorted[mi];
      for (Int t = 0; t <= rem[vertex]; ++t) {
        if (t > 0) mmap[vertex] = t;
        DimVector r2 = rem;
        r2[vertex] -= t;
        chooseM(mi + 1, r2, nmap, mmap);
        mmap.erase(vertex);
      }
    };
    chooseN(0, afterLam, nsel);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LocalModel local_model(const CartanMatrix& C,
                       const std::vector<std::pair<DimVector, Int>>& pieces,
                       const DimVector& w) {
  if (pieces.empty() || pieces[0].second != 1)
    throw PreconditionError("piece 0 must be the framed piece with multiplicity 1");
  const DimVector& v0 = pieces[0].first;
  const int r = static_cast<int>(pieces.size()) - 1;

  LocalModel lm;
  lm.hatCartan.c.assign(r, std::vector<Int>(r, 0));
  lm.hatV.resize(r);
  lm.hatW.resize(r);

  DimVector vTotal = v0;
  for (int k = 1; k <= r; ++k)
    vTotal = dim_add(vTotal, dim_scale(pieces[k].second, pieces[k].first));

  const DimVector wc0 = dim_sub(w, cartan_apply(C, v0));
  const DimVector wcT = dim_sub(w, cartan_apply(C, vTotal));

  for (int k = 1; k <= r; ++k) {
    lm.hatV[k - 1] = pieces[k].second;
    Int s = 0;
    for (int i = 0; i < C.n(); ++i) s += pieces[k].first[i] * wc0[i];
    lm.hatW[k - 1] = s;
    for (int l = 1; l <= r; ++l)
      lm.hatCartan.c[k - 1][l - 1] =
          cartan_pair(C, pieces[k].first, pieces[l].first);
  }

  // coupling identity: hatW_k - sum_l hatC_kl hatV_l = t(v^k)(w - C v)
  for (int k = 1; k <= r; ++k) {
    Int lhs = lm.hatW[k - 1];
    for (int l = 1; l <= r; ++l)
      lhs -= lm.hatCartan.c[k - 1][l - 1] * lm.hatV[l - 1];
    Int rhs = 0;
    for (int i = 0; i < C.n(); ++i) rhs += pieces[k].first[i] * wcT[i];
    if (lhs != rhs)
      throw ConsistencyError("local-model coupling identity failed");
  }
  return lm;
}

std::vector<std::pair<DimVector, Int>> stratum_pieces(
    const QuiverGraph& g, const std::vector<int>& I00, const StratumIndex& s) {
  const CartanMatrix C = cartan_from_graph(g);
  const DimVector delta = affine_delta(C);
  const auto comps = subgraph_components(g, I00);

  std::vector<std::pair<DimVector, Int>> pieces;
  pieces.emplace_back(s.v0, 1);
  // one piece per distinct point of the configuration: parts of lambda
  for (Int part : s.lambda) pieces.emplace_back(delta, part);
  for (const auto& [c, mult] : s.n)
    pieces.emplace_back(dim_sub(delta, component_highest_root(g, comps[c])),
                        mult);
  for (const auto& [i, mult] : s.m)
    pieces.emplace_back(unit_vector(g.n(), i), mult);
  return pieces;
}

std::vector<BlockKind> classify_blocks(const CartanMatrix& hatC) {
  const int r = hatC.n();
  std::vector<bool> seen(r, false);
  std::vector<BlockKind> out;
  for (int s = 0; s < r; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y = 0; y < r; ++y)
        if (y != x && !seen[y] && hatC.at(x, y) != 0) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    CartanMatrix sub;
    sub.c.assign(comp.size(), std::vector<Int>(comp.size()));
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = 0; j < comp.size(); ++j)
        sub.c[i][j] = hatC.at(comp[i], comp[j]);
    bool hasLoop = false;
    for (size_t i = 0; i < comp.size(); ++i)
      if (sub.c[i][i] != 2) hasLoop = true;
    if (hasLoop) {
      if (comp.size() == 1 && sub.c[0][0] == 0)
        out.push_back(BlockKind::jordan);
      else
        throw ConsistencyError("block with loops is not the Jordan quiver");
    } else if (is_finite_type(sub)) {
      out.push_back(BlockKind::finiteType);
    } else if (is_affine_type(sub)) {
      out.push_back(BlockKind::affineType);
    } else {
      throw ConsistencyError("block is neither finite, affine, nor Jordan");
    }
  }
  return out;
}

Int fiber_dim_bound(Int ambientDim, Int stratumDim) {
  if (ambientDim < stratumDim)
    throw PreconditionError("ambient dimension below stratum dimension");
  if ((ambientDim - stratumDim) % 2 != 0)
    throw PreconditionError("dimension difference must be even");
  return (ambientDim - stratumDim) / 2;
}

}  // namespace qvs
