#include "qvs/roots.hpp"

#include <algorithm>

namespace qvs {

namespace {

// Enumerates all x in Z^n_{>=0} with sum(x) = h, invoking fn on each.
template <typename F>
void for_each_of_height(int n, Int h, F&& fn) {
  DimVector x(n, 0);
  // place h units into n slots
  std::function<void(int, Int)> rec = [&](int pos, Int rem) {
    if (pos == n - 1) {
      x[pos] = rem;
      fn(x);
      return;
    }
    for (Int k = 0; k <= rem; ++k) {
      x[pos] = k;
      rec(pos + 1, rem - k);
    }
  };
  if (n == 0) return;
  rec(0, h);
}

}  // namespace

RootDatum positive_roots(const CartanMatrix& C, Int bound) {
  const int n = C.n();
  for (int i = 0; i < n; ++i)
    if (C.at(i, i) != 2)
      throw PreconditionError("root theory needs a loop-free graph");

  RootDatum rd;
  rd.cartan = C;
  rd.heightBound = bound;

  // Peterson recurrence for the summatory coefficients
  //   c_x = sum_{k >= 1, k | x} mult(x/k) / k,
  //   ((x,x) - 2 ht x) c_x = sum_{y+z=x, y,z>0} (y,z) c_y c_z,
  // with (.,.) the symmetric form given by C and (rho, x) = ht x.  The
  // left factor is strictly negative at every non-simple root, so a
  // vanishing denominator certifies mult(x) = 0 and c_x reduces to the
  // divisor sum over lower heights.
  std::map<DimVector, Rat> cc;
  for (int i = 0; i < n; ++i) cc[unit_vector(n, i)] = 1;
  for (int i = 0; i < n; ++i) rd.roots[unit_vector(n, i)] = 1;

  for (Int h = 2; h <= bound; ++h) {
    for_each_of_height(n, h, [&](const DimVector& x) {
      // divisor sum of already-extracted multiplicities
      Rat divisorSum = 0;
      for (Int k = 2; k <= h; ++k) {
        bool divisible = true;
        DimVector xk(x.size());
        for (size_t i = 0; i < x.size(); ++i) {
          if (x[i] % k != 0) {
            divisible = false;
            break;
          }
          xk[i] = x[i] / k;
        }
        if (!divisible) continue;
        auto it = rd.roots.find(xk);
        if (it != rd.roots.end()) divisorSum += Rat(it->second) / Rat(k);
      }

      Rat rhs = 0;
      // split x = y + z over nonzero y, z (ordered pairs, matching the
      // recurrence as stated)
      DimVector y(n, 0);
      std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
          if (dim_is_zero(y) || y == x) return;
          auto ity = cc.find(y);
          if (ity == cc.end() || ity->second == 0) return;
          const DimVector z = dim_sub(x, y);
          auto itz = cc.find(z);
          if (itz == cc.end() || itz->second == 0) return;
          rhs += Rat(cartan_pair(C, y, z)) * ity->second * itz->second;
          return;
        }
        for (Int k = 0; k <= x[pos]; ++k) {
          y[pos] = k;
          rec(pos + 1);
        }
      };
      rec(0);

      const Int den = cartan_pair(C, x, x) - 2 * h;
      Rat c;
      if (den == 0) {
        if (rhs != 0)
          throw ConsistencyError("Peterson recurrence degenerate at " +
                                 dim_to_string(x));
        c = divisorSum;
      } else {
        c = rhs / Rat(den);
      }
      if (c != 0) cc[x] = c;

      const Rat m = c - divisorSum;
      if (m == 0) return;
      const BigInt num = boost::multiprecision::numerator(m);
      const BigInt denm = boost::multiprecision::denominator(m);
      if (denm != 1 || num < 0)
        throw ConsistencyError("non-integral root multiplicity at " +
                               dim_to_string(x));
      rd.roots[x] = num;
    });
  }
  return rd;
}

BigInt WeightMultTable::at(const DimVector& v) const {
  if (!dim_nonneg(v))
    return 0;
  if (dim_height(v) > depthBound)
    throw DepthInconclusiveError("content " + dim_to_string(v) +
                                 " exceeds table depth");
  auto it = mults.find(v);
  return it == mults.end() ? BigInt(0) : it->second;
}

WeightMultTable freudenthal(const DimVector& w, const CartanMatrix& C,
                            Int depth) {
  if (!dim_nonneg(w)) throw PreconditionError("highest weight must be dominant");
  const int n = C.n();
  const RootDatum rd = positive_roots(C, depth);

  WeightMultTable tab;
  tab.cartan = C;
  tab.highest = w;
  tab.depthBound = depth;
  tab.mults[DimVector(n, 0)] = 1;

  std::vector<std::pair<DimVector, BigInt>> roots(rd.roots.begin(),
                                                  rd.roots.end());

  for (Int h = 1; h <= depth; ++h) {
    for_each_of_height(n, h, [&](const DimVector& v) {
      // ((w+rho,w+rho) - (mu+rho,mu+rho)) m_v
      //   = 2 sum_{alpha>0} mult(alpha) sum_{k>=1} (w - v + k alpha,
      //     alpha) m_{v - k alpha},  mu = w - v.
      const Int denom = [&] {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += 2 * v[i] * (w[i] + 1);
        return s - cartan_pair(C, v, v);
      }();
      BigInt rhs = 0;
      for (const auto& [alpha, mult] : roots) {
        DimVector vk = v;
        Int k = 1;
        while (true) {
          bool ok = true;
          for (int i = 0; i < n; ++i) {
            vk[i] = v[i] - k * alpha[i];
            if (vk[i] < 0) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
          auto it = tab.mults.find(vk);
          if (it != tab.mults.end()) {
            // (w - vk, alpha) with (Lambda_i, alpha_j) = delta_ij
            Int pair = 0;
            for (int i = 0; i < n; ++i) pair += alpha[i] * w[i];
            pair -= cartan_pair(C, alpha, vk);
            rhs += mult * BigInt(pair) * it->second;
          }
          ++k;
        }
      }
      rhs *= 2;
      if (denom == 0) {
        if (rhs != 0)
          throw ConsistencyError("Freudenthal denominator vanished at " +
                                 dim_to_string(v));
        return;
      }
      if (rhs == 0) return;
      if (rhs % BigInt(denom) != 0)
        throw ConsistencyError("Freudenthal division failure at " +
                               dim_to_string(v));
      const BigInt m = rhs / BigInt(denom);
      if (m < 0)
        throw ConsistencyError("negative multiplicity at " + dim_to_string(v));
      if (m != 0) tab.mults[v] = m;
    });
  }
  return tab;
}

BigInt root_mult_extended(const QuiverGraph& g, const DimVector& w,
                          const DimVector& v) {
  if (!g.loop_free())
    throw PreconditionError("base graph must be loop-free");
  const ExtendedQuiver ext = extend_quiver(g, w);
  const CartanMatrix Cx = cartan_from_graph(ext.result);
  DimVector vx = v;
  vx.push_back(1);  // the framing-vertex entry
  const RootDatum rd = positive_roots(Cx, dim_height(vx));
  return rd.mult(vx);
}

std::pair<AffineWeight, Int> dominant_conjugate(const AffineWeight& wv,
                                                const CartanMatrix& C) {
  AffineWeight cur = wv;
  Int reflections = 0;
  const Int kStepBudget = 1000000;
  while (true) {
    int neg = -1;
    for (int i = 0; i < C.n(); ++i) {
      if (pairing(i, cur, C) < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) return {cur, reflections};
    // s_i(w - v) = w - (v + <h_i, w - v> e_i)
    cur.content[neg] += pairing(neg, cur, C);
    if (++reflections > kStepBudget)
      throw BudgetError("reflection budget exceeded; weight not in the Tits cone");
  }
}

}  // namespace qvs
