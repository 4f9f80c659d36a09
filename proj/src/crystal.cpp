#include "qvs/crystal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace qvs {

namespace {

inline int mod(Int x, int r) {
  int m = static_cast<int>(x % r);
  return m < 0 ? m + r : m;
}

// Signature symbols of one partition for residue i, by increasing row
// index; each row contributes at most one symbol.  true = addable '+',
// false = removable '-'.  Rows are 1-based; row len+1 is the first
// empty one.
struct Sig {
  std::vector<std::pair<Int, bool>> syms;  // (row, isPlus)
};

Sig signature(const ColoredPartition& p, int i) {
  Sig s;
  const Int L = static_cast<Int>(p.parts.size());
  for (Int k = 1; k <= L + 1; ++k) {
    const Int len = k <= L ? p.parts[k - 1] : 0;
    const Int above = k == 1 ? -1 : p.parts[k - 2];  // -1 = unbounded
    // addable box (k, len+1)
    if ((k == 1 || above >= len + 1) &&
        mod(len + 1 - k + p.residueShift, p.rank) == i)
      s.syms.emplace_back(k, true);
    // removable box (k, len)
    const Int below = k < L ? p.parts[k] : 0;
    if (k <= L && len > below && mod(len - k + p.residueShift, p.rank) == i)
      s.syms.emplace_back(k, false);
  }
  std::sort(s.syms.begin(), s.syms.end());
  return s;
}

// Cancels adjacent "+-" pairs; what survives is "-...-+...+".
// Returns indices (into syms) of surviving symbols.
std::vector<size_t> reduce_word(const std::vector<bool>& plus) {
  std::vector<size_t> stack;
  for (size_t k = 0; k < plus.size(); ++k) {
    if (!plus[k] && !stack.empty() && plus[stack.back()])
      stack.pop_back();
    else
      stack.push_back(k);
  }
  return stack;
}

ColoredPartition add_box(const ColoredPartition& p, Int row) {
  ColoredPartition q = p;
  if (row == static_cast<Int>(q.parts.size()) + 1)
    q.parts.push_back(1);
  else
    ++q.parts[row - 1];
  return q;
}

ColoredPartition remove_box(const ColoredPartition& p, Int row) {
  ColoredPartition q = p;
  if (--q.parts[row - 1] == 0) q.parts.erase(q.parts.begin() + (row - 1));
  return q;
}

}  // namespace

Int ColoredPartition::boxes() const {
  Int s = 0;
  for (Int x : parts) s += x;
  return s;
}

DimVector ColoredPartition::content() const {
  DimVector c(rank, 0);
  for (size_t k = 0; k < parts.size(); ++k)
    for (Int col = 1; col <= parts[k]; ++col)
      ++c[mod(col - static_cast<Int>(k) - 1 + residueShift, rank)];
  return c;
}

void ColoredPartition::validate() const {
  if (rank < 2) throw PreconditionError("rank must be at least 2");
  for (size_t k = 0; k + 1 < parts.size(); ++k)
    if (parts[k] < parts[k + 1])
      throw PreconditionError("parts must be weakly decreasing");
  for (const Int x : parts)
    if (x <= 0) throw PreconditionError("parts must be positive");
  Int run = 1;
  for (size_t k = 0; k + 1 < parts.size(); ++k) {
    run = parts[k] == parts[k + 1] ? run + 1 : 1;
    if (run + 1 > rank)
      throw PreconditionError("partition is not rank-regular");
  }
}

Int cp_epsilon(const ColoredPartition& p, int i) {
  const Sig s = signature(p, i);
  std::vector<bool> plus;
  for (const auto& [row, isplus] : s.syms) plus.push_back(isplus);
  Int eps = 0;
  for (size_t idx : reduce_word(plus))
    if (!plus[idx]) ++eps;
  return eps;
}

Int cp_phi(const ColoredPartition& p, int i) {
  const Sig s = signature(p, i);
  std::vector<bool> plus;
  for (const auto& [row, isplus] : s.syms) plus.push_back(isplus);
  Int phi = 0;
  for (size_t idx : reduce_word(plus))
    if (plus[idx]) ++phi;
  return phi;
}

std::optional<ColoredPartition> cp_e(const ColoredPartition& p, int i) {
  const Sig s = signature(p, i);
  std::vector<bool> plus;
  for (const auto& [row, isplus] : s.syms) plus.push_back(isplus);
  const auto surv = reduce_word(plus);
  // rightmost surviving '-'
  for (auto it = surv.rbegin(); it != surv.rend(); ++it)
    if (!plus[*it]) return remove_box(p, s.syms[*it].first);
  return std::nullopt;
}

std::optional<ColoredPartition> cp_f(const ColoredPartition& p, int i) {
  const Sig s = signature(p, i);
  std::vector<bool> plus;
  for (const auto& [row, isplus] : s.syms) plus.push_back(isplus);
  const auto surv = reduce_word(plus);
  // leftmost surviving '+'
  for (size_t idx : surv)
    if (plus[idx]) return add_box(p, s.syms[idx].first);
  return std::nullopt;
}

std::vector<ColoredPartition> crystal_b_lambda(int r, int i0, Int depth) {
  if (r < 2) throw PreconditionError("rank must be at least 2");
  ColoredPartition empty;
  empty.rank = r;
  empty.residueShift = i0;
  std::set<std::vector<Int>> seen{empty.parts};
  std::deque<ColoredPartition> queue{empty};
  std::vector<ColoredPartition> out{empty};
  while (!queue.empty()) {
    const ColoredPartition cur = queue.front();
    queue.pop_front();
    if (cur.boxes() == depth) continue;
    for (int i = 0; i < r; ++i) {
      const auto next = cp_f(cur, i);
      if (!next) continue;
      if (seen.insert(next->parts).second) {
        out.push_back(*next);
        queue.push_back(*next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool TensorElement::operator<(const TensorElement& o) const {
  if (factors != o.factors) return factors < o.factors;
  return fockShifts < o.fockShifts;
}

Int TensorElement::fockTotal() const {
  Int s = 0;
  for (const auto& lam : fockShifts)
    for (Int part : lam) s += part;
  return s;
}

CrystalWeight tensor_weight(const TensorElement& t) {
  CrystalWeight w;
  w.level = static_cast<Int>(t.factors.size());
  if (!t.factors.empty()) w.alphaContent.assign(t.factors[0].rank, 0);
  for (const auto& f : t.factors)
    w.alphaContent = dim_add(w.alphaContent, f.content());
  w.extraDeltaShift = t.fockTotal();
  return w;
}

DimVector tensor_total_content(const TensorElement& t) {
  CrystalWeight w = tensor_weight(t);
  for (auto& x : w.alphaContent) x += w.extraDeltaShift;
  return w.alphaContent;
}

namespace {

// Concatenated signature word over the factors; per factor the word is
// '-' repeated epsilon_i then '+' repeated phi_i.
struct TensorWord {
  std::vector<bool> plus;
  std::vector<size_t> factorOf;
};

TensorWord tensor_word(const TensorElement& t, int i) {
  TensorWord w;
  for (size_t p = 0; p < t.factors.size(); ++p) {
    const Int eps = cp_epsilon(t.factors[p], i);
    const Int phi = cp_phi(t.factors[p], i);
    for (Int k = 0; k < eps; ++k) {
      w.plus.push_back(false);
      w.factorOf.push_back(p);
    }
    for (Int k = 0; k < phi; ++k) {
      w.plus.push_back(true);
      w.factorOf.push_back(p);
    }
  }
  return w;
}

}  // namespace

Int tensor_epsilon(const TensorElement& t, int i) {
  const TensorWord w = tensor_word(t, i);
  Int eps = 0;
  for (size_t idx : reduce_word(w.plus))
    if (!w.plus[idx]) ++eps;
  return eps;
}

Int tensor_phi(const TensorElement& t, int i) {
  const TensorWord w = tensor_word(t, i);
  Int phi = 0;
  for (size_t idx : reduce_word(w.plus))
    if (w.plus[idx]) ++phi;
  return phi;
}

std::optional<TensorElement> kashiwara(const TensorElement& t, int i,
                                       CrystalDir dir) {
  const TensorWord w = tensor_word(t, i);
  const auto surv = reduce_word(w.plus);
  if (dir == CrystalDir::f) {
    for (size_t idx : surv)
      if (w.plus[idx]) {
        TensorElement out = t;
        auto next = cp_f(out.factors[w.factorOf[idx]], i);
        if (!next) throw ConsistencyError("signature promised an addable box");
        out.factors[w.factorOf[idx]] = *next;
        return out;
      }
    return std::nullopt;
  }
  for (auto it = surv.rbegin(); it != surv.rend(); ++it)
    if (!w.plus[*it]) {
      TensorElement out = t;
      auto next = cp_e(out.factors[w.factorOf[*it]], i);
      if (!next) throw ConsistencyError("signature promised a removable box");
      out.factors[w.factorOf[*it]] = *next;
      return out;
    }
  return std::nullopt;
}

namespace {

std::vector<std::vector<Int>> partitions_of(Int k) {
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
}

}  // namespace

std::vector<TensorElement> tensor_crystal(int r,
                                          const std::vector<int>& residues,
                                          Int depth) {
  if (residues.empty()) throw PreconditionError("need at least one factor");
  const int l = static_cast<int>(residues.size());
  std::vector<std::vector<ColoredPartition>> perFactor;
  for (int p = 0; p < l; ++p)
    perFactor.push_back(crystal_b_lambda(r, residues[p], depth));

  std::vector<TensorElement> out;
  TensorElement cur;
  cur.factors.resize(l);
  cur.fockShifts.assign(l, {});
  std::function<void(int, Int)> pick = [&](int p, Int used) {
    if (p == l) {
      // distribute the remaining budget over the shift partitions
      std::function<void(int, Int)> shifts = [&](int sp, Int rem) {
        if (sp == l) {
          out.push_back(cur);
          return;
        }
        for (Int k = 0; k * static_cast<Int>(r) <= rem; ++k) {
          for (const auto& lam : partitions_of(k)) {
            cur.fockShifts[sp] = lam;
            shifts(sp + 1, rem - k * r);
          }
        }
        cur.fockShifts[sp] = {};
      };
      shifts(0, depth - used);
      return;
    }
    for (const auto& f : perFactor[p]) {
      if (used + f.boxes() > depth) continue;
      cur.factors[p] = f;
      pick(p + 1, used + f.boxes());
    }
  };
  pick(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<TensorElement, CrystalWeight>> levi_highest(
    int r, const std::vector<int>& residues, Int depth,
    const std::vector<int>& I0) {
  std::vector<std::pair<TensorElement, CrystalWeight>> out;
  for (const auto& t : tensor_crystal(r, residues, depth)) {
    bool hw = true;
    for (int i : I0)
      if (tensor_epsilon(t, i) != 0) {
        hw = false;
        break;
      }
    if (hw) out.emplace_back(t, tensor_weight(t));
  }
  return out;
}

BigInt hw_count_plain(int r, const std::vector<int>& residues,
                      const DimVector& v) {
  if (!dim_nonneg(v)) return 0;
  const int l = static_cast<int>(residues.size());
  const Int total = dim_height(v);
  std::vector<std::vector<ColoredPartition>> perFactor;
  for (int p = 0; p < l; ++p)
    perFactor.push_back(crystal_b_lambda(r, residues[p], total));

  BigInt count = 0;
  TensorElement cur;
  cur.factors.resize(l);
  cur.fockShifts.assign(l, {});
  std::function<void(int, DimVector)> pick = [&](int p, DimVector rem) {
    if (p == l) {
      if (!dim_is_zero(rem)) return;
      bool hw = true;
      for (int i = 0; i < r; ++i)
        if (tensor_epsilon(cur, i) != 0) {
          hw = false;
          break;
        }
      if (hw) ++count;
      return;
    }
    for (const auto& f : perFactor[p]) {
      const DimVector c = f.content();
      if (!dim_leq(c, rem)) continue;
      cur.factors[p] = f;
      pick(p + 1, dim_sub(rem, c));
    }
  };
  pick(0, v);
  return count;
}

BigInt mv_count(int r, const std::vector<int>& residues, const DimVector& v,
                Int depth) {
  if (depth < dim_height(v))
    throw DepthInconclusiveError("depth below the content height");
  if (!dim_nonneg(v)) return 0;
  const int l = static_cast<int>(residues.size());
  // number of (l-1)-tuples of partitions with total size n
  const Int nMax = *std::min_element(v.begin(), v.end());
  std::vector<BigInt> tuples(nMax + 1, 0);
  tuples[0] = 1;
  for (int copy = 0; copy < l - 1; ++copy) {
    std::vector<BigInt> next(nMax + 1, 0);
    for (Int n = 0; n <= nMax; ++n) {
      if (tuples[n] == 0) continue;
      for (Int k = 0; n + k <= nMax; ++k)
        next[n + k] += tuples[n] * BigInt(partitions_of(k).size());
    }
    tuples = std::move(next);
  }
  BigInt total = 0;
  for (Int n = 0; n <= nMax; ++n) {
    if (tuples[n] == 0) continue;
    DimVector rest = v;
    for (auto& x : rest) x -= n;
    total += tuples[n] * hw_count_plain(r, residues, rest);
  }
  return total;
}

}  // namespace qvs
