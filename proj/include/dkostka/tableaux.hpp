#pragma once

// Semistandard tableaux on straight and skew shapes, reading words, the
// charge statistic, jeu de taquin rectification and the tableau-side
// formulas built from them: Kostka polynomials via charge, their
// two-component analogue, and Littlewood-Richardson coefficients counted
// by lattice words.
//
// A pair (T+, T-) of tableaux of shapes (la'; la'') is identified with a
// single skew tableau: with a = la''_1 and k' = l(la'), the outer shape is
// xi = (la'_1 + a, ..., la'_k' + a, la''_1, la''_2, ...) and the inner
// shape is (a^k'). The reading word of the pair is then the usual reading
// word (rows right to left, top to bottom) of that skew tableau.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "dkostka/intpoly.hpp"
#include "dkostka/partition.hpp"

namespace dkostka {

using Word = std::vector<int>;

// Rows hold entries of the cells between inner[i] and outer[i].
struct Tableau {
  Partition outer, inner;
  std::vector<std::vector<int>> rows;  // rows[i].size() == outer[i] - inner[i]

  int entry(int r, int c) const { return rows[r][c - inner.part(r)]; }

  Word word() const {
    Word w;
    for (const auto& row : rows)
      for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
  }

  std::vector<int> weight() const {
    std::vector<int> wt;
    for (const auto& row : rows)
      for (int v : row) {
        if ((int)wt.size() < v) wt.resize(v, 0);
        ++wt[v - 1];
      }
    return wt;
  }
};

namespace detail {

// All shapes between inner and outer whose difference from inner is a
// horizontal strip of the given size. `inner` is taken by value: callers
// pass references into containers the callback may resize.
inline void horizontal_strips(std::vector<int> inner,
                              const std::vector<int>& outer, int size,
                              const std::function<void(const std::vector<int>&)>& emit) {
  int rows = (int)outer.size();
  std::vector<int> shape(inner);
  shape.resize(rows, 0);
  // choose row extensions bottom-up so the strip condition
  // shape[r] <= inner[r-1] can be tested against the fixed inner shape
  std::function<void(int, int)> rec = [&](int r, int remaining) {
    if (r < 0) {
      if (remaining == 0) emit(shape);
      return;
    }
    int base = r < (int)inner.size() ? inner[r] : 0;
    // strip condition: no two new cells share a column, i.e. the row below
    // may not grow past the old length of this row
    if (r + 1 < rows && shape[r + 1] > base) return;
    for (int len = base; len <= outer[r] && len - base <= remaining; ++len) {
      if (r + 1 < rows && len < shape[r + 1]) continue;  // keep a partition
      shape[r] = len;
      rec(r - 1, remaining - (len - base));
      shape[r] = base;
    }
  };
  rec(rows - 1, size);
}

}  // namespace detail

// All semistandard fillings of outer/inner with the given weight
// (an arbitrary composition; trailing zeros allowed).
inline std::vector<Tableau> enumerate_sst(const Partition& outer, const Partition& inner,
                                          const std::vector<int>& weight) {
  if (!outer.contains(inner))
    throw std::invalid_argument("enumerate_sst: inner not contained in outer");
  long long total = 0;
  for (int w : weight) {
    if (w < 0) throw std::invalid_argument("enumerate_sst: negative weight entry");
    total += w;
  }
  std::vector<Tableau> out;
  if (total != outer.sum() - inner.sum()) return out;

  std::vector<int> outer_v(outer.parts()), inner_v(inner.parts());
  outer_v.resize(std::max(outer.length(), 1), 0);
  inner_v.resize(outer_v.size(), 0);

  // chain of shapes: inner = s^0 c s^1 c ... c s^m = outer, s^i / s^{i-1}
  // a horizontal strip of size weight[i-1]; letter i fills that strip
  std::vector<std::vector<int>> chain{inner_v};
  std::function<void(int)> rec = [&](int letter) {
    if (letter > (int)weight.size()) {
      const std::vector<int>& last = chain.back();
      for (size_t r = 0; r < last.size(); ++r)
        if (last[r] != outer_v[r]) return;
      Tableau t;
      t.outer = outer;
      t.inner = inner;
      t.rows.resize(outer_v.size());
      for (size_t step = 1; step < chain.size(); ++step)
        for (size_t r = 0; r < outer_v.size(); ++r)
          for (int c = chain[step - 1][r]; c < chain[step][r]; ++c)
            t.rows[r].push_back((int)step);
      t.rows.resize(outer.length());
      out.push_back(std::move(t));
      return;
    }
    detail::horizontal_strips(chain.back(), outer_v, weight[letter - 1],
                              [&](const std::vector<int>& s) {
                                chain.push_back(s);
                                rec(letter + 1);
                                chain.pop_back();
                              });
  };
  rec(1);
  return out;
}

inline std::vector<Tableau> enumerate_sst(const Partition& shape,
                                          const std::vector<int>& weight) {
  return enumerate_sst(shape, Partition{}, weight);
}

// Lattice word: every prefix contains at least as many i as i+1.
inline bool is_lattice(const Word& w) {
  std::vector<int> cnt;
  for (int v : w) {
    if ((int)cnt.size() < v) cnt.resize(v, 0);
    ++cnt[v - 1];
    if (v > 1 && cnt[v - 1] > cnt[v - 2]) return false;
  }
  return true;
}

// Charge of a word of partition weight. Standard subwords are extracted by
// scanning rightward (cyclically): take the leftmost remaining 1, then for
// each r the first r+1 after it, wrapping to the front when none follows.
// The letter r+1 gains index(r) + 1 when the scan wrapped (it then sits to
// the left of r) and index(r) otherwise. The charge is the sum of all
// indices over all extracted subwords.
inline long long charge(const Word& w) {
  std::vector<int> wt;
  for (int v : w) {
    if (v < 1) throw std::invalid_argument("charge: letters must be positive");
    if ((int)wt.size() < v) wt.resize(v, 0);
    ++wt[v - 1];
  }
  for (size_t i = 0; i + 1 < wt.size(); ++i)
    if (wt[i] < wt[i + 1])
      throw std::invalid_argument("charge: weight is not a partition");

  std::vector<int> letters(w);
  std::vector<char> removed(letters.size(), 0);
  size_t live = letters.size();
  long long total = 0;
  while (live > 0) {
    int max_letter = 0;
    for (size_t i = 0; i < letters.size(); ++i)
      if (!removed[i]) max_letter = std::max(max_letter, letters[i]);
    // leftmost 1, then scan rightward with wraparound for 2, 3, ...
    int pos = -1;
    long long index = 0;
    for (int r = 1; r <= max_letter; ++r) {
      int found = -1;
      bool wrapped = false;
      for (int k = pos + 1; k < (int)letters.size(); ++k)
        if (!removed[k] && letters[k] == r) { found = k; break; }
      if (found < 0) {
        wrapped = true;
        for (int k = 0; k < pos; ++k)
          if (!removed[k] && letters[k] == r) { found = k; break; }
      }
      if (found < 0) throw std::logic_error("charge: missing letter in extraction");
      if (r > 1 && wrapped) ++index;
      total += r == 1 ? 0 : index;
      removed[found] = 1;
      pos = found;
      --live;
    }
  }
  return total;
}

// Jeu de taquin rectification of a skew tableau.
inline Tableau rectify(const Tableau& t) {
  int nrows = t.outer.length();
  std::vector<int> out_v(t.outer.parts());
  out_v.resize(std::max(nrows, 1), 0);
  std::vector<int> in_v(t.inner.parts());
  in_v.resize(out_v.size(), 0);
  std::vector<std::vector<int>> grid((size_t)out_v.size());
  for (size_t r = 0; r < grid.size(); ++r) {
    grid[r].assign(out_v[r], 0);
    for (int c = in_v[r]; c < out_v[r]; ++c) grid[r][c] = t.rows[r][c - in_v[r]];
  }

  auto filled = [&](int r, int c) {
    return r >= 0 && r < (int)grid.size() && c >= in_v[r] && c < out_v[r];
  };

  while (true) {
    // bottom inner corner: last row with in_v[r] > 0 and
    // (next row shorter inner or none)
    int row = -1;
    for (int r = (int)grid.size() - 1; r >= 0; --r)
      if (in_v[r] > 0 && (r + 1 >= (int)grid.size() || in_v[r + 1] < in_v[r])) {
        row = r;
        break;
      }
    if (row < 0) break;
    int hr = row, hc = in_v[row] - 1;
    --in_v[row];
    while (true) {
      bool right = filled(hr, hc + 1) && hc + 1 >= in_v[hr];
      bool below = hr + 1 < (int)grid.size() && filled(hr + 1, hc) && hc >= in_v[hr + 1];
      if (!right && !below) break;
      bool move_below;
      if (!right) move_below = true;
      else if (!below) move_below = false;
      else move_below = grid[hr + 1][hc] <= grid[hr][hc + 1];  // tie -> below
      if (move_below) {
        grid[hr][hc] = grid[hr + 1][hc];
        ++hr;
      } else {
        grid[hr][hc] = grid[hr][hc + 1];
        ++hc;
      }
    }
    out_v[hr] = hc;  // hole reached an outer corner; shrink
  }

  Tableau r;
  while (!out_v.empty() && out_v.back() == 0) out_v.pop_back();
  r.outer = Partition(out_v);
  r.inner = Partition{};
  r.rows.resize(r.outer.length());
  for (int i = 0; i < r.outer.length(); ++i)
    r.rows[i].assign(grid[i].begin(), grid[i].begin() + out_v[i]);
  return r;
}

// ---- pairs of tableaux as skew tableaux ----

struct BiShape {
  Partition outer, inner;
};

inline BiShape skew_embedding(const DoublePartition& la) {
  int a = la.second.part(0);
  int kp = la.first.length();
  std::vector<int> outer;
  for (int i = 0; i < kp; ++i) outer.push_back(la.first.part(i) + a);
  for (int i = 0; i < la.second.length(); ++i) outer.push_back(la.second.part(i));
  std::vector<int> inner(kp, a);
  return {Partition(outer), Partition(inner)};
}

// Pairs (T+, T-) with total weight `weight`, returned as embedded skew
// tableaux; the reading word of the pair equals the skew reading word.
inline std::vector<Tableau> enumerate_bisst(const DoublePartition& la,
                                            const std::vector<int>& weight) {
  // The top block occupies columns >= la''_1 and the bottom block columns
  // < la''_1, so skew semistandardness decouples into independent
  // semistandardness of the two components.
  BiShape shape = skew_embedding(la);
  return enumerate_sst(shape.outer, shape.inner, weight);
}

inline Int count_sst(const Partition& shape, const std::vector<int>& weight) {
  return (Int)enumerate_sst(shape, weight).size();
}

// Number of pairs, by summing over decompositions of the weight.
inline Int count_bisst(const DoublePartition& la, const std::vector<int>& weight) {
  return (Int)enumerate_bisst(la, weight).size();
}

// c^nu_{la mu}: lattice pairs of total weight nu.
inline Int lr_coefficient(const Partition& la, const Partition& mu, const Partition& nu) {
  if (la.sum() + mu.sum() != nu.sum()) return 0;
  Int count = 0;
  for (const Tableau& t : enumerate_bisst({la, mu}, nu.parts()))
    if (is_lattice(t.word())) ++count;
  return count;
}

// K_{la,mu}(t) = sum over SST(la,mu) of t^charge; zero unless la >= mu.
inline IntPoly kostka_charge(const Partition& la, const Partition& mu) {
  IntPoly k;
  for (const Tableau& t : enumerate_sst(la, mu.parts()))
    k += IntPoly::t_power((int)charge(t.word()));
  return k;
}

// K_{La,(-;mu'')}(t) = t^{|la'|} sum over pairs of weight mu'' of
// t^{2 charge(rectification)}.
inline IntPoly double_kostka_charge(const DoublePartition& la, const Partition& mu2) {
  if (la.sum() != mu2.sum())
    throw std::invalid_argument("double_kostka_charge: weight mismatch");
  IntPoly k;
  for (const Tableau& t : enumerate_bisst(la, mu2.parts())) {
    Tableau rect = rectify(t);
    k += IntPoly::t_power(2 * (int)charge(rect.word()));
  }
  return k.shifted(la.first.sum());
}

}  // namespace dkostka
