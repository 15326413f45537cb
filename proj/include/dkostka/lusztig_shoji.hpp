#pragma once

// Independent route to the modified double Kostka matrix through the
// representation theory of the hyperoctahedral group W_n = S_n x (Z/2)^n
// and, for the one-alphabet case, the symmetric group itself. Conjugacy
// classes carry pairs of cycle types (positive and sign-flipping cycles);
// characters are induced from products of symmetric group characters.
// Fake degrees are graded multiplicities in the coinvariant algebra,
// assembled by an exact common-denominator Molien sum, and the matrix
// Omega built from them factors as P Xi P^T with the triangular P having
// prescribed diagonal t^{a}; that P is recovered by a sweeping solver.

#include <dkostka/intpoly.hpp>
#include <dkostka/partition.hpp>
#include <dkostka/ratfn.hpp>
#include <dkostka/symfunc.hpp>

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dkostka {

// Conjugacy class of W_n: cycle type `pos` of the cycles whose sign
// product is +1 and `neg` of those with sign product -1. For the plain
// symmetric group neg stays empty.
struct WreathClass {
  Partition pos;
  Partition neg;

  bool operator==(const WreathClass& o) const { return pos == o.pos && neg == o.neg; }
  bool operator!=(const WreathClass& o) const { return !(*this == o); }
  bool operator<(const WreathClass& o) const {
    if (pos != o.pos) return pos < o.pos;
    return neg < o.neg;
  }
};

namespace detail {

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Centralizer order of the class (pos; neg) inside W_n.
inline Int wreath_centralizer(const WreathClass& c) {
  Int z = z_int(c.pos) * z_int(c.neg);
  for (int i = 0; i < c.pos.length() + c.neg.length(); ++i) z *= 2;
  return z;
}

// Enumerate ordered splittings of a partition into two sub-multisets.
inline void split_partition(const Partition& la,
                            const std::function<void(const Partition&, const Partition&)>& emit) {
  std::vector<std::pair<int, int>> groups;  // (part, multiplicity)
  for (int i = 0; i < la.length(); ++i) {
    if (!groups.empty() && groups.back().first == la.part(i)) ++groups.back().second;
    else groups.emplace_back(la.part(i), 1);
  }
  std::vector<int> take(groups.size(), 0);
  std::function<void(size_t)> rec = [&](size_t g) {
    if (g == groups.size()) {
      std::vector<int> a, b;
      for (size_t i = 0; i < groups.size(); ++i) {
        for (int k = 0; k < take[i]; ++k) a.push_back(groups[i].first);
        for (int k = take[i]; k < groups[i].second; ++k) b.push_back(groups[i].first);
      }
      emit(Partition(a), Partition(b));
      return;
    }
    for (int k = 0; k <= groups[g].second; ++k) {
      take[g] = k;
      rec(g + 1);
    }
  };
  rec(0);
}

}  // namespace detail

// All classes of W_{n,r} with their sizes; r=1 gives the symmetric group.
inline std::vector<std::pair<WreathClass, Int>> wn_classes(int n, int r) {
  if (n < 1 || (r != 1 && r != 2)) throw std::invalid_argument("wn_classes: bad arguments");
  Int order = detail::factorial(n);
  if (r == 2) for (int i = 0; i < n; ++i) order *= 2;
  std::vector<std::pair<WreathClass, Int>> out;
  if (r == 1) {
    for (const auto& rho : enumerate_partitions(n))
      out.emplace_back(WreathClass{rho, Partition{}}, detail::factorial(n) / z_int(rho));
    return out;
  }
  for (int m = n; m >= 0; --m)
    for (const auto& rho : enumerate_partitions(m))
      for (const auto& sigma : enumerate_partitions(n - m)) {
        WreathClass c{rho, sigma};
        out.emplace_back(c, order / detail::wreath_centralizer(c));
      }
  return out;
}

// Full character table of W_n: rows follow total_order(n), columns follow
// wn_classes(n, 2). Characters are induced from W_{m'} x W_{m''} where the
// first factor carries chi^{la'} through the sign-forgetting projection and
// the second additionally multiplies by the product of all cycle signs.
struct WreathTable {
  int n = 0;
  std::vector<WreathClass> classes;
  std::vector<Int> sizes;
  std::map<WreathClass, int> class_index;
  std::vector<DoublePartition> chars;
  std::map<DoublePartition, int> char_index;
  std::vector<std::vector<long long>> value;  // value[char][class]

  long long at(const DoublePartition& la, const WreathClass& c) const {
    return value[char_index.at(la)][class_index.at(c)];
  }
};

inline const WreathTable& wreath_table(int n) {
  static thread_local std::map<int, WreathTable> cache;
  auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;

  WreathTable T;
  T.n = n;
  for (auto& [c, size] : wn_classes(n, 2)) {
    T.class_index.emplace(c, (int)T.classes.size());
    T.classes.push_back(c);
    T.sizes.push_back(size);
  }
  T.chars = total_order(n);
  for (int i = 0; i < (int)T.chars.size(); ++i) T.char_index.emplace(T.chars[i], i);
  T.value.assign(T.chars.size(), std::vector<long long>(T.classes.size(), 0));

  for (size_t ci = 0; ci < T.chars.size(); ++ci) {
    const auto& la = T.chars[ci];
    int m1 = la.first.sum();
    for (size_t k = 0; k < T.classes.size(); ++k) {
      const auto& c = T.classes[k];
      Rational sum(0);
      detail::split_partition(c.pos, [&](const Partition& r1, const Partition& r2) {
        detail::split_partition(c.neg, [&](const Partition& s1, const Partition& s2) {
          if (r1.sum() + s1.sum() != m1) return;
          long long v1 = sn_character(la.first, r1.merged(s1));
          if (v1 == 0) return;
          long long v2 = sn_character(la.second, r2.merged(s2));
          if (v2 == 0) return;
          long long sign = (s2.length() % 2 == 0) ? 1 : -1;
          Rational den(detail::wreath_centralizer(WreathClass{r1, s1}) *
                       detail::wreath_centralizer(WreathClass{r2, s2}));
          sum += Rational(v1 * v2 * sign) / den;
        });
      });
      sum *= Rational(detail::wreath_centralizer(c));
      if (denominator(sum) != 1)
        throw std::domain_error("wreath_table: non-integral induced character");
      Int num = numerator(sum);
      T.value[ci][k] = (long long)num.convert_to<long long>();
    }
  }
  return cache.emplace(n, std::move(T)).first->second;
}

inline long long wn_character(const DoublePartition& la, const WreathClass& c) {
  int n = la.first.sum() + la.second.sum();
  if (c.pos.sum() + c.neg.sum() != n)
    throw std::invalid_argument("wn_character: size mismatch");
  return wreath_table(n).at(la, c);
}

namespace detail {

// Shared data for the graded Molien sums of W_{n,r}: the common
// denominator D divisible by every det_{V0}(t - w), the per-class
// cofactors D / det_c, the coinvariant clearing factor prod (t^{ir} - 1),
// the sign character values, and the group order.
struct MolienContext {
  int n = 0, r = 2;
  std::vector<WreathClass> classes;
  std::vector<Int> sizes;
  std::vector<long long> eps;      // sign character per class
  std::vector<IntPoly> cofactor;   // D / det_c
  IntPoly denom;                   // D
  IntPoly clearing;                // prod_{i=1..n} (t^{ir} - 1)
  Int group_order;
  long long reflections = 0;       // N: n^2 for r=2, n(n-1)/2 for r=1
};

inline const MolienContext& molien_context(int n, int r) {
  static thread_local std::map<std::pair<int, int>, MolienContext> cache;
  auto key = std::make_pair(n, r);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  MolienContext M;
  M.n = n;
  M.r = r;
  for (auto& [c, size] : wn_classes(n, r)) {
    M.classes.push_back(c);
    M.sizes.push_back(size);
  }
  M.group_order = factorial(n);
  if (r == 2) for (int i = 0; i < n; ++i) M.group_order *= 2;
  M.reflections = r == 2 ? (long long)n * n : (long long)n * (n - 1) / 2;

  M.denom = IntPoly(1);
  for (int k = 1; k <= n; ++k) {
    IntPoly minus = IntPoly::t_power(k) - IntPoly(1);
    IntPoly plus = IntPoly::t_power(k) + IntPoly(1);
    for (int j = 0; j < n / k; ++j) {
      M.denom = M.denom * minus;
      if (r == 2) M.denom = M.denom * plus;
    }
  }
  M.clearing = IntPoly(1);
  for (int i = 1; i <= n; ++i) M.clearing = M.clearing * (IntPoly::t_power(i * r) - IntPoly(1));

  Partition col(std::vector<int>(n, 1));
  for (const auto& c : M.classes) {
    IntPoly det(1);
    for (int i = 0; i < c.pos.length(); ++i) det = det * (IntPoly::t_power(c.pos.part(i)) - IntPoly(1));
    for (int j = 0; j < c.neg.length(); ++j) det = det * (IntPoly::t_power(c.neg.part(j)) + IntPoly(1));
    M.cofactor.push_back(M.denom.exact_div(det));
    long long e = r == 2 ? wn_character(DoublePartition{Partition{}, col}, c)
                         : sn_character(col, c.pos);
    M.eps.push_back(e);
  }
  return cache.emplace(key, std::move(M)).first->second;
}

// prod (t^{ir}-1) / |W| * sum_c |c| w_c / det_c for integer class weights,
// with every division exact by construction; throws otherwise.
inline IntPoly molien_sum(const MolienContext& M, const std::vector<long long>& weights) {
  IntPoly acc;
  for (size_t k = 0; k < M.classes.size(); ++k) {
    if (weights[k] == 0) continue;
    acc += M.cofactor[k] * IntPoly(Int(M.sizes[k]) * weights[k]);
  }
  if (acc.is_zero()) return acc;
  IntPoly num = (acc * M.clearing).exact_div(M.denom);
  return num.exact_div_scalar(M.group_order);
}

}  // namespace detail

// Graded multiplicity of the character in the coinvariant algebra. For
// r=1 the label must have an empty second component and names a symmetric
// group character.
inline IntPoly fake_degree(const DoublePartition& la, int r) {
  if (r == 1 && !la.second.empty())
    throw std::invalid_argument("fake_degree: r=1 labels are single partitions");
  int n = la.first.sum() + la.second.sum();
  const auto& M = detail::molien_context(n, r);
  std::vector<long long> w(M.classes.size());
  for (size_t k = 0; k < M.classes.size(); ++k) {
    long long chi = r == 2 ? wn_character(la, M.classes[k])
                           : sn_character(la.first, M.classes[k].pos);
    w[k] = M.eps[k] * chi;
  }
  return detail::molien_sum(M, w);
}

// Symmetric matrix omega_{La,Mu} = t^N R(chi^La chi^Mu epsilon), rows and
// columns on total_order(n) for r=2 and on partitions of n sorted greatest
// first (descending lexicographic refines dominance) for r=1, encoded as
// (la; -) labels.
struct OmegaMatrix {
  int n = 0;
  int r = 2;
  std::vector<DoublePartition> labels;
  std::map<DoublePartition, int> index;
  std::vector<std::vector<IntPoly>> entries;

  const IntPoly& at(const DoublePartition& la, const DoublePartition& mu) const {
    return entries[index.at(la)][index.at(mu)];
  }
};

inline OmegaMatrix omega_matrix(int n, int r) {
  const auto& M = detail::molien_context(n, r);
  OmegaMatrix om;
  om.n = n;
  om.r = r;
  if (r == 2) {
    om.labels = total_order(n);
  } else {
    auto parts = enumerate_partitions(n);
    std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) { return b < a; });
    for (const auto& p : parts) om.labels.emplace_back(p, Partition{});
  }
  int m = (int)om.labels.size();
  for (int i = 0; i < m; ++i) om.index.emplace(om.labels[i], i);

  std::vector<std::vector<long long>> chi(m, std::vector<long long>(M.classes.size()));
  for (int i = 0; i < m; ++i)
    for (size_t k = 0; k < M.classes.size(); ++k)
      chi[i][k] = r == 2 ? wn_character(om.labels[i], M.classes[k])
                         : sn_character(om.labels[i].first, M.classes[k].pos);

  om.entries.assign(m, std::vector<IntPoly>(m));
  std::vector<long long> w(M.classes.size());
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      // epsilon from the fake degree cancels against the twist by epsilon
      for (size_t k = 0; k < M.classes.size(); ++k) w[k] = chi[i][k] * chi[j][k];
      IntPoly e = detail::molien_sum(M, w).shifted((int)M.reflections);
      om.entries[i][j] = e;
      om.entries[j][i] = std::move(e);
    }
  return om;
}

// Triangular factorization Omega = P Xi P^T with diagonal p_{La,La} =
// t^{a(La)} and support p_{La,Mu} = 0 unless Mu <= La in dominance. The
// sweep runs from the minimal label upward; uniqueness makes the result
// independent of which linear extension ordered the labels.
struct SolvedP {
  int n = 0;
  int r = 2;
  std::vector<DoublePartition> labels;  // same order as the input omega
  std::map<DoublePartition, int> index;
  std::vector<std::vector<IntPoly>> P;
  std::vector<RatFn> xi;

  const IntPoly& at(const DoublePartition& la, const DoublePartition& mu) const {
    return P[index.at(la)][index.at(mu)];
  }
};

inline SolvedP solve_p_lambda(const OmegaMatrix& om) {
  int m = (int)om.labels.size();
  auto a_of = [&](int i) {
    return om.r == 2 ? a_stat(om.labels[i]) : n_stat(om.labels[i].first);
  };
  auto leq = [&](int j, int i) {
    return om.r == 2 ? double_dominance_le(om.labels[j], om.labels[i])
                     : dominance_le(om.labels[j].first, om.labels[i].first);
  };
  // ascending views: position u counts from the minimal label
  auto row = [&](int u) { return m - 1 - u; };

  std::vector<std::vector<RatFn>> P(m, std::vector<RatFn>(m));
  std::vector<RatFn> xi(m);
  for (int k = 0; k < m; ++k) {
    P[k][k] = RatFn(IntPoly::t_power((int)a_of(row(k))));
    RatFn s;
    for (int j = 0; j < k; ++j)
      if (!P[k][j].is_zero()) s = s + P[k][j] * P[k][j] * xi[j];
    xi[k] = (RatFn(om.entries[row(k)][row(k)]) - s) / (P[k][k] * P[k][k]);
    if (xi[k].is_zero())
      throw std::domain_error("solve_p_lambda: singular pivot");
    for (int u = k + 1; u < m; ++u) {
      RatFn s2;
      for (int j = 0; j < k; ++j)
        if (!P[u][j].is_zero() && !P[k][j].is_zero()) s2 = s2 + P[u][j] * xi[j] * P[k][j];
      P[u][k] = (RatFn(om.entries[row(u)][row(k)]) - s2) / (xi[k] * P[k][k]);
    }
  }

  // exact residual check of Omega = P Xi P^T
  for (int u = 0; u < m; ++u)
    for (int v = 0; v <= u; ++v) {
      RatFn acc;
      for (int j = 0; j <= v; ++j)
        if (!P[u][j].is_zero() && !P[v][j].is_zero()) acc = acc + P[u][j] * xi[j] * P[v][j];
      if (acc != RatFn(om.entries[row(u)][row(v)]))
        throw std::domain_error("solve_p_lambda: residual is nonzero");
    }

  SolvedP out;
  out.n = om.n;
  out.r = om.r;
  out.labels = om.labels;
  out.index = om.index;
  out.P.assign(m, std::vector<IntPoly>(m));
  out.xi.assign(m, RatFn());
  for (int u = 0; u < m; ++u) {
    out.xi[row(u)] = xi[u];
    for (int v = 0; v < m; ++v) {
      if (P[u][v].is_zero()) continue;
      int i = row(u), j = row(v);
      if (!leq(j, i))
        throw std::domain_error("solve_p_lambda: support escapes dominance");
      out.P[i][j] = P[u][v].as_poly();
    }
  }
  return out;
}

// Multiplicity of chi^La in the permutation character of W_n on the cosets
// of the Young subgroup S_{mu''}, via Frobenius reciprocity: averages the
// character over Young-subgroup classes, which land in classes (rho; -).
inline long long induced_multiplicity(const Partition& mu2, const DoublePartition& la) {
  int n = la.first.sum() + la.second.sum();
  if (mu2.sum() != n)
    throw std::invalid_argument("induced_multiplicity: size mismatch");
  const auto& T = wreath_table(n);
  Rational sum(0);
  std::vector<Partition> tuple(mu2.length());
  std::function<void(int, Rational)> rec = [&](int i, Rational weight) {
    if (i == mu2.length()) {
      Partition merged;
      for (const auto& p : tuple) merged = merged.merged(p);
      long long chi = T.at(la, WreathClass{merged, Partition{}});
      sum += weight * Rational(chi);
      return;
    }
    for (const auto& rho : enumerate_partitions(mu2.part(i))) {
      tuple[i] = rho;
      rec(i + 1, weight / Rational(z_int(rho)));
    }
  };
  rec(0, Rational(1));
  if (denominator(sum) != 1)
    throw std::domain_error("induced_multiplicity: non-integral value");
  return (long long)numerator(sum).convert_to<long long>();
}

}  // namespace dkostka
