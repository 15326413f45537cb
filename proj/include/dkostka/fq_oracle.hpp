#pragma once

// Brute-force point counting over prime fields GF(q), q <= 7. Nilpotent
// pairs (x, v) are classified into double partitions through the commutant
// construction W = E^x v; canonical representatives of each type are built
// and re-checked through that classifier. The counting routines enumerate
// subspaces by their reduced row echelon bases and tally the x-stable ones
// with prescribed restriction and quotient types, so the polynomial layers
// of the library can be compared against honest finite-field counts. The
// enumeration is exponential and the entry points enforce hard size caps.

#include <dkostka/partition.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dkostka {

namespace detail {

inline void check_prime_modulus(int q) {
  if (q != 2 && q != 3 && q != 5 && q != 7)
    throw std::invalid_argument("fq: modulus must be a prime at most 7");
}

inline int fq_inv(int a, int q) {
  for (int b = 1; b < q; ++b)
    if (a * b % q == 1) return b;
  throw std::invalid_argument("fq_inv: not invertible");
}

}  // namespace detail

// Square matrix over GF(q), entries kept reduced to [0, q).
struct FqMatrix {
  int q = 2;
  int n = 0;
  std::vector<int> a;  // row-major

  FqMatrix() = default;
  FqMatrix(int size, int modulus) : q(modulus), n(size), a((size_t)size * size, 0) {
    detail::check_prime_modulus(modulus);
    if (size < 0) throw std::invalid_argument("FqMatrix: negative size");
  }
  static FqMatrix identity(int size, int modulus) {
    FqMatrix m(size, modulus);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
  }

  int at(int i, int j) const { return a[(size_t)i * n + j]; }
  int& at(int i, int j) { return a[(size_t)i * n + j]; }

  FqMatrix operator*(const FqMatrix& o) const {
    if (o.n != n || o.q != q) throw std::invalid_argument("FqMatrix: shape mismatch");
    FqMatrix r(n, q);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        int x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) = (r.at(i, j) + x * o.at(k, j)) % q;
      }
    return r;
  }
  std::vector<int> apply(const std::vector<int>& v) const {
    if ((int)v.size() != n) throw std::invalid_argument("FqMatrix: vector length mismatch");
    std::vector<int> r(n, 0);
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
      r[i] = s % q;
    }
    return r;
  }
  bool operator==(const FqMatrix& o) const { return q == o.q && n == o.n && a == o.a; }
  bool operator!=(const FqMatrix& o) const { return !(*this == o); }
};

// Nilpotent element with a marked vector.
struct EnhancedPoint {
  FqMatrix x;
  std::vector<int> v;
};

namespace detail {

// In-place reduced row echelon form; zero rows are dropped. Returns the
// pivot column of each surviving row, strictly increasing.
inline std::vector<int> fq_rref(std::vector<std::vector<int>>& rows, int q) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  size_t width = rows[0].size();
  size_t done = 0;
  for (size_t c = 0; c < width && done < rows.size(); ++c) {
    size_t r = done;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[done], rows[r]);
    int s = fq_inv(rows[done][c], q);
    for (size_t j = 0; j < width; ++j) rows[done][j] = rows[done][j] * s % q;
    for (size_t r2 = 0; r2 < rows.size(); ++r2) {
      if (r2 == done) continue;
      int f = rows[r2][c];
      if (f == 0) continue;
      for (size_t j = 0; j < width; ++j)
        rows[r2][j] = (rows[r2][j] + (q - f) * rows[done][j]) % q;
    }
    pivots.push_back((int)c);
    ++done;
  }
  rows.resize(done);
  return pivots;
}

// Reduces u modulo the span of an rref basis; the result vanishes at every
// pivot coordinate and is zero iff u lies in the span.
inline std::vector<int> fq_reduce(std::vector<int> u, const std::vector<std::vector<int>>& rows,
                                  const std::vector<int>& pivots, int q) {
  for (size_t r = 0; r < rows.size(); ++r) {
    int f = u[pivots[r]];
    if (f == 0) continue;
    for (size_t j = 0; j < u.size(); ++j) u[j] = (u[j] + (q - f) * rows[r][j]) % q;
  }
  return u;
}

inline bool fq_is_zero(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace detail

inline int fq_rank(const FqMatrix& m) {
  std::vector<std::vector<int>> rows(m.n, std::vector<int>(m.n));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) rows[i][j] = m.at(i, j);
  return (int)detail::fq_rref(rows, m.q).size();
}

// Inverse by elimination on the augmented matrix; throws if singular.
inline FqMatrix fq_inverse(const FqMatrix& m) {
  int n = m.n, q = m.q;
  if (n == 0) return m;
  std::vector<std::vector<int>> rows(n, std::vector<int>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
    rows[i][n + i] = 1;
  }
  std::vector<int> pivots = detail::fq_rref(rows, q);
  if ((int)pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("fq_inverse: matrix is singular");
  FqMatrix r(n, q);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = rows[i][n + j];
  return r;
}

// Jordan type of a nilpotent matrix, read off the ranks of its powers: the
// number of blocks of size at least k is rank(x^{k-1}) - rank(x^k).
inline Partition jordan_type(const FqMatrix& x) {
  FqMatrix p = FqMatrix::identity(x.n, x.q);
  std::vector<int> ranks{x.n};
  for (int k = 1; k <= x.n; ++k) {
    p = p * x;
    ranks.push_back(fq_rank(p));
  }
  if (ranks.back() != 0) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
  std::vector<int> blocks_ge;  // entry k-1 counts blocks of size >= k
  for (size_t k = 1; k < ranks.size(); ++k)
    if (ranks[k - 1] - ranks[k] > 0) blocks_ge.push_back(ranks[k - 1] - ranks[k]);
  return Partition(blocks_ge).conjugate();
}

// Basis of the commutant {g : gx = xg}, the null space of an n^2 x n^2
// linear system in the entries of g.
inline std::vector<FqMatrix> commutant_basis(const FqMatrix& x) {
  int n = x.n, q = x.q;
  int m = n * n;
  std::vector<std::vector<int>> sys;
  sys.reserve((size_t)m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> row(m, 0);
      for (int k = 0; k < n; ++k) {
        row[i * n + k] = (row[i * n + k] + x.at(k, j)) % q;
        row[k * n + j] = (row[k * n + j] + q - x.at(i, k)) % q;
      }
      sys.push_back(std::move(row));
    }
  std::vector<int> pivots = detail::fq_rref(sys, q);
  std::vector<bool> is_pivot(m, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FqMatrix> basis;
  for (int f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    FqMatrix g(n, q);
    g.a[f] = 1;
    for (size_t r = 0; r < sys.size(); ++r) g.a[pivots[r]] = (q - sys[r][f]) % q;
    basis.push_back(std::move(g));
  }
  return basis;
}

inline bool is_stable_span(const FqMatrix& x, const std::vector<std::vector<int>>& rows,
                           const std::vector<int>& pivots) {
  for (const auto& w : rows)
    if (!detail::fq_is_zero(detail::fq_reduce(x.apply(w), rows, pivots, x.q))) return false;
  return true;
}

// Matrix of x on the span of an rref basis. Coordinates with respect to an
// rref basis are just the values at the pivot positions. Throws if the span
// is not x-stable.
inline FqMatrix restriction_matrix(const FqMatrix& x, const std::vector<std::vector<int>>& rows,
                                   const std::vector<int>& pivots) {
  int k = (int)rows.size();
  FqMatrix r(k, x.q);
  for (int j = 0; j < k; ++j) {
    std::vector<int> img = x.apply(rows[j]);
    if (!detail::fq_is_zero(detail::fq_reduce(img, rows, pivots, x.q)))
      throw std::invalid_argument("restriction_matrix: span is not stable");
    for (int i = 0; i < k; ++i) r.at(i, j) = img[pivots[i]];
  }
  return r;
}

// Matrix induced by x on the quotient by the span; the quotient carries the
// non-pivot coordinates of vectors reduced modulo the span.
inline FqMatrix quotient_matrix(const FqMatrix& x, const std::vector<std::vector<int>>& rows,
                                const std::vector<int>& pivots) {
  int n = x.n, q = x.q;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  int d = (int)free_cols.size();
  FqMatrix r(d, q);
  for (int j = 0; j < d; ++j) {
    std::vector<int> e(n, 0);
    e[free_cols[j]] = 1;
    std::vector<int> img = detail::fq_reduce(x.apply(e), rows, pivots, q);
    for (int i = 0; i < d; ++i) r.at(i, j) = img[free_cols[i]];
  }
  return r;
}

// Image of a vector in the quotient coordinates.
inline std::vector<int> quotient_vector(const std::vector<int>& v,
                                        const std::vector<std::vector<int>>& rows,
                                        const std::vector<int>& pivots, int q) {
  std::vector<int> red = detail::fq_reduce(v, rows, pivots, q);
  std::vector<bool> is_pivot(red.size(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> out;
  for (size_t c = 0; c < red.size(); ++c)
    if (!is_pivot[c]) out.push_back(red[c]);
  return out;
}

// Type of a nilpotent pair: W = E^x v for the full commutant E^x, the first
// component is the Jordan type of x on W, the second the type induced on
// V/W. The zero vector yields (-; type x); a cyclic vector yields (type x; -).
inline DoublePartition enhanced_type(const EnhancedPoint& p) {
  jordan_type(p.x);  // enforces nilpotency
  std::vector<std::vector<int>> span;
  for (const FqMatrix& g : commutant_basis(p.x)) span.push_back(g.apply(p.v));
  std::vector<int> pivots = detail::fq_rref(span, p.x.q);
  Partition first = jordan_type(restriction_matrix(p.x, span, pivots));
  Partition second = jordan_type(quotient_matrix(p.x, span, pivots));
  return DoublePartition{first, second};
}

// Canonical GF(q)-point of the orbit labeled by La: one Jordan string of
// length la'_i + la''_i for each index i, and the marked vector hits depth
// la'_i inside the i-th string. The construction is validated by running it
// back through enhanced_type.
inline EnhancedPoint representative_pair(const DoublePartition& la, int q) {
  detail::check_prime_modulus(q);
  int n = la.sum();
  FqMatrix x(n, q);
  std::vector<int> v(n, 0);
  int off = 0;
  int m = std::max(la.first.length(), la.second.length());
  for (int i = 0; i < m; ++i) {
    int b = la.first.part(i) + la.second.part(i);
    for (int j = 1; j < b; ++j) x.at(off + j - 1, off + j) = 1;
    if (la.first.part(i) > 0) v[off + la.first.part(i) - 1] = 1;
    off += b;
  }
  EnhancedPoint p{std::move(x), std::move(v)};
  if (enhanced_type(p) != la)
    throw std::logic_error("representative_pair: classification mismatch");
  return p;
}

// Calls fn(rows, pivots) for every k-dimensional subspace of GF(q)^n, each
// presented by its unique reduced row echelon basis.
template <typename F>
inline void for_each_subspace(int n, int k, int q, F&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (int c : cols) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < k; ++r)
      for (int c = cols[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(r, c);
    std::vector<std::vector<int>> rows(k, std::vector<int>(n, 0));
    for (int r = 0; r < k; ++r) rows[r][cols[r]] = 1;
    std::vector<int> digits(free_pos.size(), 0);
    while (true) {
      for (size_t t = 0; t < free_pos.size(); ++t)
        rows[free_pos[t].first][free_pos[t].second] = digits[t];
      fn(rows, cols);
      size_t t = 0;
      for (; t < digits.size(); ++t) {
        if (++digits[t] < q) break;
        digits[t] = 0;
      }
      if (t == digits.size()) break;
    }
    int i = k - 1;
    while (i >= 0 && cols[i] == n - k + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
}

// Number of x-stable subspaces through the marked vector with prescribed
// restriction and quotient types, for an explicit pair.
inline long long count_g_points(const EnhancedPoint& z, const DoublePartition& nu) {
  int n = z.x.n, q = z.x.q;
  if (nu.sum() != n) return 0;
  long long count = 0;
  for_each_subspace(n, nu.first.sum(), q,
                    [&](const std::vector<std::vector<int>>& rows, const std::vector<int>& piv) {
                      if (!detail::fq_is_zero(detail::fq_reduce(z.v, rows, piv, q))) return;
                      if (!is_stable_span(z.x, rows, piv)) return;
                      if (jordan_type(restriction_matrix(z.x, rows, piv)) != nu.first) return;
                      if (jordan_type(quotient_matrix(z.x, rows, piv)) != nu.second) return;
                      ++count;
                    });
  return count;
}

// GF(q)-point count of the subspace variety attached to the pair of types
// (Mu, Nu), counted from the canonical representative of Mu. The count is
// representative independent; tests confirm that rather than assume it.
inline long long count_g_variety(const DoublePartition& mu, const DoublePartition& nu, int q) {
  detail::check_prime_modulus(q);
  if (mu.sum() > 4 || q > 5)
    throw std::invalid_argument("count_g_variety: out of feasible range (n <= 4, q <= 5)");
  if (mu.sum() != nu.sum()) return 0;
  return count_g_points(representative_pair(mu, q), nu);
}

enum class ActionSide { left, right };

// Points of the bimodule varieties for an explicit pair. On the left side
// W carries the plain type alpha and the marked vector classifies the
// quotient pair; on the right side W contains the marked vector, the pair
// (x|_W, v) carries type mu, and the quotient carries alpha.
inline long long count_bimodule_points(const EnhancedPoint& z, const Partition& alpha,
                                       const DoublePartition& mu, ActionSide side) {
  int n = z.x.n, q = z.x.q;
  int k = side == ActionSide::left ? alpha.sum() : mu.sum();
  long long count = 0;
  for_each_subspace(
      n, k, q, [&](const std::vector<std::vector<int>>& rows, const std::vector<int>& piv) {
        if (!is_stable_span(z.x, rows, piv)) return;
        if (side == ActionSide::left) {
          if (jordan_type(restriction_matrix(z.x, rows, piv)) != alpha) return;
          EnhancedPoint bar{quotient_matrix(z.x, rows, piv), quotient_vector(z.v, rows, piv, q)};
          if (enhanced_type(bar) != mu) return;
        } else {
          if (!detail::fq_is_zero(detail::fq_reduce(z.v, rows, piv, q))) return;
          std::vector<int> vw((size_t)k);
          for (int i = 0; i < k; ++i) vw[i] = z.v[piv[i]];
          if (enhanced_type(EnhancedPoint{restriction_matrix(z.x, rows, piv), vw}) != mu) return;
          if (jordan_type(quotient_matrix(z.x, rows, piv)) != alpha) return;
        }
        ++count;
      });
  return count;
}

// GF(q)-point count of the left or right bimodule variety attached to
// (La; alpha, Mu), counted from the canonical representative of La.
inline long long count_bimodule_varieties(const DoublePartition& la, const Partition& alpha,
                                          const DoublePartition& mu, int q, ActionSide side) {
  detail::check_prime_modulus(q);
  if (la.sum() > 3 || q > 3)
    throw std::invalid_argument("count_bimodule_varieties: out of feasible range (n <= 3, q <= 3)");
  if (la.sum() != alpha.sum() + mu.sum()) return 0;
  return count_bimodule_points(representative_pair(la, q), alpha, mu, side);
}

// Uniform invertible matrix by rejection; the caller owns the generator so
// sampling stays reproducible.
inline FqMatrix random_invertible(int n, int q, std::mt19937_64& gen) {
  detail::check_prime_modulus(q);
  while (true) {
    FqMatrix g(n, q);
    for (int& e : g.a) e = (int)(gen() % (std::uint64_t)q);
    if (fq_rank(g) == n) return g;
  }
}

// The translate (g x g^{-1}, g v) of a pair; enhanced_type is constant
// along these.
inline EnhancedPoint conjugate_point(const EnhancedPoint& z, const FqMatrix& g) {
  return EnhancedPoint{g * z.x * fq_inverse(g), g.apply(z.v)};
}

}  // namespace dkostka
