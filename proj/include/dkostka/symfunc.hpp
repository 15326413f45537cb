#pragma once

// One-alphabet symmetric function engine over exact coefficients.
// Elements live in fixed homogeneous degree and are stored as finite
// coefficient maps on the Schur or power-sum basis; no variable sets are
// ever materialized. Hall-Littlewood vectors P_mu(y;t) arise by inverting
// the unitriangular Kostka matrix supplied by the charge statistic, and
// the Hall structure constants f and g come from P-products.

#include <dkostka/intpoly.hpp>
#include <dkostka/partition.hpp>
#include <dkostka/ratfn.hpp>
#include <dkostka/tableaux.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dkostka {

namespace detail {

inline long long mn_character(std::vector<int> la, std::vector<int> rho) {
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  static thread_local std::map<Key, long long> memo;
  if (rho.empty()) return la.empty() ? 1 : 0;
  Key key(la, rho);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int r = rho.front();
  std::vector<int> rest(rho.begin() + 1, rho.end());
  int k = (int)la.size();
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = la[i] + (k - 1 - i);

  long long total = 0;
  for (int i = 0; i < k; ++i) {
    int b = beta[i] - r;
    if (b < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      if (beta[j] == b) { occupied = true; break; }
      if (beta[j] > b && beta[j] < beta[i]) ++height;
    }
    if (occupied) continue;
    std::vector<int> nb(beta);
    nb[i] = b;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> nla;
    for (int j = 0; j < k; ++j) {
      int part = nb[j] - (k - 1 - j);
      if (part > 0) nla.push_back(part);
    }
    long long sub = mn_character(std::move(nla), rest);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

// Irreducible S_n character value chi^la at the class of cycle type rho,
// by the Murnaghan-Nakayama border-strip recursion (memoized).
inline long long sn_character(const Partition& la, const Partition& rho) {
  if (la.sum() != rho.sum())
    throw std::invalid_argument("sn_character: size mismatch");
  return detail::mn_character(la.parts(), rho.parts());
}

// Expansion in the power-sum basis with rational coefficients.
struct PowerExpansion {
  int degree = 0;
  std::map<Partition, Rational> coeff;

  Rational get(const Partition& rho) const {
    auto it = coeff.find(rho);
    return it == coeff.end() ? Rational(0) : it->second;
  }
};

// s_la = sum_rho z_rho^{-1} chi^la(rho) p_rho.
inline PowerExpansion schur_to_power(const Partition& la) {
  PowerExpansion out;
  out.degree = la.sum();
  for (const auto& rho : enumerate_partitions(out.degree)) {
    long long chi = sn_character(la, rho);
    if (chi != 0) out.coeff[rho] = Rational(chi) / Rational(z_int(rho));
  }
  return out;
}

// Element of the degree-n homogeneous piece in the Schur basis, with
// coefficients in Q(t). Zero entries are never stored.
struct SchurVector {
  int degree = 0;
  std::map<Partition, RatFn> coeff;

  void add(const Partition& la, const RatFn& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeff.try_emplace(la, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) coeff.erase(it);
    }
  }
  RatFn get(const Partition& la) const {
    auto it = coeff.find(la);
    return it == coeff.end() ? RatFn() : it->second;
  }
  bool is_zero() const { return coeff.empty(); }
  bool operator==(const SchurVector& o) const {
    return degree == o.degree && coeff == o.coeff;
  }
  bool operator!=(const SchurVector& o) const { return !(*this == o); }
};

inline SchurVector schur_unit(const Partition& la) {
  SchurVector v;
  v.degree = la.sum();
  v.coeff.emplace(la, RatFn(1));
  return v;
}

inline SchurVector operator+(const SchurVector& u, const SchurVector& v) {
  if (u.degree != v.degree)
    throw std::invalid_argument("SchurVector: degree mismatch in sum");
  SchurVector out(u);
  for (const auto& [la, c] : v.coeff) out.add(la, c);
  return out;
}

inline SchurVector operator*(const RatFn& c, const SchurVector& u) {
  SchurVector out;
  out.degree = u.degree;
  for (const auto& [la, w] : u.coeff) out.add(la, c * w);
  return out;
}

// Bilinear product resolved through Littlewood-Richardson coefficients.
inline SchurVector multiply_schur(const SchurVector& u, const SchurVector& v) {
  SchurVector out;
  out.degree = u.degree + v.degree;
  if (u.coeff.empty() || v.coeff.empty()) return out;
  auto nus = enumerate_partitions(out.degree);
  for (const auto& [a, ca] : u.coeff)
    for (const auto& [b, cb] : v.coeff) {
      RatFn c = ca * cb;
      for (const auto& nu : nus) {
        Int lr = lr_coefficient(a, b, nu);
        if (lr != 0) out.add(nu, c * RatFn(lr));
      }
    }
  return out;
}

namespace detail {

// Kostka matrix K[i][j] = K_{la_i, la_j}(t) on a dominance-compatible
// order (ascending lexicographic puts every dominance-smaller partition
// first), together with its unitriangular inverse over Z[t].
struct KostkaTables {
  std::vector<Partition> order;
  std::map<Partition, int> index;
  std::vector<std::vector<IntPoly>> K;
  std::vector<std::vector<IntPoly>> Kinv;
};

inline const KostkaTables& kostka_tables(int n) {
  static thread_local std::map<int, KostkaTables> cache;
  auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;

  KostkaTables T;
  T.order = enumerate_partitions(n);
  std::sort(T.order.begin(), T.order.end());
  int m = (int)T.order.size();
  for (int i = 0; i < m; ++i) T.index.emplace(T.order[i], i);
  T.K.assign(m, std::vector<IntPoly>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j) T.K[i][j] = kostka_charge(T.order[i], T.order[j]);
  T.Kinv.assign(m, std::vector<IntPoly>(m));
  for (int i = 0; i < m; ++i) {
    T.Kinv[i][i] = IntPoly(1);
    for (int j = i - 1; j >= 0; --j) {
      IntPoly acc;
      for (int k = j; k < i; ++k) acc += T.K[i][k] * T.Kinv[k][j];
      T.Kinv[i][j] = -acc;
    }
  }
  return cache.emplace(n, std::move(T)).first->second;
}

}  // namespace detail

// P_mu(y;t) in the Schur basis: row mu of the inverse Kostka matrix.
// Coefficients lie in Z[t] and the vector is unitriangular against
// dominance with P_mu = s_mu + (strictly smaller terms).
inline SchurVector hl_in_schur(const Partition& mu) {
  const auto& T = detail::kostka_tables(mu.sum());
  int i = T.index.at(mu);
  SchurVector out;
  out.degree = mu.sum();
  for (int j = 0; j <= i; ++j)
    if (!T.Kinv[i][j].is_zero()) out.coeff.emplace(T.order[j], RatFn(T.Kinv[i][j]));
  return out;
}

// Coefficient of P_la when the Schur-basis vector u is re-expanded in the
// Hall-Littlewood basis: sum_gamma u_gamma K_{gamma,la}(t).
inline RatFn hl_coefficient(const SchurVector& u, const Partition& la) {
  const auto& T = detail::kostka_tables(u.degree);
  int j = T.index.at(la);
  RatFn acc;
  for (const auto& [gamma, w] : u.coeff) {
    int i = T.index.at(gamma);
    if (i >= j && !T.K[i][j].is_zero()) acc = acc + w * RatFn(T.K[i][j]);
  }
  return acc;
}

// Structure constant in P_mu P_nu = sum_la f^la_{mu nu}(t) P_la.
inline IntPoly f_poly(const Partition& mu, const Partition& nu, const Partition& la) {
  if (mu.sum() + nu.sum() != la.sum())
    throw std::invalid_argument("f_poly: size mismatch");
  SchurVector prod = multiply_schur(hl_in_schur(mu), hl_in_schur(nu));
  return hl_coefficient(prod, la).as_poly();
}

// Classical Hall polynomial g^la_{mu nu}(t) = t^{n(la)-n(mu)-n(nu)}
// f^la_{mu nu}(1/t); nonzero instances are ordinary polynomials of exactly
// that degree with the Littlewood-Richardson number as leading coefficient.
inline IntPoly g_hall(const Partition& mu, const Partition& nu, const Partition& la) {
  IntPoly f = f_poly(mu, nu, la);
  if (f.is_zero()) return f;
  long long d = n_stat(la) - n_stat(mu) - n_stat(nu);
  IntPoly g = f.reciprocal().shifted((int)d);
  if (!g.is_ordinary())
    throw std::domain_error("g_hall: negative exponents after the degree twist");
  return g;
}

// Scalar product with <p_rho, p_sigma>_t = delta_{rho sigma} z_rho
// prod_i (1 - t^{rho_i})^{-1}; at t=0 this is the classical product in
// which the Schur basis is orthonormal.
inline RatFn scalar_product_t(const SchurVector& u, const SchurVector& v) {
  if (u.degree != v.degree)
    throw std::invalid_argument("scalar_product_t: degree mismatch");
  RatFn total;
  for (const auto& rho : enumerate_partitions(u.degree)) {
    RatFn ur, vr;
    for (const auto& [la, c] : u.coeff) {
      long long chi = sn_character(la, rho);
      if (chi != 0) ur = ur + c * RatFn(chi);
    }
    if (ur.is_zero()) continue;
    for (const auto& [la, c] : v.coeff) {
      long long chi = sn_character(la, rho);
      if (chi != 0) vr = vr + c * RatFn(chi);
    }
    if (vr.is_zero()) continue;
    IntPoly den(z_int(rho));
    for (int part : rho.parts()) den = den * (IntPoly(1) - IntPoly::t_power(part));
    total = total + ur * vr * RatFn(IntPoly(1), den);
  }
  return total;
}

}  // namespace dkostka
