#pragma once

// Two-alphabet symmetric function ring in fixed homogeneous degree n.
// Elements are stored in the Schur basis s_La = s_{la'}(x1) s_{la''}(x2)
// indexed by double partitions. The t-deformed scalar product is diagonal
// on the p_La basis built from half-sum and half-difference power sums;
// Gram-Schmidt against it produces the Hall-Littlewood vectors P_La(x;t)
// and the double Kostka matrix, together with the reduction identities
// that collapse one alphabet.

#include <dkostka/intpoly.hpp>
#include <dkostka/partition.hpp>
#include <dkostka/ratfn.hpp>
#include <dkostka/symfunc.hpp>
#include <dkostka/tableaux.hpp>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dkostka {

// Element of the degree-n piece in the s_La basis; zero entries never stored.
struct XiVector {
  int degree = 0;
  std::map<DoublePartition, RatFn> coeff;

  void add(const DoublePartition& la, const RatFn& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeff.try_emplace(la, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) coeff.erase(it);
    }
  }
  RatFn get(const DoublePartition& la) const {
    auto it = coeff.find(la);
    return it == coeff.end() ? RatFn() : it->second;
  }
  bool is_zero() const { return coeff.empty(); }
  bool operator==(const XiVector& o) const {
    return degree == o.degree && coeff == o.coeff;
  }
  bool operator!=(const XiVector& o) const { return !(*this == o); }
};

inline XiVector xi_unit(const DoublePartition& la) {
  XiVector v;
  v.degree = la.first.sum() + la.second.sum();
  v.coeff.emplace(la, RatFn(1));
  return v;
}

inline XiVector operator+(const XiVector& u, const XiVector& v) {
  if (u.degree != v.degree)
    throw std::invalid_argument("XiVector: degree mismatch in sum");
  XiVector out(u);
  for (const auto& [la, c] : v.coeff) out.add(la, c);
  return out;
}

inline XiVector operator-(const XiVector& u, const XiVector& v) {
  if (u.degree != v.degree)
    throw std::invalid_argument("XiVector: degree mismatch in difference");
  XiVector out(u);
  for (const auto& [la, c] : v.coeff) out.add(la, RatFn() - c);
  return out;
}

inline XiVector operator*(const RatFn& c, const XiVector& u) {
  XiVector out;
  out.degree = u.degree;
  for (const auto& [la, w] : u.coeff) out.add(la, c * w);
  return out;
}

// Product in the ring: alphabets multiply independently, so
// s_La s_Mu = sum c^{a}_{la' mu'} c^{b}_{la'' mu''} s_{(a;b)}.
inline XiVector multiply_xi(const XiVector& u, const XiVector& v) {
  XiVector out;
  out.degree = u.degree + v.degree;
  if (u.coeff.empty() || v.coeff.empty()) return out;
  for (const auto& [a, ca] : u.coeff)
    for (const auto& [b, cb] : v.coeff) {
      RatFn c = ca * cb;
      int d1 = a.first.sum() + b.first.sum();
      int d2 = a.second.sum() + b.second.sum();
      for (const auto& al : enumerate_partitions(d1)) {
        Int c1 = lr_coefficient(a.first, b.first, al);
        if (c1 == 0) continue;
        for (const auto& be : enumerate_partitions(d2)) {
          Int c2 = lr_coefficient(a.second, b.second, be);
          if (c2 == 0) continue;
          out.add(DoublePartition(al, be), c * RatFn(c1 * c2));
        }
      }
    }
  return out;
}

// Rational expansion over the p_La basis.
struct DoublePowerExpansion {
  int degree = 0;
  std::map<DoublePartition, Rational> coeff;

  Rational get(const DoublePartition& la) const {
    auto it = coeff.find(la);
    return it == coeff.end() ? Rational(0) : it->second;
  }
};

// Expand s_La over the p_Mu basis. Each one-alphabet power sum splits as
// p_r(x1) = (p1_r + p2_r)/2 and p_r(x2) = (p1_r - p2_r)/2, so every part of
// the cycle types (rho, sigma) independently lands in the first or second
// slot, with a sign for sigma-parts landing in the second.
inline DoublePowerExpansion s_to_p_double(const DoublePartition& la) {
  DoublePowerExpansion out;
  out.degree = la.first.sum() + la.second.sum();
  for (const auto& rho : enumerate_partitions(la.first.sum())) {
    long long chi1 = sn_character(la.first, rho);
    if (chi1 == 0) continue;
    for (const auto& sigma : enumerate_partitions(la.second.sum())) {
      long long chi2 = sn_character(la.second, sigma);
      if (chi2 == 0) continue;
      int l1 = rho.length(), l2 = sigma.length();
      Rational half = Rational(chi1) / Rational(z_int(rho)) *
                      Rational(chi2) / Rational(z_int(sigma));
      for (int i = 0; i < l1 + l2; ++i) half /= 2;
      for (unsigned long mask = 0; mask < (1ul << (l1 + l2)); ++mask) {
        std::vector<int> slot1, slot2;
        int sign = 1;
        for (int i = 0; i < l1; ++i) {
          if (mask & (1ul << i)) slot2.push_back(rho.part(i));
          else slot1.push_back(rho.part(i));
        }
        for (int j = 0; j < l2; ++j) {
          if (mask & (1ul << (l1 + j))) { slot2.push_back(sigma.part(j)); sign = -sign; }
          else slot1.push_back(sigma.part(j));
        }
        std::sort(slot1.begin(), slot1.end(), std::greater<int>());
        std::sort(slot2.begin(), slot2.end(), std::greater<int>());
        DoublePartition key{Partition(slot1), Partition(slot2)};
        Rational term = sign > 0 ? half : -half;
        auto [it, fresh] = out.coeff.try_emplace(key, term);
        if (!fresh) {
          it->second += term;
          if (it->second == 0) out.coeff.erase(it);
        }
      }
    }
  }
  return out;
}

namespace detail {

// Per-degree caches: p-expansions of the Schur basis and the s-basis Gram
// matrix under <p_La, p_Mu> = delta z_La(t).
struct XiGram {
  std::vector<DoublePartition> order;  // total_order(n): greatest first
  std::map<DoublePartition, int> index;
  std::vector<DoublePowerExpansion> p_of_s;
  std::vector<std::vector<RatFn>> gram;
  std::vector<RatFn> z;  // z_La(t) aligned with a p-basis key list
  std::vector<DoublePartition> pkeys;
  std::map<DoublePartition, int> pindex;
};

inline const XiGram& xi_gram(int n) {
  static thread_local std::map<int, XiGram> cache;
  auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;

  XiGram G;
  G.order = total_order(n);
  int m = (int)G.order.size();
  for (int i = 0; i < m; ++i) G.index.emplace(G.order[i], i);
  G.pkeys = enumerate_double_partitions(n);
  for (int i = 0; i < (int)G.pkeys.size(); ++i) G.pindex.emplace(G.pkeys[i], i);
  for (const auto& key : G.pkeys) G.z.push_back(z_double(key));
  G.p_of_s.reserve(m);
  for (const auto& la : G.order) G.p_of_s.push_back(s_to_p_double(la));
  G.gram.assign(m, std::vector<RatFn>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      RatFn acc;
      for (const auto& [key, a] : G.p_of_s[i].coeff) {
        Rational b = G.p_of_s[j].get(key);
        if (b == 0) continue;
        acc = acc + RatFn::from_rational(a * b) * G.z[G.pindex.at(key)];
      }
      G.gram[i][j] = acc;
      G.gram[j][i] = acc;
    }
  return cache.emplace(n, std::move(G)).first->second;
}

}  // namespace detail

// <u, v> with <p_La, p_Mu> = delta_{La Mu} z_La(t).
inline RatFn inner_product(const XiVector& u, const XiVector& v) {
  if (u.degree != v.degree)
    throw std::invalid_argument("inner_product: degree mismatch");
  const auto& G = detail::xi_gram(u.degree);
  RatFn total;
  for (const auto& [la, cu] : u.coeff) {
    int i = G.index.at(la);
    for (const auto& [mu, cv] : v.coeff)
      total = total + cu * cv * G.gram[i][G.index.at(mu)];
  }
  return total;
}

// Hall-Littlewood family P_La(x;t) for all La of size n, plus the double
// Kostka matrix K with s_La = sum_Mu K_{La,Mu}(t) P_Mu, both stored on a
// fixed dominance-compatible order (greatest first).
struct HallLittlewoodBasis {
  int n = 0;
  std::vector<DoublePartition> order;
  std::map<DoublePartition, int> index;
  // u[i][j]: coefficient of s_{order[j]} in P_{order[i]}; zero unless j >= i
  // in this order (triangularity against dominance), u[i][i] = 1.
  std::vector<std::vector<IntPoly>> u;
  // K[i][j] = K_{order[i], order[j]}(t), the inverse transition.
  std::vector<std::vector<IntPoly>> K;

  XiVector p_vector(const DoublePartition& la) const {
    int i = index.at(la);
    XiVector out;
    out.degree = n;
    for (int j = 0; j < (int)order.size(); ++j)
      if (!u[i][j].is_zero()) out.coeff.emplace(order[j], RatFn(u[i][j]));
    return out;
  }
  const IntPoly& kostka(const DoublePartition& la, const DoublePartition& mu) const {
    return K[index.at(la)][index.at(mu)];
  }
  IntPoly kostka_modified(const DoublePartition& la, const DoublePartition& mu) const {
    const IntPoly& k = kostka(la, mu);
    if (k.is_zero()) return k;
    return k.reciprocal().shifted((int)a_stat(mu));
  }
};

// Gram-Schmidt along a linear extension of double dominance, processed from
// the minimal element upward so each P_La sees only strictly smaller P's.
// The computed coefficients are asserted to be polynomials in t.
inline HallLittlewoodBasis gram_schmidt_hl_on(int n, const std::vector<DoublePartition>& order) {
  const auto& G = detail::xi_gram(n);
  int m = (int)order.size();
  HallLittlewoodBasis B;
  B.n = n;
  B.order = order;
  for (int i = 0; i < m; ++i) B.index.emplace(order[i], i);

  // coefficients of P over the s basis, indexed like `order`
  std::vector<std::vector<RatFn>> p(m, std::vector<RatFn>(m));
  std::vector<RatFn> selfdot(m);
  auto sdot = [&](int si, const std::vector<RatFn>& vec) {
    // <s_{order[si]}, vec> through the cached Gram matrix
    RatFn acc;
    int gi = G.index.at(order[si]);
    for (int j = 0; j < m; ++j) {
      if (vec[j].is_zero()) continue;
      acc = acc + vec[j] * G.gram[gi][G.index.at(order[j])];
    }
    return acc;
  };

  for (int i = m - 1; i >= 0; --i) {  // minimal element sits at the back
    std::vector<RatFn> cur(m);
    cur[i] = RatFn(1);
    for (int k = m - 1; k > i; --k) {
      // subtract the projection onto the already built P_{order[k]}
      RatFn num = sdot(i, p[k]);
      if (num.is_zero()) continue;
      RatFn c = num / selfdot[k];
      for (int j = 0; j < m; ++j)
        if (!p[k][j].is_zero()) cur[j] = cur[j] - c * p[k][j];
    }
    selfdot[i] = sdot(i, cur);
    if (selfdot[i].is_zero())
      throw std::domain_error("gram_schmidt_hl: degenerate self inner product");
    p[i] = std::move(cur);
  }

  B.u.assign(m, std::vector<IntPoly>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (p[i][j].is_zero()) continue;
      B.u[i][j] = p[i][j].as_poly();  // throws unless the entry lies in Z[t]
      if (j < i || (i != j && !double_dominance_le(order[j], order[i])))
        throw std::domain_error("gram_schmidt_hl: support violates dominance");
    }

  // K = u^{-1}, also upper unitriangular on this order.
  B.K.assign(m, std::vector<IntPoly>(m));
  for (int j = 0; j < m; ++j) {
    B.K[j][j] = IntPoly(1);
    for (int i = j - 1; i >= 0; --i) {
      IntPoly acc;
      for (int k = i + 1; k <= j; ++k)
        if (!B.u[i][k].is_zero() && !B.K[k][j].is_zero()) acc += B.u[i][k] * B.K[k][j];
      B.K[i][j] = -acc;
    }
  }
  return B;
}

inline const HallLittlewoodBasis& gram_schmidt_hl(int n, bool alternate = false) {
  static thread_local std::map<std::pair<int, bool>, HallLittlewoodBasis> cache;
  auto key = std::make_pair(n, alternate);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;
  auto B = gram_schmidt_hl_on(n, total_order(n, alternate));
  return cache.emplace(key, std::move(B)).first->second;
}

inline const HallLittlewoodBasis& double_kostka_matrix(int n) {
  return gram_schmidt_hl(n, false);
}

// K_{(-;la''),(-;mu'')}(t) = K_{la'' mu''}(t^2) entrywise, and
// P_{(-;la'')}(x;t) = P_{la''}(x2;t^2).
inline bool check_empty_first_reduction(int n) {
  const auto& B = double_kostka_matrix(n);
  for (const auto& la : enumerate_partitions(n)) {
    DoublePartition La{Partition{}, la};
    XiVector expect;
    expect.degree = n;
    for (const auto& [mu, c] : hl_in_schur(la).coeff)
      expect.coeff.emplace(DoublePartition{Partition{}, mu}, c.subst_power(2));
    if (B.p_vector(La) != expect) return false;
    for (const auto& mu : enumerate_partitions(n)) {
      DoublePartition Mu{Partition{}, mu};
      if (B.kostka(La, Mu) != kostka_charge(la, mu).subst_power(2)) return false;
    }
  }
  return true;
}

// Modified one-alphabet Kostka polynomial t^{n(mu)} K_{la mu}(1/t).
inline IntPoly kostka_modified_single(const Partition& la, const Partition& mu) {
  IntPoly k = kostka_charge(la, mu);
  if (k.is_zero()) return k;
  return k.reciprocal().shifted((int)n_stat(mu));
}

// Modified rows of (la';-) collapse to one alphabet on partwise sums:
// Kt_{(la';-),Mu}(t) = Kt_{la', mu'+mu''}(t^2); and the coproduct-style
// expansion P_nu(x1;t^2) = sum_{nu = mu'+mu''} t^{|mu''|} P_{(mu';mu'')}(x;t).
inline bool check_empty_second_reduction(int n) {
  const auto& B = double_kostka_matrix(n);
  for (const auto& la : enumerate_partitions(n)) {
    DoublePartition La{la, Partition{}};
    for (const auto& Mu : B.order) {
      Partition sum = Mu.first.plus(Mu.second);
      if (B.kostka_modified(La, Mu) != kostka_modified_single(la, sum).subst_power(2))
        return false;
    }
  }
  for (const auto& nu : enumerate_partitions(n)) {
    XiVector lhs;
    lhs.degree = n;
    for (const auto& [mu, c] : hl_in_schur(nu).coeff)
      lhs.coeff.emplace(DoublePartition{mu, Partition{}}, c.subst_power(2));
    XiVector rhs;
    rhs.degree = n;
    for (const auto& Mu : B.order) {
      if (Mu.first.plus(Mu.second) != nu) continue;
      rhs = rhs + RatFn(IntPoly::t_power(Mu.second.sum())) * B.p_vector(Mu);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

// P_Mu(x;1) specialized along x = (y,y): both alphabets collapse to one.
// The result is returned as a coefficient map on the MONOMIAL basis m_mu
// of the one-alphabet ring (SchurVector reused as a plain keyed vector).
inline SchurVector specialize_diagonal_t1(const DoublePartition& mu) {
  int n = mu.first.sum() + mu.second.sum();
  const auto& B = double_kostka_matrix(n);
  int i = B.index.at(mu);
  SchurVector in_schur;
  in_schur.degree = n;
  for (int j = 0; j < (int)B.order.size(); ++j) {
    if (B.u[i][j].is_zero()) continue;
    RatFn c(IntPoly(B.u[i][j].eval_one()));
    in_schur = in_schur + c * multiply_schur(schur_unit(B.order[j].first),
                                             schur_unit(B.order[j].second));
  }
  SchurVector monomial;
  monomial.degree = n;
  for (const auto& [la, c] : in_schur.coeff)
    for (const auto& m : enumerate_partitions(n)) {
      Int k = count_sst(la, m.parts());
      if (k != 0) monomial.add(m, c * RatFn(k));
    }
  return monomial;
}

// One-alphabet monomial functions viewed inside the two-alphabet ring:
// m_nu(x1) = sum_mu Kinv(1)_{nu mu} s_{(mu;-)}, and likewise on x2.
inline XiVector monomial_in_xi(const Partition& nu, int alphabet) {
  XiVector out;
  out.degree = nu.sum();
  for (const auto& [mu, c] : hl_in_schur(nu).coeff) {
    RatFn c1(IntPoly(c.as_poly().eval_one()));
    if (alphabet == 1)
      out.add(DoublePartition{mu, Partition{}}, c1);
    else
      out.add(DoublePartition{Partition{}, mu}, c1);
  }
  return out;
}

// m_nu(x1) = m_nu(x2) + sum over proper splittings nu = mu'+mu'' with
// mu' nonempty of P_{(mu';mu'')}(x;1).
inline bool check_monomial_split(int n) {
  const auto& B = double_kostka_matrix(n);
  for (const auto& nu : enumerate_partitions(n)) {
    XiVector rhs = monomial_in_xi(nu, 2);
    for (const auto& Mu : B.order) {
      if (Mu.first.empty() || Mu.first.plus(Mu.second) != nu) continue;
      int i = B.index.at(Mu);
      XiVector at1;
      at1.degree = n;
      for (int j = 0; j < (int)B.order.size(); ++j)
        if (!B.u[i][j].is_zero())
          at1.add(B.order[j], RatFn(IntPoly(B.u[i][j].eval_one())));
      rhs = rhs + at1;
    }
    if (rhs != monomial_in_xi(nu, 1)) return false;
  }
  return true;
}

// K_{La,(-;mu'')}(t) through the one-alphabet Hall structure, both as
//   t^{|la'|} sum f^{mu''}_{nu' nu''}(t^2) K_{la' nu'}(t^2) K_{la'' nu''}(t^2)
// and as
//   t^{|la'|} sum_eta c^eta_{la' la''} K_{eta, mu''}(t^2);
// the two must agree, and the caller checks them against the matrix entry.
inline IntPoly double_kostka_via_hall(const DoublePartition& la, const Partition& mu2) {
  int n = mu2.sum();
  if (la.first.sum() + la.second.sum() != n)
    throw std::invalid_argument("double_kostka_via_hall: size mismatch");
  IntPoly first;
  for (const auto& nu1 : enumerate_partitions(la.first.sum())) {
    IntPoly k1 = kostka_charge(la.first, nu1);
    if (k1.is_zero()) continue;
    for (const auto& nu2 : enumerate_partitions(la.second.sum())) {
      IntPoly k2 = kostka_charge(la.second, nu2);
      if (k2.is_zero()) continue;
      IntPoly f = f_poly(nu1, nu2, mu2);
      if (f.is_zero()) continue;
      first += f.subst_power(2) * k1.subst_power(2) * k2.subst_power(2);
    }
  }
  first = first.shifted(la.first.sum());

  IntPoly second;
  for (const auto& eta : enumerate_partitions(n)) {
    Int c = lr_coefficient(la.first, la.second, eta);
    if (c == 0) continue;
    IntPoly k = kostka_charge(eta, mu2);
    if (k.is_zero()) continue;
    IntPoly term = k.subst_power(2);
    second += term * IntPoly(c);
  }
  second = second.shifted(la.first.sum());

  if (first != second)
    throw std::domain_error("double_kostka_via_hall: formulas disagree");
  return first;
}

}  // namespace dkostka
