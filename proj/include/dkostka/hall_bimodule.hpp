#pragma once

// The Hall bimodule: a free Z[t]-module on pairs of partitions carrying
// left and right actions of the classical Hall algebra. The mixed basis
// R_Nu(x;t) = P_{nu'}(x^(1);t^2) P_{nu''}(x^(2);t^2) links the module to
// two-alphabet Hall-Littlewood theory; its transition matrix h to the
// P_La(x;t) basis produces generalized Hall polynomials g, and the action
// polynomials H and G come from multiplying single-alphabet functions into
// the mix. All entries live in Z[t] with parity constraints tied to the
// statistic a(La); every degree shift is checked, never assumed.

#include <dkostka/double_symfunc.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dkostka {

// Element of the bimodule in its defining basis: homogeneous of the given
// degree, coefficients in Z[t], zero coefficients never stored.
struct MElement {
  int degree = 0;
  std::map<DoublePartition, IntPoly> coeff;

  void add(const DoublePartition& la, const IntPoly& c) {
    if (c.is_zero()) return;
    IntPoly& slot = coeff[la];
    slot += c;
    if (slot.is_zero()) coeff.erase(la);
  }
  const IntPoly& get(const DoublePartition& la) const {
    static const IntPoly zero;
    auto it = coeff.find(la);
    return it == coeff.end() ? zero : it->second;
  }
  bool operator==(const MElement& o) const { return degree == o.degree && coeff == o.coeff; }
  bool operator!=(const MElement& o) const { return !(*this == o); }
};

inline MElement m_unit(const DoublePartition& la) {
  MElement m;
  m.degree = la.sum();
  m.coeff.emplace(la, IntPoly(1));
  return m;
}

// Element of the Hall algebra over Z[t] in its partition basis.
struct HElement {
  int degree = 0;
  std::map<Partition, IntPoly> coeff;

  void add(const Partition& al, const IntPoly& c) {
    if (c.is_zero()) return;
    IntPoly& slot = coeff[al];
    slot += c;
    if (slot.is_zero()) coeff.erase(al);
  }
  const IntPoly& get(const Partition& al) const {
    static const IntPoly zero;
    auto it = coeff.find(al);
    return it == coeff.end() ? zero : it->second;
  }
  bool operator==(const HElement& o) const { return degree == o.degree && coeff == o.coeff; }
  bool operator!=(const HElement& o) const { return !(*this == o); }
};

inline HElement hall_unit(const Partition& al) {
  HElement h;
  h.degree = al.sum();
  h.coeff.emplace(al, IntPoly(1));
  return h;
}

inline HElement hall_product(const HElement& x, const HElement& y) {
  HElement out;
  out.degree = x.degree + y.degree;
  for (const auto& [be, cb] : x.coeff)
    for (const auto& [ga, cg] : y.coeff) {
      IntPoly w = cb * cg;
      for (const auto& al : enumerate_partitions(be.sum() + ga.sum())) {
        IntPoly g = g_hall(be, ga, al);
        if (!g.is_zero()) out.add(al, w * g);
      }
    }
  return out;
}

namespace detail {

// A polynomial supported on even powers of t, rewritten in t^(1/2).
inline IntPoly halve_exponents(const IntPoly& f, const char* what) {
  if (!f.is_ordinary() || !f.exponents_congruent(0, 2))
    throw std::domain_error(std::string(what) + ": exponent parity violation: " + f.str());
  IntPoly g;
  for (const auto& [e, c] : f.terms()) g += IntPoly::term(c, e / 2);
  return g;
}

}  // namespace detail

// Transition data between the mixed basis R_Nu and the two-alphabet
// Hall-Littlewood basis at a fixed degree: R_Nu = sum_Mu h[Mu][Nu] P_Mu,
// unitriangular against dominance, together with its inverse.
struct HTransition {
  int n = 0;
  std::vector<DoublePartition> order;  // total_order(n), greatest first
  std::map<DoublePartition, int> index;
  // h[i][j]: coefficient of P_{order[i]} in R_{order[j]}; nonzero only when
  // order[i] <= order[j] in dominance, diagonal 1.
  std::vector<std::vector<IntPoly>> h;
  // hinv[i][j]: coefficient of R_{order[i]} in P_{order[j]}.
  std::vector<std::vector<IntPoly>> hinv;

  const IntPoly& at(const DoublePartition& mu, const DoublePartition& nu) const {
    return h[index.at(mu)][index.at(nu)];
  }
};

inline const HTransition& h_transition(int n) {
  static thread_local std::map<int, HTransition> cache;
  auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;

  const HallLittlewoodBasis& B = double_kostka_matrix(n);
  HTransition T;
  T.n = n;
  T.order = B.order;
  T.index = B.index;
  int m = (int)T.order.size();
  T.h.assign(m, std::vector<IntPoly>(m));
  for (int j = 0; j < m; ++j) {
    const DoublePartition& nu = T.order[j];
    // R_Nu through the schur basis: both single-alphabet expansions at t^2
    std::map<DoublePartition, IntPoly> sc;
    for (const auto& [al, ca] : hl_in_schur(nu.first).coeff)
      for (const auto& [be, cb] : hl_in_schur(nu.second).coeff) {
        IntPoly c = (ca * cb).as_poly().subst_power(2);
        IntPoly& slot = sc[DoublePartition(al, be)];
        slot += c;
      }
    for (int i = 0; i < m; ++i) {
      IntPoly acc;
      for (const auto& [la, c] : sc) acc += c * B.kostka(la, T.order[i]);
      if (acc.is_zero()) continue;
      if (!double_dominance_le(T.order[i], nu))
        throw std::logic_error("h_transition: support escapes dominance");
      T.h[i][j] = std::move(acc);
    }
    if (T.h[j][j] != IntPoly(1))
      throw std::logic_error("h_transition: diagonal is not one");
  }
  T.hinv.assign(m, std::vector<IntPoly>(m));
  for (int j = 0; j < m; ++j) {
    T.hinv[j][j] = IntPoly(1);
    for (int i = j + 1; i < m; ++i) {
      IntPoly acc;
      for (int k = j; k < i; ++k)
        if (!T.h[i][k].is_zero() && !T.hinv[k][j].is_zero()) acc += T.h[i][k] * T.hinv[k][j];
      T.hinv[i][j] = IntPoly() - acc;
    }
  }
  return cache.emplace(n, std::move(T)).first->second;
}

// Generalized Hall polynomial from the degree-twisted reciprocal of h:
// h^Mu_Nu(t) = t^{a(Mu) - a(Nu)} g^Mu_Nu(t^{-2}).
inline IntPoly g_double(const DoublePartition& mu, const DoublePartition& nu) {
  if (mu.sum() != nu.sum()) throw std::invalid_argument("g_double: size mismatch");
  const IntPoly& h = h_transition(mu.sum()).at(mu, nu);
  if (h.is_zero()) return h;
  IntPoly F = h.reciprocal().shifted((int)(a_stat(mu) - a_stat(nu)));
  return detail::halve_exponents(F, "g_double");
}

// Coefficients of P_alpha(x^(1);t^2) P_Mu(x;t) on the P basis, through the
// factorization over the mixed basis: expand P_Mu in R, multiply the first
// alphabet, return to P.
inline std::map<DoublePartition, IntPoly> H_left(const Partition& alpha, const DoublePartition& mu) {
  int n = mu.sum();
  int big = n + alpha.sum();
  const HTransition& hn = h_transition(n);
  const HTransition& hb = h_transition(big);
  std::map<DoublePartition, IntPoly> out;
  int j = hn.index.at(mu);
  for (int i = 0; i < (int)hn.order.size(); ++i) {
    if (hn.hinv[i][j].is_zero()) continue;
    const DoublePartition& nu = hn.order[i];
    for (const auto& xi : enumerate_partitions(alpha.sum() + nu.first.sum())) {
      IntPoly f = f_poly(alpha, nu.first, xi);
      if (f.is_zero()) continue;
      IntPoly w = hn.hinv[i][j] * f.subst_power(2);
      int col = hb.index.at(DoublePartition(xi, nu.second));
      for (int r = 0; r < (int)hb.order.size(); ++r)
        if (!hb.h[r][col].is_zero()) {
          IntPoly& slot = out[hb.order[r]];
          slot += w * hb.h[r][col];
        }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Same with the roles of the alphabets exchanged: P_Mu(x;t) P_alpha(x^(2);t^2).
inline std::map<DoublePartition, IntPoly> H_right(const DoublePartition& mu, const Partition& alpha) {
  int n = mu.sum();
  int big = n + alpha.sum();
  const HTransition& hn = h_transition(n);
  const HTransition& hb = h_transition(big);
  std::map<DoublePartition, IntPoly> out;
  int j = hn.index.at(mu);
  for (int i = 0; i < (int)hn.order.size(); ++i) {
    if (hn.hinv[i][j].is_zero()) continue;
    const DoublePartition& nu = hn.order[i];
    for (const auto& xi : enumerate_partitions(alpha.sum() + nu.second.sum())) {
      IntPoly f = f_poly(alpha, nu.second, xi);
      if (f.is_zero()) continue;
      IntPoly w = hn.hinv[i][j] * f.subst_power(2);
      int col = hb.index.at(DoublePartition(nu.first, xi));
      for (int r = 0; r < (int)hb.order.size(); ++r)
        if (!hb.h[r][col].is_zero()) {
          IntPoly& slot = out[hb.order[r]];
          slot += w * hb.h[r][col];
        }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Independent route for the same coefficients, staying in the schur basis
// the whole way; used to cross-check the factorized computation.
inline std::map<DoublePartition, IntPoly> H_left_via_schur(const Partition& alpha,
                                                           const DoublePartition& mu) {
  int big = mu.sum() + alpha.sum();
  XiVector a;
  a.degree = alpha.sum();
  for (const auto& [ga, c] : hl_in_schur(alpha).coeff)
    a.add(DoublePartition(ga, Partition{}), c.subst_power(2));
  XiVector prod = multiply_xi(a, double_kostka_matrix(mu.sum()).p_vector(mu));
  const HallLittlewoodBasis& B = double_kostka_matrix(big);
  std::map<DoublePartition, IntPoly> out;
  for (const auto& la : B.order) {
    RatFn acc;
    for (const auto& [l, c] : prod.coeff) acc = acc + c * RatFn(B.kostka(l, la));
    if (!acc.is_zero()) out.emplace(la, acc.as_poly());
  }
  return out;
}

inline std::map<DoublePartition, IntPoly> H_right_via_schur(const DoublePartition& mu,
                                                            const Partition& alpha) {
  int big = mu.sum() + alpha.sum();
  XiVector a;
  a.degree = alpha.sum();
  for (const auto& [ga, c] : hl_in_schur(alpha).coeff)
    a.add(DoublePartition(Partition{}, ga), c.subst_power(2));
  XiVector prod = multiply_xi(a, double_kostka_matrix(mu.sum()).p_vector(mu));
  const HallLittlewoodBasis& B = double_kostka_matrix(big);
  std::map<DoublePartition, IntPoly> out;
  for (const auto& la : B.order) {
    RatFn acc;
    for (const auto& [l, c] : prod.coeff) acc = acc + c * RatFn(B.kostka(l, la));
    if (!acc.is_zero()) out.emplace(la, acc.as_poly());
  }
  return out;
}

// Left structure constants: G^La_{alpha,Mu}(t^2) = t^{a(La) - a(Mu) - 2n(alpha)}
// H^La_{alpha,Mu}(1/t), returned in the variable t.
inline std::map<DoublePartition, IntPoly> G_left(const Partition& alpha, const DoublePartition& mu) {
  std::map<DoublePartition, IntPoly> out;
  for (const auto& [la, h] : H_left(alpha, mu)) {
    int shift = (int)(a_stat(la) - a_stat(mu) - 2 * n_stat(alpha));
    out.emplace(la, detail::halve_exponents(h.reciprocal().shifted(shift), "G_left"));
  }
  return out;
}

// Right structure constants carry an extra shift by |alpha|: the second
// alphabet enters a(La) through |la''|, so matching gradings requires
// G^La_{Mu,alpha}(t^2) = t^{a(La) - a(Mu) - 2n(alpha) - |alpha|} H^La_{Mu,alpha}(1/t).
inline std::map<DoublePartition, IntPoly> G_right(const DoublePartition& mu, const Partition& alpha) {
  std::map<DoublePartition, IntPoly> out;
  for (const auto& [la, h] : H_right(mu, alpha)) {
    int shift = (int)(a_stat(la) - a_stat(mu) - 2 * n_stat(alpha)) - alpha.sum();
    out.emplace(la, detail::halve_exponents(h.reciprocal().shifted(shift), "G_right"));
  }
  return out;
}

inline MElement left_action(const Partition& alpha, const MElement& m) {
  MElement out;
  out.degree = m.degree + alpha.sum();
  for (const auto& [mu, c] : m.coeff)
    for (const auto& [la, g] : G_left(alpha, mu)) out.add(la, c * g);
  return out;
}

inline MElement right_action(const MElement& m, const Partition& alpha) {
  MElement out;
  out.degree = m.degree + alpha.sum();
  for (const auto& [mu, c] : m.coeff)
    for (const auto& [la, g] : G_right(mu, alpha)) out.add(la, c * g);
  return out;
}

inline MElement left_action(const HElement& x, const MElement& m) {
  MElement out;
  out.degree = m.degree + x.degree;
  for (const auto& [al, c] : x.coeff) {
    MElement part = left_action(al, m);
    for (const auto& [la, v] : part.coeff) out.add(la, c * v);
  }
  return out;
}

inline MElement right_action(const MElement& m, const HElement& x) {
  MElement out;
  out.degree = m.degree + x.degree;
  for (const auto& [al, c] : x.coeff) {
    MElement part = right_action(m, al);
    for (const auto& [la, v] : part.coeff) out.add(la, c * v);
  }
  return out;
}

// The product basis u_{mu'} u_0 u_{mu''}; its expansion over the defining
// basis is the column g^._Mu, which is unitriangular, so these elements
// form a basis and the bimodule is free of rank one on u_0.
inline MElement fv_basis(const DoublePartition& mu) {
  MElement m = right_action(m_unit(DoublePartition{}), mu.second);
  return left_action(mu.first, m);
}

// Image of the defining basis under the module isomorphism onto symmetric
// functions: t^{-a(La)} P_La(x;1/t), a Laurent-coefficient schur vector.
inline XiVector psi_image(const DoublePartition& la) {
  const HallLittlewoodBasis& B = double_kostka_matrix(la.sum());
  int i = B.index.at(la);
  XiVector out;
  out.degree = la.sum();
  for (int j = 0; j < (int)B.order.size(); ++j)
    if (!B.u[i][j].is_zero())
      out.add(B.order[j], RatFn(B.u[i][j].reciprocal().shifted(-(int)a_stat(la))));
  return out;
}

// Reconstructs every modified double Kostka polynomial at degree n from
// generalized Hall polynomials and pairs of classical modified Kostka
// polynomials; the grading shift collapses to t^{|la''|}.
inline bool check_ah_formula(int n) {
  const HallLittlewoodBasis& B = double_kostka_matrix(n);
  for (const auto& la : B.order)
    for (const auto& mu : B.order) {
      IntPoly rhs;
      for (const auto& nu1 : enumerate_partitions(la.first.sum()))
        for (const auto& nu2 : enumerate_partitions(la.second.sum())) {
          IntPoly g = g_double(mu, DoublePartition(nu1, nu2));
          if (g.is_zero()) continue;
          rhs += g.subst_power(2) * kostka_modified_single(la.first, nu1).subst_power(2) *
                 kostka_modified_single(la.second, nu2).subst_power(2);
        }
      rhs = rhs.shifted(la.second.sum());
      if (rhs != B.kostka_modified(la, mu)) return false;
    }
  return true;
}

}  // namespace dkostka
