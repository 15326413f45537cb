#pragma once

// Named identity suites shared by the command line verifier and the
// acceptance run. Each check re-derives one family of identities up to a
// size cap and reports the first counterexample it meets; a thrown
// exception inside a check is converted into a failure, never a crash.

#include <dkostka/hall_bimodule.hpp>
#include <dkostka/lusztig_shoji.hpp>
#include <dkostka/table_io.hpp>
#include <dkostka/tableaux.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace dkostka {

struct VerifyResult {
  std::string name;
  bool pass = true;
  std::string detail;  // first counterexample, empty when the check passes
};

struct VerifyOptions {
  int n = 3;
  bool order_check = false;  // rebuild bases with the alternate total order
};

namespace detail {

// Body returns a counterexample string, empty meaning the identity holds.
template <typename F>
VerifyResult run_check(std::string name, F&& body) {
  VerifyResult r;
  r.name = std::move(name);
  try {
    r.detail = body();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.pass = r.detail.empty();
  return r;
}

inline std::string ranged(const char* what, int cap) {
  std::ostringstream os;
  os << what << " (n <= " << cap << ")";
  return os.str();
}

inline std::string lam_str(const DoublePartition& la) { return render_double_partition(la); }

inline std::string mismatch(int n, const DoublePartition& la, const DoublePartition& mu,
                            const IntPoly& got, const IntPoly& want) {
  std::ostringstream os;
  os << "n=" << n << " la=" << lam_str(la) << " mu=" << lam_str(mu) << ": got " << got.str()
     << " want " << want.str();
  return os.str();
}

}  // namespace detail

// ---- golden suite ----

inline VerifyResult check_golden_table(int m, bool alternate) {
  std::ostringstream name;
  name << "golden table agreement (n=" << m << ")";
  return detail::run_check(name.str(), [&]() -> std::string {
    TableDocument gold = load_table_json_file(golden_table_path(m));
    std::vector<std::string> issues = compare_tables(kostka_table(m, alternate), gold);
    if (issues.empty()) return {};
    std::ostringstream os;
    os << issues.front();
    if (issues.size() > 1) os << " (+" << issues.size() - 1 << " more)";
    return os.str();
  });
}

inline std::vector<VerifyResult> golden_suite(const VerifyOptions& opt) {
  std::vector<VerifyResult> out;
  for (int m = 2; m <= std::min(opt.n, 5); ++m)
    out.push_back(check_golden_table(m, opt.order_check));
  return out;
}

// ---- crossalg suite ----

inline VerifyResult check_solver_agreement(int cap, bool alternate) {
  return detail::run_check(
      detail::ranged("triangular solver reproduces the orthogonalization", cap),
      [&]() -> std::string {
        for (int m = 1; m <= cap; ++m) {
          const HallLittlewoodBasis& B = gram_schmidt_hl(m, alternate);
          SolvedP sp = solve_p_lambda(omega_matrix(m, 2));
          for (const DoublePartition& la : B.order)
            for (const DoublePartition& mu : B.order) {
              IntPoly got = sp.at(la, mu);
              IntPoly want = B.kostka_modified(la, mu);
              if (got != want) return detail::mismatch(m, la, mu, got, want);
            }
        }
        return {};
      });
}

inline VerifyResult check_charge_columns(int cap, bool alternate) {
  return detail::run_check(
      detail::ranged("charge statistic matches empty-first-alphabet columns", cap),
      [&]() -> std::string {
        for (int m = 0; m <= cap; ++m) {
          const HallLittlewoodBasis& B = gram_schmidt_hl(m, alternate);
          for (const DoublePartition& la : B.order)
            for (const Partition& mu2 : enumerate_partitions(m)) {
              DoublePartition mu(Partition{}, mu2);
              IntPoly got = double_kostka_charge(la, mu2);
              if (got != B.kostka(la, mu)) return detail::mismatch(m, la, mu, got, B.kostka(la, mu));
            }
        }
        return {};
      });
}

inline VerifyResult check_hall_columns(int cap, bool alternate) {
  return detail::run_check(
      detail::ranged("classical hall route matches empty-first-alphabet columns", cap),
      [&]() -> std::string {
        for (int m = 0; m <= cap; ++m) {
          const HallLittlewoodBasis& B = gram_schmidt_hl(m, alternate);
          for (const DoublePartition& la : B.order)
            for (const Partition& mu2 : enumerate_partitions(m)) {
              DoublePartition mu(Partition{}, mu2);
              IntPoly got = double_kostka_via_hall(la, mu2);
              if (got != B.kostka(la, mu)) return detail::mismatch(m, la, mu, got, B.kostka(la, mu));
            }
        }
        return {};
      });
}

inline VerifyResult check_order_independence(int cap) {
  return detail::run_check(
      detail::ranged("orthogonalization independent of the linear extension", cap),
      [&]() -> std::string {
        for (int m = 0; m <= cap; ++m) {
          const HallLittlewoodBasis& A = gram_schmidt_hl(m, false);
          const HallLittlewoodBasis& B = gram_schmidt_hl(m, true);
          for (const DoublePartition& la : A.order) {
            if (A.p_vector(la) != B.p_vector(la)) {
              std::ostringstream os;
              os << "n=" << m << " la=" << detail::lam_str(la) << ": basis vectors differ";
              return os.str();
            }
            for (const DoublePartition& mu : A.order)
              if (A.kostka(la, mu) != B.kostka(la, mu))
                return detail::mismatch(m, la, mu, B.kostka(la, mu), A.kostka(la, mu));
          }
        }
        return {};
      });
}

inline VerifyResult check_structural_properties(int cap, bool alternate) {
  return detail::run_check(
      detail::ranged("coefficient positivity, support, degree, and parity", cap),
      [&]() -> std::string {
        for (int m = 0; m <= cap; ++m) {
          const HallLittlewoodBasis& B = gram_schmidt_hl(m, alternate);
          for (const DoublePartition& la : B.order)
            for (const DoublePartition& mu : B.order) {
              const IntPoly& k = B.kostka(la, mu);
              std::ostringstream os;
              os << "n=" << m << " la=" << detail::lam_str(la) << " mu=" << detail::lam_str(mu);
              if (!double_dominance_le(mu, la)) {
                if (!k.is_zero()) return os.str() + ": entry outside the dominance support";
                continue;
              }
              if (k.is_zero()) return os.str() + ": vanishing entry inside the dominance support";
              if (!k.has_nonnegative_coeffs()) return os.str() + ": negative coefficient in " + k.str();
              if (k.leading_coeff() != 1) return os.str() + ": not monic: " + k.str();
              if (k.degree() != a_stat(mu) - a_stat(la)) return os.str() + ": wrong degree: " + k.str();
              if (la == mu && k != IntPoly(1)) return os.str() + ": diagonal entry " + k.str();
              IntPoly kt = B.kostka_modified(la, mu);
              if (!kt.has_nonnegative_coeffs() || kt.valuation() != a_stat(la) ||
                  kt.coeff((int)a_stat(la)) != 1 || kt.degree() > a_stat(mu) ||
                  !kt.exponents_congruent((int)(a_stat(la) % 2), 2))
                return os.str() + ": modified entry fails a shape constraint: " + kt.str();
            }
        }
        return {};
      });
}

inline VerifyResult check_induced_multiplicities(int cap, bool alternate) {
  return detail::run_check(
      detail::ranged("permutation character multiplicities match entries at t=1", cap),
      [&]() -> std::string {
        for (int m = 1; m <= cap; ++m) {
          const HallLittlewoodBasis& B = gram_schmidt_hl(m, alternate);
          for (const Partition& mu2 : enumerate_partitions(m))
            for (const DoublePartition& la : B.order) {
              Int want = B.kostka(la, DoublePartition(Partition{}, mu2)).eval_one();
              Int got(induced_multiplicity(mu2, la));
              if (got != want) {
                std::ostringstream os;
                os << "n=" << m << " la=" << detail::lam_str(la) << " mu=."
                   << render_partition(mu2) << ": multiplicity " << got.str() << " vs value "
                   << want.str();
                return os.str();
              }
            }
        }
        return {};
      });
}

inline std::vector<VerifyResult> crossalg_suite(const VerifyOptions& opt) {
  std::vector<VerifyResult> out;
  out.push_back(check_solver_agreement(std::min(opt.n, 4), opt.order_check));
  out.push_back(check_charge_columns(std::min(opt.n, 5), opt.order_check));
  out.push_back(check_hall_columns(std::min(opt.n, 4), opt.order_check));
  out.push_back(check_order_independence(std::min(opt.n, 4)));
  out.push_back(check_structural_properties(std::min(opt.n, 5), opt.order_check));
  out.push_back(check_induced_multiplicities(std::min(opt.n, 4), opt.order_check));
  return out;
}

// ---- reductions suite ----

inline std::vector<VerifyResult> reductions_suite(const VerifyOptions& opt) {
  int cap = std::min(opt.n, 5);
  std::vector<VerifyResult> out;
  out.push_back(detail::run_check(
      detail::ranged("empty second alphabet collapses to one-alphabet data", cap),
      [&]() -> std::string {
        for (int m = 1; m <= cap; ++m)
          if (!check_empty_second_reduction(m)) return "failed at n=" + std::to_string(m);
        return {};
      }));
  out.push_back(detail::run_check(
      detail::ranged("empty first alphabet matches the shifted classical column", cap),
      [&]() -> std::string {
        for (int m = 1; m <= cap; ++m)
          if (!check_empty_first_reduction(m)) return "failed at n=" + std::to_string(m);
        return {};
      }));
  return out;
}

// ---- specialize suite ----

inline std::vector<VerifyResult> specialize_suite(const VerifyOptions& opt) {
  std::vector<VerifyResult> out;
  int cap = std::min(opt.n, 4);
  out.push_back(detail::run_check(
      detail::ranged("diagonal specialization at t=1 collapses the basis", cap),
      [&]() -> std::string {
        for (int m = 1; m <= cap; ++m)
          for (const DoublePartition& mu : enumerate_double_partitions(m)) {
            SchurVector v = specialize_diagonal_t1(mu);
            bool ok;
            if (mu.first.empty()) {
              SchurVector want;
              want.degree = m;
              want.coeff.emplace(mu.second, RatFn(1));
              ok = v == want;
            } else {
              ok = v.is_zero();
            }
            if (!ok) return "n=" + std::to_string(m) + " mu=" + detail::lam_str(mu);
          }
        return {};
      }));
  int mcap = std::min(opt.n, 3);
  out.push_back(detail::run_check(
      detail::ranged("monomial symmetric functions split across alphabets", mcap),
      [&]() -> std::string {
        for (int m = 1; m <= mcap; ++m)
          if (!check_monomial_split(m)) return "failed at n=" + std::to_string(m);
        return {};
      }));
  return out;
}

// ---- bimodule suite ----

inline VerifyResult check_g_unitriangular(int cap) {
  return detail::run_check(
      detail::ranged("filtration multiplicities are unitriangular", cap), [&]() -> std::string {
        for (int m = 0; m <= cap; ++m)
          for (const DoublePartition& mu : enumerate_double_partitions(m))
            for (const DoublePartition& nu : enumerate_double_partitions(m)) {
              IntPoly g = g_double(mu, nu);
              std::ostringstream os;
              os << "n=" << m << " mu=" << detail::lam_str(mu) << " nu=" << detail::lam_str(nu);
              if (mu == nu && g != IntPoly(1)) return os.str() + ": diagonal " + g.str();
              if (!g.is_zero() && !double_dominance_le(mu, nu))
                return os.str() + ": nonzero outside dominance: " + g.str();
            }
        return {};
      });
}

inline VerifyResult check_action_polynomials(int cap) {
  return detail::run_check(
      detail::ranged("action constants are even, integral, and nonnegative at prime powers", cap),
      [&]() -> std::string {
        for (int m = 0; m <= cap; ++m)
          for (int k = 0; k <= m; ++k)
            for (const Partition& alpha : enumerate_partitions(k))
              for (const DoublePartition& mu : enumerate_double_partitions(m - k)) {
                std::ostringstream os;
                os << "alpha=" << render_partition(alpha) << " mu=" << detail::lam_str(mu);
                try {
                  for (const auto& [la, g] : G_left(alpha, mu))
                    if (g.eval(Int(2)) < 0 || g.eval(Int(3)) < 0)
                      return os.str() + " la=" + detail::lam_str(la) + ": negative value of " +
                             g.str();
                  for (const auto& [la, g] : G_right(mu, alpha))
                    if (g.eval(Int(2)) < 0 || g.eval(Int(3)) < 0)
                      return os.str() + " la=" + detail::lam_str(la) + ": negative value of " +
                             g.str();
                } catch (const std::exception& e) {
                  return os.str() + ": " + e.what();
                }
              }
        return {};
      });
}

inline VerifyResult check_action_associativity(int total) {
  return detail::run_check(
      detail::ranged("module actions associate and commute, total size", total),
      [&]() -> std::string {
        for (int a = 0; a <= total; ++a)
          for (int b = 0; a + b <= total; ++b)
            for (int c = 0; a + b + c <= total; ++c)
              for (const Partition& alpha : enumerate_partitions(a))
                for (const Partition& beta : enumerate_partitions(b))
                  for (const DoublePartition& mu : enumerate_double_partitions(c)) {
                    HElement prod = hall_product(hall_unit(alpha), hall_unit(beta));
                    MElement x = m_unit(mu);
                    bool ok = left_action(prod, x) == left_action(alpha, left_action(beta, x)) &&
                              right_action(x, prod) ==
                                  right_action(right_action(x, alpha), beta) &&
                              left_action(alpha, right_action(x, beta)) ==
                                  right_action(left_action(alpha, x), beta);
                    if (!ok) {
                      std::ostringstream os;
                      os << "alpha=" << render_partition(alpha)
                         << " beta=" << render_partition(beta)
                         << " mu=" << detail::lam_str(mu);
                      return os.str();
                    }
                  }
        return {};
      });
}

inline VerifyResult check_kostka_reconstruction(int cap) {
  return detail::run_check(
      detail::ranged("modified entries reconstructed from filtration data", cap),
      [&]() -> std::string {
        for (int m = 1; m <= cap; ++m)
          if (!check_ah_formula(m)) return "failed at n=" + std::to_string(m);
        return {};
      });
}

inline std::vector<VerifyResult> bimodule_suite(const VerifyOptions& opt) {
  std::vector<VerifyResult> out;
  out.push_back(check_g_unitriangular(std::min(opt.n, 4)));
  out.push_back(check_action_polynomials(std::min(opt.n, 4)));
  out.push_back(check_action_associativity(std::min(opt.n, 4)));
  out.push_back(check_kostka_reconstruction(std::min(opt.n, 3)));
  return out;
}

// ---- dispatch ----

inline std::vector<VerifyResult> run_verify_suite(const std::string& suite,
                                                  const VerifyOptions& opt) {
  if (suite == "golden") return golden_suite(opt);
  if (suite == "crossalg") return crossalg_suite(opt);
  if (suite == "reductions") return reductions_suite(opt);
  if (suite == "bimodule") return bimodule_suite(opt);
  if (suite == "specialize") return specialize_suite(opt);
  if (suite == "all") {
    std::vector<VerifyResult> out;
    for (const char* part : {"golden", "crossalg", "reductions", "bimodule", "specialize"})
      for (VerifyResult& r : run_verify_suite(part, opt)) out.push_back(std::move(r));
    return out;
  }
  throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace dkostka
