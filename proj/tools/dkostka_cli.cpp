// Command line front end: evaluate single coefficients, export whole
// tables, run the named verification suites, and compare finite field
// point counts against the polynomial layer.
//
// Exit codes: 0 success, 1 verification or comparison failure, 2 usage
// error (bad notation, size out of range, unknown suite or format).

#include <CLI11.hpp>

#include <dkostka/fq_oracle.hpp>
#include <dkostka/verify.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dkostka;

struct Palette {
  const char* good = "";
  const char* bad = "";
  const char* reset = "";
};

Palette make_palette() {
  if (!isatty(STDOUT_FILENO) || std::getenv("NO_COLOR") != nullptr) return {};
  return {"\x1b[32m", "\x1b[31m", "\x1b[0m"};
}

int run_kostka(const std::string& las, const std::string& mus) {
  DoublePartition la, mu;
  try {
    la = parse_double_partition(las);
    mu = parse_double_partition(mus);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (la.sum() != mu.sum()) {
    std::cerr << "error: sizes differ: |" << las << "| = " << la.sum() << " but |" << mus
              << "| = " << mu.sum() << "\n";
    return 2;
  }
  const HallLittlewoodBasis& B = gram_schmidt_hl((int)la.sum());
  std::cout << B.kostka(la, mu).str() << "\n";
  std::cout << B.kostka_modified(la, mu).str() << "\n";
  return 0;
}

int run_tables(int n, const std::string& format, const std::string& out, bool order_check) {
  constexpr int kMaxTableSize = 6;
  if (n < 1 || n > kMaxTableSize) {
    std::cerr << "error: table size must lie between 1 and " << kMaxTableSize << "\n";
    return 2;
  }
  TableFormat fmt;
  try {
    fmt = parse_table_format(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  TableDocument doc = kostka_table(n);
  if (order_check) {
    std::vector<std::string> issues = compare_tables(kostka_table(n, true), doc);
    if (!issues.empty()) {
      std::cerr << "order check failed: " << issues.front() << "\n";
      return 1;
    }
  }
  std::string text = render_table(doc, fmt);
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out);
  if (!file) {
    std::cerr << "error: cannot open " << out << " for writing\n";
    return 2;
  }
  file << text;
  return 0;
}

int run_verify(int n, const std::string& suite, bool order_check) {
  if (n < 0) {
    std::cerr << "error: size must be nonnegative\n";
    return 2;
  }
  std::vector<VerifyResult> results;
  try {
    results = run_verify_suite(suite, VerifyOptions{n, order_check});
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  Palette c = make_palette();
  bool all = true;
  for (const VerifyResult& r : results) {
    if (r.pass) {
      std::cout << c.good << "PASS" << c.reset << " " << r.name << "\n";
    } else {
      std::cout << c.bad << "FAIL" << c.reset << " " << r.name << ": " << r.detail << "\n";
      all = false;
    }
  }
  std::cout << (all ? c.good : c.bad) << (all ? "PASS" : "FAIL") << c.reset << " (" << suite
            << ", n=" << n << ", " << results.size() << " checks)\n";
  return all ? 0 : 1;
}

std::string partition_label(const Partition& al) {
  std::string s = render_partition(al);
  return s.empty() ? "-" : s;
}

int run_oracle(int n, std::vector<int> qs, bool allow_large) {
  if (n < 0) {
    std::cerr << "error: size must be nonnegative\n";
    return 2;
  }
  const int cap = allow_large ? 4 : 3;
  if (n > cap) {
    std::cerr << "error: oracle size " << n << " exceeds the cap " << cap
              << (allow_large ? "" : " (pass --allow-large to raise it to 4)") << "\n";
    return 2;
  }
  if (n > 3) std::cerr << "warning: size " << n << " enumerates large grassmannians; expect a slow run\n";
  if (qs.empty()) qs = {2, 3};
  for (int q : qs)
    if (q != 2 && q != 3 && q != 5) {
      std::cerr << "error: field size must be one of 2, 3, 5\n";
      return 2;
    }

  Palette c = make_palette();
  bool all = true;
  std::vector<DoublePartition> elems = enumerate_double_partitions(n);

  std::cout << "subspace counts against filtration multiplicities\n";
  std::cout << std::left << std::setw(8) << "mu" << std::setw(8) << "nu" << std::setw(3) << "q"
            << std::setw(8) << "count" << std::setw(10) << "value" << "match\n";
  for (int q : qs)
    for (const DoublePartition& mu : elems)
      for (const DoublePartition& nu : elems) {
        long long count = count_g_variety(mu, nu, q);
        Int value = g_double(mu, nu).eval(Int(q));
        bool ok = Int(count) == value;
        all = all && ok;
        std::cout << std::left << std::setw(8) << render_double_partition(mu) << std::setw(8)
                  << render_double_partition(nu) << std::setw(3) << q << std::setw(8) << count
                  << std::setw(10) << value.str() << (ok ? "ok" : std::string(c.bad) + "MISMATCH" + c.reset)
                  << "\n";
      }

  bool bimodule_ok = n <= 3;
  for (int q : qs) bimodule_ok = bimodule_ok && q <= 3;
  if (!bimodule_ok) {
    std::cout << "\naction counts skipped: they need size <= 3 and q <= 3\n";
  } else {
    std::cout << "\naction counts against action constants\n";
    std::cout << std::left << std::setw(8) << "la" << std::setw(8) << "alpha" << std::setw(8)
              << "mu" << std::setw(7) << "side" << std::setw(3) << "q" << std::setw(8) << "count"
              << std::setw(10) << "value" << "match\n";
    for (int q : qs)
      for (const DoublePartition& la : elems)
        for (int k = 0; k <= n; ++k)
          for (const Partition& alpha : enumerate_partitions(k))
            for (const DoublePartition& mu : enumerate_double_partitions(n - k))
              for (ActionSide side : {ActionSide::left, ActionSide::right}) {
                long long count = count_bimodule_varieties(la, alpha, mu, q, side);
                std::map<DoublePartition, IntPoly> g =
                    side == ActionSide::left ? G_left(alpha, mu) : G_right(mu, alpha);
                auto it = g.find(la);
                Int value = it == g.end() ? Int(0) : it->second.eval(Int(q));
                bool ok = Int(count) == value;
                all = all && ok;
                std::cout << std::left << std::setw(8) << render_double_partition(la)
                          << std::setw(8) << partition_label(alpha) << std::setw(8)
                          << render_double_partition(mu) << std::setw(7)
                          << (side == ActionSide::left ? "left" : "right") << std::setw(3) << q
                          << std::setw(8) << count << std::setw(10) << value.str()
                          << (ok ? "ok" : std::string(c.bad) + "MISMATCH" + c.reset) << "\n";
              }
  }

  std::cout << (all ? c.good : c.bad) << (all ? "PASS" : "FAIL") << c.reset << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double kostka polynomials, two alphabet hall littlewood tables, and finite field cross checks"};
  app.require_subcommand(1);
  int rc = 0;

  std::string la_arg, mu_arg;
  CLI::App* kostka = app.add_subcommand(
      "kostka", "print one coefficient polynomial and its modified form");
  kostka->add_option("lambda", la_arg, "row label, dotted exponent notation")->required();
  kostka->add_option("mu", mu_arg, "column label, dotted exponent notation")->required();
  kostka->callback([&] { rc = run_kostka(la_arg, mu_arg); });

  int tables_n = 0;
  std::string tables_format = "text";
  std::string tables_out;
  bool tables_order = false;
  CLI::App* tables = app.add_subcommand("tables", "write the complete coefficient matrix");
  tables->add_option("--n", tables_n, "size of the double partitions")->required();
  tables->add_option("--format", tables_format, "one of text, csv, latex, json");
  tables->add_option("--out", tables_out, "output path, stdout when omitted");
  tables->add_flag("--order-check", tables_order, "recompute with the alternate total order and compare");
  tables->callback([&] { rc = run_tables(tables_n, tables_format, tables_out, tables_order); });

  int verify_n = 3;
  std::string verify_suite = "all";
  bool verify_order = false;
  CLI::App* verify = app.add_subcommand("verify", "run a named identity suite");
  verify->add_option("--n", verify_n, "size cap for every identity family");
  verify->add_option("--suite", verify_suite,
                     "one of golden, crossalg, reductions, bimodule, specialize, all");
  verify->add_flag("--order-check", verify_order, "rebuild bases with the alternate total order");
  verify->callback([&] { rc = run_verify(verify_n, verify_suite, verify_order); });

  int oracle_n = 3;
  std::vector<int> oracle_q;
  bool oracle_large = false;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "count points over small fields and compare with the polynomials");
  oracle->add_option("--n", oracle_n, "size of the double partitions");
  oracle->add_option("--q", oracle_q, "comma separated field sizes, default 2,3")->delimiter(',');
  oracle->add_flag("--allow-large", oracle_large, "raise the size cap from 3 to 4");
  oracle->callback([&] { rc = run_oracle(oracle_n, oracle_q, oracle_large); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
