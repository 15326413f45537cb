#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "dkostka/tableaux.hpp"

using namespace dkostka;

static IntPoly P(const std::string& s) { return IntPoly::parse(s); }

TEST_CASE("sst enumeration counts") {
  // shape (2,1), weight (1,1,1): two standard tableaux
  CHECK(enumerate_sst(Partition{2, 1}, {1, 1, 1}).size() == 2);
  CHECK(enumerate_sst(Partition{2, 1}, {2, 1}).size() == 1);
  CHECK(enumerate_sst(Partition{2, 1}, {1, 2}).size() == 1);
  CHECK(enumerate_sst(Partition{2, 1}, {3}).empty());
  CHECK(enumerate_sst(Partition{3}, {1, 1, 1}).size() == 1);
  CHECK(enumerate_sst(Partition{1, 1, 1}, {1, 1, 1}).size() == 1);
  CHECK(enumerate_sst(Partition{}, {}).size() == 1);
  // hook length count of standard tableaux of shape (3,2)
  CHECK(enumerate_sst(Partition{3, 2}, {1, 1, 1, 1, 1}).size() == 5);
  // semistandardness within rows and columns
  for (const Tableau& t : enumerate_sst(Partition{3, 2}, {2, 2, 1})) {
    for (const auto& row : t.rows)
      CHECK(std::is_sorted(row.begin(), row.end()));
    for (size_t r = 0; r + 1 < t.rows.size(); ++r)
      for (size_t c = 0; c < t.rows[r + 1].size(); ++c)
        CHECK(t.rows[r][c] < t.rows[r + 1][c]);
  }
}

TEST_CASE("reading word and weight") {
  auto ts = enumerate_sst(Partition{2, 1}, {2, 1});
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].word() == Word{1, 1, 2});
  CHECK(ts[0].weight() == std::vector<int>{2, 1});
}

TEST_CASE("charge on explicit words") {
  CHECK(charge({2, 1}) == 1);
  CHECK(charge({1, 2}) == 0);
  CHECK(charge({1, 1, 2}) == 0);
  CHECK(charge({3, 2, 1}) == 3);
  CHECK(charge({1, 2, 3}) == 0);
  CHECK(charge({2, 1, 3}) == 2);
  CHECK(charge({3, 1, 2}) == 1);
  CHECK(charge({}) == 0);
  CHECK_THROWS(charge({1, 3}));     // weight (1,0,1) not a partition
  CHECK_THROWS(charge({2, 2, 1}));  // weight (1,2) not a partition
}

TEST_CASE("kostka polynomials via charge") {
  CHECK(kostka_charge(Partition{2}, Partition{1, 1}) == P("t"));
  CHECK(kostka_charge(Partition{3}, Partition{2, 1}) == P("t"));
  CHECK(kostka_charge(Partition{3}, Partition{1, 1, 1}) == P("t^3"));
  CHECK(kostka_charge(Partition{2, 1}, Partition{1, 1, 1}) == P("t^2 + t"));
  CHECK(kostka_charge(Partition{2, 1}, Partition{2, 1}) == P("1"));
  CHECK(kostka_charge(Partition{2, 2}, Partition{2, 1, 1}) == P("t"));
  CHECK(kostka_charge(Partition{2, 2}, Partition{1, 1, 1, 1}) == P("t^4 + t^2"));
  CHECK(kostka_charge(Partition{1, 1}, Partition{2}).is_zero());
}

TEST_CASE("kostka structural properties") {
  for (int n = 1; n <= 5; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& la : parts)
      for (const auto& mu : parts) {
        IntPoly k = kostka_charge(la, mu);
        if (!dominance_le(mu, la)) {
          CHECK(k.is_zero());
          continue;
        }
        REQUIRE(!k.is_zero());
        CHECK(k.has_nonnegative_coeffs());
        CHECK(k.leading_coeff() == 1);
        CHECK(k.degree() == n_stat(mu) - n_stat(la));
        CHECK(k.eval_one() == count_sst(la, mu.parts()));
        if (la == mu) CHECK(k == IntPoly(1));
      }
    // one-row shape picks up the full statistic
    for (const auto& mu : parts)
      CHECK(kostka_charge(Partition{n}, mu) == IntPoly::t_power((int)n_stat(mu)));
  }
}

TEST_CASE("charge is invariant under rectification") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& la : enumerate_double_partitions(n)) {
      for (const auto& mu : enumerate_partitions(n)) {
        for (const Tableau& t : enumerate_bisst(la, mu.parts())) {
          Tableau r = rectify(t);
          CHECK(r.inner.empty());
          CHECK(r.outer.sum() == n);
          // multiset of entries preserved
          CHECK(r.weight() == t.weight());
          CHECK(charge(r.word()) == charge(t.word()));
          // rectified tableau is straight semistandard: rows weakly
          // increase, columns strictly increase
          for (size_t rr = 0; rr + 1 < r.rows.size(); ++rr)
            for (size_t c = 0; c < r.rows[rr + 1].size(); ++c)
              CHECK(r.rows[rr][c] < r.rows[rr + 1][c]);
        }
      }
    }
  }
}

TEST_CASE("rectify fixes straight tableaux") {
  for (const Tableau& t : enumerate_sst(Partition{3, 2}, {2, 2, 1})) {
    Tableau r = rectify(t);
    CHECK(r.outer == t.outer);
    CHECK(r.rows == t.rows);
  }
}

TEST_CASE("littlewood richardson by lattice words") {
  // Pieri: multiplying by a one-row shape adds horizontal strips
  Partition la{2, 1};
  for (const auto& nu : enumerate_partitions(5)) {
    Int c = lr_coefficient(la, Partition{2}, nu);
    bool horizontal = nu.contains(la);
    if (horizontal)
      for (int i = 0; i + 1 < 5; ++i)
        if (nu.part(i + 1) > la.part(i)) horizontal = false;
    CHECK(c == (horizontal ? 1 : 0));
  }
  // column Pieri: vertical strips
  for (const auto& nu : enumerate_partitions(5)) {
    Int c = lr_coefficient(la, Partition{1, 1}, nu);
    bool vertical = nu.contains(la);
    if (vertical)
      for (int i = 0; i < 5; ++i)
        if (nu.part(i) - la.part(i) > 1) vertical = false;
    CHECK(c == (vertical ? 1 : 0));
  }
  // the classic multiplicity two
  CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
  // symmetry
  for (const auto& nu : enumerate_partitions(5))
    CHECK(lr_coefficient(Partition{2, 1}, Partition{2}, nu) ==
          lr_coefficient(Partition{2}, Partition{2, 1}, nu));
  // total count: sum of c * dim matches product of dims is implied by
  // schur multiplication, checked in the symmetric function suite
}

TEST_CASE("pair enumeration splits by weight decomposition") {
  for (int n = 2; n <= 4; ++n)
    for (const auto& la : enumerate_double_partitions(n))
      for (const auto& pi : enumerate_partitions(n)) {
        // independent count: sum over alpha + beta = pi componentwise
        Int expected = 0;
        int len = pi.length();
        std::vector<int> alpha(len, 0);
        std::function<void(int)> rec = [&](int i) {
          if (i == len) {
            int suma = 0;
            for (int v : alpha) suma += v;
            if (suma != la.first.sum()) return;
            std::vector<int> beta(len);
            for (int j = 0; j < len; ++j) beta[j] = pi.part(j) - alpha[j];
            expected += count_sst(la.first, alpha) * count_sst(la.second, beta);
            return;
          }
          for (int v = 0; v <= pi.part(i); ++v) {
            alpha[i] = v;
            rec(i + 1);
          }
          alpha[i] = 0;
        };
        rec(0);
        CHECK(count_bisst(la, pi.parts()) == expected);
      }
}

TEST_CASE("pair count invariant under weight permutation") {
  DoublePartition la{Partition{2, 1}, Partition{1}};
  std::vector<int> w{2, 1, 1};
  Int base = count_bisst(la, w);
  std::sort(w.begin(), w.end());
  do {
    CHECK(count_bisst(la, w) == base);
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("rectification sorts pairs into straight shapes consistently") {
  // sum over nu of (lattice pairs of weight nu) * |SST(nu,pi)| recovers the
  // total number of pairs of weight pi
  for (int n = 2; n <= 4; ++n)
    for (const auto& la : enumerate_double_partitions(n))
      for (const auto& pi : enumerate_partitions(n)) {
        Int total = 0;
        for (const auto& nu : enumerate_partitions(n))
          total += lr_coefficient(la.first, la.second, nu) * count_sst(nu, pi.parts());
        CHECK(total == count_bisst(la, pi.parts()));
        // and rectification of every pair lands in a shape nu with
        // multiplicity given by the lattice count
        std::map<Partition, Int> by_shape;
        for (const Tableau& t : enumerate_bisst(la, pi.parts()))
          by_shape[rectify(t).outer] += 1;
        for (const auto& nu : enumerate_partitions(n)) {
          Int expect = lr_coefficient(la.first, la.second, nu) * count_sst(nu, pi.parts());
          Int got = by_shape.count(nu) ? by_shape[nu] : 0;
          CHECK(got == expect);
        }
      }
}

TEST_CASE("double kostka charge formula, hand checked cases") {
  // (1;1) against (-;(1,1))
  CHECK(double_kostka_charge({Partition{1}, Partition{1}}, Partition{1, 1}) ==
        P("t^3 + t"));
  // ((2);-) column
  CHECK(double_kostka_charge({Partition{2}, Partition{}}, Partition{1, 1}) ==
        P("t^4"));
  // empty first component reduces to a single tableau computation at t^2
  for (int n = 2; n <= 4; ++n)
    for (const auto& lam : enumerate_partitions(n))
      for (const auto& mu : enumerate_partitions(n))
        CHECK(double_kostka_charge({Partition{}, lam}, mu) ==
              kostka_charge(lam, mu).subst_power(2));
}
