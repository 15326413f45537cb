#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dkostka/partition.hpp"

using namespace dkostka;

TEST_CASE("partition construction and invariants") {
  Partition la{3, 1, 1};
  CHECK(la.sum() == 5);
  CHECK(la.length() == 3);
  CHECK(la.part(5) == 0);
  CHECK(Partition(std::vector<int>{2, 1, 0, 0}) == Partition{2, 1});
  CHECK_THROWS(Partition(std::vector<int>{1, 2}));
  CHECK_THROWS(Partition(std::vector<int>{2, -1}));
  CHECK(la.conjugate() == Partition{3, 1, 1});
  CHECK(Partition{4, 2, 1}.conjugate() == Partition{3, 2, 1, 1});
  CHECK(Partition{4, 2, 1}.conjugate().conjugate() == Partition{4, 2, 1});
}

TEST_CASE("statistics") {
  CHECK(n_stat(Partition{2, 1}) == 1);
  CHECK(n_stat(Partition{1, 1, 1}) == 3);
  CHECK(n_stat(Partition{}) == 0);
  CHECK(z_int(Partition{1, 1, 1}) == 6);
  CHECK(z_int(Partition{2, 1}) == 2);
  CHECK(z_int(Partition{3}) == 3);
  CHECK(z_int(Partition{2, 2, 1, 1}) == 16);
  CHECK(z_int(Partition{}) == 1);

  CHECK(a_stat({Partition{2}, Partition{}}) == 0);
  CHECK(a_stat({Partition{1}, Partition{1}}) == 1);
  CHECK(a_stat({Partition{}, Partition{2}}) == 2);
  CHECK(a_stat({Partition{1, 1}, Partition{}}) == 2);
  CHECK(a_stat({Partition{}, Partition{1, 1}}) == 4);
}

TEST_CASE("z_double at small cases") {
  // ((1);-) : 2/(1-t), (-;(1)) : 2/(1+t)
  RatFn zp = z_double({Partition{1}, Partition{}});
  CHECK(zp == RatFn(IntPoly(2), IntPoly(1) - IntPoly::t_power(1)));
  RatFn zm = z_double({Partition{}, Partition{1}});
  CHECK(zm == RatFn(IntPoly(2), IntPoly(1) + IntPoly::t_power(1)));
}

TEST_CASE("dominance order") {
  CHECK(dominance_le(Partition{1, 1, 1}, Partition{3}));
  CHECK(dominance_le(Partition{2, 1}, Partition{3}));
  CHECK_FALSE(dominance_le(Partition{3}, Partition{2, 1}));
  CHECK(dominance_le(Partition{3}, Partition{3}));
  CHECK_THROWS(dominance_le(Partition{2}, Partition{3}));
  // classic incomparable pair at n = 6
  CHECK_FALSE(dominance_le(Partition{3, 3}, Partition{4, 1, 1}));
  CHECK_FALSE(dominance_le(Partition{4, 1, 1}, Partition{3, 3}));
}

TEST_CASE("interleave pads before merging") {
  DoublePartition la{Partition{2, 1, 1}, Partition{3, 3}};
  CHECK(interleave(la) == std::vector<int>{2, 3, 1, 3, 1, 0});
  DoublePartition mu{Partition{1}, Partition{1}};
  CHECK(interleave(mu) == std::vector<int>{1, 1});
}

TEST_CASE("double dominance examples") {
  DoublePartition top{Partition{2}, Partition{}};
  DoublePartition mid{Partition{1}, Partition{1}};
  DoublePartition bot{Partition{}, Partition{1, 1}};
  DoublePartition d2{Partition{}, Partition{2}};
  DoublePartition sq{Partition{1, 1}, Partition{}};
  CHECK(double_dominance_le(mid, top));
  CHECK(double_dominance_le(bot, mid));
  CHECK(double_dominance_le(bot, d2));
  CHECK(double_dominance_le(sq, mid));
  CHECK_FALSE(double_dominance_le(top, mid));
  // (-;2) and (1^2;-) are incomparable
  CHECK_FALSE(double_dominance_le(d2, sq));
  CHECK_FALSE(double_dominance_le(sq, d2));
  CHECK(double_dominance_le(top, top));
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(5).size() == 7);
  CHECK(enumerate_partitions(6).size() == 11);
  CHECK(enumerate_double_partitions(2).size() == 5);
  CHECK(enumerate_double_partitions(3).size() == 10);
  CHECK(enumerate_double_partitions(4).size() == 20);
  CHECK(enumerate_double_partitions(5).size() == 36);
  // no duplicates
  auto all = enumerate_double_partitions(4);
  std::set<DoublePartition> s(all.begin(), all.end());
  CHECK(s.size() == all.size());
}

TEST_CASE("total order is a linear extension of dominance") {
  for (int n = 1; n <= 5; ++n) {
    for (bool alt : {false, true}) {
      auto ord = total_order(n, alt);
      CHECK(ord.size() == enumerate_double_partitions(n).size());
      for (size_t i = 0; i < ord.size(); ++i)
        for (size_t j = i + 1; j < ord.size(); ++j)
          CHECK_FALSE((ord[i] != ord[j] && double_dominance_le(ord[i], ord[j])));
    }
  }
}

TEST_CASE("total order endpoints") {
  auto ord = total_order(3);
  CHECK(ord.front() == DoublePartition{Partition{3}, Partition{}});
  CHECK(ord.back() == DoublePartition{Partition{}, Partition{1, 1, 1}});
  auto alt = total_order(3, true);
  CHECK(alt.front() == ord.front());
  CHECK(alt.back() == ord.back());
  CHECK(total_order(4) != total_order(4, true));
}

TEST_CASE("notation renders and parses") {
  DoublePartition la{Partition{2, 1, 1}, Partition{3, 3}};
  CHECK(render_double_partition(la) == "21^2.3^2");
  CHECK(render_double_partition({Partition{3}, Partition{}}) == "3.");
  CHECK(render_double_partition({Partition{}, Partition{2, 1}}) == ".21");
  CHECK(render_double_partition({Partition{}, Partition{}}) == ".");
  CHECK(parse_double_partition("21^2.3^2") == la);
  CHECK(parse_double_partition("3.") == DoublePartition{Partition{3}, Partition{}});
  CHECK(parse_double_partition(".21") == DoublePartition{Partition{}, Partition{2, 1}});
  CHECK(parse_double_partition(".") == DoublePartition{Partition{}, Partition{}});
  CHECK_THROWS(parse_double_partition("12."));
  CHECK_THROWS(parse_double_partition("21"));
  CHECK_THROWS(parse_double_partition("2..1"));
  CHECK_THROWS(parse_double_partition("2^0."));

  for (int n = 0; n <= 8; ++n)
    for (const auto& dp : enumerate_double_partitions(n))
      CHECK(parse_double_partition(render_double_partition(dp)) == dp);
}

TEST_CASE("merge and componentwise sum") {
  CHECK(Partition{2, 1}.merged(Partition{2}) == Partition{2, 2, 1});
  CHECK(Partition{2, 1}.plus(Partition{2}) == Partition{4, 1});
  CHECK(Partition{}.plus(Partition{3, 1}) == Partition{3, 1});
  CHECK(Partition{3, 1}.contains(Partition{2, 1}));
  CHECK_FALSE(Partition{3, 1}.contains(Partition{2, 2}));
}
