#include <catch2/catch_amalgamated.hpp>

#include <dkostka/table_io.hpp>

#include <sstream>
#include <string>

using namespace dkostka;

namespace {

DoublePartition DP(const std::string& s) { return parse_double_partition(s); }
IntPoly P(const std::string& s) { return IntPoly::parse(s); }

TableDocument load_str(const std::string& s) {
  std::istringstream in(s);
  return load_table_json(in);
}

}  // namespace

TEST_CASE("kostka table document") {
  TableDocument t2 = kostka_table(2);
  CHECK(t2.n == 2);
  CHECK(t2.order.size() == 5);
  CHECK(t2.at(DP("2."), DP("1.1")) == P("t"));
  CHECK(t2.at(DP("1.1"), DP(".1^2")) == P("t^3 + t"));
  CHECK(t2.at(DP(".2"), DP("2.")).is_zero());
  for (const auto& [key, p] : t2.entries) CHECK_FALSE(p.is_zero());
}

TEST_CASE("format names parse") {
  CHECK(parse_table_format("json") == TableFormat::json);
  CHECK(parse_table_format("csv") == TableFormat::csv);
  CHECK(parse_table_format("latex") == TableFormat::latex);
  CHECK(parse_table_format("text") == TableFormat::text);
  CHECK_THROWS_AS(parse_table_format("xml"), std::invalid_argument);
}

TEST_CASE("json round trip") {
  for (int n = 0; n <= 3; ++n) {
    TableDocument doc = kostka_table(n);
    std::istringstream in(render_table(doc, TableFormat::json));
    TableDocument back = load_table_json(in);
    CHECK(back.n == doc.n);
    CHECK(back.order == doc.order);
    CHECK(back.entries == doc.entries);
    CHECK(compare_tables(back, doc).empty());
  }
}

TEST_CASE("csv and latex leave zero cells blank") {
  TableDocument t1 = kostka_table(1);
  CHECK(render_table(t1, TableFormat::csv) == ",1.,.1\n1.,1,t\n.1,,1\n");
  CHECK(render_table(t1, TableFormat::latex) ==
        "\\begin{tabular}{|c|cc|}\n\\hline\n & $1.$ & $.1$ \\\\\n\\hline\n"
        "$1.$ & 1 & $t$ \\\\\n$.1$ &  & 1 \\\\\n\\hline\n\\end{tabular}\n");
}

TEST_CASE("text table aligns columns") {
  TableDocument t1 = kostka_table(1);
  CHECK(render_table(t1, TableFormat::text) == "    1.  .1\n1.  1   t\n.1      1\n");
}

TEST_CASE("latex braces multi digit exponents") {
  std::string s = render_table(kostka_table(4), TableFormat::latex);
  CHECK(s.find("t^{16}") != std::string::npos);
  CHECK(s.find("t^16") == std::string::npos);
}

TEST_CASE("loader validates the schema") {
  CHECK_THROWS(load_str("{\"n\":1,\"order\":[\"2.\"],\"entries\":{}}"));
  CHECK_THROWS(load_str("{\"n\":1,\"order\":[\"1.\",\"1.\"],\"entries\":{}}"));
  CHECK_THROWS(load_str("{\"n\":1,\"order\":[\"1.\",\".1\"],\"entries\":{\"1.|3.\":\"t\"}}"));
  CHECK_THROWS(load_str("{\"n\":1,\"order\":[\"1.\",\".1\"],\"entries\":{\"1.|.1\":\"0\"}}"));
  CHECK_THROWS(load_str("{\"n\":1,\"order\":[\"1.\",\".1\"],\"entries\":{\"1..1\":\"t\"}}"));
  TableDocument ok = load_str("{\"n\":1,\"order\":[\"1.\",\".1\"],\"entries\":{\"1.|.1\":\"t\"}}");
  CHECK(ok.at(DP("1."), DP(".1")) == P("t"));
}

TEST_CASE("comparison reports differences by label") {
  TableDocument a = kostka_table(2);
  TableDocument b = kostka_table(2);
  b.entries[{DP("2."), DP("1.1")}] = P("t^2");
  std::vector<std::string> issues = compare_tables(a, b);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].find("2.|1.1") != std::string::npos);

  TableDocument c = kostka_table(2);
  c.order.pop_back();
  CHECK_FALSE(compare_tables(a, c).empty());
  CHECK_FALSE(compare_tables(c, a).empty());

  TableDocument d = kostka_table(3);
  CHECK(compare_tables(a, d).size() == 1);
}

TEST_CASE("golden tables load and validate") {
  for (int n = 2; n <= 5; ++n) {
    TableDocument gold = load_table_json_file(golden_table_path(n));
    CHECK(gold.n == n);
    CHECK(gold.order.size() == enumerate_double_partitions(n).size());
    for (const DoublePartition& la : gold.order) CHECK(gold.at(la, la) == IntPoly(1));
  }
  CHECK_THROWS_AS(golden_table_path(6), std::invalid_argument);
  CHECK_THROWS_AS(golden_table_path(1), std::invalid_argument);
}

TEST_CASE("computed tables reproduce the golden data") {
  for (int n = 2; n <= 5; ++n) {
    TableDocument gold = load_table_json_file(golden_table_path(n));
    std::vector<std::string> issues = compare_tables(kostka_table(n), gold);
    std::string first = issues.empty() ? "ok" : issues.front();
    INFO(first);
    CHECK(issues.empty());
  }
}

TEST_CASE("alternate order produces the same table") {
  for (int n = 1; n <= 4; ++n) {
    TableDocument a = kostka_table(n);
    TableDocument b = kostka_table(n, true);
    if (n >= 3) CHECK(a.order != b.order);
    CHECK(compare_tables(a, b).empty());
  }
}
