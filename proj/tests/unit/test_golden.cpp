#include <doctest.h>

#include "frobword/errors.hpp"
#include "frobword/golden.hpp"

using namespace frobword;

TEST_CASE("compiled tables") {
  const auto& t1 = golden_table1();
  REQUIRE(t1.size() == 23);
  CHECK(t1.front().a == 1);
  CHECK(t1.front().ceil_M == 132);
  CHECK(t1.back().complement.size() == 16);
  const auto& t2 = golden_table2();
  REQUIRE(t2.size() == 13);
  CHECK(t2[7].weights == std::array<std::int64_t, 3>{1, 3, 5});
  CHECK(t2[7].complement == std::vector<std::int64_t>{2});
}

TEST_CASE("csv parsing") {
  auto rows = parse_table1_csv("a,b,ceil_M,complement\n2,5,2652,1 3 6\n1,1,132,\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].complement == std::vector<std::int64_t>{1, 3, 6});
  CHECK(rows[1].complement.empty());
  CHECK_THROWS_AS(parse_table1_csv("a,b,M,complement\n"), ConfigError);
  CHECK_THROWS_AS(parse_table1_csv("a,b,ceil_M,complement\n2,5\n"), ConfigError);
  CHECK_THROWS_AS(parse_table1_csv("a,b,ceil_M,complement\n2,5,x,\n"), ConfigError);
  CHECK_THROWS_AS(parse_table2_csv("s0,s1,complement\n"), ConfigError);
  auto t2 = parse_table2_csv("s0,s1,s2,complement\n2,3,4,1\n");
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].complement == std::vector<std::int64_t>{1});
}

TEST_CASE("diffs") {
  std::vector<GoldenTable1Row> golden{{3, 1, 244, {}}, {2, 3, 355, {1}}};
  std::vector<Table1Row> computed{{3, 1, 224, 224, {}}, {2, 3, 355, 178, {1}}};
  auto d = diff_table1(computed, golden);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == "(3,1) ceil(M): computed 224, published 244");
  computed[0].ceil_M = 244;
  CHECK(diff_table1(computed, golden).empty());
  computed[1].complement = {1, 2};
  CHECK(diff_table1(computed, golden).size() == 1);
  computed.pop_back();
  CHECK_FALSE(diff_table1(computed, golden).empty());

  std::vector<GoldenTable2Row> g2{{{2, 3, 4}, {1}}};
  CHECK(diff_table2({{{2, 3, 4}, {1}}}, g2).empty());
  CHECK(diff_table2({{{2, 3, 4}, {}}}, g2).size() == 1);
  CHECK(diff_table2({}, g2).size() == 1);
}

TEST_CASE("set rendering") {
  CHECK(set_to_string({}) == "{}");
  CHECK(set_to_string({1, 3, 6}) == "{1,3,6}");
}
