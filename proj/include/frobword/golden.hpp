#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "frobword/phi_bounds.hpp"
#include "frobword/ternary.hpp"

namespace frobword {

struct GoldenTable1Row {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t ceil_M = 0;
  std::vector<std::int64_t> complement;
};

struct GoldenTable2Row {
  std::array<std::int64_t, 3> weights{};
  std::vector<std::int64_t> complement;
};

/// The published tables, compiled in from data/table1.csv and data/table2.csv.
const std::vector<GoldenTable1Row>& golden_table1();
const std::vector<GoldenTable2Row>& golden_table2();

/// CSV with header "a,b,ceil_M,complement"; complements are space separated.
std::vector<GoldenTable1Row> parse_table1_csv(const std::string& text);
/// CSV with header "s0,s1,s2,complement".
std::vector<GoldenTable2Row> parse_table2_csv(const std::string& text);

/// One human-readable line per disagreement; empty when the tables agree row
/// for row, in order.
std::vector<std::string> diff_table1(const std::vector<Table1Row>& computed,
                                     const std::vector<GoldenTable1Row>& golden);
std::vector<std::string> diff_table2(const std::vector<Table2Row>& computed,
                                     const std::vector<GoldenTable2Row>& golden);

/// "{1,3,6}"
std::string set_to_string(const std::vector<std::int64_t>& v);

}  // namespace frobword
