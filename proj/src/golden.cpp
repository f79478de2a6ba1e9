#include "frobword/golden.hpp"

#include <sstream>

#include "frobword/errors.hpp"

namespace frobword {

namespace detail {
extern const char* const table1_csv;
extern const char* const table2_csv;
}  // namespace detail

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::int64_t to_int(const std::string& s, int line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw ConfigError("golden csv line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
  return v;
}

std::vector<std::int64_t> to_set(const std::string& s, int line) {
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(to_int(tok, line));
  return out;
}

/// Data lines split into fields, header checked and dropped.
std::vector<std::vector<std::string>> rows_of(const std::string& text, const std::string& header,
                                              std::size_t fields) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream in(text);
  std::string line;
  int number = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != header) throw ConfigError("golden csv: expected header '" + header + "'");
      seen_header = true;
      continue;
    }
    auto f = split(line, ',');
    if (f.size() != fields) {
      throw ConfigError("golden csv line " + std::to_string(number) + ": expected " +
                        std::to_string(fields) + " fields");
    }
    f.push_back(std::to_string(number));
    rows.push_back(std::move(f));
  }
  return rows;
}

}  // namespace

std::string set_to_string(const std::vector<std::int64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::vector<GoldenTable1Row> parse_table1_csv(const std::string& text) {
  std::vector<GoldenTable1Row> out;
  for (const auto& f : rows_of(text, "a,b,ceil_M,complement", 4)) {
    int line = std::stoi(f[4]);
    out.push_back({to_int(f[0], line), to_int(f[1], line), to_int(f[2], line), to_set(f[3], line)});
  }
  return out;
}

std::vector<GoldenTable2Row> parse_table2_csv(const std::string& text) {
  std::vector<GoldenTable2Row> out;
  for (const auto& f : rows_of(text, "s0,s1,s2,complement", 4)) {
    int line = std::stoi(f[4]);
    out.push_back({{to_int(f[0], line), to_int(f[1], line), to_int(f[2], line)}, to_set(f[3], line)});
  }
  return out;
}

const std::vector<GoldenTable1Row>& golden_table1() {
  static const std::vector<GoldenTable1Row> rows = parse_table1_csv(detail::table1_csv);
  return rows;
}

const std::vector<GoldenTable2Row>& golden_table2() {
  static const std::vector<GoldenTable2Row> rows = parse_table2_csv(detail::table2_csv);
  return rows;
}

std::vector<std::string> diff_table1(const std::vector<Table1Row>& computed,
                                     const std::vector<GoldenTable1Row>& golden) {
  std::vector<std::string> out;
  if (computed.size() != golden.size()) {
    out.push_back("row count: computed " + std::to_string(computed.size()) + ", published " +
                  std::to_string(golden.size()));
  }
  for (std::size_t i = 0; i < std::min(computed.size(), golden.size()); ++i) {
    const Table1Row& c = computed[i];
    const GoldenTable1Row& g = golden[i];
    std::string key = "(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
    if (c.a != g.a || c.b != g.b) {
      out.push_back("row " + std::to_string(i + 1) + ": computed (" + std::to_string(c.a) + "," +
                    std::to_string(c.b) + "), published " + key);
      continue;
    }
    if (c.ceil_M != g.ceil_M) {
      out.push_back(key + " ceil(M): computed " + std::to_string(c.ceil_M) + ", published " +
                    std::to_string(g.ceil_M));
    }
    if (c.complement != g.complement) {
      out.push_back(key + " complement: computed " + set_to_string(c.complement) +
                    ", published " + set_to_string(g.complement));
    }
  }
  return out;
}

std::vector<std::string> diff_table2(const std::vector<Table2Row>& computed,
                                     const std::vector<GoldenTable2Row>& golden) {
  auto name = [](const std::array<std::int64_t, 3>& w) {
    return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
  };
  std::vector<std::string> out;
  if (computed.size() != golden.size()) {
    out.push_back("row count: computed " + std::to_string(computed.size()) + ", published " +
                  std::to_string(golden.size()));
  }
  for (std::size_t i = 0; i < std::min(computed.size(), golden.size()); ++i) {
    if (computed[i].weights != golden[i].weights) {
      out.push_back("row " + std::to_string(i + 1) + ": computed " + name(computed[i].weights) +
                    ", published " + name(golden[i].weights));
    } else if (computed[i].complement != golden[i].complement) {
      out.push_back(name(golden[i].weights) + " complement: computed " +
                    set_to_string(computed[i].complement) + ", published " +
                    set_to_string(golden[i].complement));
    }
  }
  return out;
}

}  // namespace frobword
