// frobword: generate the words, compute abelian complexity and value-set
// complements, reproduce the two published tables and run the property suites.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobword/claims.hpp"
#include "frobword/errors.hpp"
#include "frobword/factors.hpp"
#include "frobword/frobenius.hpp"
#include "frobword/generators.hpp"
#include "frobword/golden.hpp"
#include "frobword/phi_bounds.hpp"
#include "frobword/ternary.hpp"

using nlohmann::ordered_json;
using namespace frobword;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rows for csv and markdown; json is built separately.
struct Grid {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  ordered_json doc;
  Grid grid;
  std::string plain;  ///< markdown rendering when it is not a table
  int exit_code = 0;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void emit(const Output& out, const std::string& format, bool timestamps) {
  if (format == "json") {
    ordered_json doc = out.doc;
    if (timestamps) {
      std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      std::ostringstream t;
      t << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
      doc["generated_at"] = t.str();
    }
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (timestamps) {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::cerr << "generated at " << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ") << "\n";
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < out.grid.columns.size(); ++i) {
      std::cout << (i ? "," : "") << csv_field(out.grid.columns[i]);
    }
    std::cout << "\n";
    for (const auto& row : out.grid.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
      std::cout << "\n";
    }
    return;
  }
  if (!out.plain.empty()) {
    std::cout << out.plain;
    return;
  }
  std::cout << "|";
  for (const auto& c : out.grid.columns) std::cout << " " << md_cell(c) << " |";
  std::cout << "\n|";
  for (std::size_t i = 0; i < out.grid.columns.size(); ++i) std::cout << "---|";
  std::cout << "\n";
  for (const auto& row : out.grid.rows) {
    std::cout << "|";
    for (const auto& cell : row) std::cout << " " << md_cell(cell) << " |";
    std::cout << "\n";
  }
}

ordered_json half_json(Half h) { return ordered_json{{"twice", h.twice()}}; }

ordered_json envelope(const std::string& command, ordered_json params) {
  ordered_json doc;
  doc["command"] = command;
  doc["params"] = std::move(params);
  return doc;
}

WordGenerator word_by_name(const std::string& name) {
  try {
    return WordGenerator::by_name(name);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Weights parse_weights(const std::string& csv) {
  try {
    return Weights::parse(csv);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void progress(const std::string& msg) { std::cerr << "[frobword] " << msg << "\n"; }

// ---------------------------------------------------------------------------

Output cmd_prefix(const std::string& word, std::int64_t n) {
  if (n < 1) throw UsageError("--n must be at least 1");
  WordGenerator g = word_by_name(word);
  std::string w = g.prefix(static_cast<std::uint64_t>(n)).to_string();
  Output out;
  out.doc = envelope("prefix", {{"word", word}, {"n", n}});
  out.doc["result"] = w;
  out.doc["budget"] = {{"max_len", n}, {"bounds", ordered_json::array()}};
  out.doc["status"] = "ok";
  out.grid = {{"word", "n", "prefix"}, {{word, std::to_string(n), w}}};
  out.plain = w + "\n";
  return out;
}

Output cmd_complexity(const std::string& word, std::int64_t n_min, std::int64_t n_max) {
  if (n_min < 1 || n_max < n_min) throw UsageError("need 1 <= --n-min <= --n-max");
  WordGenerator g = word_by_name(word);
  FactorScanner scanner(g);
  Output out;
  out.doc = envelope("complexity", {{"word", word}, {"n_min", n_min}, {"n_max", n_max}});
  out.grid.columns = {"n", "rho"};
  ordered_json rows = ordered_json::array();
  bool failed = false;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    ordered_json row{{"n", n}};
    try {
      auto rho = scanner.parikh_set(static_cast<std::uint64_t>(n)).size();
      row["rho"] = rho;
      out.grid.rows.push_back({std::to_string(n), std::to_string(rho)});
    } catch (const StabilizationError& e) {
      failed = true;
      row["error"] = e.what();
      out.grid.rows.push_back({std::to_string(n), "error"});
    }
    rows.push_back(std::move(row));
  }
  out.doc["rows"] = std::move(rows);
  out.doc["budget"] = {{"max_len", describe(default_source(g, static_cast<std::uint64_t>(n_max)))},
                       {"bounds", {n_min, n_max}}};
  out.doc["status"] = failed ? "error" : "ok";
  out.exit_code = failed ? kExitMismatch : 0;
  return out;
}

Output cmd_complement(const std::string& word, const std::string& weights_csv,
                      std::optional<std::int64_t> bound, std::optional<std::int64_t> max_len) {
  WordGenerator g = word_by_name(word);
  Weights s = parse_weights(weights_csv);
  if (s.size() != g.alphabet_size()) {
    throw UsageError("word " + word + " needs " + std::to_string(g.alphabet_size()) + " weights");
  }
  if (!s.coprime()) throw UsageError("weights " + s.to_string() + " are not coprime");

  Output out;
  ordered_json params{{"word", word}, {"weights", s.values()}};

  if (g.family() == WordFamily::TernaryT) {
    if (bound || max_len) throw UsageError("t takes its bound from the decision procedure");
    out.doc = envelope("complement", params);
    TernaryDecision d = decide_cofinite(s);
    ordered_json result{{"k", half_json(d.k)}, {"l", d.l}, {"factors_checked", d.factors_checked}};
    ordered_json budget;
    if (d.cofinite()) {
      const auto& c = std::get<Cofinite>(d.outcome).complement;
      result["outcome"] = "cofinite";
      result["complement"] = c;
      out.grid.columns = {"outcome", "complement"};
      out.grid.rows.push_back({"cofinite", set_to_string(c)});
      out.plain = "cofinite " + set_to_string(c) + "\n";
      budget = {{"max_len", d.l + 1}, {"bounds", {complement_search_bound(s)}}};
    } else {
      const auto& w = std::get<InfiniteComplement>(d.outcome);
      result["outcome"] = "infinite";
      result["witness"] = {{"factor", w.factor.to_string()},
                           {"factor_start_index", w.factor_start_index},
                           {"parity", to_string(w.parity)},
                           {"missed_value", half_json(w.missed_value)}};
      out.grid.columns = {"outcome", "factor", "factor_start_index", "parity", "missed_value"};
      out.grid.rows.push_back({"infinite", w.factor.to_string(), std::to_string(w.factor_start_index),
                               to_string(w.parity), w.missed_value.to_string()});
      out.plain = "infinite: window " + w.factor.to_string() + " at " +
                  std::to_string(w.factor_start_index) + ", " + to_string(w.parity) +
                  " parity, misses " + w.missed_value.to_string() + "\n";
      budget = {{"max_len", d.l + 1}, {"bounds", ordered_json::array()}};
    }
    out.doc["result"] = std::move(result);
    out.doc["budget"] = std::move(budget);
    out.doc["status"] = "ok";
    return out;
  }

  std::int64_t b = 0;
  std::uint64_t len = 0;
  if (g.family() == WordFamily::MorphicPhi && !bound) {
    AbBound ab = ab_bound(s[0], s[1]);
    b = ab.ceil_M;
    len = static_cast<std::uint64_t>(ab.r);
  } else {
    if (!bound) throw UsageError("--bound is required for " + word);
    if (*bound < 1) throw UsageError("--bound must be positive");
    b = *bound;
    len = static_cast<std::uint64_t>((b - 1) / s.min());
  }
  if (max_len) {
    if (*max_len < 1) throw UsageError("--max-len must be positive");
    len = static_cast<std::uint64_t>(*max_len);
  }
  if (len == 0) len = 1;
  params["bound"] = b;
  out.doc = envelope("complement", params);
  ComplementReport r = complement_below(g, s, b, len);
  out.doc["result"] = {{"complement", r.complement}, {"method", to_string(r.method)}};
  out.doc["budget"] = {{"max_len", len}, {"bounds", {b}}, {"source", r.source}};
  out.doc["status"] = "ok";
  out.grid.columns = {"weights", "bound", "complement"};
  out.grid.rows.push_back({s.to_string(), std::to_string(b), set_to_string(r.complement)});
  out.plain = set_to_string(r.complement) + "\n";
  return out;
}

Output cmd_tables(int which) {
  Output out;
  out.doc = envelope("tables", {{"which", which}});
  std::vector<std::string> diff;
  ordered_json rows = ordered_json::array();
  if (which == 1) {
    progress("computing Table 1 (23 weight pairs)");
    std::vector<Table1Row> t = table1(table1_pairs());
    diff = diff_table1(t, golden_table1());
    out.grid.columns = {"(a,b)", "ceil(M_{a,b})", "N \\ S(L_Phi)"};
    std::int64_t longest = 0;
    for (const Table1Row& r : t) {
      rows.push_back({{"a", r.a}, {"b", r.b}, {"ceil_M", r.ceil_M}, {"r", r.r}, {"complement", r.complement}});
      std::string key = "(" + std::to_string(r.a) + "," + std::to_string(r.b) + ")";
      out.grid.rows.push_back({key, std::to_string(r.ceil_M), set_to_string(r.complement)});
      longest = std::max(longest, r.r);
    }
    out.doc["rows"] = std::move(rows);
    out.doc["budget"] = {{"max_len", longest}, {"bounds", "ceil(M_{a,b}) per row"}};
  } else if (which == 2) {
    progress("sweeping weight triples 1..7");
    std::vector<Table2Row> t = table2();
    diff = diff_table2(t, golden_table2());
    out.grid.columns = {"(S0, S1, S2)", "N \\ S(L_t)"};
    for (const Table2Row& r : t) {
      rows.push_back({{"weights", r.weights}, {"complement", r.complement}});
      out.grid.rows.push_back({"(" + std::to_string(r.weights[0]) + ", " + std::to_string(r.weights[1]) +
                                   ", " + std::to_string(r.weights[2]) + ")",
                               set_to_string(r.complement)});
    }
    out.doc["rows"] = std::move(rows);
    out.doc["budget"] = {{"max_len", "l + 1 per triple"}, {"bounds", {1, 7}}};
  } else {
    throw UsageError("--which must be 1 or 2");
  }
  out.doc["diff"] = diff;
  out.doc["status"] = diff.empty() ? "match" : "mismatch";
  if (!diff.empty()) {
    std::cerr << "table " << which << " differs from the published values:\n";
    for (const std::string& line : diff) std::cerr << "  " << line << "\n";
    out.exit_code = kExitMismatch;
  }
  return out;
}

Output cmd_verify(const std::string& suite_name, bool quick) {
  Suite suite;
  try {
    suite = parse_suite(suite_name);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  std::vector<CheckResult> results = run_suite(suite, quick, progress);
  Output out;
  out.doc = envelope("verify", {{"suite", suite_name}, {"quick", quick}});
  ordered_json rows = ordered_json::array();
  out.grid.columns = {"suite", "check", "result", "detail"};
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    rows.push_back({{"suite", r.suite}, {"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out.grid.rows.push_back({r.suite, r.name, r.pass ? "pass" : "FAIL", r.detail});
    failed += !r.pass;
  }
  out.doc["rows"] = std::move(rows);
  out.doc["budget"] = {{"max_len", quick ? "quick" : "full"}, {"bounds", ordered_json::array()}};
  out.doc["summary"] = {{"checks", results.size()}, {"passed", results.size() - failed}, {"failed", failed}};
  out.doc["status"] = failed ? "fail" : "pass";
  out.exit_code = failed ? kExitMismatch : 0;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor statistics and Frobenius-type complements of infinite words"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "markdown";
  bool timestamps = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  app.add_flag("--timestamps", timestamps, "Add a generation time (json field, else stderr)");

  std::string word;
  std::int64_t n = 0;
  auto* prefix = app.add_subcommand("prefix", "Print a prefix of a word");
  prefix->add_option("--word", word, "pf, fib, phi or t")->required();
  prefix->add_option("--n", n, "Prefix length")->required();

  std::int64_t n_min = 1, n_max = 1;
  auto* complexity = app.add_subcommand("complexity", "Abelian complexity over a range of lengths");
  complexity->add_option("--word", word, "pf, fib, phi or t")->required();
  complexity->add_option("--n-min", n_min, "First length")->required();
  complexity->add_option("--n-max", n_max, "Last length")->required();

  std::string weights;
  std::optional<std::int64_t> bound, max_len;
  auto* complement = app.add_subcommand("complement", "Positive integers that are not factor values");
  complement->add_option("--word", word, "pf, fib, phi or t")->required();
  complement->add_option("--weights", weights, "Letter weights, e.g. 2,5 or 1,3,5")->required();
  complement->add_option("--bound", bound, "Report values below this (phi default: ceil(M_{a,b}))");
  complement->add_option("--max-len", max_len, "Longest factor to scan");

  int which = 0;
  auto* tables = app.add_subcommand("tables", "Recompute a published table and compare");
  tables->add_option("--which", which, "1 (Phi, binary weights) or 2 (t, ternary weights)")->required();

  std::string suite = "all";
  bool quick = false;
  auto* verify = app.add_subcommand("verify", "Run bounded property checks");
  verify->add_option("--suite", suite, "pf, phi, ternary or all")->capture_default_str();
  verify->add_flag("--quick", quick, "Smaller ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Output out;
    if (*prefix) out = cmd_prefix(word, n);
    else if (*complexity) out = cmd_complexity(word, n_min, n_max);
    else if (*complement) out = cmd_complement(word, weights, bound, max_len);
    else if (*tables) out = cmd_tables(which);
    else out = cmd_verify(suite, quick);
    emit(out, format, timestamps);
    return out.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
