// Acceptance checks. Usage: acceptance <c1..c8|all> [path-to-frobword-cli]
// Prints one PASS/FAIL line per criterion; exits 1 if any criterion fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frobword/claims.hpp"
#include "frobword/factors.hpp"
#include "frobword/frobenius.hpp"
#include "frobword/generators.hpp"
#include "frobword/golden.hpp"
#include "frobword/phi_bounds.hpp"
#include "frobword/ternary.hpp"

using namespace frobword;

namespace {

constexpr double kSlopeTolerance = 0.1;
constexpr double kDensityCeiling = 0.95;
constexpr std::int64_t kDensityN = 100000;

std::string cli_path;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

// ---------------------------------------------------------------------------
// Oracles built here from first principles.

// pf(2^k m) with m odd is 0 if m = 1 mod 4, else 1.
std::vector<int> oracle_pf(std::size_t n) {
  std::vector<int> w(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t m = i;
    while (m % 2 == 0) m /= 2;
    w[i - 1] = m % 4 == 1 ? 0 : 1;
  }
  return w;
}

std::vector<int> oracle_fib(std::size_t n) {
  std::vector<int> w{0};
  while (w.size() < n) {
    std::vector<int> next;
    for (int a : w) {
      next.push_back(0);
      if (a == 0) next.push_back(1);
    }
    w = std::move(next);
  }
  w.resize(n);
  return w;
}

std::vector<int> oracle_t(std::size_t n) {
  std::vector<int> w = oracle_fib(n);
  bool second = false;
  for (int& a : w) {
    if (a == 0) {
      if (second) a = 2;
      second = !second;
    }
  }
  return w;
}

// Phi = fixed point of 0 -> 00101, 1 -> 11011 from 0.
std::vector<int> oracle_phi(std::size_t n) {
  const std::array<std::vector<int>, 2> img{std::vector<int>{0, 0, 1, 0, 1}, std::vector<int>{1, 1, 0, 1, 1}};
  std::vector<int> w{0};
  while (w.size() < n) {
    std::vector<int> next;
    for (int a : w) next.insert(next.end(), img[a].begin(), img[a].end());
    w = std::move(next);
  }
  w.resize(n);
  return w;
}

// Distinct Parikh vectors of all length-n windows of w.
std::set<std::array<std::int64_t, 3>> window_parikh(const std::vector<int>& w, std::size_t n) {
  std::set<std::array<std::int64_t, 3>> out;
  std::array<std::int64_t, 3> c{};
  for (std::size_t i = 0; i < w.size(); ++i) {
    ++c[w[i]];
    if (i >= n) --c[w[i - n]];
    if (i + 1 >= n) out.insert(c);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> zero_range(const std::vector<int>& w, std::size_t n) {
  std::int64_t lo = static_cast<std::int64_t>(n), hi = 0, z = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    z += w[i] == 0;
    if (i >= n) z -= w[i - n] == 0;
    if (i + 1 >= n) {
      lo = std::min(lo, z);
      hi = std::max(hi, z);
    }
  }
  return {lo, hi};
}

std::string run_cli(const std::string& args) {
  std::string cmd = "\"" + cli_path + "\" " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  return out;
}

// ---------------------------------------------------------------------------

Outcome c1() {
  Outcome o;
  auto computed = table1(table1_pairs());
  for (const std::string& line : diff_table1(computed, golden_table1())) o.fail(line);
  return o;
}

Outcome c2() {
  Outcome o;
  auto sweep = table2_sweep();
  std::vector<Table2Row> rows;
  for (const TernaryDecision& d : sweep) {
    if (!d.cofinite()) continue;
    rows.push_back({{d.weights[0], d.weights[1], d.weights[2]}, std::get<Cofinite>(d.outcome).complement});
  }
  for (const std::string& line : diff_table2(rows, golden_table2())) o.fail(line);

  std::size_t admissible = 0;
  for (std::int64_t a = 1; a <= 7; ++a)
    for (std::int64_t b = 1; b <= 7; ++b)
      for (std::int64_t c = a + 1; c <= 7; ++c)
        if (std::gcd(std::gcd(a, b), c) == 1) ++admissible;
  if (sweep.size() != admissible) {
    o.fail("sweep covered " + std::to_string(sweep.size()) + " triples, expected " + std::to_string(admissible));
  }
  if (rows.size() != 13) o.fail(std::to_string(rows.size()) + " cofinite triples");
  return o;
}

Outcome c3() {
  Outcome o;
  std::vector<int> pf = oracle_pf(1u << 17);
  FactorScanner sc(WordGenerator::paperfolding());

  for (unsigned k = 1; k <= 14; ++k) {
    std::size_t n = std::size_t{1} << k;
    if (window_parikh(pf, n).size() != 3 || sc.parikh_set(n).size() != 3) {
      o.fail("rho(2^" + std::to_string(k) + ") != 3");
    }
  }

  std::int64_t prev_M = 0;
  for (std::size_t n = 1; n <= 4097; ++n) {
    auto [zlo, zhi] = zero_range(pf, n);
    std::int64_t M = 2 * zhi - static_cast<std::int64_t>(n);
    auto lib = pf_delta_stats(n);
    if (lib.max_delta != M) o.fail("M(" + std::to_string(n) + ") differs from the oracle");
    if (n <= 4096 && window_parikh(pf, n).size() != static_cast<std::size_t>(M + 1)) {
      o.fail("rho(" + std::to_string(n) + ") != M + 1");
    }
    if (2 * zlo - static_cast<std::int64_t>(n) != -M) o.fail("Delta set not symmetric at " + std::to_string(n));
    if (n > 1 && std::abs(M - prev_M) != 1) o.fail("M step at " + std::to_string(n));
    prev_M = M;
  }

  for (unsigned n = 2; n <= 12; ++n) {
    auto set = window_parikh(pf, std::size_t{1} << n);
    std::int64_t h = std::int64_t{1} << (n - 1);
    if (set.count({h + 2, h - 2, 0}) || set.count({h - 2, h + 2, 0})) {
      o.fail("excluded vector present at length 2^" + std::to_string(n));
    }
  }

  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{4, 5}, {4, 7}, {5, 7}, {4, 9}}) {
    auto lib = pf_witnesses(a, b, 4, 10);
    for (const PfWitness& w : lib) {
      std::int64_t h = std::int64_t{1} << (w.n - 1);
      std::int64_t m = a * (h - 2) + b * (h + 2);
      bool hit = false;
      for (std::int64_t L = 1; L <= m / a && !hit; ++L) {
        std::int64_t num = b * L - m;
        if (num < 0 || num % (b - a)) continue;
        auto [zlo, zhi] = zero_range(pf, static_cast<std::size_t>(L));
        std::int64_t x = num / (b - a);
        hit = x >= zlo && x <= zhi;
      }
      if (hit || !w.verified_nonrepresentable || w.m != m) {
        o.fail("(" + std::to_string(a) + "," + std::to_string(b) + ") n=" + std::to_string(w.n) + " represented");
      }
    }
  }
  return o;
}

Outcome c4() {
  Outcome o;
  std::vector<int> phi = oracle_phi(1u << 17);
  for (std::uint64_t n = 29; n <= 145; ++n) {
    if (3 * zero_range(phi, n).second < static_cast<std::int64_t>(n) + 12) o.fail("oracle z_M below n/3 + 4 at " + std::to_string(n));
  }
  for (std::uint64_t n = 132; n <= 660; ++n) {
    if (3 * zero_range(phi, n).first > static_cast<std::int64_t>(n) - 12) o.fail("oracle z_m above n/3 - 4 at " + std::to_string(n));
  }
  if (!verify_phi_base_case(EnvelopeSide::Max).all_pass) o.fail("library Max base case");
  if (!verify_phi_base_case(EnvelopeSide::Min).all_pass) o.fail("library Min base case");

  auto env = phi_envelopes(5 * 3000 + 4);
  for (std::uint64_t n = 1; n <= 700; ++n) {
    auto [zlo, zhi] = zero_range(phi, n);
    if (env[n - 1].z_min != zlo || env[n - 1].z_max != zhi) o.fail("envelope differs from oracle at " + std::to_string(n));
  }
  std::size_t violations = 0;
  for (std::uint64_t k = 0; k <= 3000; ++k) {
    for (std::uint64_t r = 0; r <= 4; ++r) {
      if (5 * k + r < 1) continue;
      std::int64_t lhs = env[5 * k + r - 1].z_max;
      std::int64_t rhs = 2 * env[k].z_max + static_cast<std::int64_t>(k) - 2;
      if (lhs < rhs) ++violations;
    }
  }
  if (violations) o.fail(std::to_string(violations) + " violations of the growth inequality");
  if (!growth_inequality_violations(3000).empty()) o.fail("library reports growth violations");
  return o;
}

Outcome c5() {
  Outcome o;
  constexpr std::size_t kMaxN = 2000;
  std::vector<int> t = oracle_t(1u << 18);
  std::vector<std::set<std::array<std::int64_t, 3>>> vectors(kMaxN + 1);
  for (std::size_t n = 2; n <= kMaxN; ++n) vectors[n] = window_parikh(t, n);

  for (const auto& w : oracle_triples()) {
    Weights s(std::vector<std::int64_t>{w[0], w[1], w[2]});
    for (std::size_t n = 2; n <= kMaxN; ++n) {
      std::set<std::int64_t> expected;
      for (const auto& p : vectors[n]) expected.insert(p[0] * w[0] + p[1] * w[1] + p[2] * w[2]);
      auto g = g_values(n, s);
      if (std::set<std::int64_t>(g.begin(), g.end()) != expected) {
        o.fail(s.to_string() + " n=" + std::to_string(n));
        break;
      }
    }
  }
  return o;
}

Outcome c6() {
  Outcome o;
  const Weights s({1, 1, 2});
  auto h = [](std::int64_t twice) { return Half::from_twice(twice); };

  OffsetTable off = offsets(s);
  if (std::vector<Half>{off.o1, off.o2, off.o3} != std::vector<Half>{h(1), h(-1), h(1)}) o.fail("odd offsets");
  if (std::vector<Half>{off.e1, off.e2, off.e3} != std::vector<Half>{Half(0), Half(1), Half(0)}) o.fail("even offsets");
  if (off.k != Half(1)) o.fail("k");

  const std::vector<Half> m_paper{Half(1), h(5), h(7), Half(5), h(13), h(15), Half(9), Half(10), h(23), Half(13), Half(14)};
  for (std::uint64_t n = 1; n <= 11; ++n) {
    if (main_term(n, s) != m_paper[n - 1]) o.fail("m(" + std::to_string(n) + ")");
  }
  const std::vector<Half> F_paper{h(3), Half(1), h(3), h(3), Half(1), h(3), Half(1), h(3), h(3), Half(1)};
  if (f_sequence(1, 10, s) != F_paper) o.fail("F[1..10]");

  FiniteWord f15 = fibonacci_prefix(5);
  std::vector<Half> F = f_sequence(1, 5, s);
  HalfInterval I = interval_I(std::span<const Half>(F).first(4), F[4], off.k);
  if (I.lo != Half(2) || I.hi != h(9)) o.fail("I(F[1,4]) = [" + I.lo.to_string() + "," + I.hi.to_string() + "]");

  std::vector<Half> s0;
  for (std::int64_t v = 1; v <= 6; ++v) s0.push_back(Half(v));
  if (semi_image(f15.substr(0, 4), s, Parity::Even) != s0) o.fail("even semi-image");
  std::vector<Half> s1;
  for (std::int64_t v = 3; v <= 13; v += 2) s1.push_back(h(v));
  if (semi_image(f15.substr(0, 4), s, Parity::Odd) != s1) o.fail("odd semi-image");
  if (!semi_complement(f15, s, Parity::Even).empty()) o.fail("K0 not empty");
  if (!semi_complement(f15, s, Parity::Odd).empty()) o.fail("K1 not empty");
  return o;
}

Outcome c7() {
  Outcome o;
  if (!is_balanced(WordGenerator::fibonacci(), 2000, 1)) o.fail("f not balanced");
  if (!is_balanced(WordGenerator::ternary_t(), 2000, 1)) o.fail("t not balanced");

  auto factors = fibonacci_factors(9);
  for (std::int64_t m : {2, 3}) {
    for (const FibFactor& u : factors) {
      if (!welldoc_check(WordGenerator::fibonacci(), u.factor, m, 100000).complete) {
        o.fail("WELLDOC " + u.factor.to_string() + " mod " + std::to_string(m));
      }
    }
  }

  double slope = phi_complexity_slope({25, 125, 625, 3125, 15625});
  double target = std::log(2.0) / std::log(5.0);
  if (std::abs(slope - target) > kSlopeTolerance) {
    o.fail("slope " + std::to_string(slope) + " vs " + std::to_string(target));
  }

  double density = value_density(Weights({8, 1, 1}), kDensityN);
  if (!(density < kDensityCeiling)) o.fail("density " + std::to_string(density));
  return o;
}

Outcome c8() {
  Outcome o;
  std::vector<int> pf = oracle_pf(1u << 16);
  FiniteWord direct = pf_prefix(1u << 16, PfConstruction::Direct);
  if (direct != pf_prefix(1u << 16, PfConstruction::Recursive)) o.fail("recursive construction differs");
  if (direct != pf_prefix(1u << 16, PfConstruction::Toeplitz)) o.fail("Toeplitz construction differs");
  for (std::size_t i = 0; i < pf.size(); ++i) {
    if (direct[i] != pf[i]) {
      o.fail("direct construction differs from the oracle at " + std::to_string(i + 1));
      break;
    }
  }

  if (cli_path.empty()) {
    o.fail("no CLI path given");
    return o;
  }
  for (const char* args : {"--format json prefix --word t --n 300",
                           "--format csv complexity --word pf --n-min 1 --n-max 200",
                           "--format json complement --word phi --weights 2,5",
                           "--format json complement --word t --weights 8,1,1",
                           "--format markdown tables --which 2"}) {
    std::string first = run_cli(args);
    std::string second = run_cli(args);
    if (first.empty()) o.fail(std::string("no output from: ") + args);
    if (first != second) o.fail(std::string("reruns differ: ") + args);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, std::pair<std::string, std::function<Outcome()>>> criteria{
      {"c1", {"Table 1 reproduction", c1}},
      {"c2", {"Table 2 reproduction", c2}},
      {"c3", {"paperfolding claims", c3}},
      {"c4", {"Phi growth base cases", c4}},
      {"c5", {"ternary g-values against t windows", c5}},
      {"c6", {"(1,1,2) semi-complement example", c6}},
      {"c7", {"balance, WELLDOC, slope and density", c7}},
      {"c8", {"cross-construction and rerun determinism", c8}},
  };
  std::string which = argc > 1 ? argv[1] : "all";
  if (argc > 2) cli_path = argv[2];

  bool all_pass = true;
  bool ran = false;
  for (const auto& [id, entry] : criteria) {
    if (which != "all" && which != id) continue;
    ran = true;
    Outcome o;
    try {
      o = entry.second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << id << " " << entry.first;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << "\n";
    all_pass = all_pass && o.pass;
  }
  if (!ran) {
    std::cerr << "unknown criterion '" << which << "'\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
