#include "frobword/claims.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "frobword/errors.hpp"
#include "frobword/factors.hpp"
#include "frobword/frobenius.hpp"
#include "frobword/generators.hpp"
#include "frobword/golden.hpp"
#include "frobword/phi_bounds.hpp"
#include "frobword/ternary.hpp"

namespace frobword {

Suite parse_suite(const std::string& name) {
  if (name == "pf") return Suite::Pf;
  if (name == "phi") return Suite::Phi;
  if (name == "ternary") return Suite::Ternary;
  if (name == "all") return Suite::All;
  throw DomainError("unknown suite '" + name + "' (expected pf, phi, ternary or all)");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Pf: return "pf";
    case Suite::Phi: return "phi";
    case Suite::Ternary: return "ternary";
    case Suite::All: return "all";
  }
  return "?";
}

std::vector<std::array<std::int64_t, 3>> oracle_triples() {
  return {{1, 1, 2}, {1, 1, 3}, {1, 3, 5}, {2, 3, 4}, {2, 1, 5},
          {1, 4, 2}, {1, 1, 5}, {8, 1, 1}, {3, 5, 7}, {1, 1, 1}};
}

namespace {

/// Collects results for one suite and reports progress before each check.
class Recorder {
 public:
  Recorder(std::string suite, const Progress& progress, std::vector<CheckResult>& out)
      : suite_(std::move(suite)), progress_(progress), out_(out) {}

  template <class Fn>
  void run(const std::string& name, Fn&& fn) {
    if (progress_) progress_(suite_ + ": " + name);
    CheckResult r{suite_, name, false, ""};
    try {
      std::pair<bool, std::string> res = fn();
      r.pass = res.first;
      r.detail = std::move(res.second);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::string suite_;
  const Progress& progress_;
  std::vector<CheckResult>& out_;
};

template <class T>
std::string first_few(const std::vector<T>& v, std::size_t limit = 8) {
  std::ostringstream s;
  for (std::size_t i = 0; i < std::min(v.size(), limit); ++i) s << (i ? " " : "") << v[i];
  if (v.size() > limit) s << " ... (" << v.size() << " total)";
  return s.str();
}

std::pair<bool, std::string> no_failures(const std::vector<std::uint64_t>& bad,
                                         const std::string& range) {
  if (bad.empty()) return {true, range};
  return {false, range + "; failing at " + first_few(bad)};
}

bool interval_parikh_set(const std::vector<ParikhVector>& set, const ZeroEnvelope& e) {
  if (set.size() != static_cast<std::size_t>(e.z_max - e.z_min + 1)) return false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto z = e.z_min + static_cast<std::int64_t>(i);
    if (set[i] != make_parikh(z, static_cast<std::int64_t>(e.n) - z)) return false;
  }
  return true;
}

void pf_suite(bool quick, Recorder& rec) {
  const std::uint64_t cross_len = quick ? 1u << 12 : 1u << 16;
  rec.run("pf constructions agree", [&] {
    FiniteWord direct = pf_prefix(cross_len, PfConstruction::Direct);
    bool ok = direct == pf_prefix(cross_len, PfConstruction::Recursive) &&
              direct == pf_prefix(cross_len, PfConstruction::Toeplitz);
    return std::pair{ok, "n <= " + std::to_string(cross_len)};
  });

  const std::uint64_t rec_len = quick ? 1u << 11 : 1u << 15;
  rec.run("odd positions are (01)^w, even positions are pf", [&] {
    std::vector<std::uint64_t> bad;
    for (std::uint64_t n = 1; n <= rec_len; ++n) {
      if (pf_letter(2 * n - 1) != (n - 1) % 2 || pf_letter(2 * n) != pf_letter(n)) bad.push_back(n);
    }
    return no_failures(bad, "n <= " + std::to_string(rec_len));
  });

  const unsigned k_max = quick ? 10 : 14;
  rec.run("rho(2^k) = 3", [&] {
    FactorScanner sc(WordGenerator::paperfolding());
    std::vector<std::uint64_t> bad;
    for (unsigned k = 1; k <= k_max; ++k) {
      if (sc.parikh_set(std::uint64_t{1} << k).size() != 3) bad.push_back(k);
    }
    return no_failures(bad, "k = 1.." + std::to_string(k_max));
  });

  const std::uint64_t delta_max = quick ? 512 : 4096;
  rec.run("rho(n) = M(n) + 1, M(n+1) = M(n) +- 1, Delta set symmetric", [&] {
    FactorScanner sc(WordGenerator::paperfolding());
    std::vector<std::uint64_t> bad;
    std::int64_t prev_M = 0;
    for (std::uint64_t n = 1; n <= delta_max + 1; ++n) {
      std::vector<ParikhVector> set = sc.parikh_set(n);
      std::vector<std::int64_t> deltas;
      for (const ParikhVector& p : set) deltas.push_back(p[0] - p[1]);
      std::sort(deltas.begin(), deltas.end());
      std::int64_t M = deltas.back();
      auto n64 = static_cast<std::int64_t>(n);
      std::vector<std::int64_t> expected;
      for (std::int64_t d = -M; d <= M; d += 2) expected.push_back(d);
      bool ok = deltas == expected && (M - n64) % 2 == 0;
      if (n <= delta_max) ok = ok && set.size() == static_cast<std::size_t>(M + 1);
      if (n > 1 && std::abs(M - prev_M) != 1) ok = false;
      if (!ok) bad.push_back(n);
      prev_M = M;
    }
    return no_failures(bad, "n <= " + std::to_string(delta_max));
  });

  const unsigned nope_max = quick ? 8 : 12;
  rec.run("(2^(n-1) +- 2, 2^(n-1) -+ 2) absent at length 2^n", [&] {
    FactorScanner sc(WordGenerator::paperfolding());
    std::vector<std::uint64_t> bad;
    for (unsigned n = 2; n <= nope_max; ++n) {
      std::vector<ParikhVector> set = sc.parikh_set(std::uint64_t{1} << n);
      std::int64_t h = std::int64_t{1} << (n - 1);
      for (ParikhVector p : {make_parikh(h + 2, h - 2), make_parikh(h - 2, h + 2)}) {
        if (std::binary_search(set.begin(), set.end(), p)) bad.push_back(n);
      }
    }
    return no_failures(bad, "n = 2.." + std::to_string(nope_max));
  });

  const unsigned wit_max = quick ? 7 : 10;
  rec.run("weights with 4 <= a < b leave a(2^(n-1)-2) + b(2^(n-1)+2) unrepresented", [&] {
    std::vector<std::string> bad;
    for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{4, 5}, {4, 7}, {5, 7}, {4, 9}}) {
      for (const PfWitness& w : pf_witnesses(a, b, 4, wit_max)) {
        if (!w.verified_nonrepresentable) {
          bad.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ") n=" + std::to_string(w.n));
        }
      }
    }
    return std::pair{bad.empty(), "(4,5) (4,7) (5,7) (4,9), n = 4.." + std::to_string(wit_max) +
                                      (bad.empty() ? "" : "; representable: " + first_few(bad))};
  });

  const std::uint64_t env_max = quick ? 256 : 1024;
  rec.run("pf Parikh sets are zero-envelope intervals", [&] {
    FactorScanner sc(WordGenerator::paperfolding());
    std::vector<std::uint64_t> bad;
    for (std::uint64_t n = 1; n <= env_max; ++n) {
      if (!interval_parikh_set(sc.parikh_set(n), sc.zero_envelope(n))) bad.push_back(n);
    }
    return no_failures(bad, "n <= " + std::to_string(env_max));
  });
}

void phi_suite(bool quick, Recorder& rec) {
  rec.run("z_M(n) >= n/3 + 4 on [29, 145]", [&] {
    BaseCaseReport r = verify_phi_base_case(EnvelopeSide::Max);
    std::vector<std::uint64_t> bad;
    for (auto [n, ok] : r.per_n) if (!ok) bad.push_back(n);
    return no_failures(bad, "n = 29..145");
  });
  rec.run("z_m(n) <= n/3 - 4 on [132, 660]", [&] {
    BaseCaseReport r = verify_phi_base_case(EnvelopeSide::Min);
    std::vector<std::uint64_t> bad;
    for (auto [n, ok] : r.per_n) if (!ok) bad.push_back(n);
    return no_failures(bad, "n = 132..660");
  });

  const std::uint64_t k_max = quick ? 600 : 3000;
  rec.run("z_M(5k + r) >= 2 z_M(k + 1) + k - 2", [&] {
    std::vector<std::uint64_t> bad;
    for (const GrowthViolation& v : growth_inequality_violations(k_max)) bad.push_back(5 * v.k + v.r);
    return no_failures(bad, "k <= " + std::to_string(k_max));
  });

  const unsigned j_max = quick ? 1 : 2;
  rec.run("z_M(5n) = 2 z_M(n) + n at n = 29 * 5^j and 132 * 5^j", [&] {
    std::vector<std::uint64_t> bad;
    for (std::uint64_t base : {29u, 132u}) {
      for (const ScalingSample& s : power_scaling_samples(base, j_max)) {
        if (s.lhs != s.rhs) bad.push_back(s.n);
      }
    }
    return no_failures(bad, "j = 0.." + std::to_string(j_max));
  });

  const std::uint64_t window_max = quick ? 1000 : 3300;
  rec.run("(floor(n/3) + D, n - floor(n/3) - D), |D| <= C, occur from N_C on", [&] {
    std::vector<ZeroEnvelope> env = phi_envelopes(window_max);
    std::vector<std::uint64_t> bad;
    for (std::int64_t C : {4, 5}) {
      for (auto n = static_cast<std::uint64_t>(phi_bound_params(C).N_C); n <= window_max; ++n) {
        if (!pvects_window_holds(env[n - 1], C)) bad.push_back(n);
      }
    }
    return no_failures(bad, "C = 4, 5; n <= " + std::to_string(window_max));
  });

  rec.run("rho_Phi log-log slope = log_5 2 +- 0.1", [&] {
    double slope = phi_complexity_slope({25, 125, 625, 3125, 15625});
    double target = std::log(2.0) / std::log(5.0);
    std::ostringstream d;
    d << "slope " << slope << " vs " << target;
    return std::pair{std::abs(slope - target) <= 0.1, d.str()};
  });

  const std::uint64_t env_max = quick ? 256 : 1024;
  rec.run("Phi Parikh sets are zero-envelope intervals", [&] {
    FactorScanner sc(WordGenerator::morphic_phi());
    std::vector<std::uint64_t> bad;
    for (std::uint64_t n = 1; n <= env_max; ++n) {
      if (!interval_parikh_set(sc.parikh_set(n), sc.zero_envelope(n))) bad.push_back(n);
    }
    return no_failures(bad, "n <= " + std::to_string(env_max));
  });

  rec.run("phi^k(0) is a prefix of phi^(k+1)(0)", [&] {
    std::vector<std::uint64_t> bad;
    FiniteWord seed({0}, 2);
    FiniteWord prev = seed;
    for (unsigned k = 1; k <= 7; ++k) {
      FiniteWord next = morphism_power(phi_morphism(), seed, k);
      if (!next.starts_with(prev)) bad.push_back(k);
      prev = std::move(next);
    }
    return no_failures(bad, "k <= 7");
  });

  rec.run("Table 1 matches the published values", [&] {
    std::vector<std::string> diff = diff_table1(table1(table1_pairs()), golden_table1());
    std::string detail = "23 rows";
    for (const std::string& line : diff) detail += "; " + line;
    return std::pair{diff.empty(), detail};
  });

  rec.run("integers in [ceil(M), ceil(M) + a + b] are represented", [&] {
    std::vector<std::string> bad;
    std::vector<AbBound> bounds;
    std::int64_t longest = 1;
    for (auto [a, b] : table1_pairs()) {
      bounds.push_back(ab_bound(a, b));
      longest = std::max(longest, (bounds.back().ceil_M + a + b) / std::min(a, b));
    }
    std::vector<ZeroEnvelope> env = phi_envelopes(static_cast<std::uint64_t>(longest));
    for (const AbBound& ab : bounds) {
      auto len = static_cast<std::uint64_t>((ab.ceil_M + ab.a + ab.b) / std::min(ab.a, ab.b));
      ComplementReport r = complement_below(env, Weights({ab.a, ab.b}), ab.ceil_M + ab.a + ab.b + 1, len);
      for (std::int64_t x : r.complement) {
        if (x >= ab.ceil_M) bad.push_back(std::to_string(x));
      }
    }
    return std::pair{bad.empty(), bad.empty() ? "23 pairs" : "unrepresented: " + first_few(bad)};
  });
}

void ternary_suite(bool quick, Recorder& rec) {
  const std::uint64_t beatty_max = quick ? 100000 : 1000000;
  rec.run("floor(n phi) steps by 1 or 2, floor(n alpha) = 2n - floor(n phi) - 1", [&] {
    std::vector<std::uint64_t> bad;
    std::uint64_t prev = 0;
    for (std::uint64_t n = 1; n <= beatty_max; ++n) {
      std::uint64_t p = fib_beatty(n, BeattyKind::FloorPhi);
      std::uint64_t d = p - prev;
      if ((d != 1 && d != 2) || fib_beatty(n, BeattyKind::FloorAlpha) != 2 * n - p - 1) bad.push_back(n);
      prev = p;
    }
    return no_failures(bad, "n <= " + std::to_string(beatty_max));
  });

  rec.run("T then 2 -> 0 recovers f", [&] {
    FiniteWord f = fibonacci_prefix(5000);
    FiniteWord t = apply_T(f, ZeroStart::SecondZero);
    std::vector<Letter> back;
    for (Letter c : t.symbols()) back.push_back(c == 2 ? 0 : c);
    return std::pair{FiniteWord(back, 2) == f, "n = 5000"};
  });

  const std::uint64_t bal_max = quick ? 300 : 2000;
  rec.run("f and t are balanced", [&] {
    bool ok = is_balanced(WordGenerator::fibonacci(), bal_max, 1) &&
              is_balanced(WordGenerator::ternary_t(), bal_max, 1);
    return std::pair{ok, "c = 1, n <= " + std::to_string(bal_max)};
  });

  rec.run("rho_t(n) = 3, rho_f(n) = 2", [&] {
    FactorScanner ts(WordGenerator::ternary_t());
    FactorScanner fs(WordGenerator::fibonacci());
    std::vector<std::uint64_t> bad;
    for (std::uint64_t n = 1; n <= bal_max; ++n) {
      if (ts.parikh_set(n).size() != 3 || fs.parikh_set(n).size() != 2) bad.push_back(n);
    }
    return no_failures(bad, "n <= " + std::to_string(bal_max));
  });

  rec.run("f factors meet every prefix residue class mod 2 and 3", [&] {
    std::vector<FibFactor> pool = fibonacci_factors(4);
    for (FibFactor& u : fibonacci_factors(5)) pool.push_back(std::move(u));
    pool.resize(10);
    std::vector<std::string> bad;
    for (const FibFactor& u : pool) {
      for (std::int64_t m : {2, 3}) {
        if (!welldoc_check(WordGenerator::fibonacci(), u.factor, m, 100000).complete) {
          bad.push_back(u.factor.to_string() + " mod " + std::to_string(m));
        }
      }
    }
    return std::pair{bad.empty(), "10 factors" + (bad.empty() ? "" : "; incomplete: " + first_few(bad))};
  });

  const std::uint64_t lemma_max = quick ? 100 : 500;
  rec.run("factors of t are T and T-bar images of factors of f", [&] {
    FactorScanner ts(WordGenerator::ternary_t());
    std::vector<std::uint64_t> bad;
    for (std::uint64_t n = 1; n <= lemma_max; ++n) {
      std::set<ParikhVector> images;
      for (const FibFactor& u : fibonacci_factors(n)) {
        images.insert(parikh(apply_T(u.factor, ZeroStart::SecondZero)));
        images.insert(parikh(apply_T(u.factor, ZeroStart::FirstZero)));
      }
      std::vector<ParikhVector> scanned = ts.parikh_set(n);
      if (std::vector<ParikhVector>(images.begin(), images.end()) != scanned) bad.push_back(n);
    }
    return no_failures(bad, "n <= " + std::to_string(lemma_max));
  });

  const std::uint64_t gen_max = quick ? 300 : 2000;
  rec.run("generating prefix Parikh vectors match the closed forms", [&] {
    return no_failures(generating_parikh_failures(gen_max), "n <= " + std::to_string(gen_max));
  });
  rec.run("exactly two generating prefixes share a Parikh vector", [&] {
    return no_failures(two_coincide_failures(gen_max), "n <= " + std::to_string(gen_max));
  });

  const std::uint64_t tel_max = quick ? 1000 : 10000;
  rec.run("m(n+1) - m(n) = F[n] and generating-prefix values", [&] {
    std::vector<std::string> bad;
    for (auto w : oracle_triples()) {
      Weights s({w[0], w[1], w[2]});
      if (!telescoping_failures(s, tel_max).empty()) bad.push_back(s.to_string() + " telescoping");
      if (!generating_value_failures(s, gen_max).empty()) bad.push_back(s.to_string() + " values");
    }
    return std::pair{bad.empty(), "n <= " + std::to_string(tel_max) + " / " + std::to_string(gen_max) +
                                      (bad.empty() ? "" : "; " + first_few(bad))};
  });

  rec.run("|f[1,n-1]|_0 parity vs the closed form", [&] {
    // They differ exactly when f[n-1] = 1; the g-values use the parity.
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 2; n <= gen_max; ++n) {
      if (fibonacci_letter(n - 1) == 1) expected.push_back(n);
    }
    std::vector<std::uint64_t> got = mu_divergence(gen_max);
    return std::pair{got == expected, "differ at " + std::to_string(got.size()) +
                                          " indices, all with f[n-1] = 1, n <= " +
                                          std::to_string(gen_max)};
  });

  const std::uint64_t oracle_max = quick ? 300 : 2000;
  rec.run("g-values equal S of scanned factors of t", [&] {
    FactorScanner ts(WordGenerator::ternary_t());
    std::vector<std::string> bad;
    std::vector<Weights> triples;
    for (auto w : oracle_triples()) triples.emplace_back(std::vector<std::int64_t>{w[0], w[1], w[2]});
    for (std::uint64_t n = 2; n <= oracle_max; ++n) {
      for (const Weights& s : triples) {
        if (g_values(n, s) != scanned_values(ts, n, s)) bad.push_back(s.to_string() + "@" + std::to_string(n));
      }
    }
    return std::pair{bad.empty(), "10 triples, n = 2.." + std::to_string(oracle_max) +
                                      (bad.empty() ? "" : "; " + first_few(bad))};
  });

  const std::uint64_t cover_max = quick ? 100 : 500;
  const std::uint64_t overlap_max = quick ? 50 : 200;
  rec.run("shifted windows overlap and outside values miss them", [&] {
    std::vector<std::string> bad;
    for (const GoldenTable2Row& row : golden_table2()) {
      Weights s({row.weights[0], row.weights[1], row.weights[2]});
      if (!cover_failures(s, cover_max).empty()) bad.push_back(s.to_string() + " cover");
      if (!overlap_failures(s, overlap_max).empty()) bad.push_back(s.to_string() + " overlap");
    }
    return std::pair{bad.empty(), "i <= " + std::to_string(cover_max) + " / " +
                                      std::to_string(overlap_max) + (bad.empty() ? "" : "; " + first_few(bad))};
  });

  rec.run("values of (x,y,z) and (z,y,x) coincide", [&] {
    std::vector<std::string> bad;
    for (std::int64_t x = 1; x <= 7; ++x) {
      for (std::int64_t y = 1; y <= 7; ++y) {
        for (std::int64_t z = x + 1; z <= 7; ++z) {
          if (value_set_upto(Weights({x, y, z}), 400) != value_set_upto(Weights({z, y, x}), 400)) {
            bad.push_back("(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
          }
        }
      }
    }
    return std::pair{bad.empty(), "weights <= 7, values <= 400" + (bad.empty() ? "" : "; " + first_few(bad))};
  });

  rec.run("(8,1,1) value density below 0.95 at N = 10^5", [&] {
    double d = value_density(Weights({8, 1, 1}), 100000);
    std::ostringstream s;
    s << "density " << d;
    return std::pair{d < 0.95, s.str()};
  });

  rec.run("Table 2 matches the published values", [&] {
    std::vector<std::string> diff = diff_table2(table2(), golden_table2());
    std::string detail = "13 rows";
    for (const std::string& line : diff) detail += "; " + line;
    return std::pair{diff.empty(), detail};
  });
}

}  // namespace

std::vector<CheckResult> run_suite(Suite s, bool quick, const Progress& progress) {
  std::vector<CheckResult> out;
  if (s == Suite::Pf || s == Suite::All) {
    Recorder rec("pf", progress, out);
    pf_suite(quick, rec);
  }
  if (s == Suite::Phi || s == Suite::All) {
    Recorder rec("phi", progress, out);
    phi_suite(quick, rec);
  }
  if (s == Suite::Ternary || s == Suite::All) {
    Recorder rec("ternary", progress, out);
    ternary_suite(quick, rec);
  }
  return out;
}

}  // namespace frobword
