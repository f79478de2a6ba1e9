#include "frobword/phi_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "frobword/errors.hpp"
#include "frobword/frobenius.hpp"

namespace frobword {

namespace {

std::int64_t pow5(std::int64_t e) {
  std::int64_t p = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(p, std::int64_t{5}, &p)) throw RangeError("5^e overflows");
  }
  return p;
}

}  // namespace

PhiBoundParams phi_bound_params(std::int64_t C) {
  if (C < 4) throw DomainError("phi_bound_params: C must be at least 4");
  std::int64_t n = 0;
  if (__builtin_mul_overflow(std::int64_t{132}, pow5(C - 4), &n)) {
    throw RangeError("phi_bound_params: N_C overflows");
  }
  return {C, n};
}

std::vector<ZeroEnvelope> phi_envelopes(std::uint64_t max_n, unsigned t_power) {
  return envelope_table(WordGenerator::morphic_phi(), max_n, MorphicCover{t_power});
}

BaseCaseReport verify_phi_base_case(EnvelopeSide side) {
  return side == EnvelopeSide::Max ? verify_phi_base_case(side, 29, 145)
                                   : verify_phi_base_case(side, 132, 660);
}

BaseCaseReport verify_phi_base_case(EnvelopeSide side, std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1 || hi < lo) throw DomainError("verify_phi_base_case: empty range");
  std::vector<ZeroEnvelope> env = phi_envelopes(hi);
  BaseCaseReport report{side, lo, hi, {}, true};
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const ZeroEnvelope& e = env[n - 1];
    auto n64 = static_cast<std::int64_t>(n);
    // n/3 + 4 <= z_M  <=>  n + 12 <= 3 z_M, and symmetrically for z_m.
    bool ok = side == EnvelopeSide::Max ? 3 * e.z_max >= n64 + 12 : 3 * e.z_min <= n64 - 12;
    report.per_n.emplace_back(n, ok);
    report.all_pass = report.all_pass && ok;
  }
  return report;
}

bool verify_pvects_window(std::uint64_t n, std::int64_t C) {
  PhiBoundParams p = phi_bound_params(C);
  if (static_cast<std::int64_t>(n) < p.N_C) {
    throw PreconditionError("verify_pvects_window: n = " + std::to_string(n) + " is below N_" +
                            std::to_string(C) + " = " + std::to_string(p.N_C));
  }
  return pvects_window_holds(zero_envelope(WordGenerator::morphic_phi(), n), C);
}

bool pvects_window_holds(const ZeroEnvelope& e, std::int64_t C) {
  auto third = static_cast<std::int64_t>(e.n / 3);
  return e.z_min <= third - C && e.z_max >= third + C;
}

AbBound ab_bound(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DomainError("ab_bound: weights must be positive");
  if (std::gcd(a, b) != 1) throw DomainError("ab_bound: weights must be coprime");
  const Rational third_sum(a + 2 * b, 3);
  Rational c_arg = std::max({Rational(1) + third_sum, Rational(b), Rational(b - a, 3), Rational(4)});
  std::int64_t C = c_arg.ceil();

  Rational first = Rational((a + 2 * b) * std::max(a, b));
  Rational second = third_sum * Rational(132 * pow5(C - 4) + std::abs(a - b));
  Rational M = std::max(first, second);

  AbBound out{a, b, C, M, M.ceil(), 0};
  out.r = (M / Rational(std::min(a, b))).ceil();
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> table1_pairs() {
  return {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 3},
          {2, 5}, {3, 1}, {3, 2}, {3, 4}, {3, 5}, {4, 1}, {4, 3}, {4, 5},
          {5, 1}, {5, 2}, {5, 3}, {5, 4}, {5, 6}, {6, 1}, {6, 5}};
}

std::vector<Table1Row> table1(const std::vector<std::pair<std::int64_t, std::int64_t>>& rows,
                              unsigned t_power) {
  std::vector<AbBound> bounds;
  std::int64_t longest = 1;
  for (const auto& [a, b] : rows) {
    bounds.push_back(ab_bound(a, b));
    longest = std::max(longest, bounds.back().r);
  }
  std::vector<ZeroEnvelope> env = phi_envelopes(static_cast<std::uint64_t>(longest), t_power);

  std::vector<Table1Row> out;
  for (const AbBound& ab : bounds) {
    ComplementReport rep = complement_below(env, Weights({ab.a, ab.b}), ab.ceil_M,
                                            static_cast<std::uint64_t>(ab.r));
    out.push_back({ab.a, ab.b, ab.ceil_M, ab.r, std::move(rep.complement)});
  }
  return out;
}

std::vector<GrowthViolation> growth_inequality_violations(std::uint64_t k_max) {
  std::vector<ZeroEnvelope> env = phi_envelopes(5 * k_max + 4);
  auto z_max = [&](std::uint64_t n) { return n == 0 ? 0 : env[n - 1].z_max; };
  std::vector<GrowthViolation> bad;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    for (unsigned r = 0; r <= 4; ++r) {
      if (5 * k + r == 0) continue;
      auto k64 = static_cast<std::int64_t>(k);
      if (z_max(5 * k + r) < 2 * z_max(k + 1) + k64 - 2) bad.push_back({k, r});
    }
  }
  return bad;
}

std::vector<ScalingSample> power_scaling_samples(std::uint64_t base, unsigned j_max) {
  if (base == 0) throw DomainError("power_scaling_samples: base must be positive");
  std::vector<std::uint64_t> ns;
  for (unsigned j = 0; j <= j_max; ++j) ns.push_back(base * static_cast<std::uint64_t>(pow5(j)));
  FactorScanner scanner(WordGenerator::morphic_phi());
  std::vector<ScalingSample> out;
  for (std::uint64_t n : ns) {
    std::int64_t lhs = scanner.zero_envelope(5 * n).z_max;
    std::int64_t rhs = 2 * scanner.zero_envelope(n).z_max + static_cast<std::int64_t>(n);
    out.push_back({n, lhs, rhs});
  }
  return out;
}

double phi_complexity_slope(const std::vector<std::uint64_t>& lengths) {
  if (lengths.size() < 2) throw DomainError("phi_complexity_slope: need two lengths");
  FactorScanner scanner(WordGenerator::morphic_phi());
  std::vector<double> xs, ys;
  for (std::uint64_t n : lengths) {
    ZeroEnvelope e = scanner.zero_envelope(n);
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(static_cast<double>(e.z_max - e.z_min + 1)));
  }
  double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace frobword
