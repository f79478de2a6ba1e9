#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frobword/factors.hpp"
#include "frobword/rational.hpp"

namespace frobword {

/// Lengths from which the Phi zero envelope is at least C away from n/3:
/// N_C = 132 * 5^(C-4), so N_{C+1} = 5 N_C.
struct PhiBoundParams {
  std::int64_t C = 4;
  std::int64_t N_C = 132;
};

PhiBoundParams phi_bound_params(std::int64_t C);

/// Zero envelopes of Phi for n = 1..max_n from morphic covers with images of
/// phi^t_power. Element i holds length i + 1.
std::vector<ZeroEnvelope> phi_envelopes(std::uint64_t max_n, unsigned t_power = 7);

enum class EnvelopeSide { Max, Min };

struct BaseCaseReport {
  EnvelopeSide side = EnvelopeSide::Max;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::pair<std::uint64_t, bool>> per_n;
  bool all_pass = false;
};

/// Max: z_M(n) >= n/3 + 4 on [29, 145]. Min: z_m(n) <= n/3 - 4 on [132, 660].
BaseCaseReport verify_phi_base_case(EnvelopeSide side);
/// The same inequality on an arbitrary range.
BaseCaseReport verify_phi_base_case(EnvelopeSide side, std::uint64_t lo, std::uint64_t hi);

/// Whether z_m(n) <= floor(n/3) - C and z_M(n) >= floor(n/3) + C, i.e. every
/// (floor(n/3) + D, n - floor(n/3) - D) with |D| <= C is a Parikh vector of a
/// length-n factor. PreconditionError when n < N_C.
bool verify_pvects_window(std::uint64_t n, std::int64_t C);

/// The window test on an already computed envelope, without the n >= N_C check.
bool pvects_window_holds(const ZeroEnvelope& e, std::int64_t C);

struct AbBound {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t C = 0;
  Rational M;               ///< M_{a,b}, exact
  std::int64_t ceil_M = 0;
  std::int64_t r = 0;       ///< ceil(M_{a,b} / min(a, b))
};

/// C = ceil(max{1 + (a+2b)/3, b, (b-a)/3, 4}),
/// M = max{(a+2b) max(a,b), (a+2b)/3 * (132 * 5^(C-4) + |a-b|)}.
AbBound ab_bound(std::int64_t a, std::int64_t b);

struct Table1Row {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t ceil_M = 0;
  std::int64_t r = 0;
  std::vector<std::int64_t> complement;
};

/// The 23 weight pairs of the published table, in its row order.
std::vector<std::pair<std::int64_t, std::int64_t>> table1_pairs();

/// For each pair: ab_bound, then the complement below ceil(M) using factors of
/// length <= r. One envelope table is shared by all rows.
std::vector<Table1Row> table1(const std::vector<std::pair<std::int64_t, std::int64_t>>& rows,
                              unsigned t_power = 7);

struct GrowthViolation {
  std::uint64_t k = 0;
  unsigned r = 0;
};

/// Pairs (k, r), 0 <= k <= k_max, 0 <= r <= 4, 5k + r >= 1, that break
/// z_M(5k + r) >= 2 z_M(k + 1) + k - 2.
std::vector<GrowthViolation> growth_inequality_violations(std::uint64_t k_max);

struct ScalingSample {
  std::uint64_t n = 0;
  std::int64_t lhs = 0;  ///< z_M(5n)
  std::int64_t rhs = 0;  ///< 2 z_M(n) + n
};

/// z_M(5n) against 2 z_M(n) + n for n = base * 5^j, j = 0..j_max.
std::vector<ScalingSample> power_scaling_samples(std::uint64_t base, unsigned j_max);

/// Least-squares slope of log rho_Phi(n) against log n.
double phi_complexity_slope(const std::vector<std::uint64_t>& lengths);

}  // namespace frobword
