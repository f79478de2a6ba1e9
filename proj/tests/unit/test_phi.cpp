#include <doctest.h>

#include <cmath>
#include <vector>

#include "frobword/errors.hpp"
#include "frobword/generators.hpp"
#include "frobword/phi_bounds.hpp"

using namespace frobword;

namespace {

// z_min and z_max of every window length up to max_n in a plain prefix.
std::vector<ZeroEnvelope> naive_envelopes(std::uint64_t max_n, std::uint64_t prefix_len) {
  FiniteWord w = phi_prefix(prefix_len);
  std::vector<std::int64_t> zeros(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) zeros[i + 1] = zeros[i] + (w[i] == 0);
  std::vector<ZeroEnvelope> out;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    ZeroEnvelope e{n, static_cast<std::int64_t>(n), 0};
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
      std::int64_t z = zeros[i + n] - zeros[i];
      e.z_min = std::min(e.z_min, z);
      e.z_max = std::max(e.z_max, z);
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("bound parameters") {
  CHECK(phi_bound_params(4).N_C == 132);
  CHECK(phi_bound_params(5).N_C == 660);
  for (std::int64_t c = 4; c < 12; ++c) CHECK(phi_bound_params(c + 1).N_C == 5 * phi_bound_params(c).N_C);
  CHECK_THROWS_AS(phi_bound_params(3), DomainError);
}

TEST_CASE("morphic-cover envelopes match a plain prefix scan") {
  auto cover = phi_envelopes(700);
  auto naive = naive_envelopes(700, 1u << 17);
  REQUIRE(cover.size() == naive.size());
  for (std::size_t i = 0; i < cover.size(); ++i) REQUIRE(cover[i] == naive[i]);
}

TEST_CASE("base cases") {
  BaseCaseReport mx = verify_phi_base_case(EnvelopeSide::Max);
  CHECK(mx.lo == 29);
  CHECK(mx.hi == 145);
  CHECK(mx.per_n.size() == 117);
  CHECK(mx.all_pass);
  BaseCaseReport mn = verify_phi_base_case(EnvelopeSide::Min);
  CHECK(mn.lo == 132);
  CHECK(mn.hi == 660);
  CHECK(mn.all_pass);
  CHECK_FALSE(verify_phi_base_case(EnvelopeSide::Max, 5, 5).all_pass);

  auto env = naive_envelopes(660, 1u << 17);
  for (std::uint64_t n = 29; n <= 145; ++n) CHECK(3 * env[n - 1].z_max >= static_cast<std::int64_t>(n) + 12);
  for (std::uint64_t n = 132; n <= 660; ++n) CHECK(3 * env[n - 1].z_min <= static_cast<std::int64_t>(n) - 12);
}

TEST_CASE("Parikh windows around n/3") {
  CHECK(verify_pvects_window(132, 4));
  CHECK(verify_pvects_window(660, 5));
  CHECK(verify_pvects_window(3300, 5));
  CHECK_THROWS_AS(verify_pvects_window(131, 4), PreconditionError);
  CHECK_THROWS_AS(verify_pvects_window(659, 5), PreconditionError);
  CHECK_FALSE(pvects_window_holds(ZeroEnvelope{30, 8, 12}, 4));
  CHECK(pvects_window_holds(ZeroEnvelope{30, 6, 14}, 4));
}

TEST_CASE("growth inequality and scaling") {
  CHECK(growth_inequality_violations(600).empty());
  for (std::uint64_t base : {29u, 132u}) {
    for (const ScalingSample& s : power_scaling_samples(base, 2)) {
      CAPTURE(s.n);
      CHECK(s.lhs == s.rhs);
    }
  }
}

TEST_CASE("bounds M_{a,b}") {
  AbBound b11 = ab_bound(1, 1);
  CHECK(b11.C == 4);
  CHECK(b11.M == Rational(132));
  CHECK(b11.ceil_M == 132);
  CHECK(b11.r == 132);
  CHECK(ab_bound(1, 2).ceil_M == 222);
  CHECK(ab_bound(1, 2).M == Rational(665, 3));
  CHECK(ab_bound(3, 1).M == Rational(670, 3));
  CHECK(ab_bound(3, 1).ceil_M == 224);
  AbBound b56 = ab_bound(5, 6);
  CHECK(b56.C == 7);
  CHECK(b56.ceil_M == 93506);
  CHECK(b56.r == 18702);
  CHECK(ab_bound(6, 1).r == 366);
}

TEST_CASE("table rows") {
  CHECK(table1_pairs().size() == 23);
  auto rows = table1({{2, 3}, {1, 4}, {6, 1}, {1, 1}});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].complement == std::vector<std::int64_t>{1});
  CHECK(rows[0].ceil_M == 355);
  CHECK(rows[1].complement == std::vector<std::int64_t>{3});
  CHECK(rows[2].complement == std::vector<std::int64_t>{5});
  CHECK(rows[3].complement.empty());
}

TEST_CASE("complexity slope") {
  double slope = phi_complexity_slope({25, 125, 625, 3125});
  CHECK(std::abs(slope - std::log(2.0) / std::log(5.0)) < 0.1);
}
