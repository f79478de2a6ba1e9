#include <doctest.h>

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "frobword/errors.hpp"
#include "frobword/frobenius.hpp"
#include "frobword/generators.hpp"

using namespace frobword;

namespace {

std::vector<std::int64_t> two_coin_values(std::int64_t a, std::int64_t b, std::int64_t max_len) {
  std::set<std::int64_t> out;
  for (std::int64_t x = 0; x <= max_len; ++x) {
    for (std::int64_t y = 0; x + y <= max_len; ++y) {
      if (x + y > 0) out.insert(a * x + b * y);
    }
  }
  return {out.begin(), out.end()};
}

// 1 10 11 100 101 ...: every binary word occurs.
WordGenerator binary_champernowne() {
  auto digits = std::make_shared<std::string>();
  for (std::uint64_t k = 1; digits->size() < (1u << 20); ++k) {
    std::string bits;
    for (std::uint64_t v = k; v; v >>= 1) bits.insert(bits.begin(), char('0' + (v & 1)));
    *digits += bits;
  }
  return WordGenerator::custom("champernowne2", 2,
                               [digits](std::uint64_t n) { return Letter((*digits)[n - 1] - '0'); });
}

// Every window sum of a prefix, lengths 1..max_len.
std::set<std::int64_t> window_sums(const FiniteWord& w, const Weights& s, std::size_t max_len) {
  std::vector<std::int64_t> pre(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) pre[i + 1] = pre[i] + s[w[i]];
  std::set<std::int64_t> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t i = 0; i + len <= w.size(); ++i) out.insert(pre[i + len] - pre[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("weights") {
  Weights w = Weights::parse("2,3,4");
  CHECK(w.size() == 3);
  CHECK(w.gcd() == 1);
  CHECK(w.min() == 2);
  CHECK(w.max() == 4);
  CHECK_FALSE(Weights::parse("2,4,6").coprime());
  CHECK_THROWS(Weights::parse("2,x"));
  CHECK_THROWS(Weights::parse("0,3"));
}

TEST_CASE("Sylvester numbers") {
  CHECK(sylvester_number(3, 5) == 7);
  CHECK(sylvester_number(2, 3) == 1);
  CHECK(sylvester_number(1, 7) < 0);
  CHECK_THROWS_AS(sylvester_number(4, 6), DomainError);
  for (std::int64_t a = 2; a <= 9; ++a) {
    for (std::int64_t b = a + 1; b <= 11; ++b) {
      if (std::gcd(a, b) != 1) continue;
      auto vals = two_coin_values(a, b, 40);
      std::int64_t g = sylvester_number(a, b);
      CHECK_FALSE(std::binary_search(vals.begin(), vals.end(), g));
      for (std::int64_t v = g + 1; v <= g + 40; ++v) CHECK(std::binary_search(vals.begin(), vals.end(), v));
    }
  }
}

TEST_CASE("s_value") {
  Weights s({1, 1, 2});
  FiniteWord u = FiniteWord::from_string("01201210", 3);
  CHECK(s_value(u, s) == 10);
  CHECK(s_value(parikh(u), s) == 10);
  CHECK(s_value(FiniteWord::from_string("0011", 2), Weights({4, 5})) == 18);
}

TEST_CASE("representable sets") {
  auto pf = representable_set(WordGenerator::paperfolding(), Weights({1, 1}), 10);
  CHECK(pf == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

  auto phi = representable_set(WordGenerator::morphic_phi(), Weights({1, 4}), 30);
  CHECK_FALSE(std::binary_search(phi.begin(), phi.end(), 3));
  CHECK(std::binary_search(phi.begin(), phi.end(), 4));

  auto t = representable_set(WordGenerator::ternary_t(), Weights({1, 1, 2}), 50);
  for (std::int64_t v = 1; v <= 6; ++v) CHECK(std::binary_search(t.begin(), t.end(), v));

  // Longer factors only add values.
  auto shorter = representable_set(WordGenerator::fibonacci(), Weights({3, 5}), 20);
  auto longer = representable_set(WordGenerator::fibonacci(), Weights({3, 5}), 40);
  CHECK(std::includes(longer.begin(), longer.end(), shorter.begin(), shorter.end()));
}

TEST_CASE("representable sets agree with window sums") {
  for (const WordGenerator& g : {WordGenerator::paperfolding(), WordGenerator::fibonacci(),
                                 WordGenerator::morphic_phi()}) {
    for (auto ab : {std::pair{2, 3}, std::pair{5, 3}, std::pair{1, 6}}) {
      Weights s({ab.first, ab.second});
      auto lib = representable_set(g, s, 60);
      auto naive = window_sums(g.prefix(1u << 14), s, 60);
      CAPTURE(g.name());
      CHECK(lib == std::vector<std::int64_t>(naive.begin(), naive.end()));
    }
  }
  Weights s3({2, 3, 4});
  auto lib = representable_set(WordGenerator::ternary_t(), s3, 60);
  auto naive = window_sums(WordGenerator::ternary_t().prefix(1u << 14), s3, 60);
  CHECK(lib == std::vector<std::int64_t>(naive.begin(), naive.end()));
}

TEST_CASE("a word containing every binary word behaves like two coins") {
  WordGenerator c = binary_champernowne();
  for (auto ab : {std::pair{3, 5}, std::pair{2, 7}, std::pair{4, 5}}) {
    Weights s({ab.first, ab.second});
    CHECK(representable_set(c, s, 6) == two_coin_values(ab.first, ab.second, 6));
  }
}

TEST_CASE("complements below a bound") {
  WordGenerator phi = WordGenerator::morphic_phi();
  ComplementReport r = complement_below(phi, Weights({2, 3}), 355, 178);
  CHECK(r.complement == std::vector<std::int64_t>{1});
  CHECK(r.method == ComplementMethod::EnvelopeInterval);
  CHECK(complement_below(phi, Weights({2, 5}), 2652, 1326).complement ==
        std::vector<std::int64_t>{1, 3, 6, 8, 13});
  CHECK_THROWS_AS(complement_below(phi, Weights({2, 3}), 355, 100), ConfigError);

  ComplementReport pf = complement_below(WordGenerator::paperfolding(), Weights({2, 3}), 200, 100);
  CHECK(pf.method == ComplementMethod::ExplicitParikh);
  CHECK(pf.complement == std::vector<std::int64_t>{1});

  std::vector<ZeroEnvelope> env = envelope_table(phi, 178);
  CHECK(complement_below(env, Weights({2, 3}), 355, 178).complement == r.complement);
}

TEST_CASE("paperfolding witnesses") {
  FiniteWord pf = WordGenerator::paperfolding().prefix(1u << 16);
  for (auto ab : {std::pair{4, 5}, std::pair{4, 7}}) {
    unsigned hi = ab.second == 5 ? 10 : 8;
    auto ws = pf_witnesses(ab.first, ab.second, 4, hi);
    REQUIRE(ws.size() == hi - 3);
    Weights s({ab.first, ab.second});
    std::int64_t max_m = ws.back().m;
    auto sums = window_sums(pf, s, static_cast<std::size_t>(max_m / ab.first));
    for (const PfWitness& w : ws) {
      std::int64_t half = std::int64_t{1} << (w.n - 1);
      CHECK(w.m == ab.first * (half - 2) + ab.second * (half + 2));
      CHECK(w.verified_nonrepresentable);
      CHECK(sums.count(w.m) == 0);
    }
  }
  CHECK_THROWS_AS(pf_witnesses(3, 5, 4, 6), DomainError);
  CHECK_THROWS_AS(pf_witnesses(4, 6, 4, 6), DomainError);
  auto low = pf_witnesses(4, 5, 2, 3);
  REQUIRE(low.size() == 2);
  CHECK(low[0].m == 4 * 0 + 5 * 4);
}
