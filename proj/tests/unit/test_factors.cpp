#include <doctest.h>

#include <set>
#include <vector>

#include "frobword/errors.hpp"
#include "frobword/factors.hpp"
#include "frobword/generators.hpp"

using namespace frobword;

namespace {

// Parikh vectors of every window of a prefix, counted one window at a time.
std::vector<ParikhVector> naive_parikh_set(const WordGenerator& g, std::uint64_t n, std::uint64_t prefix) {
  FiniteWord w = g.prefix(prefix);
  std::set<ParikhVector> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(parikh(w.substr(i, n)));
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("parikh") {
  CHECK(parikh(FiniteWord::from_string("00101", 2)) == make_parikh(3, 2));
  CHECK(parikh(FiniteWord(2)) == make_parikh(0, 0));
  CHECK(parikh(FiniteWord(3)).length() == 0);
  CHECK(parikh(FiniteWord::from_string("01201210210210120", 3)) == make_parikh(6, 6, 5));
  CHECK(make_parikh(3, 2).to_string() == "(3,2)");
}

TEST_CASE("Parikh sets of small lengths") {
  CHECK(parikh_set(WordGenerator::paperfolding(), 2) ==
        std::vector{make_parikh(0, 2), make_parikh(1, 1), make_parikh(2, 0)});
  CHECK(parikh_set(WordGenerator::paperfolding(), 4) ==
        std::vector{make_parikh(1, 3), make_parikh(2, 2), make_parikh(3, 1)});
  CHECK(parikh_set(WordGenerator::ternary_t(), 1) ==
        std::vector{make_parikh(0, 0, 1), make_parikh(0, 1, 0), make_parikh(1, 0, 0)});
}

TEST_CASE("scanner agrees with a naive window scan") {
  for (const WordGenerator& g : {WordGenerator::paperfolding(), WordGenerator::fibonacci(),
                                 WordGenerator::morphic_phi(), WordGenerator::ternary_t()}) {
    FactorScanner sc(g);
    for (std::uint64_t n : {1u, 2u, 3u, 7u, 16u, 33u, 100u}) {
      CAPTURE(g.name());
      CAPTURE(n);
      CHECK(sc.parikh_set(n) == naive_parikh_set(g, n, 1u << 15));
    }
  }
}

TEST_CASE("abelian complexity of the four words") {
  FactorScanner pf(WordGenerator::paperfolding());
  for (unsigned k = 1; k <= 14; ++k) CHECK(pf.parikh_set(std::uint64_t{1} << k).size() == 3);

  FactorScanner f(WordGenerator::fibonacci());
  FactorScanner t(WordGenerator::ternary_t());
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    REQUIRE(f.parikh_set(n).size() == 2);
    REQUIRE(t.parikh_set(n).size() == 3);
  }
  CHECK(abelian_complexity(WordGenerator::paperfolding(), 3) == 4);
}

TEST_CASE("zero envelopes") {
  WordGenerator phi = WordGenerator::morphic_phi();
  CHECK(zero_envelope(phi, 2) == ZeroEnvelope{2, 0, 2});
  CHECK(zero_envelope(phi, 5).z_max == 3);
  CHECK(zero_envelope(phi, 1) == ZeroEnvelope{1, 0, 1});
  CHECK_THROWS_AS(zero_envelope(WordGenerator::ternary_t(), 3), DomainError);

  std::vector<ZeroEnvelope> table = envelope_table(phi, 200);
  REQUIRE(table.size() == 200);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    REQUIRE(table[n - 1] == zero_envelope(phi, n, ExplicitPrefix{1u << 16}));
  }
}

TEST_CASE("binary Parikh sets are envelope intervals") {
  for (const WordGenerator& g : {WordGenerator::paperfolding(), WordGenerator::fibonacci(),
                                 WordGenerator::morphic_phi()}) {
    FactorScanner sc(g);
    for (std::uint64_t n = 1; n <= 600; ++n) {
      ZeroEnvelope e = sc.zero_envelope(n);
      std::vector<ParikhVector> expected;
      for (std::int64_t z = e.z_min; z <= e.z_max; ++z) expected.push_back(make_parikh(z, static_cast<std::int64_t>(n) - z));
      REQUIRE(sc.parikh_set(n) == expected);
    }
  }
}

TEST_CASE("factor sources") {
  WordGenerator phi = WordGenerator::morphic_phi();
  WordGenerator pf = WordGenerator::paperfolding();
  CHECK(parikh_set(phi, 125, MorphicCover{3}) == parikh_set(phi, 125, ExplicitPrefix{1u << 16}));
  CHECK_THROWS_AS(parikh_set(phi, 126, MorphicCover{3}), ConfigError);
  CHECK_THROWS_AS(parikh_set(pf, 4, MorphicCover{3}), ConfigError);
  CHECK_THROWS_AS(parikh_set(pf, 100, ExplicitPrefix{50}), ConfigError);
  CHECK_THROWS_AS(parikh_set(pf, 100, StabilizedDoubling{50, 1000}), ConfigError);
  WordGenerator late = WordGenerator::custom("late", 2, [](std::uint64_t n) { return Letter(n > 10 ? 1 : 0); });
  CHECK_THROWS_AS(parikh_set(late, 4, StabilizedDoubling{8, 16}), StabilizationError);
  CHECK(parikh_set(late, 4, StabilizedDoubling{8, 64}).size() == 5);
  CHECK(std::holds_alternative<MorphicCover>(default_source(phi, 625)));
  CHECK(std::holds_alternative<StabilizedDoubling>(default_source(pf, 625)));
}

TEST_CASE("letter ranges and distinct factors") {
  FactorScanner t(WordGenerator::ternary_t());
  auto r = t.letter_ranges(10);
  REQUIRE(r.size() == 3);
  for (const LetterRange& lr : r) CHECK(lr.max - lr.min <= 1);
  auto factors = distinct_factors(WordGenerator::fibonacci(), 6);
  CHECK(factors.size() == 7);
  CHECK(std::is_sorted(factors.begin(), factors.end(),
                       [](const Occurrence& a, const Occurrence& b) { return a.factor < b.factor; }));
}

TEST_CASE("paperfolding Delta statistics") {
  PfDeltaStats s2 = pf_delta_stats(2);
  CHECK(s2.max_delta == 2);
  CHECK(s2.delta_set == std::vector<std::int64_t>{-2, 0, 2});
  PfDeltaStats s1 = pf_delta_stats(1);
  CHECK(s1.max_delta == 1);
  CHECK(s1.delta_set == std::vector<std::int64_t>{-1, 1});
  CHECK(pf_delta_stats(4).delta_set == std::vector<std::int64_t>{-2, 0, 2});

  std::int64_t prev = 0;
  for (std::uint64_t n = 1; n <= 4096; n += (n < 300 ? 1 : 37)) {
    PfDeltaStats s = pf_delta_stats(n);
    REQUIRE(s.delta_set.size() == static_cast<std::size_t>(s.max_delta + 1));
    for (std::size_t i = 0; i < s.delta_set.size(); ++i) {
      REQUIRE(s.delta_set[i] == -s.max_delta + 2 * static_cast<std::int64_t>(i));
    }
    if (n > 1 && n < 300) REQUIRE(std::abs(s.max_delta - prev) == 1);
    prev = s.max_delta;
  }
}

TEST_CASE("balance") {
  CHECK(is_balanced(WordGenerator::fibonacci(), 2000, 1));
  CHECK(is_balanced(WordGenerator::ternary_t(), 2000, 1));
  CHECK_FALSE(is_balanced(WordGenerator::paperfolding(), 16, 1));
}

TEST_CASE("WELLDOC scans") {
  WordGenerator f = WordGenerator::fibonacci();
  WelldocResult r = welldoc_check(f, FiniteWord::from_string("0", 2), 2, 200);
  CHECK(r.complete);
  CHECK(r.residues_found.size() == 4);
  CHECK(welldoc_check(f, FiniteWord::from_string("01001", 2), 2, 2000).complete);
  CHECK(welldoc_check(f, FiniteWord::from_string("01001", 2), 3, 5000).complete);
  CHECK_THROWS_AS(welldoc_check(f, FiniteWord::from_string("11", 2), 2, 100000), FactorNotFound);
  CHECK_FALSE(welldoc_check(f, FiniteWord::from_string("0", 2), 2, 2).complete);
}
