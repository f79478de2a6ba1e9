#include "frobword/factors.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

#include "frobword/errors.hpp"

namespace frobword {

std::string ParikhVector::to_string() const {
  std::string s = "(";
  for (unsigned a = 0; a < alphabet_size; ++a) {
    if (a) s += ",";
    s += std::to_string(counts[a]);
  }
  return s + ")";
}

ParikhVector make_parikh(std::int64_t c0, std::int64_t c1) {
  return ParikhVector{2, {c0, c1, 0}};
}

ParikhVector make_parikh(std::int64_t c0, std::int64_t c1, std::int64_t c2) {
  return ParikhVector{3, {c0, c1, c2}};
}

ParikhVector parikh(const FiniteWord& w) {
  ParikhVector p;
  p.alphabet_size = w.alphabet_size();
  for (Letter a : w.symbols()) ++p.counts[a];
  return p;
}

FactorSource default_source(const WordGenerator& g, std::uint64_t n) {
  if (g.morphism() != nullptr && g.morphism()->uniform_length().value_or(0) >= 2) {
    auto len = static_cast<std::uint64_t>(*g.morphism()->uniform_length());
    unsigned t = 1;
    for (std::uint64_t reach = len; reach < n; reach *= len) ++t;
    return MorphicCover{t};
  }
  std::uint64_t initial = 64 * std::max<std::uint64_t>(n, 1);
  return StabilizedDoubling{initial, std::max<std::uint64_t>(std::uint64_t{1} << 20, 2 * initial)};
}

std::string describe(const FactorSource& src) {
  struct {
    std::string operator()(const DefaultSource&) const { return "default"; }
    std::string operator()(const ExplicitPrefix& s) const {
      return "explicit-prefix(" + std::to_string(s.length) + ")";
    }
    std::string operator()(const MorphicCover& s) const {
      return "morphic-cover(t=" + std::to_string(s.t_power) + ")";
    }
    std::string operator()(const StabilizedDoubling& s) const {
      return "stabilized-doubling(" + std::to_string(s.initial_len) + "," +
             std::to_string(s.max_len) + ")";
    }
  } visitor;
  return std::visit(visitor, src);
}

// ---------------------------------------------------------------------------

namespace {

/// A word together with per-letter prefix counts: cum[a][i] = |w[0, i)|_a.
struct CountedString {
  FiniteWord word;
  std::array<std::vector<std::int32_t>, 3> cum;

  explicit CountedString(FiniteWord w) : word(std::move(w)) { recount(0); }

  void recount(std::size_t from) {
    unsigned k = word.alphabet_size();
    for (unsigned a = 0; a < k; ++a) {
      auto& c = cum[a];
      c.resize(word.size() + 1);
      if (from == 0) c[0] = 0;
      for (std::size_t i = from; i < word.size(); ++i) {
        c[i + 1] = c[i] + (word[i] == a ? 1 : 0);
      }
    }
  }
};

/// The windows of s->word that end at or before `len`.
struct Span {
  const CountedString* s;
  std::size_t len;
  bool prefix_based;
};

LetterRange letter_range(const std::vector<Span>& spans, std::size_t n, Letter a) {
  std::int32_t lo = std::numeric_limits<std::int32_t>::max();
  std::int32_t hi = std::numeric_limits<std::int32_t>::min();
  for (const Span& sp : spans) {
    if (sp.len < n) continue;
    const std::int32_t* c = sp.s->cum[a].data();
    std::size_t last = sp.len - n;
    for (std::size_t i = 0; i <= last; ++i) {
      std::int32_t d = c[i + n] - c[i];
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  if (hi < lo) throw ConfigError("factor scan: no window of length " + std::to_string(n));
  return {lo, hi};
}

std::vector<LetterRange> all_ranges(const std::vector<Span>& spans, std::size_t n, unsigned k) {
  std::vector<LetterRange> out;
  out.reserve(k);
  for (unsigned a = 0; a < k; ++a) out.push_back(letter_range(spans, n, static_cast<Letter>(a)));
  return out;
}

std::vector<ParikhVector> parikh_over(const std::vector<Span>& spans, std::size_t n, unsigned k) {
  auto n64 = static_cast<std::int64_t>(n);
  LetterRange r0 = letter_range(spans, n, 0);
  std::vector<ParikhVector> out;
  if (k == 2) {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(r0.max - r0.min + 1), 0);
    for (const Span& sp : spans) {
      if (sp.len < n) continue;
      const std::int32_t* c = sp.s->cum[0].data();
      for (std::size_t i = 0; i + n <= sp.len; ++i) seen[c[i + n] - c[i] - r0.min] = 1;
    }
    for (std::size_t z = 0; z < seen.size(); ++z) {
      if (!seen[z]) continue;
      std::int64_t zeros = r0.min + static_cast<std::int64_t>(z);
      out.push_back(make_parikh(zeros, n64 - zeros));
    }
    return out;
  }
  LetterRange r1 = letter_range(spans, n, 1);
  auto w0 = static_cast<std::size_t>(r0.max - r0.min + 1);
  auto w1 = static_cast<std::size_t>(r1.max - r1.min + 1);
  std::vector<std::uint8_t> seen(w0 * w1, 0);
  for (const Span& sp : spans) {
    if (sp.len < n) continue;
    const std::int32_t* c0 = sp.s->cum[0].data();
    const std::int32_t* c1 = sp.s->cum[1].data();
    for (std::size_t i = 0; i + n <= sp.len; ++i) {
      auto d0 = static_cast<std::size_t>(c0[i + n] - c0[i] - r0.min);
      auto d1 = static_cast<std::size_t>(c1[i + n] - c1[i] - r1.min);
      seen[d0 * w1 + d1] = 1;
    }
  }
  for (std::size_t x = 0; x < w0; ++x) {
    for (std::size_t y = 0; y < w1; ++y) {
      if (!seen[x * w1 + y]) continue;
      std::int64_t a = r0.min + static_cast<std::int64_t>(x);
      std::int64_t b = r1.min + static_cast<std::int64_t>(y);
      out.push_back(make_parikh(a, b, n64 - a - b));
    }
  }
  return out;
}

struct FactorKey {
  const Letter* start;
  std::uint64_t position;  // 1-based, 0 when not prefix based
};

std::vector<std::pair<FiniteWord, std::uint64_t>> factors_over(const std::vector<Span>& spans,
                                                               std::size_t n, unsigned k) {
  constexpr std::uint64_t kBase = 1000003;
  std::uint64_t top = 1;  // kBase^n mod 2^64
  for (std::size_t i = 0; i < n; ++i) top *= kBase;

  std::unordered_map<std::uint64_t, std::vector<FactorKey>> buckets;
  for (const Span& sp : spans) {
    if (sp.len < n || n == 0) continue;
    const Letter* w = sp.s->word.symbols().data();
    std::uint64_t h = 0;
    for (std::size_t j = 0; j < n; ++j) h = h * kBase + (w[j] + 1u);
    for (std::size_t i = 0;; ++i) {
      auto& bucket = buckets[h];
      bool known = std::any_of(bucket.begin(), bucket.end(), [&](const FactorKey& f) {
        return std::equal(f.start, f.start + n, w + i);
      });
      if (!known) bucket.push_back({w + i, sp.prefix_based ? i + 1 : 0});
      if (i + n >= sp.len) break;
      h = h * kBase + (w[i + n] + 1u) - top * (w[i] + 1u);
    }
  }
  std::vector<std::pair<FiniteWord, std::uint64_t>> out;
  for (const auto& [h, bucket] : buckets) {
    for (const FactorKey& f : bucket) {
      out.emplace_back(FiniteWord(std::vector<Letter>(f.start, f.start + n), k), f.position);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

struct FactorScanner::Cache {
  std::unique_ptr<CountedString> prefix;
  std::map<unsigned, std::vector<CountedString>> covers;
  std::vector<FiniteWord> pair_factors;

  const CountedString& ensure_prefix(const WordGenerator& g, std::uint64_t len) {
    if (!prefix) prefix = std::make_unique<CountedString>(FiniteWord(g.alphabet_size()));
    std::size_t have = prefix->word.size();
    if (have >= len) return *prefix;
    g.extend_prefix(prefix->word, std::max<std::uint64_t>(len, 2 * have));
    prefix->recount(have);
    return *prefix;
  }

  const std::vector<CountedString>& ensure_cover(const WordGenerator& g, unsigned t) {
    auto it = covers.find(t);
    if (it != covers.end()) return it->second;
    if (pair_factors.empty()) {
      // 10^4 letters are far past the point where all length-2 factors occur.
      FiniteWord p = g.prefix(10000);
      std::set<FiniteWord> pairs;
      for (std::size_t i = 0; i + 2 <= p.size(); ++i) pairs.insert(p.substr(i, 2));
      pair_factors.assign(pairs.begin(), pairs.end());
    }
    std::vector<CountedString> strings;
    for (const FiniteWord& x : pair_factors) {
      strings.emplace_back(morphism_power(*g.morphism(), x, t));
    }
    return covers.emplace(t, std::move(strings)).first->second;
  }
};

FactorScanner::FactorScanner(WordGenerator g, FactorSource src)
    : gen_(std::move(g)), src_(src), cache_(std::make_unique<Cache>()) {}
FactorScanner::~FactorScanner() = default;
FactorScanner::FactorScanner(FactorScanner&&) noexcept = default;
FactorScanner& FactorScanner::operator=(FactorScanner&&) noexcept = default;

namespace {

template <class Stat>
auto run_scan(const WordGenerator& g, const FactorSource& requested, FactorScanner::Cache& cache,
              std::uint64_t n, Stat stat) -> decltype(stat(std::vector<Span>{})) {
  if (n == 0) throw DomainError("factor length must be positive");
  FactorSource src = std::holds_alternative<DefaultSource>(requested) ? default_source(g, n)
                                                                       : requested;
  if (const auto* ep = std::get_if<ExplicitPrefix>(&src)) {
    if (ep->length < n) {
      throw ConfigError("ExplicitPrefix(" + std::to_string(ep->length) +
                        ") is shorter than the factor length " + std::to_string(n));
    }
    const CountedString& s = cache.ensure_prefix(g, ep->length);
    return stat({Span{&s, ep->length, true}});
  }
  if (const auto* mc = std::get_if<MorphicCover>(&src)) {
    const Morphism* m = g.morphism();
    if (m == nullptr || !m->uniform_length() || *m->uniform_length() < 2) {
      throw ConfigError("MorphicCover needs a fixed point of a uniform morphism; " + g.name() +
                        " is not one");
    }
    auto len = static_cast<std::uint64_t>(*m->uniform_length());
    // The smallest power whose images already reach n gives the same windows.
    unsigned t = 1;
    std::uint64_t reach = len;
    while (reach < n && t < mc->t_power) {
      reach *= len;
      ++t;
    }
    if (reach < n) {
      throw ConfigError("MorphicCover(t=" + std::to_string(mc->t_power) + ") covers lengths up to " +
                        std::to_string(reach) + ", asked for " + std::to_string(n));
    }
    std::vector<Span> spans;
    for (const CountedString& s : cache.ensure_cover(g, t)) {
      spans.push_back(Span{&s, s.word.size(), false});
    }
    return stat(spans);
  }
  const auto& sd = std::get<StabilizedDoubling>(src);
  if (sd.initial_len < n || sd.initial_len > sd.max_len) {
    throw ConfigError("StabilizedDoubling(" + std::to_string(sd.initial_len) + "," +
                      std::to_string(sd.max_len) + ") cannot scan length " + std::to_string(n));
  }
  std::uint64_t len = sd.initial_len;
  auto previous = stat({Span{&cache.ensure_prefix(g, len), len, true}});
  for (;;) {
    if (2 * len > sd.max_len) {
      throw StabilizationError(g.name() + ": factors of length " + std::to_string(n) +
                               " did not stabilize within " + std::to_string(sd.max_len) +
                               " letters");
    }
    len *= 2;
    auto current = stat({Span{&cache.ensure_prefix(g, len), len, true}});
    if (current == previous) return current;
    previous = std::move(current);
  }
}

}  // namespace

std::vector<ParikhVector> FactorScanner::parikh_set(std::uint64_t n) {
  unsigned k = gen_.alphabet_size();
  return run_scan(gen_, src_, *cache_, n,
                  [&](const std::vector<Span>& spans) { return parikh_over(spans, n, k); });
}

std::vector<LetterRange> FactorScanner::letter_ranges(std::uint64_t n) {
  unsigned k = gen_.alphabet_size();
  return run_scan(gen_, src_, *cache_, n,
                  [&](const std::vector<Span>& spans) { return all_ranges(spans, n, k); });
}

ZeroEnvelope FactorScanner::zero_envelope(std::uint64_t n) {
  if (gen_.alphabet_size() != 2) throw DomainError("zero_envelope: binary words only");
  LetterRange r = run_scan(gen_, src_, *cache_, n, [&](const std::vector<Span>& spans) {
    return letter_range(spans, n, 0);
  });
  return ZeroEnvelope{n, r.min, r.max};
}

std::vector<Occurrence> FactorScanner::distinct_factors(std::uint64_t n) {
  unsigned k = gen_.alphabet_size();
  auto raw = run_scan(gen_, src_, *cache_, n,
                      [&](const std::vector<Span>& spans) { return factors_over(spans, n, k); });
  std::vector<Occurrence> out;
  out.reserve(raw.size());
  for (auto& [w, pos] : raw) {
    out.push_back(Occurrence{std::move(w), pos ? std::optional<std::uint64_t>(pos) : std::nullopt});
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<ParikhVector> parikh_set(const WordGenerator& g, std::uint64_t n,
                                     const FactorSource& src) {
  return FactorScanner(g, src).parikh_set(n);
}

std::uint64_t abelian_complexity(const WordGenerator& g, std::uint64_t n, const FactorSource& src) {
  return parikh_set(g, n, src).size();
}

ZeroEnvelope zero_envelope(const WordGenerator& g, std::uint64_t n, const FactorSource& src) {
  return FactorScanner(g, src).zero_envelope(n);
}

std::vector<ZeroEnvelope> envelope_table(const WordGenerator& g, std::uint64_t max_n,
                                         const FactorSource& src) {
  FactorScanner scanner(g, src);
  std::vector<ZeroEnvelope> table;
  table.reserve(max_n);
  for (std::uint64_t n = 1; n <= max_n; ++n) table.push_back(scanner.zero_envelope(n));
  return table;
}

std::vector<Occurrence> distinct_factors(const WordGenerator& g, std::uint64_t n,
                                         const FactorSource& src) {
  return FactorScanner(g, src).distinct_factors(n);
}

PfDeltaStats pf_delta_stats(std::uint64_t n, const FactorSource& src) {
  PfDeltaStats stats;
  auto n64 = static_cast<std::int64_t>(n);
  for (const ParikhVector& p : parikh_set(WordGenerator::paperfolding(), n, src)) {
    stats.delta_set.push_back(2 * p[0] - n64);
  }
  std::sort(stats.delta_set.begin(), stats.delta_set.end());
  stats.max_delta = stats.delta_set.back();
  return stats;
}

bool is_balanced(const WordGenerator& g, std::uint64_t max_len, std::int64_t c,
                 const FactorSource& src) {
  FactorScanner scanner(g, src);
  for (std::uint64_t n = 1; n <= max_len; ++n) {
    for (const LetterRange& r : scanner.letter_ranges(n)) {
      if (r.max - r.min > c) return false;
    }
  }
  return true;
}

WelldocResult welldoc_check(const WordGenerator& g, const FiniteWord& w, std::int64_t m,
                            std::uint64_t scan_limit) {
  if (m < 2) throw DomainError("welldoc_check: modulus must be at least 2");
  if (w.empty()) throw DomainError("welldoc_check: empty factor");
  unsigned k = g.alphabet_size();
  FiniteWord text = g.prefix(scan_limit + w.size() - 1);

  std::set<std::vector<std::int64_t>> residues;
  std::vector<std::int64_t> counts(k, 0);  // psi(u) for the current |u| = p
  WelldocResult result;
  for (std::uint64_t p = 0; p < scan_limit; ++p) {
    bool match = true;
    for (std::size_t j = 0; j < w.size() && match; ++j) match = text[p + j] == w[j];
    if (match) {
      ++result.occurrences;
      std::vector<std::int64_t> r(k);
      for (unsigned a = 0; a < k; ++a) r[a] = counts[a] % m;
      residues.insert(std::move(r));
    }
    ++counts[text[p]];
  }
  if (result.occurrences == 0) {
    throw FactorNotFound(w.to_string() + " does not occur in the first " +
                         std::to_string(scan_limit + w.size() - 1) + " letters of " + g.name());
  }
  std::int64_t total = 1;
  for (unsigned a = 0; a < k; ++a) total *= m;
  result.residues_found.assign(residues.begin(), residues.end());
  result.complete = static_cast<std::int64_t>(residues.size()) == total;
  return result;
}

}  // namespace frobword
