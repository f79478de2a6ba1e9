#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobword/generators.hpp"
#include "frobword/word.hpp"

namespace frobword {

/// Per-letter occurrence counts of a finite word.
struct ParikhVector {
  unsigned alphabet_size = 2;
  std::array<std::int64_t, 3> counts{};

  std::int64_t operator[](std::size_t a) const { return counts[a]; }
  std::int64_t length() const { return counts[0] + counts[1] + counts[2]; }
  std::string to_string() const;

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
  friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
};

ParikhVector make_parikh(std::int64_t c0, std::int64_t c1);
ParikhVector make_parikh(std::int64_t c0, std::int64_t c1, std::int64_t c2);

ParikhVector parikh(const FiniteWord& w);

// ---------------------------------------------------------------------------
// Where length-n factors are looked for.

/// Every window of the length-`length` prefix.
struct ExplicitPrefix {
  std::uint64_t length;
};

/// Every window of m^t(x) for each length-2 factor x of a fixed point of a
/// uniform morphism m of length l. Complete for windows of length <= l^t.
struct MorphicCover {
  unsigned t_power;
};

/// Prefix scans of length initial_len, 2 initial_len, ... until the result
/// is unchanged across one doubling. Failing to settle before max_len
/// raises StabilizationError.
struct StabilizedDoubling {
  std::uint64_t initial_len;
  std::uint64_t max_len;
};

/// The word's default: MorphicCover for morphic fixed points, otherwise
/// StabilizedDoubling(64 n, max(2^20, 128 n)), chosen per length n.
struct DefaultSource {};

using FactorSource = std::variant<DefaultSource, ExplicitPrefix, MorphicCover, StabilizedDoubling>;

/// Resolves DefaultSource for one length.
FactorSource default_source(const WordGenerator& g, std::uint64_t n);

std::string describe(const FactorSource& src);

/// Minimum and maximum number of zeros over the length-n factors.
struct ZeroEnvelope {
  std::uint64_t n = 0;
  std::int64_t z_min = 0;
  std::int64_t z_max = 0;

  friend bool operator==(const ZeroEnvelope&, const ZeroEnvelope&) = default;
};

struct LetterRange {
  std::int64_t min = 0;
  std::int64_t max = 0;

  friend bool operator==(const LetterRange&, const LetterRange&) = default;
};

/// A distinct factor and, for prefix-based sources, the 1-based position of
/// its first occurrence.
struct Occurrence {
  FiniteWord factor;
  std::optional<std::uint64_t> first_position;
};

/// Scans factors of one word under one FactorSource, caching generated
/// prefixes and morphic covers across calls. A scanner is not shared between
/// threads; build one per task.
class FactorScanner {
 public:
  explicit FactorScanner(WordGenerator g, FactorSource src = DefaultSource{});
  ~FactorScanner();
  FactorScanner(FactorScanner&&) noexcept;
  FactorScanner& operator=(FactorScanner&&) noexcept;

  const WordGenerator& generator() const { return gen_; }
  const FactorSource& source() const { return src_; }

  /// Sorted, duplicate-free.
  std::vector<ParikhVector> parikh_set(std::uint64_t n);
  ZeroEnvelope zero_envelope(std::uint64_t n);
  /// min/max count of each letter over length-n factors.
  std::vector<LetterRange> letter_ranges(std::uint64_t n);
  /// Sorted by factor.
  std::vector<Occurrence> distinct_factors(std::uint64_t n);

  struct Cache;  // generated prefixes and covers; defined in factors.cpp

 private:
  WordGenerator gen_;
  FactorSource src_;
  std::unique_ptr<Cache> cache_;
};

std::vector<ParikhVector> parikh_set(const WordGenerator& g, std::uint64_t n,
                                     const FactorSource& src = DefaultSource{});
std::uint64_t abelian_complexity(const WordGenerator& g, std::uint64_t n,
                                 const FactorSource& src = DefaultSource{});
ZeroEnvelope zero_envelope(const WordGenerator& g, std::uint64_t n,
                           const FactorSource& src = DefaultSource{});

/// zero_envelope for every n in 1..max_n; element i holds length i + 1.
std::vector<ZeroEnvelope> envelope_table(const WordGenerator& g, std::uint64_t max_n,
                                         const FactorSource& src = DefaultSource{});

std::vector<Occurrence> distinct_factors(const WordGenerator& g, std::uint64_t n,
                                         const FactorSource& src = DefaultSource{});

struct PfDeltaStats {
  std::int64_t max_delta = 0;           ///< M(n)
  std::vector<std::int64_t> delta_set;  ///< sorted values of |w|_0 - |w|_1
};

/// Delta statistics over length-n factors of the paperfolding word.
PfDeltaStats pf_delta_stats(std::uint64_t n, const FactorSource& src = DefaultSource{});

/// True iff for every letter and every n <= max_len the letter counts of
/// length-n factors spread by at most c.
bool is_balanced(const WordGenerator& g, std::uint64_t max_len, std::int64_t c,
                 const FactorSource& src = DefaultSource{});

struct WelldocResult {
  bool complete = false;
  std::uint64_t occurrences = 0;
  std::vector<std::vector<std::int64_t>> residues_found;  ///< sorted
};

/// Collects psi(u) mod m over the occurrences g = u w v with |u| < scan_limit.
/// complete means all m^k residue vectors were seen. Throws FactorNotFound if
/// w never occurs in range.
WelldocResult welldoc_check(const WordGenerator& g, const FiniteWord& w, std::int64_t m,
                            std::uint64_t scan_limit);

}  // namespace frobword
