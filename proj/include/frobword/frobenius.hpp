#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobword/factors.hpp"
#include "frobword/generators.hpp"
#include "frobword/word.hpp"

namespace frobword {

/// Letter weights of the additive map S: S(w) = sum_a values[a] * |w|_a.
class Weights {
 public:
  /// Throws DomainError unless there are 2 or 3 values, all >= 1.
  explicit Weights(std::vector<std::int64_t> values);

  /// Parses "2,5" or "1,3,5".
  static Weights parse(const std::string& csv);

  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](std::size_t a) const { return values_[a]; }
  const std::vector<std::int64_t>& values() const { return values_; }

  std::int64_t gcd() const { return gcd_; }
  bool coprime() const { return gcd_ == 1; }
  std::int64_t min() const;
  std::int64_t max() const;

  std::string to_string() const;

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  std::vector<std::int64_t> values_;
  std::int64_t gcd_ = 1;
};

/// ab - a - b: the largest integer that is not x a + y b with x, y >= 0.
/// Negative when a or b is 1. DomainError unless gcd(a, b) = 1.
std::int64_t sylvester_number(std::int64_t a, std::int64_t b);

std::int64_t s_value(const FiniteWord& w, const Weights& s);
std::int64_t s_value(const ParikhVector& p, const Weights& s);

/// {S(u) : u a factor, 1 <= |u| <= max_len}, sorted. Binary words use the
/// zero envelope of each length: the values bL + (a - b) x for x in
/// [z_min(L), z_max(L)]. That is exact only for words whose Parikh sets are
/// intervals, so it is used for the morphic word Phi; other words go
/// through explicit Parikh sets.
std::vector<std::int64_t> representable_set(const WordGenerator& g, const Weights& s,
                                            std::uint64_t max_len,
                                            const FactorSource& src = DefaultSource{});

enum class ComplementMethod {
  EnvelopeInterval,  ///< per target: solve for the zero count, test the envelope
  ExplicitParikh,    ///< per length: mark the values of every Parikh vector
};

std::string to_string(ComplementMethod m);

struct ComplementReport {
  Weights weights;
  std::int64_t search_bound = 0;
  std::uint64_t max_factor_length = 0;
  std::vector<std::int64_t> complement;  ///< sorted; 0 < value < search_bound
  ComplementMethod method = ComplementMethod::ExplicitParikh;
  std::string source;
};

/// The positive integers below `bound` that are not S(u) for any factor u
/// with |u| <= max_len. Requires max_len >= (bound - 1) / min(s) so every
/// length that could represent a value below the bound is scanned.
ComplementReport complement_below(const WordGenerator& g, const Weights& s, std::int64_t bound,
                                  std::uint64_t max_len,
                                  const FactorSource& src = DefaultSource{});

/// Same as above over a precomputed zero-envelope table (element i holds
/// length i + 1); the table must reach max_len.
ComplementReport complement_below(const std::vector<ZeroEnvelope>& envelopes, const Weights& s,
                                  std::int64_t bound, std::uint64_t max_len);

struct PfWitness {
  unsigned n = 0;
  std::int64_t m = 0;
  bool verified_nonrepresentable = false;
};

/// For each n in [n_lo, n_hi]: m = a (2^(n-1) - 2) + b (2^(n-1) + 2) and
/// whether no paperfolding factor of any length L <= m / a has weight m,
/// judged by whether the zero count forced by L lies in pf's zero envelope.
/// Requires 4 <= a < b, gcd(a, b) = 1.
std::vector<PfWitness> pf_witnesses(std::int64_t a, std::int64_t b, unsigned n_lo, unsigned n_hi);

}  // namespace frobword
