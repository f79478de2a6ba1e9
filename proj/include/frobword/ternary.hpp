#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "frobword/factors.hpp"
#include "frobword/frobenius.hpp"
#include "frobword/half.hpp"
#include "frobword/word.hpp"

namespace frobword {

// Weight maps on t are (S0, S1, S2) = (S(0), S(1), S(2)).

struct OffsetTable {
  Half o1, o2, o3;  ///< odd offsets
  Half e1, e2, e3;  ///< even offsets
  Half k;           ///< max |offset|

  /// r in 1..3
  Half o(int r) const;
  Half e(int r) const;
};

/// o1 = S0/2 - S1 + S2/2, o2 = (S0 - S2)/2, o3 = -o2, e1 = S0 - S1, e2 = S2 - S1, e3 = 0.
OffsetTable offsets(const Weights& s);

/// m(n) = (1/2) floor(n phi) (S0 - 2S1 + S2) - (1/2) n (S0 - 4S1 + S2). n >= 1.
Half main_term(std::uint64_t n, const Weights& s);

/// F[n] = o1 + S1 if f[n] = 0, S1 if f[n] = 1.
Half f_term(std::uint64_t n, const Weights& s);
/// F[i..j]
std::vector<Half> f_sequence(std::uint64_t i, std::uint64_t j, const Weights& s);

enum class GeneratingPrefix { T0, T1, Tbar0, Tbar1 };

std::string to_string(GeneratingPrefix v);

/// Closed-form Parikh vector of T(0f[1,n]), T(1f[1,n]), T-bar(0f[1,n]) or
/// T-bar(1f[1,n]) from h(n) = floor((n+1) alpha) and the parity of n - h(n).
ParikhVector generating_prefix_parikh(std::uint64_t n, GeneratingPrefix v);

/// The word itself, built letter by letter.
FiniteWord generating_prefix(std::uint64_t n, GeneratingPrefix v);

/// |f[1, n-1]|_0 mod 2 = (n - 1 - floor(n alpha)) mod 2.
unsigned mu(std::uint64_t n);
/// (n - 1 - floor((n-1) alpha)) mod 2, the closed form printed with the g formulas.
unsigned mu_closed_form(std::uint64_t n);

/// g1, g2, g3 for n >= 2 with parity mu(n). ConsistencyError if any is not
/// an integer.
std::array<std::int64_t, 3> g_triple(std::uint64_t n, const Weights& s);
/// S(L_{n,t}) for n >= 1 as a sorted set (n = 1 gives {S0, S1, S2}).
std::vector<std::int64_t> g_values(std::uint64_t n, const Weights& s);

/// g1, g2, g3 with mu_closed_form in place of mu; may be non-integral.
std::array<Half, 3> g_triple_closed_form(std::uint64_t n, const Weights& s);

/// The n in [2, n_max] where mu and mu_closed_form differ.
std::vector<std::uint64_t> mu_divergence(std::uint64_t n_max);

struct HalfInterval {
  Half lo;
  Half hi;
  bool empty() const { return hi < lo; }
};

/// I = [k + 1, sum(window) + next_term - (k + 1)].
HalfInterval interval_I(std::span<const Half> window, Half next_term, Half k);

enum class Parity { Even, Odd };

std::string to_string(Parity p);

/// S^0 (Even) or S^1 (Odd) of the F-window aligned with the f-factor
/// `window`, unshifted. Sorted, duplicate-free.
std::vector<Half> semi_image(const FiniteWord& window, const Weights& s, Parity p);

/// K^0 or K^1. `factor` is the f-factor under the window followed by one more
/// letter, which supplies F[j+1] for the interval. Odd values are reported
/// after the (o1 + S1) shift. Sorted.
std::vector<std::int64_t> semi_complement(const FiniteWord& factor, const Weights& s, Parity p);

/// l = ceil(2 (k + 1) / min{S1, o1 + S1}).
std::uint64_t window_length(const Weights& s);

struct FibFactor {
  FiniteWord factor;
  std::uint64_t first_position = 0;  ///< 1-based
};

/// The n + 1 distinct length-n factors of f by first occurrence, from prefixes
/// of length 32n, 64n, ... up to 2^22. StabilizationError past the cap.
std::vector<FibFactor> fibonacci_factors(std::uint64_t n);

struct Cofinite {
  std::vector<std::int64_t> complement;
};

struct InfiniteComplement {
  FiniteWord factor;                   ///< length l + 1 f-factor
  std::uint64_t factor_start_index = 0;
  Parity parity = Parity::Even;
  Half missed_value;
};

struct TernaryDecision {
  Weights weights;
  Half k;
  std::uint64_t l = 0;
  std::uint64_t factors_checked = 0;
  std::variant<Cofinite, InfiniteComplement> outcome;

  bool cofinite() const { return std::holds_alternative<Cofinite>(outcome); }
};

/// Checks every semi-complement of every length-l window (one window when
/// S0 + S2 = 2 S1, where F is constant). Cofinite results carry
/// finite_complement. DomainError unless the three weights have gcd 1.
TernaryDecision decide_cofinite(const Weights& s);

/// Bound above which every integer is a value of a cofinite map:
/// ceil(m(2l + 4)) + ceil(k) + max S_i.
std::int64_t complement_search_bound(const Weights& s);

/// [1, B] minus the g-values of all lengths, cross-checked against a scan of
/// Parikh sets of t (ConsistencyError on disagreement). PreconditionError if
/// the complement is infinite.
std::vector<std::int64_t> finite_complement(const Weights& s);

struct Table2Row {
  std::array<std::int64_t, 3> weights{};
  std::vector<std::int64_t> complement;
};

/// Every admissible triple of 1..7 in lexicographic order, skipping gcd > 1
/// and S0 >= S2 (the reversal gives the same values).
std::vector<TernaryDecision> table2_sweep();
/// The cofinite rows of the sweep.
std::vector<Table2Row> table2();

/// S(L_t) restricted to [1, n_max], sorted.
std::vector<std::int64_t> value_set_upto(const Weights& s, std::int64_t n_max);
/// |S(L_t) cap [1, N]| / N
double value_density(const Weights& s, std::int64_t N);

/// S(L_{n,t}) from Parikh vectors of t found by scanning.
std::vector<std::int64_t> scanned_values(FactorScanner& t_scanner, std::uint64_t n, const Weights& s);

// Bounded checks of the identities the decision rests on. Each returns the
// failing indices (empty means the property held).

/// m(n+1) - m(n) = F[n], n in [1, n_max].
std::vector<std::uint64_t> telescoping_failures(const Weights& s, std::uint64_t n_max);
/// The value identities relating the four generating prefixes, on the words.
std::vector<std::uint64_t> generating_value_failures(const Weights& s, std::uint64_t n_max);
/// Closed-form Parikh vectors against the built words.
std::vector<std::uint64_t> generating_parikh_failures(std::uint64_t n_max);
/// n where the four generating prefixes do not take exactly three Parikh vectors.
std::vector<std::uint64_t> two_coincide_failures(std::uint64_t n_max);
/// i where the shifted intervals of windows i and i + 1 do not touch.
std::vector<std::uint64_t> cover_failures(const Weights& s, std::uint64_t i_max);
/// i where a partial sum plus an offset from outside window i lands in its
/// shifted interval.
std::vector<std::uint64_t> overlap_failures(const Weights& s, std::uint64_t i_max);

}  // namespace frobword
