#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "frobword/word.hpp"

namespace frobword {

// All positions below are 1-based: letter(1) is the first letter.

// ---------------------------------------------------------------------------
// Paperfolding word pf = 0010011000110110...

/// Writes n = m * 2^j with m odd; 0 if m = 1 (mod 4), else 1.
/// Throws DomainError for n = 0.
Letter pf_letter(std::uint64_t n);

enum class PfConstruction {
  Direct,     ///< pf_letter over 1..n
  Recursive,  ///< f(k+1) = f(k) 0 reverse(complement(f(k)))
  Toeplitz,   ///< fill every second hole with (01)^omega until n is fixed
};

FiniteWord pf_prefix(std::uint64_t n, PfConstruction construction = PfConstruction::Direct);

// ---------------------------------------------------------------------------
// Beatty sequences of the golden ratio, computed without floating point.

enum class BeattyKind {
  FloorPhi,    ///< floor(n * phi), phi = (1 + sqrt 5) / 2
  FloorAlpha,  ///< floor(n * alpha), alpha = 2 - phi
};

/// floor(sqrt(x)) for any 64-bit x.
std::uint64_t isqrt(std::uint64_t x);

/// floor(n phi) = floor((n + isqrt(5 n^2)) / 2); floor(n alpha) = 2n - floor(n phi) - 1.
/// FloorAlpha requires n >= 1 (DomainError); RangeError when 5n^2 overflows.
std::uint64_t fib_beatty(std::uint64_t n, BeattyKind which);

/// floor(n alpha) extended with floor(0 * alpha) = 0.
std::uint64_t floor_n_alpha(std::uint64_t n);

// ---------------------------------------------------------------------------
// Fibonacci word f = 0100101001001...

/// f[i] = floor((i+1) alpha) - floor(i alpha).
Letter fibonacci_letter(std::uint64_t i);

FiniteWord fibonacci_prefix(std::uint64_t n);

/// |f[1, n]|_1 = floor((n+1) alpha); |f[1, n]|_0 = n - that.
std::uint64_t fibonacci_ones_upto(std::uint64_t n);
std::uint64_t fibonacci_zeros_upto(std::uint64_t n);

// ---------------------------------------------------------------------------
// Morphic word Phi = phi^omega(0) with phi: 0 -> 00101, 1 -> 11011.

const Morphism& phi_morphism();
Letter phi_letter(std::uint64_t n);
FiniteWord phi_prefix(std::uint64_t n);

// ---------------------------------------------------------------------------
// Ternary word t = T(f).

enum class ZeroStart {
  SecondZero,  ///< T: the 2nd, 4th, ... zeros become 2
  FirstZero,   ///< T-bar: the 1st, 3rd, ... zeros become 2
};

/// Replaces every second zero of a binary word by 2, counting zeros from
/// the start of `w`. Ones are unchanged.
FiniteWord apply_T(const FiniteWord& w, ZeroStart start);

/// t[n], using the zero count of f up to n (not of any finite window).
Letter ternary_t_letter(std::uint64_t n);

/// apply_T(fibonacci_prefix(n), SecondZero).
FiniteWord ternary_t_prefix(std::uint64_t n);

// ---------------------------------------------------------------------------

enum class WordFamily { Paperfolding, Fibonacci, MorphicPhi, TernaryT, Custom };

/// Pure indexed access to an infinite word. Copies share the (immutable)
/// letter function.
class WordGenerator {
 public:
  using LetterFn = std::function<Letter(std::uint64_t)>;

  static WordGenerator paperfolding();
  static WordGenerator fibonacci();
  static WordGenerator morphic_phi();
  static WordGenerator ternary_t();
  /// Any other word; `letter` must be pure.
  static WordGenerator custom(std::string name, unsigned alphabet_size, LetterFn letter);

  /// "pf", "fib", "phi", "t"; throws DomainError for anything else.
  static WordGenerator by_name(const std::string& name);

  WordFamily family() const { return family_; }
  const std::string& name() const { return name_; }
  unsigned alphabet_size() const { return alphabet_size_; }

  Letter letter(std::uint64_t n) const;
  FiniteWord prefix(std::uint64_t n) const;
  /// Appends letters |w|+1 .. n to w.
  void extend_prefix(FiniteWord& w, std::uint64_t n) const;

  /// The morphism and seed when the word is a morphic fixed point.
  const Morphism* morphism() const { return morphism_.get(); }
  Letter seed() const { return seed_; }

 private:
  WordGenerator(WordFamily family, std::string name, unsigned alphabet_size, LetterFn letter);

  WordFamily family_;
  std::string name_;
  unsigned alphabet_size_;
  LetterFn letter_;
  std::shared_ptr<const Morphism> morphism_;
  Letter seed_ = 0;
};

}  // namespace frobword
