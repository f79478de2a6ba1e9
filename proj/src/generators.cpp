#include "frobword/generators.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "frobword/errors.hpp"

namespace frobword {

Letter pf_letter(std::uint64_t n) {
  if (n == 0) throw DomainError("pf_letter: positions start at 1");
  std::uint64_t odd = n >> std::countr_zero(n);
  return (odd % 4 == 1) ? 0 : 1;
}

namespace {

FiniteWord pf_recursive(std::uint64_t n) {
  std::vector<Letter> f{0};
  while (f.size() < n) {
    std::size_t len = f.size();
    f.reserve(2 * len + 1);
    f.push_back(0);
    for (std::size_t i = len; i-- > 0;) f.push_back(static_cast<Letter>(1 - f[i]));
  }
  f.resize(n);
  return FiniteWord(std::move(f), 2);
}

FiniteWord pf_toeplitz(std::uint64_t n) {
  constexpr Letter kHole = 0xff;
  std::vector<Letter> f(n, kHole);
  std::vector<std::uint64_t> holes(n);
  for (std::uint64_t i = 0; i < n; ++i) holes[i] = i;
  // Each pass writes (01)^omega into every second remaining hole; a hole at
  // position m * 2^j (m odd) is filled on pass j.
  while (!holes.empty()) {
    std::vector<std::uint64_t> remaining;
    remaining.reserve(holes.size() / 2);
    for (std::size_t h = 0; h < holes.size(); ++h) {
      if (h % 2 == 0) {
        f[holes[h]] = static_cast<Letter>((h / 2) % 2);
      } else {
        remaining.push_back(holes[h]);
      }
    }
    holes = std::move(remaining);
  }
  return FiniteWord(std::move(f), 2);
}

}  // namespace

FiniteWord pf_prefix(std::uint64_t n, PfConstruction construction) {
  if (n == 0) throw DomainError("pf_prefix: n must be positive");
  switch (construction) {
    case PfConstruction::Recursive:
      return pf_recursive(n);
    case PfConstruction::Toeplitz:
      return pf_toeplitz(n);
    case PfConstruction::Direct:
      break;
  }
  std::vector<Letter> f(n);
  for (std::uint64_t i = 1; i <= n; ++i) f[i - 1] = pf_letter(i);
  return FiniteWord(std::move(f), 2);
}

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (static_cast<unsigned __int128>(r) * r > x) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::uint64_t fib_beatty(std::uint64_t n, BeattyKind which) {
  if (which == BeattyKind::FloorAlpha && n == 0) {
    throw DomainError("fib_beatty: floor(n alpha) identity needs n >= 1");
  }
  std::uint64_t sq = 0;
  if (__builtin_mul_overflow(n, n, &sq) || __builtin_mul_overflow(sq, std::uint64_t{5}, &sq)) {
    throw RangeError("fib_beatty: 5 n^2 overflows 64 bits for n = " + std::to_string(n));
  }
  // sqrt(5 n^2) is irrational for n >= 1, so flooring it first is exact.
  std::uint64_t floor_phi = (n + isqrt(sq)) / 2;
  if (which == BeattyKind::FloorPhi) return floor_phi;
  return 2 * n - floor_phi - 1;
}

std::uint64_t floor_n_alpha(std::uint64_t n) {
  return n == 0 ? 0 : fib_beatty(n, BeattyKind::FloorAlpha);
}

Letter fibonacci_letter(std::uint64_t i) {
  if (i == 0) throw DomainError("fibonacci_letter: positions start at 1");
  return static_cast<Letter>(floor_n_alpha(i + 1) - floor_n_alpha(i));
}

FiniteWord fibonacci_prefix(std::uint64_t n) {
  if (n == 0) throw DomainError("fibonacci_prefix: n must be positive");
  std::vector<Letter> f(n);
  std::uint64_t prev = floor_n_alpha(1);
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::uint64_t next = floor_n_alpha(i + 1);
    f[i - 1] = static_cast<Letter>(next - prev);
    prev = next;
  }
  return FiniteWord(std::move(f), 2);
}

std::uint64_t fibonacci_ones_upto(std::uint64_t n) { return floor_n_alpha(n + 1); }

std::uint64_t fibonacci_zeros_upto(std::uint64_t n) { return n - fibonacci_ones_upto(n); }

const Morphism& phi_morphism() {
  static const Morphism m({FiniteWord::from_string("00101", 2), FiniteWord::from_string("11011", 2)});
  return m;
}

Letter phi_letter(std::uint64_t n) {
  if (n == 0) throw DomainError("phi_letter: positions start at 1");
  // Digits of n-1 in base 5, most significant first, select inside images.
  std::uint64_t p = n - 1;
  std::uint64_t scale = 1;
  while (scale <= p / 5) scale *= 5;
  const Morphism& m = phi_morphism();
  Letter a = 0;
  for (; scale > 0; scale /= 5) {
    a = m.image(a)[(p / scale) % 5];
  }
  return a;
}

FiniteWord phi_prefix(std::uint64_t n) {
  if (n == 0) throw DomainError("phi_prefix: n must be positive");
  return iterate_morphism(phi_morphism(), 0, n);
}

FiniteWord apply_T(const FiniteWord& w, ZeroStart start) {
  if (w.alphabet_size() != 2) throw DomainError("apply_T: input must be binary");
  std::vector<Letter> out(w.size());
  // zeros_seen parity decides which zeros are replaced.
  std::size_t zeros_seen = 0;
  std::size_t replace_parity = (start == ZeroStart::SecondZero) ? 0 : 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) {
      out[i] = 1;
      continue;
    }
    ++zeros_seen;
    out[i] = (zeros_seen % 2 == replace_parity) ? 2 : 0;
  }
  return FiniteWord(std::move(out), 3);
}

Letter ternary_t_letter(std::uint64_t n) {
  if (fibonacci_letter(n) == 1) return 1;
  return fibonacci_zeros_upto(n) % 2 == 0 ? 2 : 0;
}

FiniteWord ternary_t_prefix(std::uint64_t n) {
  return apply_T(fibonacci_prefix(n), ZeroStart::SecondZero);
}

WordGenerator::WordGenerator(WordFamily family, std::string name, unsigned alphabet_size,
                             LetterFn letter)
    : family_(family), name_(std::move(name)), alphabet_size_(alphabet_size),
      letter_(std::move(letter)) {}

WordGenerator WordGenerator::paperfolding() {
  return {WordFamily::Paperfolding, "pf", 2, pf_letter};
}

WordGenerator WordGenerator::fibonacci() {
  return {WordFamily::Fibonacci, "fib", 2, fibonacci_letter};
}

WordGenerator WordGenerator::morphic_phi() {
  WordGenerator g{WordFamily::MorphicPhi, "phi", 2, phi_letter};
  g.morphism_ = std::make_shared<const Morphism>(phi_morphism());
  g.seed_ = 0;
  return g;
}

WordGenerator WordGenerator::ternary_t() {
  return {WordFamily::TernaryT, "t", 3, ternary_t_letter};
}

WordGenerator WordGenerator::custom(std::string name, unsigned alphabet_size, LetterFn letter) {
  if (alphabet_size < 2 || alphabet_size > 3) {
    throw DomainError("WordGenerator: alphabet size must be 2 or 3");
  }
  return {WordFamily::Custom, std::move(name), alphabet_size, std::move(letter)};
}

WordGenerator WordGenerator::by_name(const std::string& name) {
  if (name == "pf") return paperfolding();
  if (name == "fib") return fibonacci();
  if (name == "phi") return morphic_phi();
  if (name == "t") return ternary_t();
  throw DomainError("unknown word '" + name + "' (expected pf, fib, phi or t)");
}

Letter WordGenerator::letter(std::uint64_t n) const {
  if (n == 0) throw DomainError(name_ + ": positions start at 1");
  return letter_(n);
}

FiniteWord WordGenerator::prefix(std::uint64_t n) const {
  FiniteWord w(alphabet_size_);
  extend_prefix(w, n);
  return w;
}

void WordGenerator::extend_prefix(FiniteWord& w, std::uint64_t n) const {
  if (w.size() >= n) return;
  if (family_ == WordFamily::MorphicPhi && n > 4096) {
    // Iterating the morphism is much cheaper than per-letter digit walks.
    FiniteWord full = iterate_morphism(*morphism_, seed_, n);
    w = std::move(full);
    return;
  }
  w.reserve(n);
  for (std::uint64_t i = w.size() + 1; i <= n; ++i) w.push_back(letter_(i));
}

}  // namespace frobword
