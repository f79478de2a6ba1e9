#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frobword {

using Letter = std::uint8_t;

/// A finite word over {0, ..., k-1} with k in {2, 3}.
///
/// This is a plain container and its accessors are 0-based. Positions in
/// the infinite words (WordGenerator::letter and friends) are 1-based.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(unsigned alphabet_size);
  FiniteWord(std::vector<Letter> symbols, unsigned alphabet_size);

  /// Parses a digit string such as "00101".
  static FiniteWord from_string(std::string_view digits, unsigned alphabet_size);

  unsigned alphabet_size() const { return alphabet_size_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  Letter operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Letter> symbols() const { return symbols_; }

  void push_back(Letter a);
  void append(const FiniteWord& other);
  void reserve(std::size_t n) { symbols_.reserve(n); }
  void truncate(std::size_t n);

  std::size_t count(Letter a) const;
  FiniteWord substr(std::size_t pos, std::size_t len) const;
  bool starts_with(const FiniteWord& prefix) const;

  std::string to_string() const;

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
  friend auto operator<=>(const FiniteWord& a, const FiniteWord& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Letter> symbols_;
  unsigned alphabet_size_ = 2;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// A monoid morphism given by one image per letter.
class Morphism {
 public:
  explicit Morphism(std::vector<FiniteWord> images);

  unsigned alphabet_size() const { return static_cast<unsigned>(images_.size()); }
  const FiniteWord& image(Letter a) const { return images_.at(a); }

  /// The common image length, when all images have the same length.
  std::optional<std::size_t> uniform_length() const { return uniform_length_; }

  FiniteWord apply(const FiniteWord& w) const;

 private:
  std::vector<FiniteWord> images_;
  std::optional<std::size_t> uniform_length_;
};

/// Column a holds the Parikh vector of image(a).
IntMatrix incidence_matrix(const Morphism& m);

/// Length-`target_length` prefix of the fixed point m^omega(seed). Iterates
/// until the first power whose image reaches the target, then truncates.
/// Throws ConfigError unless m is prolongable and growing on `seed`.
FiniteWord iterate_morphism(const Morphism& m, Letter seed, std::size_t target_length);

/// m^power(w), no truncation.
FiniteWord morphism_power(const Morphism& m, const FiniteWord& w, unsigned power);

}  // namespace frobword
