#include "frobword/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "frobword/errors.hpp"

namespace frobword {

namespace {

void check_alphabet(unsigned k) {
  if (k < 2 || k > 3) {
    throw DomainError("FiniteWord: alphabet size must be 2 or 3, got " + std::to_string(k));
  }
}

}  // namespace

FiniteWord::FiniteWord(unsigned alphabet_size) : alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
}

FiniteWord::FiniteWord(std::vector<Letter> symbols, unsigned alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size);
  for (Letter a : symbols_) {
    if (a >= alphabet_size_) {
      throw DomainError("FiniteWord: letter " + std::to_string(a) + " outside alphabet of size " +
                        std::to_string(alphabet_size_));
    }
  }
}

FiniteWord FiniteWord::from_string(std::string_view digits, unsigned alphabet_size) {
  std::vector<Letter> symbols;
  symbols.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw DomainError("FiniteWord: '" + std::string(1, c) + "' is not a digit");
    }
    symbols.push_back(static_cast<Letter>(c - '0'));
  }
  return FiniteWord(std::move(symbols), alphabet_size);
}

void FiniteWord::push_back(Letter a) {
  if (a >= alphabet_size_) {
    throw DomainError("FiniteWord: letter " + std::to_string(a) + " outside alphabet");
  }
  symbols_.push_back(a);
}

void FiniteWord::append(const FiniteWord& other) {
  if (other.alphabet_size_ > alphabet_size_) {
    for (Letter a : other.symbols_) push_back(a);
    return;
  }
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

void FiniteWord::truncate(std::size_t n) {
  if (n < symbols_.size()) symbols_.resize(n);
}

std::size_t FiniteWord::count(Letter a) const {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), a));
}

FiniteWord FiniteWord::substr(std::size_t pos, std::size_t len) const {
  if (pos > symbols_.size()) throw std::out_of_range("FiniteWord::substr");
  len = std::min(len, symbols_.size() - pos);
  FiniteWord w(alphabet_size_);
  w.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                    symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

bool FiniteWord::starts_with(const FiniteWord& prefix) const {
  return prefix.size() <= size() &&
         std::equal(prefix.symbols_.begin(), prefix.symbols_.end(), symbols_.begin());
}

std::string FiniteWord::to_string() const {
  std::string s;
  s.reserve(symbols_.size());
  for (Letter a : symbols_) s.push_back(static_cast<char>('0' + a));
  return s;
}

Morphism::Morphism(std::vector<FiniteWord> images) : images_(std::move(images)) {
  if (images_.size() < 2 || images_.size() > 3) {
    throw ConfigError("Morphism: need one image per letter of a 2- or 3-letter alphabet");
  }
  for (const auto& img : images_) {
    if (img.alphabet_size() != alphabet_size()) {
      throw ConfigError("Morphism: image alphabet differs from the domain alphabet");
    }
    if (img.empty()) {
      throw ConfigError("Morphism: empty image");
    }
  }
  std::size_t len = images_.front().size();
  bool uniform = std::all_of(images_.begin(), images_.end(),
                             [len](const FiniteWord& w) { return w.size() == len; });
  if (uniform) uniform_length_ = len;
}

FiniteWord Morphism::apply(const FiniteWord& w) const {
  FiniteWord out(alphabet_size());
  std::size_t total = 0;
  for (Letter a : w.symbols()) total += images_.at(a).size();
  out.reserve(total);
  for (Letter a : w.symbols()) out.append(images_[a]);
  return out;
}

IntMatrix incidence_matrix(const Morphism& m) {
  unsigned k = m.alphabet_size();
  IntMatrix mat(k, std::vector<std::int64_t>(k, 0));
  for (unsigned col = 0; col < k; ++col) {
    for (Letter a : m.image(static_cast<Letter>(col)).symbols()) {
      ++mat[a][col];
    }
  }
  return mat;
}

FiniteWord iterate_morphism(const Morphism& m, Letter seed, std::size_t target_length) {
  if (seed >= m.alphabet_size()) {
    throw ConfigError("iterate_morphism: seed outside alphabet");
  }
  const FiniteWord& img = m.image(seed);
  if (img[0] != seed) {
    throw ConfigError("iterate_morphism: morphism is not prolongable on the seed");
  }
  if (img.size() < 2) {
    throw ConfigError("iterate_morphism: seed image has length 1, the iteration never grows");
  }
  FiniteWord w(std::vector<Letter>{seed}, m.alphabet_size());
  while (w.size() < target_length) {
    w = m.apply(w);
  }
  w.truncate(target_length);
  return w;
}

FiniteWord morphism_power(const Morphism& m, const FiniteWord& w, unsigned power) {
  FiniteWord out = w;
  for (unsigned i = 0; i < power; ++i) out = m.apply(out);
  return out;
}

}  // namespace frobword
