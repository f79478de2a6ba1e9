#include "frobword/frobenius.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frobword/errors.hpp"

namespace frobword {

Weights::Weights(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.size() < 2 || values_.size() > 3) {
    throw DomainError("Weights: need 2 or 3 letter weights, got " + std::to_string(values_.size()));
  }
  gcd_ = 0;
  for (std::int64_t v : values_) {
    if (v < 1) throw DomainError("Weights: every weight must be >= 1");
    gcd_ = std::gcd(gcd_, v);
  }
}

Weights Weights::parse(const std::string& csv) {
  std::vector<std::int64_t> values;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw DomainError("Weights: '" + item + "' is not an integer");
    }
    if (used != item.size()) throw DomainError("Weights: '" + item + "' is not an integer");
    values.push_back(v);
  }
  return Weights(std::move(values));
}

std::int64_t Weights::min() const { return *std::min_element(values_.begin(), values_.end()); }
std::int64_t Weights::max() const { return *std::max_element(values_.begin(), values_.end()); }

std::string Weights::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values_[i]);
  }
  return s + ")";
}

std::int64_t sylvester_number(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw DomainError("sylvester_number: a and b must be positive");
  if (std::gcd(a, b) != 1) {
    throw DomainError("sylvester_number: gcd(" + std::to_string(a) + "," + std::to_string(b) +
                      ") != 1");
  }
  return a * b - a - b;
}

std::int64_t s_value(const ParikhVector& p, const Weights& s) {
  if (p.alphabet_size != s.size()) throw DomainError("s_value: alphabet and weight sizes differ");
  std::int64_t v = 0;
  for (std::size_t a = 0; a < s.size(); ++a) v += p[a] * s[a];
  return v;
}

std::int64_t s_value(const FiniteWord& w, const Weights& s) { return s_value(parikh(w), s); }

std::string to_string(ComplementMethod m) {
  return m == ComplementMethod::EnvelopeInterval ? "envelope-interval" : "explicit-parikh";
}

namespace {

bool uses_envelope(const WordGenerator& g) { return g.family() == WordFamily::MorphicPhi; }

void check_weights(const WordGenerator& g, const Weights& s) {
  if (s.size() != g.alphabet_size()) {
    throw DomainError("weights " + s.to_string() + " do not match the alphabet of " + g.name());
  }
  if (!s.coprime()) {
    throw DomainError("weights " + s.to_string() + " are not coprime");
  }
}

/// Marks S-values below `limit` (all values when limit < 0) for each length.
std::vector<std::int64_t> collect_values(const WordGenerator& g, const Weights& s,
                                         std::uint64_t max_len, const FactorSource& src,
                                         std::int64_t limit) {
  FactorScanner scanner(g, src);
  std::vector<std::int64_t> values;
  for (std::uint64_t len = 1; len <= max_len; ++len) {
    if (uses_envelope(g)) {
      ZeroEnvelope e = scanner.zero_envelope(len);
      auto L = static_cast<std::int64_t>(len);
      for (std::int64_t x = e.z_min; x <= e.z_max; ++x) {
        std::int64_t v = s[0] * x + s[1] * (L - x);
        if (limit < 0 || v < limit) values.push_back(v);
      }
    } else {
      for (const ParikhVector& p : scanner.parikh_set(len)) {
        std::int64_t v = s_value(p, s);
        if (limit < 0 || v < limit) values.push_back(v);
      }
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

void check_budget(const Weights& s, std::int64_t bound, std::uint64_t max_len) {
  if (bound < 1) throw DomainError("complement_below: bound must be positive");
  auto needed = static_cast<std::uint64_t>((bound - 1) / s.min());
  if (max_len < needed) {
    throw ConfigError("complement_below: values below " + std::to_string(bound) +
                      " may need factors of length " + std::to_string(needed) +
                      ", max_len is " + std::to_string(max_len));
  }
}

}  // namespace

std::vector<std::int64_t> representable_set(const WordGenerator& g, const Weights& s,
                                            std::uint64_t max_len, const FactorSource& src) {
  check_weights(g, s);
  return collect_values(g, s, max_len, src, -1);
}

ComplementReport complement_below(const std::vector<ZeroEnvelope>& envelopes, const Weights& s,
                                  std::int64_t bound, std::uint64_t max_len) {
  if (s.size() != 2) throw DomainError("envelope complement needs binary weights");
  if (!s.coprime()) throw DomainError("weights " + s.to_string() + " are not coprime");
  check_budget(s, bound, max_len);
  if (envelopes.size() < max_len) {
    throw ConfigError("complement_below: envelope table stops at " +
                      std::to_string(envelopes.size()) + " < " + std::to_string(max_len));
  }
  const std::int64_t a = s[0];
  const std::int64_t b = s[1];
  const auto limit = static_cast<std::int64_t>(max_len);

  ComplementReport report{s, bound, max_len, {}, ComplementMethod::EnvelopeInterval, ""};
  for (std::int64_t m = 1; m < bound; ++m) {
    // A length-L factor with x zeros has weight bL + (a - b) x, between
    // min(a,b) L and max(a,b) L.
    std::int64_t lo = (m + s.max() - 1) / s.max();
    std::int64_t hi = std::min(m / s.min(), limit);
    bool found = false;
    for (std::int64_t L = lo; L <= hi && !found; ++L) {
      const ZeroEnvelope& e = envelopes[static_cast<std::size_t>(L - 1)];
      if (a == b) {
        found = (m == a * L);
        continue;
      }
      std::int64_t num = m - b * L;
      if (num % (a - b) != 0) continue;
      std::int64_t x = num / (a - b);
      found = x >= e.z_min && x <= e.z_max;
    }
    if (!found) report.complement.push_back(m);
  }
  return report;
}

ComplementReport complement_below(const WordGenerator& g, const Weights& s, std::int64_t bound,
                                  std::uint64_t max_len, const FactorSource& src) {
  check_weights(g, s);
  check_budget(s, bound, max_len);
  if (uses_envelope(g)) {
    ComplementReport r = complement_below(envelope_table(g, max_len, src), s, bound, max_len);
    r.source = describe(src);
    return r;
  }
  std::vector<std::int64_t> values = collect_values(g, s, max_len, src, bound);
  ComplementReport report{s, bound, max_len, {}, ComplementMethod::ExplicitParikh, describe(src)};
  auto it = values.begin();
  for (std::int64_t m = 1; m < bound; ++m) {
    while (it != values.end() && *it < m) ++it;
    if (it == values.end() || *it != m) report.complement.push_back(m);
  }
  return report;
}

std::vector<PfWitness> pf_witnesses(std::int64_t a, std::int64_t b, unsigned n_lo, unsigned n_hi) {
  if (a < 4) throw DomainError("pf_witnesses: needs a >= 4");
  if (b <= a) throw DomainError("pf_witnesses: needs a < b");
  if (std::gcd(a, b) != 1) throw DomainError("pf_witnesses: a and b must be coprime");
  if (n_lo < 2 || n_hi < n_lo || n_hi > 40) throw DomainError("pf_witnesses: bad n range");

  auto target = [&](unsigned n) {
    std::int64_t half = std::int64_t{1} << (n - 1);
    return a * (half - 2) + b * (half + 2);
  };
  std::uint64_t max_len = static_cast<std::uint64_t>(target(n_hi) / a);
  std::vector<ZeroEnvelope> env = envelope_table(WordGenerator::paperfolding(), max_len);

  std::vector<PfWitness> out;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    std::int64_t m = target(n);
    bool representable = false;
    for (std::int64_t L = 1; L <= m / a && !representable; ++L) {
      std::int64_t num = b * L - m;  // (b - a) x = bL - m
      if (num < 0 || num % (b - a) != 0) continue;
      std::int64_t x = num / (b - a);
      const ZeroEnvelope& e = env[static_cast<std::size_t>(L - 1)];
      representable = x <= L && x >= e.z_min && x <= e.z_max;
    }
    out.push_back({n, m, !representable});
  }
  return out;
}

}  // namespace frobword
