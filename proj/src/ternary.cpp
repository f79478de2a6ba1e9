#include "frobword/ternary.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string_view>
#include <unordered_map>

#include "frobword/errors.hpp"
#include "frobword/generators.hpp"

namespace frobword {

namespace {

void require_ternary(const Weights& s) {
  if (s.size() != 3) throw DomainError("ternary weights need three values, got " + s.to_string());
}

Half min_step(const Weights& s) {
  OffsetTable t = offsets(s);
  return min(Half(s[1]), t.o1 + Half(s[1]));
}

Half f_term_from_letter(Letter c, const OffsetTable& t, const Weights& s) {
  return c == 0 ? t.o1 + Half(s[1]) : Half(s[1]);
}

void sort_unique(std::vector<std::int64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Half OffsetTable::o(int r) const { return r == 1 ? o1 : r == 2 ? o2 : o3; }
Half OffsetTable::e(int r) const { return r == 1 ? e1 : r == 2 ? e2 : e3; }

OffsetTable offsets(const Weights& s) {
  require_ternary(s);
  OffsetTable t;
  t.o1 = Half::from_twice(s[0] - 2 * s[1] + s[2]);
  t.o2 = Half::from_twice(s[0] - s[2]);
  t.o3 = -t.o2;
  t.e1 = Half(s[0] - s[1]);
  t.e2 = Half(s[2] - s[1]);
  t.e3 = Half(0);
  t.k = Half(0);
  for (Half h : {t.o1, t.o2, t.o3, t.e1, t.e2, t.e3}) t.k = max(t.k, h.abs());
  return t;
}

Half main_term(std::uint64_t n, const Weights& s) {
  require_ternary(s);
  if (n == 0) throw DomainError("main_term: n must be >= 1");
  auto fp = static_cast<std::int64_t>(fib_beatty(n, BeattyKind::FloorPhi));
  auto n64 = static_cast<std::int64_t>(n);
  return Half::from_twice(fp * (s[0] - 2 * s[1] + s[2]) - n64 * (s[0] - 4 * s[1] + s[2]));
}

Half f_term(std::uint64_t n, const Weights& s) {
  return f_term_from_letter(fibonacci_letter(n), offsets(s), s);
}

std::vector<Half> f_sequence(std::uint64_t i, std::uint64_t j, const Weights& s) {
  if (i < 1 || j < i) throw DomainError("f_sequence: need 1 <= i <= j");
  OffsetTable t = offsets(s);
  std::vector<Half> out;
  out.reserve(j - i + 1);
  for (std::uint64_t n = i; n <= j; ++n) out.push_back(f_term_from_letter(fibonacci_letter(n), t, s));
  return out;
}

std::string to_string(GeneratingPrefix v) {
  switch (v) {
    case GeneratingPrefix::T0: return "T(0f)";
    case GeneratingPrefix::T1: return "T(1f)";
    case GeneratingPrefix::Tbar0: return "Tbar(0f)";
    case GeneratingPrefix::Tbar1: return "Tbar(1f)";
  }
  return "?";
}

ParikhVector generating_prefix_parikh(std::uint64_t n, GeneratingPrefix v) {
  if (n == 0) throw DomainError("generating_prefix_parikh: n must be >= 1");
  auto h = static_cast<std::int64_t>(floor_n_alpha(n + 1));
  auto n64 = static_cast<std::int64_t>(n);
  // Twice the entries, so the odd case's halves stay exact.
  std::int64_t z = n64 - h;
  std::array<std::int64_t, 3> tw{};
  if (z % 2 == 1) {
    switch (v) {
      case GeneratingPrefix::T0:
      case GeneratingPrefix::Tbar0: tw = {z + 1, 2 * h, z + 1}; break;
      case GeneratingPrefix::T1: tw = {z + 1, 2 * h + 2, z - 1}; break;
      case GeneratingPrefix::Tbar1: tw = {z - 1, 2 * h + 2, z + 1}; break;
    }
  } else {
    switch (v) {
      case GeneratingPrefix::T0: tw = {z + 2, 2 * h, z}; break;
      case GeneratingPrefix::Tbar0: tw = {z, 2 * h, z + 2}; break;
      case GeneratingPrefix::T1:
      case GeneratingPrefix::Tbar1: tw = {z, 2 * h + 2, z}; break;
    }
  }
  return make_parikh(tw[0] / 2, tw[1] / 2, tw[2] / 2);
}

FiniteWord generating_prefix(std::uint64_t n, GeneratingPrefix v) {
  if (n == 0) throw DomainError("generating_prefix: n must be >= 1");
  bool one = v == GeneratingPrefix::T1 || v == GeneratingPrefix::Tbar1;
  bool bar = v == GeneratingPrefix::Tbar0 || v == GeneratingPrefix::Tbar1;
  FiniteWord w({static_cast<Letter>(one ? 1 : 0)}, 2);
  w.append(fibonacci_prefix(n));
  return apply_T(w, bar ? ZeroStart::FirstZero : ZeroStart::SecondZero);
}

unsigned mu(std::uint64_t n) {
  if (n < 1) throw DomainError("mu: n must be >= 1");
  return static_cast<unsigned>((n - 1 - floor_n_alpha(n)) % 2);
}

unsigned mu_closed_form(std::uint64_t n) {
  if (n < 1) throw DomainError("mu_closed_form: n must be >= 1");
  return static_cast<unsigned>((n - 1 - floor_n_alpha(n - 1)) % 2);
}

namespace {

std::array<Half, 3> g_halves(std::uint64_t n, const Weights& s, unsigned parity) {
  OffsetTable t = offsets(s);
  Half m = main_term(n, s);
  std::array<Half, 3> g;
  for (int r = 1; r <= 3; ++r) g[r - 1] = m + t.e(r) + (t.o(r) - t.e(r)) * parity;
  return g;
}

}  // namespace

std::array<std::int64_t, 3> g_triple(std::uint64_t n, const Weights& s) {
  if (n < 2) throw DomainError("g_triple: n must be >= 2");
  std::array<Half, 3> g = g_halves(n, s, mu(n));
  std::array<std::int64_t, 3> out{};
  for (int r = 0; r < 3; ++r) {
    if (!g[r].is_integer()) {
      throw ConsistencyError("g_" + std::to_string(r + 1) + "(" + std::to_string(n) + ") = " +
                             g[r].to_string() + " for " + s.to_string() + " is not an integer");
    }
    out[r] = g[r].to_integer();
  }
  return out;
}

std::vector<std::int64_t> g_values(std::uint64_t n, const Weights& s) {
  require_ternary(s);
  if (n == 0) throw DomainError("g_values: n must be >= 1");
  std::vector<std::int64_t> v;
  if (n == 1) {
    v = s.values();
  } else {
    auto g = g_triple(n, s);
    v.assign(g.begin(), g.end());
  }
  sort_unique(v);
  return v;
}

std::array<Half, 3> g_triple_closed_form(std::uint64_t n, const Weights& s) {
  if (n < 2) throw DomainError("g_triple_closed_form: n must be >= 2");
  return g_halves(n, s, mu_closed_form(n));
}

std::vector<std::uint64_t> mu_divergence(std::uint64_t n_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    if (mu(n) != mu_closed_form(n)) out.push_back(n);
  }
  return out;
}

HalfInterval interval_I(std::span<const Half> window, Half next_term, Half k) {
  if (window.empty()) throw DomainError("interval_I: empty window");
  Half sum = next_term;
  for (Half h : window) sum += h;
  return {k + Half(1), sum - (k + Half(1))};
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::vector<Half> semi_image(const FiniteWord& window, const Weights& s, Parity p) {
  if (window.empty()) throw DomainError("semi_image: empty window");
  if (window.alphabet_size() != 2) throw DomainError("semi_image: window must be a binary f-factor");
  OffsetTable t = offsets(s);
  std::vector<Half> out;
  Half partial;
  unsigned zeros = 0;
  for (std::size_t q = 0; q < window.size(); ++q) {
    partial += f_term_from_letter(window[q], t, s);
    zeros += window[q] == 0;
    unsigned flag = zeros % 2;
    if (p == Parity::Odd) flag = 1 - flag;
    for (int r = 1; r <= 3; ++r) out.push_back(partial + t.e(r) + (t.o(r) - t.e(r)) * flag);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> semi_complement(const FiniteWord& factor, const Weights& s, Parity p) {
  if (factor.size() < 2) throw DomainError("semi_complement: need the window and one more letter");
  OffsetTable t = offsets(s);
  FiniteWord window = factor.substr(0, factor.size() - 1);
  std::vector<Half> terms;
  for (Letter c : window.symbols()) terms.push_back(f_term_from_letter(c, t, s));
  Half next = f_term_from_letter(factor[factor.size() - 1], t, s);

  HalfInterval I = interval_I(terms, next, t.k);
  std::vector<Half> image = semi_image(window, s, p);
  Half shift = p == Parity::Even ? Half(0) : t.o1 + Half(s[1]);

  std::vector<std::int64_t> out;
  if (I.empty()) return out;
  for (std::int64_t x = (I.lo + shift).ceil(); x <= (I.hi + shift).floor(); ++x) {
    if (x < 1) continue;
    if (!std::binary_search(image.begin(), image.end(), Half(x) - shift)) out.push_back(x);
  }
  return out;
}

std::uint64_t window_length(const Weights& s) {
  OffsetTable t = offsets(s);
  Half step = min_step(s);
  if (step.twice() <= 0) throw DomainError("window_length: F has a non-positive term");
  std::int64_t num = 2 * (t.k + Half(1)).twice();
  std::int64_t den = step.twice();
  return static_cast<std::uint64_t>((num + den - 1) / den);
}

std::vector<FibFactor> fibonacci_factors(std::uint64_t n) {
  if (n == 0) throw DomainError("fibonacci_factors: n must be >= 1");
  constexpr std::uint64_t cap = std::uint64_t{1} << 22;
  for (std::uint64_t len = 32 * n;; len *= 2) {
    len = std::min(len, cap);
    FiniteWord w = fibonacci_prefix(len);
    std::string text = w.to_string();
    std::unordered_map<std::string_view, std::uint64_t> first;
    std::vector<FibFactor> found;
    for (std::uint64_t i = 0; i + n <= len; ++i) {
      std::string_view key(text.data() + i, n);
      if (first.emplace(key, i + 1).second) found.push_back({w.substr(i, n), i + 1});
    }
    if (found.size() > n + 1) {
      throw ConsistencyError("fibonacci_factors: " + std::to_string(found.size()) +
                             " factors of length " + std::to_string(n));
    }
    if (found.size() == n + 1) return found;
    if (len == cap) {
      throw StabilizationError("fibonacci_factors: only " + std::to_string(found.size()) +
                               " factors of length " + std::to_string(n) + " within 2^22");
    }
  }
}

std::int64_t complement_search_bound(const Weights& s) {
  OffsetTable t = offsets(s);
  std::uint64_t l = window_length(s);
  return main_term(2 * l + 4, s).ceil() + t.k.ceil() + s.max();
}

std::vector<std::int64_t> value_set_upto(const Weights& s, std::int64_t n_max) {
  OffsetTable t = offsets(s);
  if (min_step(s).twice() <= 0) throw DomainError("value_set_upto: F has a non-positive term");
  std::vector<std::int64_t> vals;
  for (std::int64_t v : s.values()) {
    if (v <= n_max) vals.push_back(v);
  }
  // Every g-value of length n is at least m(n) - k and m increases.
  for (std::uint64_t n = 2; main_term(n, s) - t.k <= Half(n_max); ++n) {
    for (std::int64_t v : g_triple(n, s)) {
      if (v >= 1 && v <= n_max) vals.push_back(v);
    }
  }
  sort_unique(vals);
  return vals;
}

double value_density(const Weights& s, std::int64_t N) {
  if (N < 1) throw DomainError("value_density: N must be >= 1");
  return static_cast<double>(value_set_upto(s, N).size()) / static_cast<double>(N);
}

std::vector<std::int64_t> scanned_values(FactorScanner& t_scanner, std::uint64_t n,
                                         const Weights& s) {
  std::vector<std::int64_t> v;
  for (const ParikhVector& p : t_scanner.parikh_set(n)) v.push_back(s_value(p, s));
  sort_unique(v);
  return v;
}

namespace {

std::vector<std::int64_t> complement_upto(const std::vector<std::int64_t>& sorted_vals,
                                          std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x <= bound; ++x) {
    if (!std::binary_search(sorted_vals.begin(), sorted_vals.end(), x)) out.push_back(x);
  }
  return out;
}

std::vector<std::int64_t> checked_complement(const Weights& s) {
  std::int64_t bound = complement_search_bound(s);
  std::vector<std::int64_t> from_g = complement_upto(value_set_upto(s, bound), bound);

  FactorScanner scanner(WordGenerator::ternary_t());
  std::vector<std::int64_t> scanned;
  auto longest = static_cast<std::uint64_t>(bound / s.min());
  for (std::uint64_t n = 1; n <= longest; ++n) {
    for (std::int64_t v : scanned_values(scanner, n, s)) {
      if (v <= bound) scanned.push_back(v);
    }
  }
  sort_unique(scanned);
  std::vector<std::int64_t> from_scan = complement_upto(scanned, bound);
  if (from_g != from_scan) {
    throw ConsistencyError("finite_complement " + s.to_string() +
                           ": g-values and scanned factors disagree below " +
                           std::to_string(bound));
  }
  return from_g;
}

}  // namespace

TernaryDecision decide_cofinite(const Weights& s) {
  require_ternary(s);
  if (!s.coprime()) throw DomainError("decide_cofinite: weights " + s.to_string() + " are not coprime");
  OffsetTable t = offsets(s);
  std::uint64_t l = window_length(s);

  std::vector<FibFactor> factors;
  if (s[0] + s[2] == 2 * s[1]) {
    factors.push_back({fibonacci_prefix(l + 1), 1});
  } else {
    factors = fibonacci_factors(l + 1);
  }

  TernaryDecision d{s, t.k, l, factors.size(), Cofinite{}};
  for (const FibFactor& u : factors) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      std::vector<std::int64_t> missed = semi_complement(u.factor, s, p);
      if (!missed.empty()) {
        d.outcome = InfiniteComplement{u.factor, u.first_position, p, Half(missed.front())};
        return d;
      }
    }
  }
  d.outcome = Cofinite{checked_complement(s)};
  return d;
}

std::vector<std::int64_t> finite_complement(const Weights& s) {
  TernaryDecision d = decide_cofinite(s);
  if (!d.cofinite()) {
    throw PreconditionError("finite_complement: " + s.to_string() + " has an infinite complement");
  }
  return std::get<Cofinite>(d.outcome).complement;
}

std::vector<TernaryDecision> table2_sweep() {
  std::vector<TernaryDecision> out;
  for (std::int64_t a = 1; a <= 7; ++a) {
    for (std::int64_t b = 1; b <= 7; ++b) {
      for (std::int64_t c = 1; c <= 7; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1 || a >= c) continue;
        out.push_back(decide_cofinite(Weights({a, b, c})));
      }
    }
  }
  return out;
}

std::vector<Table2Row> table2() {
  std::vector<Table2Row> rows;
  for (const TernaryDecision& d : table2_sweep()) {
    if (!d.cofinite()) continue;
    rows.push_back({{d.weights[0], d.weights[1], d.weights[2]},
                    std::get<Cofinite>(d.outcome).complement});
  }
  return rows;
}

std::vector<std::uint64_t> telescoping_failures(const Weights& s, std::uint64_t n_max) {
  std::vector<std::uint64_t> bad;
  std::vector<Half> F = f_sequence(1, n_max, s);
  Half prev = main_term(1, s);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    Half next = main_term(n + 1, s);
    if (next - prev != F[n - 1]) bad.push_back(n);
    prev = next;
  }
  return bad;
}

std::vector<std::uint64_t> generating_value_failures(const Weights& s, std::uint64_t n_max) {
  OffsetTable t = offsets(s);
  std::vector<std::uint64_t> bad;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    auto S = [&](GeneratingPrefix v) { return Half(s_value(generating_prefix(n - 1, v), s)); };
    Half t0 = S(GeneratingPrefix::T0), tb0 = S(GeneratingPrefix::Tbar0);
    Half t1 = S(GeneratingPrefix::T1), tb1 = S(GeneratingPrefix::Tbar1);
    Half m = main_term(n, s);
    Half S0(s[0]), S1(s[1]), S2(s[2]);
    bool ok;
    if (fibonacci_zeros_upto(n - 1) % 2 == 1) {
      ok = t0 == tb0 && t0 == m + t.o1 && t1 == t0 - S2 + S1 && t1 == m + t.o2 &&
           tb1 == t0 - S0 + S1 && tb1 == m + t.o3;
    } else {
      ok = t0 == m + t.e1 && tb0 == t0 - S0 + S2 && tb0 == m + t.e2 && tb1 == t1 &&
           t1 == t0 - S0 + S1 && t1 == m;
    }
    if (!ok) bad.push_back(n);
  }
  return bad;
}

std::vector<std::uint64_t> generating_parikh_failures(std::uint64_t n_max) {
  std::vector<std::uint64_t> bad;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (GeneratingPrefix v : {GeneratingPrefix::T0, GeneratingPrefix::T1, GeneratingPrefix::Tbar0,
                               GeneratingPrefix::Tbar1}) {
      if (generating_prefix_parikh(n, v) != parikh(generating_prefix(n, v))) {
        bad.push_back(n);
        break;
      }
    }
  }
  return bad;
}

std::vector<std::uint64_t> two_coincide_failures(std::uint64_t n_max) {
  std::vector<std::uint64_t> bad;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    std::set<ParikhVector> distinct;
    for (GeneratingPrefix v : {GeneratingPrefix::T0, GeneratingPrefix::T1, GeneratingPrefix::Tbar0,
                               GeneratingPrefix::Tbar1}) {
      distinct.insert(parikh(generating_prefix(n, v)));
    }
    if (distinct.size() != 3) bad.push_back(n);
  }
  return bad;
}

namespace {

/// P[x] = F[1] + ... + F[x], P[0] = 0.
std::vector<Half> partial_sums(const Weights& s, std::uint64_t len) {
  std::vector<Half> P(len + 1);
  std::vector<Half> F = f_sequence(1, len, s);
  for (std::uint64_t x = 1; x <= len; ++x) P[x] = P[x - 1] + F[x - 1];
  return P;
}

}  // namespace

std::vector<std::uint64_t> cover_failures(const Weights& s, std::uint64_t i_max) {
  OffsetTable t = offsets(s);
  std::uint64_t l = window_length(s);
  std::vector<Half> P = partial_sums(s, i_max + l + 1);
  std::vector<std::uint64_t> bad;
  Half gap = t.k + Half(1);
  for (std::uint64_t i = 1; i <= i_max; ++i) {
    // Left end of R(i + 1) against the right end of R(i).
    if (P[i] + gap > P[i + l] - gap) bad.push_back(i);
  }
  return bad;
}

std::vector<std::uint64_t> overlap_failures(const Weights& s, std::uint64_t i_max) {
  OffsetTable t = offsets(s);
  std::uint64_t l = window_length(s);
  std::uint64_t reach = 2 * l + 2;
  std::vector<Half> P = partial_sums(s, i_max + l + reach);
  std::array<Half, 6> ks{t.o1, t.o2, t.o3, t.e1, t.e2, t.e3};
  Half gap = t.k + Half(1);
  std::vector<std::uint64_t> bad;
  for (std::uint64_t i = 1; i <= i_max; ++i) {
    Half lo = P[i - 1] + gap;
    Half hi = P[i + l] - gap;
    bool hit = false;
    for (Half kj : ks) {
      for (std::uint64_t x = 0; x <= i - 1 && !hit; ++x) {
        Half v = P[x] + kj;
        hit = v >= lo && v <= hi;
      }
      for (std::uint64_t x = i + l; x <= i + l + reach && !hit; ++x) {
        Half v = P[x] + kj;
        hit = v >= lo && v <= hi;
      }
    }
    if (hit) bad.push_back(i);
  }
  return bad;
}

}  // namespace frobword
