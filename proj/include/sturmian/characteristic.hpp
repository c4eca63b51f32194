#pragma once

#include "sturmian/fraction.hpp"
#include "sturmian/morphism.hpp"
#include "sturmian/palindrome.hpp"
#include "sturmian/word.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sturmian::characteristic {

inline constexpr std::size_t default_prefix_cap = 1'000'000;

// u q^omega in canonical form: primitive q, shortest u.
struct UltimatelyPeriodic {
  Word preperiod;
  Word period;
  friend bool operator==(const UltimatelyPeriodic&, const UltimatelyPeriodic&) = default;
};

inline Word primitive_root(const Word& w) {
  for (std::size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d == 0 && has_period(w, d)) return w.prefix(d);
  }
  return w;
}

inline UltimatelyPeriodic normalize(UltimatelyPeriodic u) {
  u.period = primitive_root(u.period);
  while (!u.preperiod.empty() && u.preperiod.last() == u.period.last()) {
    u.period = Word::letter(u.period.last()) + u.period.prefix(u.period.size() - 1);
    u.preperiod = u.preperiod.prefix(u.preperiod.size() - 1);
  }
  return u;
}

struct Generator {
  std::function<Letter(std::size_t)> letter;
  std::size_t cap = 0;  // letters beyond the cap are unavailable
  std::string label;
};

class DirectiveStream {
 public:
  static DirectiveStream periodic(Word preperiod, Word period) {
    if (period.empty()) throw domain_error("directive period must be nonempty");
    if (period.is_constant()) throw domain_error("directive period must contain both letters");
    return DirectiveStream(normalize({std::move(preperiod), std::move(period)}));
  }

  static DirectiveStream generated(std::function<Letter(std::size_t)> letter, std::size_t cap, std::string label) {
    return DirectiveStream(Generator{std::move(letter), cap, std::move(label)});
  }

  bool is_periodic() const { return std::holds_alternative<UltimatelyPeriodic>(rep_); }
  const UltimatelyPeriodic& periodic_form() const { return std::get<UltimatelyPeriodic>(rep_); }

  std::size_t cap() const {
    return is_periodic() ? std::numeric_limits<std::size_t>::max() : std::get<Generator>(rep_).cap;
  }

  Letter at(std::size_t i) const {
    if (const auto* u = std::get_if<UltimatelyPeriodic>(&rep_)) {
      if (i < u->preperiod.size()) return u->preperiod[i];
      return u->period[(i - u->preperiod.size()) % u->period.size()];
    }
    const auto& g = std::get<Generator>(rep_);
    if (i >= g.cap) throw domain_error("directive generator '" + g.label + "' exhausted at " + std::to_string(g.cap));
    return g.letter(i);
  }

  Word take(std::size_t n) const {
    Word out;
    for (std::size_t i = 0; i < n; ++i) out += at(i);
    return out;
  }

  // The stream with its first n letters removed.
  DirectiveStream drop(std::size_t n) const {
    if (const auto* u = std::get_if<UltimatelyPeriodic>(&rep_)) {
      if (n <= u->preperiod.size()) return DirectiveStream(normalize({u->preperiod.substr(n), u->period}));
      std::size_t r = (n - u->preperiod.size()) % u->period.size();
      return DirectiveStream(normalize({Word(), u->period.substr(r) + u->period.prefix(r)}));
    }
    const auto& g = std::get<Generator>(rep_);
    if (n > g.cap) throw domain_error("directive generator '" + g.label + "' exhausted at " + std::to_string(g.cap));
    auto f = g.letter;
    return DirectiveStream(Generator{[f, n](std::size_t i) { return f(i + n); }, g.cap - n, g.label + "+" + std::to_string(n)});
  }

  // "u|q" for periodic streams, the label otherwise.
  std::string to_string() const {
    if (const auto* u = std::get_if<UltimatelyPeriodic>(&rep_)) return u->preperiod.str() + "|" + u->period.str();
    return std::get<Generator>(rep_).label;
  }

 private:
  explicit DirectiveStream(UltimatelyPeriodic u) : rep_(std::move(u)) {}
  explicit DirectiveStream(Generator g) : rep_(std::move(g)) {}

  std::variant<UltimatelyPeriodic, Generator> rep_;
};

// Parses "u|q" into u q^omega.
inline DirectiveStream parse_stream(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw error("stream must be written u|q, got '" + std::string(text) + "'");
  return DirectiveStream::periodic(Word(text.substr(0, bar)), Word(text.substr(bar + 1)));
}

inline DirectiveStream fibonacci() { return DirectiveStream::periodic(Word(), "ab"_w); }

// a b a^2 b a^3 b ... a^n b ...
inline DirectiveStream growing_runs(std::size_t cap = 1 << 16) {
  auto letter = [](std::size_t i) {
    std::size_t block = 2;  // a^n b has length n + 1
    while (i >= block) i -= block++;
    return i + 1 == block ? Letter::b : Letter::a;
  };
  return DirectiveStream::generated(letter, cap, "aba2ba3b...");
}

struct CharacteristicPrefix {
  Word word;
  DirectiveStream source;
  Word directive_consumed;
};

// Length-n prefix of psi(s) by iterated palindromic closure.
inline CharacteristicPrefix prefix(const DirectiveStream& s, std::size_t n, std::size_t cap = default_prefix_cap) {
  if (n > cap) throw domain_error("prefix length " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  Word w;
  std::string consumed;
  while (w.size() < n) {
    Letter x = s.at(consumed.size());
    consumed += to_char(x);
    w = palindromic_closure(w + x);
  }
  return {w.prefix(n), s, Word(consumed)};
}

// First run length of the directive.
inline std::size_t index(const DirectiveStream& s) {
  const Letter x = s.at(0);
  std::size_t k = 1;
  while (s.at(k) == x) ++k;
  return k;
}

// Directive of Ds: x0^k x1^h xi -> x1^{h-1} xi.
inline DirectiveStream derivative_stream(const DirectiveStream& s) { return s.drop(index(s) + 1); }

struct PrefixCheck {
  bool factors = false;             // the prefix factors over the index-k code of D
  bool matches_derivative = false;  // decoding agrees with Ds
  bool matches_b_derivative = false;  // decoding over the code of the derivative agrees with b Ds
  std::size_t decoded = 0;          // letters of the prefix covered by the decoding
  std::string failure;

  bool ok() const { return factors && matches_derivative && matches_b_derivative; }
};

/*
 * Checks on the first n letters of s, k = index(s):
 *  - s factors over {a^k ba, a^k b} (or {b^k a, b^k ab}) and its decoding is a prefix of Ds;
 *  - a-initial s: the decoding over {a^{k+1} b, a^k b} is a prefix of b Ds;
 *  - b-initial s: s = b^k t with t decoding over {a b^k, a b^{k+1}} to a prefix of Ds.
 */
inline PrefixCheck derivative_prefix_check(const DirectiveStream& s, std::size_t n,
                                           std::size_t cap = default_prefix_cap) {
  PrefixCheck out;
  const Word w = prefix(s, n, cap).word;
  const std::size_t k = index(s);
  const Letter x = s.at(0);
  const std::size_t slack = 3 * (k + 2);
  const DirectiveStream ds = derivative_stream(s);

  const Morphism m = x == Letter::a ? mu_k(k) : mu_hat_k(k);
  PrefixDecoding d;
  try {
    d = decode_prefix(m, w);
  } catch (const not_in_code& e) {
    out.failure = e.what();
    return out;
  }
  out.decoded = d.consumed;
  out.factors = m(d.decoded) == w.prefix(d.consumed) && d.consumed + slack >= n;
  if (!out.factors) {
    out.failure = "decoding stops at " + std::to_string(d.consumed);
    return out;
  }
  out.matches_derivative = prefix(ds, d.decoded.size(), cap).word == d.decoded;
  if (!out.matches_derivative) {
    out.failure = "decoding differs from Ds";
    return out;
  }

  Word target;
  PrefixDecoding e;
  try {
    if (x == Letter::a) {
      e = decode_prefix(phi(k), w);
      if (e.decoded.empty()) throw not_in_code(w, 0);
      target = Letter::b + prefix(ds, e.decoded.size() - 1, cap).word;
    } else {
      if (!w.starts_with(Word::repeat(Letter::b, k))) throw not_in_code(w, 0);
      e = decode_prefix(phi_hat(k), w.substr(k));
      target = prefix(ds, e.decoded.size(), cap).word;
    }
  } catch (const not_in_code& err) {
    out.failure = err.what();
    return out;
  }
  out.matches_b_derivative = e.decoded == target && e.consumed + slack >= n;
  if (!out.matches_b_derivative) out.failure = "decoding over the derivative code differs from b Ds";
  return out;
}

enum class Verdict { stable, undecided };

inline const char* to_string(Verdict v) { return v == Verdict::stable ? "stable" : "undecided"; }

struct StabilityReport {
  Verdict verdict = Verdict::undecided;
  std::optional<std::pair<std::size_t, std::size_t>> cycle;  // D^m s = D^n s, m < n
  std::size_t explored = 0;                                  // derivatives computed
};

/*
 * Ultimately periodic directives always reach a repeated canonical form.
 * Generator-backed streams only describe a finite prefix, so after `budget`
 * derivatives the answer is undecided.
 */
inline StabilityReport is_stable(const DirectiveStream& s, std::size_t budget = 64) {
  StabilityReport out;
  if (!s.is_periodic()) {
    DirectiveStream current = s;
    for (; out.explored < budget; ++out.explored) {
      try {
        current = derivative_stream(current);
      } catch (const domain_error&) {
        break;
      }
    }
    return out;
  }
  std::vector<UltimatelyPeriodic> seen{s.periodic_form()};
  DirectiveStream current = s;
  while (true) {
    current = derivative_stream(current);
    ++out.explored;
    for (std::size_t m = 0; m < seen.size(); ++m) {
      if (seen[m] == current.periodic_form()) {
        out.verdict = Verdict::stable;
        out.cycle = std::make_pair(m, seen.size());
        return out;
      }
    }
    seen.push_back(current.periodic_form());
  }
}

// First `terms` run lengths alpha_0, alpha_1, ... of the directive.
inline std::vector<std::size_t> run_lengths(const DirectiveStream& s, std::size_t terms) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (out.size() < terms) {
    const Letter x = s.at(i);
    std::size_t run = 0;
    while (s.at(i) == x) ++i, ++run;
    out.push_back(run);
  }
  return out;
}

/*
 * Leading terms of the continued fraction of lim |s[n]|_b / |s[n]|_a:
 * [alpha_0; alpha_1, ...] for b-initial directives, [0; alpha_0, ...] for
 * a-initial ones.
 */
inline ContinuedFraction slope_cf_stream(const DirectiveStream& s, std::size_t terms) {
  if (terms == 0) throw domain_error("slope continued fraction needs at least one term");
  ContinuedFraction cf;
  if (s.at(0) == Letter::a) cf.push_back(0);
  if (cf.size() < terms)
    for (std::size_t r : run_lengths(s, terms - cf.size())) cf.push_back(r);
  return cf;
}

}  // namespace sturmian::characteristic
