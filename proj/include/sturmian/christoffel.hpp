#pragma once

#include "sturmian/fraction.hpp"
#include "sturmian/morphism.hpp"
#include "sturmian/palindrome.hpp"
#include "sturmian/word.hpp"

#include <cassert>
#include <numeric>
#include <utility>
#include <vector>

namespace sturmian::christoffel {

// Index of a directive word: 0 for the empty word, else its first run length.
inline std::size_t directive_index(const Word& v) { return v.empty() ? 0 : integral_representation(v).exponents.front(); }

// Lower Christoffel word with |w|_b = p and |w|_a = q.
inline Word from_slope(std::size_t p, std::size_t q) {
  if (p + q == 0 || std::gcd(p, q) != 1) throw domain_error("Christoffel slope must be a coprime pair");
  if (p == 0) return "a"_w;
  const std::size_t n = p + q;
  std::string s(n, 'a');
  for (std::size_t i = 1; i <= n; ++i)
    s[i - 1] = (i * p) % n > ((i - 1) * p) % n ? 'a' : 'b';
  return Word(s);
}

inline Word from_directive(const Word& v) { return Letter::a + psi(v) + Letter::b; }

struct ChristoffelAnalysis {
  bool is_christoffel = false;
  bool is_proper = false;
  Word directive;
  std::size_t index = 0;
  Fraction slope;
};

inline ChristoffelAnalysis classify(const Word& w) {
  if (w.empty()) throw domain_error("classify of the empty word");
  ChristoffelAnalysis out;
  out.slope = slope(w);
  if (w.size() == 1) {
    out.is_christoffel = true;
    return out;
  }
  if (w.first() != Letter::a || w.last() != Letter::b) return out;
  CentralAnalysis central = is_central(w.substr(1, w.size() - 2));
  if (!central.is_central) return out;
  out.is_christoffel = out.is_proper = true;
  out.directive = central.directive;
  out.index = directive_index(out.directive);
  return out;
}

inline bool is_christoffel(const Word& w) { return !w.empty() && classify(w).is_christoffel; }

namespace detail {

inline ChristoffelAnalysis require_proper(const Word& w) {
  if (w.empty()) throw domain_error("not a proper Christoffel word: ''");
  ChristoffelAnalysis c = classify(w);
  if (!c.is_proper) throw domain_error("not a proper Christoffel word: '" + w.str() + "'");
  return c;
}

}  // namespace detail

/*
 * Inverse image under phi_k (interior starting with a) or phi^_k (interior
 * starting with b), k the index. By convention d(ab) = a.
 */
inline Word derivative(const Word& w) {
  ChristoffelAnalysis c = detail::require_proper(w);
  if (c.directive.empty()) return "a"_w;
  const Morphism m = c.directive.first() == Letter::a ? phi(c.index) : phi_hat(c.index);
  return decode(m, w);
}

// Same value through the directive word: a psi(+v) b for non-constant v.
inline Word derivative_via_directive(const Word& w) {
  ChristoffelAnalysis c = detail::require_proper(w);
  const Word& v = c.directive;
  if (v.empty()) return "a"_w;
  if (v.is_constant()) return Word::letter(v.first());
  return from_directive(plus_operator(v, Side::suffix));
}

struct DerivativeChain {
  std::vector<Word> words;  // words[0] is the input, words.back() a letter
  std::size_t depth() const { return words.size() - 1; }
};

inline DerivativeChain derivative_chain(const Word& w) {
  detail::require_proper(w);
  DerivativeChain chain{{w}};
  while (chain.words.back().size() > 1) chain.words.push_back(derivative(chain.words.back()));
  return chain;
}

inline std::size_t depth(const Word& w) { return derivative_chain(w).depth(); }

// Each part must be a nonempty Lyndon word; multiplicative inverses of the
// slope terms modulo |w| give the part lengths.
inline bool lyndon_lengths_are_inverses(const Word& w, const std::pair<Word, Word>& parts) {
  const std::size_t n = w.size();
  const std::size_t p = w.count(Letter::b), q = w.count(Letter::a);
  return (parts.first.size() * p) % n == 1 % n && (parts.second.size() * q) % n == 1 % n;
}

/*
 * Standard factorization of a proper Christoffel word: w2 is the longest
 * proper suffix that is a Lyndon word.
 */
inline std::pair<Word, Word> lyndon_factorization(const Word& w) {
  detail::require_proper(w);
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word tail = w.substr(i);
    if (is_lyndon(tail)) {
      std::pair<Word, Word> parts{w.prefix(i), tail};
      assert(lyndon_lengths_are_inverses(w, parts));
      return parts;
    }
  }
  throw domain_error("no standard factorization");  // unreachable for |w| >= 2
}

/*
 * Slope of a psi(v) b from the integral representation (a0, ..., an) of v:
 * [a0; a1, ..., an + 1] when v starts with b, [0; a0, ..., an + 1] when v
 * starts with a.
 */
inline ContinuedFraction slope_cf(const Word& v) {
  if (v.empty()) throw domain_error("slope continued fraction needs a nonempty directive");
  IntegralRepresentation r = integral_representation(v);
  ContinuedFraction cf;
  if (r.first_letter == Letter::a) cf.push_back(0);
  for (std::size_t e : r.exponents) cf.push_back(e);
  cf.back() += 1;
  return cf;
}

/*
 * Slope of the derivative of a psi(v) b, v non-constant:
 * [a1 - 1; a2, ..., an + 1] when v starts with a,
 * [0; a1 - 1, a2, ..., an + 1] when v starts with b.
 */
inline ContinuedFraction derivative_slope_cf(const Word& v) {
  if (v.empty() || v.is_constant()) throw domain_error("derivative slope needs a non-constant directive");
  IntegralRepresentation r = integral_representation(v);
  ContinuedFraction cf;
  if (r.first_letter == Letter::b) cf.push_back(0);
  for (std::size_t i = 1; i < r.exponents.size(); ++i) cf.push_back(r.exponents[i]);
  cf[r.first_letter == Letter::b ? 1 : 0] -= 1;
  cf.back() += 1;
  return cf;
}

struct Ratios {
  Fraction raney;         // p_a(v) / p_b(v)
  Fraction stern_brocot;  // slope of a psi(v) b
};

inline Ratios ratios(const Word& v) {
  if (v.empty()) throw domain_error("ratios of the empty directive");
  auto [pa, pb] = period_lengths(v);
  return {Fraction(pa, pb), slope(from_directive(v))};
}

/*
 * Rebuilds a psi(v) b from v's first letter, |w| and |dw|: |dw| counts the
 * letter complementary to the first one.
 */
inline Word reconstruct(Letter first, std::size_t length, std::size_t derivative_length) {
  if (derivative_length >= length) throw domain_error("derivative must be shorter than the word");
  std::size_t other = length - derivative_length;
  return first == Letter::a ? from_slope(derivative_length, other) : from_slope(other, derivative_length);
}

}  // namespace sturmian::christoffel
