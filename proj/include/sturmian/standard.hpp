#pragma once

#include "sturmian/christoffel.hpp"
#include "sturmian/morphism.hpp"
#include "sturmian/palindrome.hpp"
#include "sturmian/word.hpp"

#include <optional>
#include <vector>

namespace sturmian::standard {

// Order of the two final letters of a proper standard word psi(v) xy.
enum class SuffixOrder { ab, ba };

inline Word suffix_word(SuffixOrder order) { return order == SuffixOrder::ab ? "ab"_w : "ba"_w; }
inline const char* to_string(SuffixOrder order) { return order == SuffixOrder::ab ? "ab" : "ba"; }

inline Word from_directive(const Word& v, SuffixOrder order) { return psi(v) + suffix_word(order); }

/*
 * s_0 = b, s_1 = a, s_{n+1} = s_n^{c_{n-1}} s_{n-1}. c[0] may be 0, every
 * later coefficient must be positive; s_n reads c[0..n-2].
 */
inline Word via_recurrence(const std::vector<std::size_t>& c, std::size_t n) {
  if (n >= 2 && c.size() < n - 1) throw domain_error("recurrence needs n - 1 coefficients");
  for (std::size_t i = 1; i + 1 < n && i < c.size(); ++i)
    if (c[i] == 0) throw domain_error("recurrence coefficients after the first must be positive");
  Word previous = "b"_w, current = "a"_w;
  if (n == 0) return previous;
  for (std::size_t i = 1; i < n; ++i) {
    Word next;
    for (std::size_t j = 0; j < c[i - 1]; ++j) next += current;
    next += previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

struct StandardAnalysis {
  bool is_standard = false;
  bool is_proper = false;
  Word directive;
  SuffixOrder order = SuffixOrder::ab;
  std::size_t index = 0;
};

inline StandardAnalysis classify(const Word& w) {
  if (w.empty()) throw domain_error("classify of the empty word");
  if (w.size() == 1) return {true, false, {}, SuffixOrder::ab, 0};
  // Shortest directive wins, ba before ab. The last two letters fix the
  // order, so at most one candidate exists in practice.
  std::optional<StandardAnalysis> best;
  for (SuffixOrder order : {SuffixOrder::ba, SuffixOrder::ab}) {
    if (!w.ends_with(suffix_word(order))) continue;
    CentralAnalysis central = is_central(w.prefix(w.size() - 2));
    if (!central.is_central) continue;
    StandardAnalysis candidate{true, true, central.directive, order, christoffel::directive_index(central.directive)};
    if (!best || candidate.directive.size() < best->directive.size()) best = candidate;
  }
  return best.value_or(StandardAnalysis{});
}

inline bool is_standard(const Word& w) { return !w.empty() && classify(w).is_standard; }

/*
 * Inverse image under mu_k (first letter a) or mu^_k (first letter b), k the
 * index, except a^{k+1} b -> b and b^{k+1} a -> a.
 */
inline Word derivative(const Word& w) {
  if (w.empty()) throw domain_error("not a proper standard word: ''");
  StandardAnalysis s = classify(w);
  if (!s.is_proper) throw domain_error("not a proper standard word: '" + w.str() + "'");
  const Letter x = w.first();
  const std::size_t k = s.index;
  if (w == Word::repeat(x, k + 1) + complement(x)) return Word::letter(complement(x));
  return decode(x == Letter::a ? mu_k(k) : mu_hat_k(k), w);
}

inline christoffel::DerivativeChain derivative_chain(const Word& w) {
  christoffel::DerivativeChain chain{{w}};
  chain.words.push_back(derivative(w));
  while (chain.words.back().size() > 1) chain.words.push_back(derivative(chain.words.back()));
  return chain;
}

inline std::size_t depth(const Word& w) { return derivative_chain(w).depth(); }

}  // namespace sturmian::standard
