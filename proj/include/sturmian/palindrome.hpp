#pragma once

#include "sturmian/word.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace sturmian {

class not_central : public domain_error {
 public:
  explicit not_central(const Word& w) : domain_error("not a central word: '" + w.str() + "'") {}
};

namespace detail {

// Border array (KMP failure function) of s: border[i] is the length of the
// longest proper border of s[0..i].
inline std::vector<std::size_t> border_array(std::string_view s) {
  std::vector<std::size_t> border(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return border;
}

}  // namespace detail

// Naive scan: the first suffix start whose suffix is a palindrome.
inline std::size_t longest_palindromic_suffix_naive(const Word& w) {
  const std::string& s = w.str();
  for (std::size_t start = 0; start < s.size(); ++start) {
    std::size_t i = start, j = s.size() - 1;
    while (i < j && s[i] == s[j]) ++i, --j;
    if (i >= j) return s.size() - start;
  }
  return 0;
}

// A suffix t of w is a palindrome iff t is also a prefix of reversal(w), so
// the answer is the longest border of reversal(w) # w.
inline std::size_t longest_palindromic_suffix(const Word& w) {
  if (w.empty()) return 0;
  std::string s(w.str().rbegin(), w.str().rend());
  s += '#';
  s += w.str();
  return detail::border_array(s).back();
}

// Shortest palindrome having w as a prefix.
inline Word palindromic_closure(const Word& w) {
  std::size_t q = longest_palindromic_suffix(w);
  return w + reversal(w.prefix(w.size() - q));
}

inline Word psi(const Word& v) {
  Word w;
  for (std::size_t i = 0; i < v.size(); ++i) w = palindromic_closure(w + v[i]);
  return w;
}

// Directive word of a central word, read off its chain of palindromic
// prefixes: the letter after each palindromic prefix is the next directive
// letter.
inline Word psi_inverse(const Word& w) {
  if (!is_palindrome(w)) throw not_central(w);
  Word v;
  std::size_t previous = 0;
  for (std::size_t len = 1; len <= w.size(); ++len) {
    if (!is_palindrome(w.prefix(len))) continue;
    v += w[previous];
    previous = len;
  }
  if (psi(v) != w) throw not_central(w);
  return v;
}

struct CentralAnalysis {
  bool is_central = false;
  Word directive;
  // (p, q) with p = pi(w) <= q, gcd(p, q) = 1 and |w| = p + q - 2.
  std::pair<std::size_t, std::size_t> periods{0, 0};
};

// Decides membership from the two-period definition; psi_inverse only runs
// once the word is known to be central.
inline CentralAnalysis is_central(const Word& w) {
  const std::size_t total = w.size() + 2;
  for (std::size_t p = 1; p < total; ++p) {
    std::size_t q = total - p;
    if (p > q) break;
    if (std::gcd(p, q) != 1 || !has_period(w, p) || !has_period(w, q)) continue;
    return {true, psi_inverse(w), {p, q}};
  }
  return {};
}

/*
 * For non-constant central w, the factors w1, w2 with w = w1 ab w2 = w2 ba w1.
 * Empty for constant or non-central words.
 */
inline std::optional<std::pair<Word, Word>> central_decomposition(const Word& w) {
  if (w.is_constant()) return std::nullopt;
  for (std::size_t i = 0; i + 2 <= w.size(); ++i) {
    if (w[i] != Letter::a || w[i + 1] != Letter::b) continue;
    Word w1 = w.prefix(i);
    Word w2 = w.substr(i + 2);
    if (w == w2 + "ba"_w + w1) return std::make_pair(w1, w2);
  }
  return std::nullopt;
}

/*
 * (p_a(v), p_b(v)) = (|mu_v(a)|, |mu_v(b)|). Appending x to v keeps the
 * length of x's image and adds it to the other letter's image length.
 */
inline std::pair<big_int, big_int> period_lengths(const Word& v) {
  big_int pa = 1, pb = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == Letter::a) pb += pa;
    else pa += pb;
  }
  return {pa, pb};
}

struct PeriodSpectrum {
  std::set<std::size_t> periods;
  Fraction mean;
};

// Distinct minimal periods over the nonempty prefixes of psi(v).
inline PeriodSpectrum prefix_period_spectrum(const Word& v) {
  if (v.empty()) throw domain_error("period spectrum of the empty directive");
  Word w = psi(v);
  auto border = detail::border_array(w.str());
  PeriodSpectrum out;
  for (std::size_t i = 0; i < w.size(); ++i) out.periods.insert(i + 1 - border[i]);
  big_int sum = 0;
  for (std::size_t p : out.periods) sum += p;
  out.mean = Fraction(sum, out.periods.size());
  return out;
}

}  // namespace sturmian
