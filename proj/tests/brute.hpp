#pragma once

// Slow, definition-level reimplementations used only by the tests.

#include "sturmian/word.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace brute {

using sturmian::Letter;
using sturmian::Word;

inline bool palindrome(const std::string& s) { return std::equal(s.begin(), s.end(), s.rbegin()); }

// Shortest palindrome with prefix w, by trying every length.
inline Word closure(const Word& w) {
  const std::string s = w.str();
  for (std::size_t n = s.size();; ++n) {
    std::string t = s;
    for (std::size_t i = s.size(); i < n; ++i) t += t[n - 1 - i];
    if (palindrome(t)) return Word(t);
  }
}

inline Word psi(const Word& v) {
  Word w;
  for (std::size_t i = 0; i < v.size(); ++i) w = closure(w + v[i]);
  return w;
}

inline std::size_t period(const Word& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < w.size() && ok; ++i) ok = w[i] == w[i + p];
    if (ok) return p;
  }
  return 1;
}

// Lyndon by comparing against every proper rotation.
inline bool lyndon(const Word& w) {
  const std::string s = w.str();
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!(s < s.substr(i) + s.substr(0, i))) return false;
  return true;
}

// Lower Christoffel word below the segment (0,0)-(q,p): the path that stays
// closest under the line, built by comparing b-steps against the slope.
inline Word christoffel(std::size_t p, std::size_t q) {
  std::string s;
  std::size_t bs = 0;
  for (std::size_t i = 1; i <= p + q; ++i) {
    // take b if (i, bs + 1) stays on or under the line y = p x / (p + q)
    if ((bs + 1) * (p + q) <= i * p) {
      s += 'b';
      ++bs;
    } else {
      s += 'a';
    }
  }
  return Word(s);
}

inline bool is_christoffel(const Word& w) {
  if (w.size() == 1) return true;
  const std::size_t p = w.count(Letter::b), q = w.count(Letter::a);
  return std::gcd(p, q) == 1 && christoffel(p, q) == w;
}

inline bool is_central(const Word& w) {
  if (w.empty()) return true;
  return is_christoffel(Letter::a + w + Letter::b);
}

// Preimage of w by trying every word of length <= max_len.
template <class Apply>
inline std::optional<Word> preimage(const Apply& f, const Word& w, std::size_t max_len) {
  std::optional<Word> found;
  sturmian::for_each_word_up_to(max_len, [&](const Word& u) {
    if (!found && f(u) == w) found = u;
  });
  return found;
}

inline Word apply(const Word& image_a, const Word& image_b, const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) out += w[i] == Letter::a ? image_a : image_b;
  return out;
}

// Iterates a -> ab, b -> a from a; the fixed point is the Fibonacci word.
inline Word fibonacci(std::size_t n) {
  std::string w = "a";
  while (w.size() < n + 1) {
    std::string next;
    for (char c : w) next += c == 'a' ? "ab" : "a";
    w = next;
  }
  return Word(w.substr(0, n));
}

// mu_{x1} o ... o mu_{xm} applied to a seed, letter maps built directly.
inline Word mu_compose(const Word& v, const Word& seed) {
  Word w = seed;
  for (std::size_t i = v.size(); i-- > 0;) {
    const Letter x = v[i];
    Word next;
    for (std::size_t j = 0; j < w.size(); ++j) {
      next += x;
      if (w[j] != x) next += w[j];
    }
    w = next;
  }
  return w;
}

inline std::size_t H(unsigned long long n) {
  if (n == 1) return 0;
  if (n % 2 == 0) return H(n / 2);
  return n % 4 == 1 ? H((n - 1) / 4) + 1 : H((n + 1) / 4) + 1;
}

}  // namespace brute
