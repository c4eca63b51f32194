#pragma once

// Brute-force definitions used to cross-check the rest of the library. Only
// word.hpp primitives are used here.

#include "sturmian/word.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace sturmian::oracle {

enum class WordClass { central, christoffel, standard };

inline const char* to_string(WordClass c) {
  switch (c) {
    case WordClass::central: return "central";
    case WordClass::christoffel: return "christoffel";
    case WordClass::standard: return "standard";
  }
  return "?";
}

struct EnumerationReport {
  std::size_t length_bound = 0;
  WordClass class_name = WordClass::central;
  std::vector<Word> members;  // lexicographic
  std::size_t count = 0;
};

inline constexpr std::size_t central_guard = 20;
inline constexpr std::size_t christoffel_guard = 200;
inline constexpr std::size_t standard_guard = 22;
inline constexpr std::size_t recurrence_guard = 64;

namespace detail {

inline void guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit)
    throw domain_error(std::string(what) + " enumeration bound " + std::to_string(n) + " exceeds " +
                       std::to_string(limit));
}

inline EnumerationReport report(std::size_t bound, WordClass c, std::set<Word> members) {
  EnumerationReport r{bound, c, {members.begin(), members.end()}, members.size()};
  return r;
}

}  // namespace detail

// Two periods p, q with gcd 1 and |w| = p + q - 2.
inline bool has_coprime_periods(const Word& w) {
  const std::size_t total = w.size() + 2;
  for (std::size_t p = 1; p < total; ++p) {
    std::size_t q = total - p;
    if (std::gcd(p, q) == 1 && has_period(w, p) && has_period(w, q)) return true;
  }
  return false;
}

inline EnumerationReport enumerate_central(std::size_t max_len) {
  detail::guard(max_len, central_guard, "central");
  std::set<Word> out;
  for_each_word_up_to(max_len, [&](const Word& w) {
    if (has_coprime_periods(w)) out.insert(w);
  });
  return detail::report(max_len, WordClass::central, std::move(out));
}

// Digitization of the segment from (0,0) to (q,p): the i-th letter is b when
// floor(i p / n) steps up.
inline Word lower_christoffel(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  std::string s;
  for (std::size_t i = 1; i <= n; ++i) s += (i * p) / n > ((i - 1) * p) / n ? 'b' : 'a';
  return Word(s);
}

inline EnumerationReport enumerate_christoffel(std::size_t max_len) {
  detail::guard(max_len, christoffel_guard, "Christoffel");
  std::set<Word> out;
  if (max_len >= 1) out.insert({"a"_w, "b"_w});
  for (std::size_t n = 2; n <= max_len; ++n)
    for (std::size_t p = 1; p < n; ++p)
      if (std::gcd(p, n) == 1) out.insert(lower_christoffel(p, n - p));
  return detail::report(max_len, WordClass::christoffel, std::move(out));
}

inline EnumerationReport enumerate_standard(std::size_t max_len) {
  detail::guard(max_len, standard_guard, "standard");
  std::set<Word> out;
  if (max_len >= 1) out.insert({"a"_w, "b"_w});
  if (max_len >= 2) {
    for (const Word& c : enumerate_central(max_len - 2).members) {
      out.insert(c + "ab"_w);
      out.insert(c + "ba"_w);
    }
  }
  return detail::report(max_len, WordClass::standard, std::move(out));
}

/*
 * Every s_n of length <= max_len from s_0 = b, s_1 = a,
 * s_{n+1} = s_n^{c_{n-1}} s_{n-1} with c_0 >= 0 and c_i >= 1 otherwise.
 */
inline std::set<Word> standard_recurrence_closure(std::size_t max_len) {
  detail::guard(max_len, recurrence_guard, "standard recurrence");
  std::set<Word> out;
  if (max_len == 0) return out;
  out.insert({"a"_w, "b"_w});
  std::vector<std::pair<Word, Word>> stack;  // (s_{n-1}, s_n)
  for (std::size_t c = 0;; ++c) {
    Word next = Word::repeat(Letter::a, c) + Letter::b;
    if (next.size() > max_len) break;
    out.insert(next);
    stack.emplace_back("a"_w, next);
  }
  while (!stack.empty()) {
    auto [previous, current] = stack.back();
    stack.pop_back();
    Word power = current;
    while (power.size() + previous.size() <= max_len) {
      Word next = power + previous;
      out.insert(next);
      stack.emplace_back(current, next);
      power += current;
    }
  }
  return out;
}

}  // namespace sturmian::oracle
