#pragma once

#include "sturmian/fraction.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

// Base of every error the library throws on a violated precondition.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (anything but 'a' and 'b').
class invalid_word : public error {
 public:
  invalid_word(std::string_view text, std::size_t position)
      : error("invalid letter '" + std::string(1, text[position]) + "' at position " +
              std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Operation undefined on this argument (empty word, constant word, ...).
class domain_error : public error {
 public:
  using error::error;
};

enum class Letter : char { a = 'a', b = 'b' };

constexpr Letter complement(Letter x) { return x == Letter::a ? Letter::b : Letter::a; }
constexpr char to_char(Letter x) { return static_cast<char>(x); }

/*
 * A finite word over {a, b}, a < b. Letters are stored as the ASCII bytes
 * 'a' and 'b', so std::string comparison is the lexicographic order.
 */
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view text) : letters_(text) {
    for (std::size_t i = 0; i < letters_.size(); ++i)
      if (letters_[i] != 'a' && letters_[i] != 'b') throw invalid_word(text, i);
  }
  Word(std::initializer_list<Letter> letters) {
    for (Letter x : letters) letters_.push_back(to_char(x));
  }

  static Word repeat(Letter x, std::size_t n) { return Word(std::string(n, to_char(x)), trusted{}); }
  static Word letter(Letter x) { return repeat(x, 1); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }

  Letter first() const {
    if (empty()) throw domain_error("first letter of the empty word");
    return (*this)[0];
  }
  Letter last() const {
    if (empty()) throw domain_error("last letter of the empty word");
    return (*this)[size() - 1];
  }

  std::size_t count(Letter x) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), to_char(x)));
  }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len), trusted{});
  }
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix(std::size_t len) const { return substr(size() - len); }

  bool starts_with(const Word& u) const { return std::string_view(letters_).starts_with(u.letters_); }
  bool ends_with(const Word& u) const { return std::string_view(letters_).ends_with(u.letters_); }
  bool is_constant() const {
    return std::all_of(letters_.begin(), letters_.end(), [&](char c) { return c == letters_.front(); });
  }

  Word& operator+=(const Word& u) {
    letters_ += u.letters_;
    return *this;
  }
  Word& operator+=(Letter x) {
    letters_ += to_char(x);
    return *this;
  }
  friend Word operator+(Word u, const Word& v) { return u += v; }
  friend Word operator+(Word u, Letter x) { return u += x; }
  friend Word operator+(Letter x, const Word& u) { return Word::letter(x) += u; }

  const std::string& str() const { return letters_; }
  std::string_view view() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& u, const Word& v) {
    return u.letters_.compare(v.letters_) <=> 0;
  }
  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.letters_; }

 private:
  struct trusted {};
  Word(std::string s, trusted) : letters_(std::move(s)) {}

  std::string letters_;
};

inline Word operator""_w(const char* s, std::size_t n) { return Word(std::string_view(s, n)); }

// Calls f on every word of length exactly n, in lexicographic order.
template <typename F>
void for_each_word(std::size_t n, F&& f) {
  std::string s(n, 'a');
  while (true) {
    f(Word(s));
    std::size_t i = n;
    while (i > 0 && s[i - 1] == 'b') s[--i] = 'a';
    if (i == 0) return;
    s[i - 1] = 'b';
  }
}

// Every word of length <= n, shortest first.
template <typename F>
void for_each_word_up_to(std::size_t n, F&& f) {
  for (std::size_t len = 0; len <= n; ++len) for_each_word(len, f);
}

inline Word complement(const Word& w) {
  std::string s = w.str();
  for (char& c : s) c = c == 'a' ? 'b' : 'a';
  return Word(s);
}

inline Word reversal(const Word& w) {
  std::string s = w.str();
  std::reverse(s.begin(), s.end());
  return Word(s);
}

inline bool is_palindrome(const Word& w) { return std::equal(w.str().begin(), w.str().end(), w.str().rbegin()); }

// |w|_b / |w|_a, unreduced; infinity when |w|_a == 0.
inline Fraction slope(const Word& w) {
  if (w.empty()) throw domain_error("slope of the empty word");
  return Fraction(w.count(Letter::b), w.count(Letter::a));
}

// w read in base 2 with a = 0, b = 1.
inline big_int standard_interpretation(const Word& w) {
  big_int value = 0;
  for (char c : w.str()) {
    value <<= 1;
    if (c == 'b') value |= 1;
  }
  return value;
}

struct IntegralRepresentation {
  Letter first_letter = Letter::a;
  std::vector<std::size_t> exponents;

  std::size_t extension() const { return exponents.size(); }
  Letter letter(std::size_t i) const { return i % 2 == 0 ? first_letter : complement(first_letter); }

  Word to_word() const {
    Word w;
    for (std::size_t i = 0; i < exponents.size(); ++i) w += Word::repeat(letter(i), exponents[i]);
    return w;
  }

  friend bool operator==(const IntegralRepresentation&, const IntegralRepresentation&) = default;
};

inline IntegralRepresentation integral_representation(const Word& w) {
  if (w.empty()) throw domain_error("integral representation of the empty word");
  IntegralRepresentation r{w[0], {1}};
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) ++r.exponents.back();
    else r.exponents.push_back(1);
  }
  return r;
}

// Number of letter runs; ext(empty) = 0.
inline std::size_t extension(const Word& w) { return w.empty() ? 0 : integral_representation(w).extension(); }

inline bool has_period(const Word& w, std::size_t p) {
  for (std::size_t i = 0; i + p < w.size(); ++i)
    if (w[i] != w[i + p]) return false;
  return true;
}

// Smallest p >= 1 that is a period; pi(empty) = 1.
inline std::size_t minimal_period(const Word& w) {
  std::size_t p = 1;
  while (p < w.size() && !has_period(w, p)) ++p;
  return p;
}

enum class Alternation { alternating, quasi_alternating, neither };

inline Alternation classify_alternation(const Word& w) {
  if (w.empty()) throw domain_error("alternation of the empty word");
  std::size_t repeats = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) ++repeats;
  if (repeats == 0) return Alternation::alternating;
  if (repeats == 1) return Alternation::quasi_alternating;
  return Alternation::neither;
}

enum class End { first, last };

// w with its first or last letter removed (-w, w-).
inline Word truncate(const Word& w, End end) {
  if (w.empty()) throw domain_error("truncate of the empty word");
  return end == End::last ? w.prefix(w.size() - 1) : w.substr(1);
}

enum class Side { prefix, suffix };

/*
 * Side::prefix gives v+: the longest prefix followed by the complement of the
 * last letter. Side::suffix gives +v: the longest suffix preceded by the
 * complement of the first letter. Undefined on constant words.
 */
inline Word plus_operator(const Word& v, Side side) {
  if (v.is_constant()) throw domain_error("plus operator of a constant word");
  const std::string& s = v.str();
  if (side == Side::prefix) {
    std::size_t i = s.find_last_of(to_char(complement(v.last())));
    return v.prefix(i);
  }
  std::size_t i = s.find_first_of(to_char(complement(v.first())));
  return v.substr(i + 1);
}

inline bool is_lyndon(const Word& w) {
  if (w.empty()) throw domain_error("Lyndon test of the empty word");
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < w.substr(i))) return false;
  return true;
}

}  // namespace sturmian

template <>
struct std::hash<sturmian::Word> {
  std::size_t operator()(const sturmian::Word& w) const noexcept { return std::hash<std::string>{}(w.str()); }
};
