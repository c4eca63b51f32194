#pragma once

#include "sturmian/fraction.hpp"
#include "sturmian/word.hpp"

#include <regex>
#include <utility>
#include <vector>

namespace sturmian::depth {

// Number of steps v -> +v until a constant word (the empty word counts as
// constant). height(empty) = 1.
inline std::size_t height(const Word& v) {
  std::size_t h = 1;
  Word u = v;
  while (!u.is_constant()) {
    u = plus_operator(u, Side::suffix);
    ++h;
  }
  return h;
}

struct DeltaProfile {
  std::vector<int> bits;  // delta_0(v) ... delta_n(v); empty for the empty word
  std::size_t delta = 1;
};

inline DeltaProfile delta(const Word& v) {
  if (v.empty()) return {};
  const auto& alpha = integral_representation(v).exponents;
  const std::size_t n = alpha.size() - 1;
  DeltaProfile out;
  out.bits.assign(n + 1, 1);
  for (std::size_t i = 1; i < n; ++i) {
    if (alpha[i] > 1) out.bits[i] = 1;
    else if (alpha[i - 1] > 1) out.bits[i] = 0;
    else out.bits[i] = out.bits[i - 1] == 0 ? 1 : 0;
  }
  out.delta = 0;
  for (int b : out.bits) out.delta += static_cast<std::size_t>(b);
  return out;
}

/*
 * v = v0 u1 v2 u3 ... u_{k-1} v_k where the u's group maximal blocks of
 * interior runs of length 1 and the v's hold everything else.
 */
struct AlternatingDecomposition {
  std::vector<Word> parts;  // v0, u1, v2, ... in order

  std::vector<Word> components() const {
    std::vector<Word> out;
    for (std::size_t i = 1; i < parts.size(); i += 2) out.push_back(parts[i]);
    return out;
  }
};

inline AlternatingDecomposition alternating_components(const Word& v) {
  IntegralRepresentation r = integral_representation(v);
  const auto& alpha = r.exponents;
  const std::size_t n = alpha.size() - 1;
  AlternatingDecomposition out;
  Word current;
  bool in_component = false;
  for (std::size_t i = 0; i <= n; ++i) {
    bool unit = i > 0 && i < n && alpha[i] == 1;
    if (unit != in_component) {
      out.parts.push_back(current);
      current = Word();
      in_component = unit;
    }
    current += Word::repeat(r.letter(i), alpha[i]);
  }
  out.parts.push_back(current);
  return out;
}

/*
 * (u1, u2): the longest proper alternating prefix (suffix) made of runs of
 * length 1, or empty when the first (last) run is longer or v is constant.
 */
inline std::pair<Word, Word> boundary_words(const Word& v) {
  IntegralRepresentation r = integral_representation(v);
  const auto& alpha = r.exponents;
  const std::size_t n = alpha.size() - 1;
  Word u1, u2;
  if (n > 0 && alpha[0] == 1) {
    std::size_t i = 0;
    while (i + 1 < n && alpha[i + 1] == 1) ++i;
    u1 = v.prefix(i + 1);
  }
  if (n > 0 && alpha[n] == 1) {
    std::size_t j = n;
    while (j - 1 > 0 && alpha[j - 1] == 1) --j;
    u2 = v.suffix(n - j + 1);
  }
  return {u1, u2};
}

struct ConcatDelta {
  std::size_t value = 0;  // delta(uv)
  bool is_additive = false;
  // u ends and v starts with different letters, |u2| and |v1| even.
  bool predicted_additive = false;
};

inline ConcatDelta delta_concat_bound(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw domain_error("delta concatenation needs nonempty words");
  ConcatDelta out;
  out.value = delta(u + v).delta;
  out.is_additive = out.value == delta(u).delta + delta(v).delta;
  out.predicted_additive = u.last() != v.first() && boundary_words(u).second.size() % 2 == 0 &&
                           boundary_words(v).first.size() % 2 == 0;
  return out;
}

// H(1) = 0, H(2n) = H(n), H(4n +- 1) = H(n) + 1.
inline std::size_t H(big_int n) {
  if (n <= 0) throw domain_error("H is defined on positive integers");
  std::size_t value = 0;
  while (n > 1) {
    if ((n & 1) == 0) {
      n >>= 1;
    } else {
      if ((n & 3) == 1) n = (n - 1) >> 2;
      else n = (n + 1) >> 2;
      ++value;
    }
  }
  return value;
}

// H(1..count), built left to right from the recurrences.
inline std::vector<std::size_t> H_sequence(std::size_t count) {
  std::vector<std::size_t> h(count + 1, 0);
  for (std::size_t n = 2; n <= count; ++n) {
    if (n % 2 == 0) h[n] = h[n / 2];
    else if (n % 4 == 1) h[n] = h[(n - 1) / 4] + 1;
    else h[n] = h[(n + 1) / 4] + 1;
  }
  h.erase(h.begin());
  return h;
}

inline std::size_t height_via_H(const Word& v) { return H(standard_interpretation(Letter::b + v + Letter::b)); }

// Lower bound set: x+(yx+)* (odd extension) or x+(yx+)*(y+x)*y+ (even).
inline bool in_lower_bound_set(const Word& v) {
  static const std::regex pattern("a+(ba+)*|b+(ab+)*|a+(ba+)*(b+a)*b+|b+(ab+)*(a+b)*a+");
  return v.empty() || std::regex_match(v.str(), pattern);
}

// Upper bound set: {ab,ba}* {e,a,b} {ab,ba}*.
inline bool in_upper_bound_set(const Word& v) {
  static const std::regex pattern("(ab|ba)*(a|b)?(ab|ba)*");
  return std::regex_match(v.str(), pattern);
}

struct HeightBounds {
  std::size_t height = 0;
  std::size_t lower = 0;  // floor(ext/2) + 1
  std::size_t upper = 0;  // floor(|v|/2) + 1
  bool attains_lower = false;
  bool attains_upper = false;
};

inline HeightBounds height_bounds(const Word& v) {
  if (v.empty()) throw domain_error("height bounds of the empty word");
  HeightBounds out;
  out.height = height(v);
  out.lower = extension(v) / 2 + 1;
  out.upper = v.size() / 2 + 1;
  out.attains_lower = out.height == out.lower;
  out.attains_upper = out.height == out.upper;
  return out;
}

// v belongs to E when its final alternating word u2 has even length.
inline bool in_even_class(const Word& v) { return v.empty() || boundary_words(v).second.size() % 2 == 0; }

struct HeightRow {
  std::size_t p = 0;
  std::size_t e = 0;
  std::size_t o = 0;
  std::size_t J() const { return e + o; }
  std::vector<Word> members;  // lexicographic
};

struct HeightTable {
  std::size_t k = 0;
  std::vector<HeightRow> rows;  // p = 1 .. floor(k/2) + 1

  const HeightRow& row(std::size_t p) const { return rows.at(p - 1); }
  // Members starting with a (the other half is their complement).
  std::vector<Word> a_initial(std::size_t p) const {
    std::vector<Word> out;
    for (const Word& w : row(p).members)
      if (w.first() == Letter::a) out.push_back(w);
    return out;
  }
};

inline constexpr std::size_t default_table_cap = 20;

inline HeightTable enumerate_height_classes(std::size_t k, std::size_t cap = default_table_cap,
                                            bool keep_members = true) {
  if (k < 1) throw domain_error("height table needs k >= 1");
  if (k > cap) throw domain_error("height table size " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  HeightTable table{k, {}};
  const std::size_t max_p = k / 2 + 1;
  for (std::size_t p = 1; p <= max_p; ++p) table.rows.push_back(HeightRow{p, 0, 0, {}});
  for_each_word(k, [&](const Word& v) {
    std::size_t h = height(v);
    if (h > max_p) throw domain_error("height above the upper bound for '" + v.str() + "'");
    HeightRow& row = table.rows[h - 1];
    if (in_even_class(v)) ++row.e;
    else ++row.o;
    if (keep_members) row.members.push_back(v);
  });
  return table;
}

inline big_int binomial(long long n, long long m) {
  if (m < 0 || n < m) return 0;
  big_int r = 1;
  for (long long i = 1; i <= m; ++i) r = r * (n - m + i) / i;
  return r;
}

inline big_int pow2(std::size_t e) { return big_int(1) << e; }

// 2^{p-1} (C(k-p+1, p-1) + C(k-p, p-1))
inline big_int J_closed(std::size_t k, std::size_t p) {
  if (k < 1 || p < 1) throw domain_error("J_k(p) needs k, p >= 1");
  long long kk = static_cast<long long>(k), pp = static_cast<long long>(p);
  return pow2(p - 1) * (binomial(kk - pp + 1, pp - 1) + binomial(kk - pp, pp - 1));
}

// o_k(1) = 0, otherwise 2^{p-1} C(k-p, p-2)
inline big_int o_closed(std::size_t k, std::size_t p) {
  if (k < 1 || p < 1) throw domain_error("o_k(p) needs k, p >= 1");
  if (p == 1) return 0;
  long long kk = static_cast<long long>(k), pp = static_cast<long long>(p);
  return pow2(p - 1) * binomial(kk - pp, pp - 2);
}

// J_k(floor(k/2) + 1): 2^{k/2} for even k, 2^{(k+1)/2} (1 + floor(k/2)/2) for odd k.
inline big_int J_maximum(std::size_t k) {
  if (k % 2 == 0) return pow2(k / 2);
  return pow2((k + 1) / 2) + pow2((k - 1) / 2) * (k / 2);
}

}  // namespace sturmian::depth
