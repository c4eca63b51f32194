#pragma once

#include "sturmian/palindrome.hpp"
#include "sturmian/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sturmian {

class not_in_code : public domain_error {
 public:
  not_in_code(const Word& w, std::size_t position)
      : domain_error("word '" + w.str() + "' has no factorization over the code (stuck at position " +
                     std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ambiguous_code : public domain_error {
 public:
  using domain_error::domain_error;
};

// Endomorphism of {a,b}* given by the images of a and b.
struct Morphism {
  Word image_a;
  Word image_b;

  static Morphism identity() { return {"a"_w, "b"_w}; }

  const Word& image(Letter x) const { return x == Letter::a ? image_a : image_b; }

  Word operator()(const Word& w) const {
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i) out += image(w[i]);
    return out;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

inline Word apply(const Morphism& m, const Word& w) { return m(w); }

// f o g
inline Morphism compose(const Morphism& f, const Morphism& g) { return {f(g.image_a), f(g.image_b)}; }

// mu_x: x -> x, y -> xy
inline Morphism mu(Letter x) {
  return x == Letter::a ? Morphism{"a"_w, "ab"_w} : Morphism{"ba"_w, "b"_w};
}

// lambda_a = mu_a; lambda_b: a -> ab, b -> b
inline Morphism lambda(Letter x) {
  return x == Letter::a ? Morphism{"a"_w, "ab"_w} : Morphism{"ab"_w, "b"_w};
}

// mu_{v1} o ... o mu_{vn}
inline Morphism mu_of(const Word& v) {
  Morphism f = Morphism::identity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == Letter::a) f = {f.image_a, f.image_a + f.image_b};
    else f = {f.image_b + f.image_a, f.image_b};
  }
  return f;
}

// lambda_{v1} o ... o lambda_{vn}
inline Morphism lambda_of(const Word& v) {
  Morphism f = Morphism::identity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == Letter::a) f = {f.image_a, f.image_a + f.image_b};
    else f = {f.image_a + f.image_b, f.image_b};
  }
  return f;
}

// phi_k = lambda_{a^k b}: a -> a^{k+1} b, b -> a^k b (code X_k)
inline Morphism phi(std::size_t k) { return lambda_of(Word::repeat(Letter::a, k) + Letter::b); }
// phi^_k = lambda_{b^k a}: a -> a b^k, b -> a b^{k+1} (code Y_k)
inline Morphism phi_hat(std::size_t k) { return lambda_of(Word::repeat(Letter::b, k) + Letter::a); }
// mu_k = mu_{a^k b}: a -> a^k b a, b -> a^k b (code X'_k)
inline Morphism mu_k(std::size_t k) { return mu_of(Word::repeat(Letter::a, k) + Letter::b); }
// mu^_k = mu_{b^k a}: a -> b^k a, b -> b^k a b (code Y'_k)
inline Morphism mu_hat_k(std::size_t k) { return mu_of(Word::repeat(Letter::b, k) + Letter::a); }

enum class CodeKind { prefix_code, suffix_code, bounded_delay };

inline const char* to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::prefix_code: return "prefix_code";
    case CodeKind::suffix_code: return "suffix_code";
    case CodeKind::bounded_delay: return "bounded_delay";
  }
  return "?";
}

/*
 * Two nonempty words form a code iff they do not commute. Returns the most
 * specific decoding strategy, or nothing when the image pair is not a code.
 */
inline std::optional<CodeKind> classify_code(const Morphism& m) {
  const Word& x = m.image_a;
  const Word& y = m.image_b;
  if (x.empty() || y.empty() || x + y == y + x) return std::nullopt;
  if (!x.starts_with(y) && !y.starts_with(x)) return CodeKind::prefix_code;
  if (!x.ends_with(y) && !y.ends_with(x)) return CodeKind::suffix_code;
  return CodeKind::bounded_delay;
}

namespace detail {

inline bool matches_at(const Word& w, std::size_t pos, const Word& c) {
  return pos + c.size() <= w.size() && w.view().substr(pos, c.size()) == c.view();
}

inline bool matches_before(const Word& w, std::size_t end, const Word& c) {
  return c.size() <= end && w.view().substr(end - c.size(), c.size()) == c.view();
}

inline bool is_proper_prefix_of_image(const Morphism& m, std::string_view rest) {
  return (rest.size() < m.image_a.size() && m.image_a.view().starts_with(rest)) ||
         (rest.size() < m.image_b.size() && m.image_b.view().starts_with(rest));
}

}  // namespace detail

// The unique v with m(v) = w.
inline Word decode(const Morphism& m, const Word& w) {
  auto kind = classify_code(m);
  if (!kind) throw ambiguous_code("images '" + m.image_a.str() + "', '" + m.image_b.str() + "' do not form a code");

  std::string out;
  switch (*kind) {
    case CodeKind::prefix_code: {
      std::size_t pos = 0;
      while (pos < w.size()) {
        if (detail::matches_at(w, pos, m.image_a)) out += 'a', pos += m.image_a.size();
        else if (detail::matches_at(w, pos, m.image_b)) out += 'b', pos += m.image_b.size();
        else throw not_in_code(w, pos);
      }
      return Word(out);
    }
    case CodeKind::suffix_code: {
      std::size_t end = w.size();
      while (end > 0) {
        if (detail::matches_before(w, end, m.image_a)) out += 'a', end -= m.image_a.size();
        else if (detail::matches_before(w, end, m.image_b)) out += 'b', end -= m.image_b.size();
        else throw not_in_code(w, end);
      }
      return reversal(Word(out));
    }
    case CodeKind::bounded_delay: {
      // parses[i]: w[i..] factors over the code; a code admits one choice per step.
      std::vector<char> parses(w.size() + 1, 0);
      parses.back() = 1;
      for (std::size_t i = w.size(); i-- > 0;) {
        parses[i] = (detail::matches_at(w, i, m.image_a) && parses[i + m.image_a.size()]) ||
                    (detail::matches_at(w, i, m.image_b) && parses[i + m.image_b.size()]);
      }
      std::size_t pos = 0;
      while (pos < w.size()) {
        if (detail::matches_at(w, pos, m.image_a) && parses[pos + m.image_a.size()]) out += 'a', pos += m.image_a.size();
        else if (detail::matches_at(w, pos, m.image_b) && parses[pos + m.image_b.size()]) out += 'b', pos += m.image_b.size();
        else throw not_in_code(w, pos);
      }
      return Word(out);
    }
  }
  return Word(out);
}

struct PrefixDecoding {
  Word decoded;
  std::size_t consumed = 0;  // letters of the input covered by m(decoded)
};

/*
 * Decoding of a finite prefix of an infinite word of X^omega, X the image
 * pair of m: the longest run of codewords whose choice is already forced by
 * the available letters. Throws not_in_code when w is not a prefix of any
 * word of X^omega.
 */
inline PrefixDecoding decode_prefix(const Morphism& m, const Word& w) {
  if (!classify_code(m)) throw ambiguous_code("images do not form a code");
  // extends[i]: w[i..] is a prefix of some word of X^omega.
  std::vector<char> extends(w.size() + 1, 0);
  for (std::size_t i = w.size() + 1; i-- > 0;) {
    std::string_view rest = w.view().substr(i);
    extends[i] = detail::is_proper_prefix_of_image(m, rest) ||
                 (detail::matches_at(w, i, m.image_a) && extends[i + m.image_a.size()]) ||
                 (detail::matches_at(w, i, m.image_b) && extends[i + m.image_b.size()]);
  }
  if (!extends[0]) throw not_in_code(w, 0);

  PrefixDecoding out;
  std::string decoded;
  std::size_t pos = 0;
  while (true) {
    bool may_stop = detail::is_proper_prefix_of_image(m, w.view().substr(pos));
    bool via_a = detail::matches_at(w, pos, m.image_a) && extends[pos + m.image_a.size()];
    bool via_b = detail::matches_at(w, pos, m.image_b) && extends[pos + m.image_b.size()];
    if (may_stop || via_a == via_b) break;
    decoded += via_a ? 'a' : 'b';
    pos += via_a ? m.image_a.size() : m.image_b.size();
  }
  out.decoded = Word(decoded);
  out.consumed = pos;
  return out;
}

struct ChristoffelMorphismCheck {
  bool is_christoffel = false;
  Word directive;
};

/*
 * m is a Christoffel morphism iff m = lambda_v for some v. m(ab) must be a
 * proper Christoffel word a psi(v) b, and (m(a), m(b)) must be its standard
 * factorization: (a psi(v+) b, a psi(v-) b) when v ends with a, swapped
 * when v ends with b; lambda_{a^k} = (a, a^k b), lambda_{b^k} = (a b^k, b).
 */
inline ChristoffelMorphismCheck is_christoffel_morphism(const Morphism& m) {
  Word image = m.image_a + m.image_b;
  if (image.size() < 2 || image.first() != Letter::a || image.last() != Letter::b) return {};
  CentralAnalysis central = is_central(image.substr(1, image.size() - 2));
  if (!central.is_central) return {};
  const Word& v = central.directive;

  Morphism expected;
  if (v.empty()) {
    expected = Morphism::identity();
  } else if (v.is_constant()) {
    std::size_t k = v.size();
    expected = v.first() == Letter::a ? Morphism{"a"_w, Word::repeat(Letter::a, k) + Letter::b}
                                      : Morphism{Letter::a + Word::repeat(Letter::b, k), "b"_w};
  } else {
    Word plus = Letter::a + psi(plus_operator(v, Side::prefix)) + Letter::b;
    Word minus = Letter::a + psi(truncate(v, End::last)) + Letter::b;
    expected = v.last() == Letter::a ? Morphism{plus, minus} : Morphism{minus, plus};
  }
  if (m != expected) return {};
  return {true, v};
}

}  // namespace sturmian
