#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sturmian {

using big_int = boost::multiprecision::cpp_int;

/*
 * Nonnegative fraction num/den kept exactly as built (not reduced).
 * den == 0 with num > 0 encodes infinity; 0/0 is rejected.
 *
 * Equality and ordering compare values, so 2/4 == 1/2 and 3/0 == 1/0.
 */
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(big_int num, big_int den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ < 0 || den_ < 0) throw std::domain_error("fraction: negative term");
    if (num_ == 0 && den_ == 0) throw std::domain_error("fraction: 0/0");
  }

  static Fraction infinity() { return {1, 0}; }

  const big_int& num() const { return num_; }
  const big_int& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  Fraction reduced() const {
    if (is_infinite()) return infinity();
    big_int g = boost::multiprecision::gcd(num_, den_);
    if (g == 0) return *this;
    return {num_ / g, den_ / g};
  }

  friend bool operator==(const Fraction& x, const Fraction& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
  }

  friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
    big_int l = x.num_ * y.den_;
    big_int r = y.num_ * x.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Prints "p/q" unreduced, or "inf".
  std::string to_string() const {
    if (is_infinite()) return "inf";
    return num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

 private:
  big_int num_;
  big_int den_;
};

inline Fraction mediant(const Fraction& x, const Fraction& y) {
  return {x.num() + y.num(), x.den() + y.den()};
}

using ContinuedFraction = std::vector<big_int>;

// Value of [c0; c1, ..., cn]. Zero partial quotients after the first are
// allowed; 1/0 along the way becomes infinity.
inline Fraction evaluate(std::span<const big_int> cf) {
  if (cf.empty()) throw std::domain_error("continued fraction: no terms");
  big_int p = cf.back();
  big_int q = 1;
  for (auto it = cf.rbegin() + 1; it != cf.rend(); ++it) {
    // x = c + 1/(p/q) = (c*p + q)/p
    big_int np = *it * p + q;
    q = p;
    p = np;
  }
  return Fraction(p, q).reduced();
}

inline Fraction evaluate(const ContinuedFraction& cf) {
  return evaluate(std::span<const big_int>(cf.data(), cf.size()));
}

// Canonical expansion by Euclid; the last quotient is >= 2 unless the value
// is an integer. Infinity has no expansion.
inline ContinuedFraction expand(const Fraction& f) {
  if (f.is_infinite()) throw std::domain_error("continued fraction: infinite value");
  ContinuedFraction out;
  big_int p = f.num();
  big_int q = f.den();
  while (q != 0) {
    out.push_back(p / q);
    big_int r = p % q;
    p = q;
    q = r;
  }
  return out;
}

inline std::string to_string(const ContinuedFraction& cf) {
  std::string s = "[";
  for (std::size_t i = 0; i < cf.size(); ++i) {
    if (i == 1) s += ";";
    else if (i > 1) s += ",";
    s += cf[i].str();
  }
  return s + "]";
}

}  // namespace sturmian
