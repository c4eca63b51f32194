#pragma once

// Exhaustive cross-checks of the library's identities over all directive
// words up to a length bound.

#include "sturmian/characteristic.hpp"
#include "sturmian/christoffel.hpp"
#include "sturmian/depth.hpp"
#include "sturmian/morphism.hpp"
#include "sturmian/oracle.hpp"
#include "sturmian/palindrome.hpp"
#include "sturmian/standard.hpp"
#include "sturmian/word.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace sturmian::verify {

struct TheoremResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failing case
};

struct Report {
  std::size_t max_len = 0;
  std::vector<TheoremResult> results;

  bool all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const TheoremResult& r) { return r.passed; });
  }
};

struct Options {
  // Replaces the Christoffel derivative everywhere (mutation testing).
  std::function<Word(const Word&)> christoffel_derivative;
};

inline constexpr std::size_t max_bound = 12;

namespace detail {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& subject) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = subject;
    }
  }

  TheoremResult done() { return std::move(result_); }

 private:
  TheoremResult result_;
};

inline std::string show(const Word& w) { return w.empty() ? "\"\"" : w.str(); }

// Every nonempty concatenation of words of `code` with length <= max_len.
inline std::vector<Word> code_words(const std::vector<Word>& code, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> frontier{Word()};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (const Word& c : code)
        if (w.size() + c.size() <= max_len) next.push_back(w + c);
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Word ch(const Word& v) { return christoffel::from_directive(v); }

inline std::size_t len(const Word& v) { return ch(v).size(); }

}  // namespace detail

inline Report verify_all(std::size_t max_len, const Options& options = {}) {
  if (max_len > max_bound)
    throw domain_error("verify bound " + std::to_string(max_len) + " exceeds " + std::to_string(max_bound));
  using detail::ch;
  using detail::Check;
  using detail::show;

  const std::size_t n = max_len;
  const auto derive = options.christoffel_derivative
                          ? options.christoffel_derivative
                          : std::function<Word(const Word&)>([](const Word& w) { return christoffel::derivative(w); });

  std::vector<Word> all;  // every v with |v| <= n, shortest first
  for_each_word_up_to(n, [&](const Word& v) { all.push_back(v); });
  std::vector<Word> nonconstant;
  for (const Word& v : all)
    if (!v.is_constant()) nonconstant.push_back(v);

  const auto ch_oracle_report = oracle::enumerate_christoffel(oracle::christoffel_guard);
  const std::unordered_set<Word> ch_oracle(ch_oracle_report.members.begin(), ch_oracle_report.members.end());
  auto in_ch = [&](const Word& w) {
    if (w.size() <= oracle::christoffel_guard) return ch_oracle.count(w) > 0;
    return w.first() == Letter::a && w.last() == Letter::b && oracle::has_coprime_periods(w.substr(1, w.size() - 2));
  };

  Report report{n, {}};
  auto add = [&](Check c) { report.results.push_back(c.done()); };

  {
    Check c("palindromization_properties");
    std::unordered_set<Word> images;
    for (const Word& v : all) {
      const Word p = psi(v);
      bool ok = is_palindrome(p) && psi(reversal(v)).size() == p.size() && psi(complement(v)) == complement(p);
      for (std::size_t i = 0; i <= v.size() && ok; ++i) {
        Word q = psi(v.prefix(i));
        ok = p.starts_with(q) && p.ends_with(q);
      }
      for (std::size_t len = 1; len <= p.size() && ok; ++len) {
        Word q = p.prefix(len);
        if (!is_palindrome(q)) continue;
        Word u = psi_inverse(q);
        ok = v.starts_with(u);
        ok = ok && p.starts_with(palindromic_closure(q));
      }
      ok = ok && images.insert(p).second && psi_inverse(p) == v;
      c.expect(ok, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("closure_of_central_words");
    for (const Word& v : nonconstant) {
      const Word p = psi(v);
      auto split = central_decomposition(p);
      bool ok = split.has_value();
      if (ok) {
        const auto& [w1, w2] = *split;
        ok = psi(v + Letter::a) == w2 + "ba"_w + w1 + "ab"_w + w2 && psi(v + Letter::b) == w1 + "ab"_w + w2 + "ba"_w + w1;
        CentralAnalysis central = is_central(p);
        ok = ok && is_central(w1).is_central && is_central(w2).is_central && central.is_central &&
             std::gcd(w1.size() + 2, w2.size() + 2) == 1 && has_period(p, w1.size() + 2) &&
             has_period(p, w2.size() + 2) && std::min(w1.size(), w2.size()) + 2 == minimal_period(p);
      }
      c.expect(ok, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("minimal_periods");
    for (const Word& v : all) {
      auto [pa, pb] = period_lengths(v);
      const Word p = psi(v);
      bool ok = pa == mu_of(v).image_a.size() && pb == mu_of(v).image_b.size();
      ok = ok && pa == minimal_period(psi(v + Letter::a)) && pa == minimal_period(p + Letter::a);
      ok = ok && pb == minimal_period(psi(v + Letter::b)) && pb == minimal_period(p + Letter::b);
      ok = ok && boost::multiprecision::gcd(pa, pb) == 1 && big_int(p.size()) == pa + pb - 2;
      ok = ok && big_int(minimal_period(p)) == std::min(pa, pb);
      if (!v.is_constant()) {
        const big_int& last = v.last() == Letter::a ? pa : pb;
        ok = ok && big_int(minimal_period(p)) == last && last == detail::len(plus_operator(v, Side::prefix));
      }
      c.expect(ok, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("justin_formula");
    for (const Word& v : all)
      for (const Word& u : all)
        if (v.size() + u.size() <= n) c.expect(psi(v + u) == mu_of(v)(psi(u)) + psi(v), "v=" + show(v) + " u=" + show(u));
    add(std::move(c));
  }
  {
    Check c("standard_pair_images");
    for (const Word& v : all) {
      c.expect(mu_of(v)("ab"_w) == psi(v) + "ab"_w && mu_of(v)("ba"_w) == psi(v) + "ba"_w, "v=" + show(v));
      for (const Word& w : all)
        if (w.size() + v.size() <= n)
          c.expect(psi(w + v) + "ab"_w == mu_of(w)(psi(v) + "ab"_w), "w=" + show(w) + " v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("morphism_images_of_letters");
    for (const Word& v : nonconstant) {
      const Word plus = plus_operator(v, Side::prefix);
      const Word minus = truncate(v, End::last);
      const Morphism m = mu_of(v), l = lambda_of(v);
      bool ok;
      if (v.last() == Letter::a) {
        ok = m.image_a == psi(plus) + "ba"_w && m.image_b == psi(minus) + "ab"_w && m.image_a == mu_of(plus)("ba"_w) &&
             l.image_a == ch(plus) && l.image_b == ch(minus) && l.image_a == lambda_of(plus)("ab"_w);
      } else {
        ok = m.image_a == psi(minus) + "ba"_w && m.image_b == psi(plus) + "ab"_w && m.image_b == mu_of(plus)("ab"_w) &&
             l.image_a == ch(minus) && l.image_b == ch(plus) && l.image_b == lambda_of(plus)("ab"_w);
      }
      c.expect(ok, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("central_word_split");
    for (const Word& v : nonconstant) {
      const Letter x = v.last(), y = complement(x);
      const Word plus = psi(plus_operator(v, Side::prefix)), minus = psi(truncate(v, End::last));
      const Word xy = Word{x, y}, yx = Word{y, x};
      c.expect(psi(v) == plus + yx + minus && psi(v) == minus + xy + plus, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("lambda_b_right_conjugate");
    for (const Word& v : all) c.expect(Letter::b + lambda(Letter::b)(v) == mu(Letter::b)(v) + Letter::b, "v=" + show(v));
    add(std::move(c));
  }
  {
    Check c("lambda_mu_prefix_relation");
    for (std::size_t k = 0; k <= 4; ++k) {
      const Word d = Word::repeat(Letter::a, k) + Letter::b;
      for (const Word& v : all) {
        if (v.size() > 8) break;
        bool ok = lambda_of(d)(Letter::b + v) == mu_of(d)(v + Letter::b) &&
                  lambda_of(d)(Letter::a + v) == Letter::a + mu_of(d)(v + Letter::b);
        c.expect(ok, "k=" + std::to_string(k) + " v=" + show(v));
      }
    }
    add(std::move(c));
  }
  {
    Check c("image_lengths");
    for (const Word& v : all) {
      auto [pa, pb] = period_lengths(v);
      const Morphism l = lambda_of(v), m = mu_of(v);
      c.expect(l.image_a.size() == m.image_a.size() && pa == l.image_a.size() && l.image_b.size() == m.image_b.size() &&
                   pb == l.image_b.size(),
               "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("christoffel_images");
    for (const Word& v : all) {
      c.expect(lambda_of(v)("ab"_w) == ch(v), "v=" + show(v));
      for (const Word& w : all)
        if (w.size() + v.size() <= n) c.expect(ch(w + v) == lambda_of(w)(ch(v)), "w=" + show(w) + " v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("christoffel_morphism_membership");
    for (const Word& v : all) {
      if (v.size() > 6) break;
      const Morphism l = lambda_of(v);
      auto cert = is_christoffel_morphism(l);
      bool ok = cert.is_christoffel && cert.directive == v;
      for (const Word& w : ch_oracle_report.members) {
        if (w.size() > 8) continue;
        ok = ok && in_ch(l(w));
      }
      c.expect(ok, "lambda_v with v=" + show(v));
    }
    std::vector<Word> images;
    for_each_word_up_to(4, [&](const Word& w) {
      if (!w.empty()) images.push_back(w);
    });
    for (const Word& x : images) {
      for (const Word& y : images) {
        const Morphism f{x, y};
        auto cert = is_christoffel_morphism(f);
        bool ok;
        if (cert.is_christoffel) ok = f == lambda_of(cert.directive);
        else ok = !in_ch(x) || !in_ch(y) || !in_ch(x + y);
        c.expect(ok, "f(a)=" + x.str() + " f(b)=" + y.str());
      }
    }
    add(std::move(c));
  }
  {
    Check c("christoffel_preimage_closure");
    for (const Word& v : all) {
      if (v.size() > 4) break;
      const Morphism l = lambda_of(v);
      for (const Word& w : all) {
        if (w.size() > 8) break;
        if (w.empty()) continue;
        c.expect(!in_ch(l(w)) || in_ch(w), "v=" + show(v) + " w=" + show(w));
      }
    }
    add(std::move(c));
  }
  {
    Check c("decode_inverts_apply");
    std::vector<Morphism> family;
    for (const Word& v : all) {
      if (v.size() > 4) break;
      family.push_back(mu_of(v));
      family.push_back(lambda_of(v));
    }
    for (const Morphism& m : family) {
      if (!classify_code(m)) continue;
      for (const Word& w : all) c.expect(decode(m, m(w)) == w, "m=(" + m.image_a.str() + "," + m.image_b.str() + ") w=" + show(w));
    }
    add(std::move(c));
  }
  {
    Check c("derivative_is_christoffel");
    for (const Word& v : all) c.expect(in_ch(derive(ch(v))), "v=" + show(v));
    const std::size_t limit = std::min<std::size_t>(14, n + 6);
    for (std::size_t k = 1; k <= 3; ++k) {
      for (const Morphism& m : {phi(k), phi_hat(k)}) {
        for (const Word& w : detail::code_words({m.image_a, m.image_b}, limit)) {
          bool proper = w.size() >= 2 && in_ch(w);
          c.expect(proper == in_ch(decode(m, w)), "k=" + std::to_string(k) + " w=" + w.str());
        }
      }
    }
    add(std::move(c));
  }
  {
    Check c("derivative_of_factorization");
    for (const Word& v : nonconstant) {
      const Word w = ch(v);
      const std::size_t k = christoffel::directive_index(v);
      const Morphism m = v.first() == Letter::a ? phi(k) : phi_hat(k);
      auto [w1, w2] = christoffel::lyndon_factorization(w);
      const Word d = derive(w);
      bool ok = in_ch(w1) && in_ch(w2);
      try {
        Word d1 = decode(m, w1), d2 = decode(m, w2);
        ok = ok && d == d1 + d2 && in_ch(d1) && in_ch(d2) &&
             christoffel::lyndon_factorization(d) == std::make_pair(d1, d2);
      } catch (const error&) {
        ok = false;
      }
      c.expect(ok, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("derivative_length");
    for (const Word& v : all) {
      if (v.empty()) continue;
      const Word w = ch(v);
      const std::size_t dl = derive(w).size();
      c.expect(dl == minimal_period(psi(reversal(v))) && dl == w.count(complement(v.first())), "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("reconstruction_from_lengths");
    std::set<std::tuple<Letter, std::size_t, std::size_t>> keys;
    std::size_t words = 0;
    for (const Word& v : all) {
      if (v.empty()) continue;
      const Word w = ch(v);
      const std::size_t dl = derive(w).size();
      keys.emplace(v.first(), w.size(), dl);
      ++words;
      c.expect(christoffel::reconstruct(v.first(), w.size(), dl) == w, "v=" + show(v));
    }
    c.expect(keys.size() == words, "distinct (first letter, |w|, |dw|) triples");
    add(std::move(c));
  }
  {
    Check c("central_length_as_derivative_sum");
    for (const Word& v : all) {
      std::size_t sum = 0;
      for (std::size_t i = 0; i < v.size(); ++i) sum += derive(ch(v.substr(i))).size();
      c.expect(psi(v).size() == sum, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("length_series");
    for (const Word& v : all) {
      if (v.empty()) continue;
      IntegralRepresentation r = integral_representation(v);
      const std::size_t last = r.exponents.size() - 1;
      std::size_t sum = 0;
      for (std::size_t i = 0; i < last; ++i) {
        Word tail = Word::repeat(r.letter(i + 1), r.exponents[i + 1] - 1);
        for (std::size_t j = i + 2; j <= last; ++j) tail += Word::repeat(r.letter(j), r.exponents[j]);
        sum += r.exponents[i] * detail::len(tail);
      }
      // Framed and unframed readings.
      bool ok = detail::len(v) == sum + r.exponents[last] + 2 && psi(v).size() == sum + r.exponents[last];
      c.expect(ok, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("derivative_collisions");
    for (std::size_t k = 0; k <= n; ++k) {
      std::map<Word, std::vector<Word>> groups;
      for_each_word(k, [&](const Word& v) { groups[derive(ch(v))].push_back(v); });
      for (const auto& [d, vs] : groups) {
        if (vs.size() == 1) continue;
        bool ok = vs.size() == 2;
        if (ok) {
          const Word &v = vs[0], &u = vs[1];
          ok = !v.is_constant() && !u.is_constant() && v.first() != u.first();
          if (ok) {
            const Word tail = plus_operator(v, Side::suffix);
            const std::size_t r = christoffel::directive_index(v);
            const Letter x = v.first(), y = complement(x);
            ok = plus_operator(u, Side::suffix) == tail && v == Word::repeat(x, r) + y + tail &&
                 u == Word::repeat(y, r) + x + tail;
          }
        }
        c.expect(ok, "derivative " + d.str() + " of " + show(vs[0]) + " and " + show(vs[1]));
      }
    }
    add(std::move(c));
  }
  {
    Check c("derivative_directive_route");
    for (const Word& v : nonconstant) c.expect(derive(ch(v)) == ch(plus_operator(v, Side::suffix)), "v=" + show(v));
    add(std::move(c));
  }
  {
    Check c("derivative_symmetries");
    for (const Word& v : nonconstant) {
      bool ok = derive(ch(complement(v))) == ch(complement(plus_operator(v, Side::suffix))) &&
                derive(ch(reversal(v))) == ch(reversal(plus_operator(v, Side::prefix)));
      ok = ok && plus_operator(complement(v), Side::suffix) == complement(plus_operator(v, Side::suffix)) &&
           plus_operator(complement(v), Side::prefix) == complement(plus_operator(v, Side::prefix)) &&
           reversal(plus_operator(v, Side::suffix)) == plus_operator(reversal(v), Side::prefix);
      c.expect(ok, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("slope_mediant");
    for (const Word& v : nonconstant) {
      Fraction s = slope(ch(v));
      Fraction m = mediant(slope(ch(plus_operator(v, Side::prefix))), slope(ch(truncate(v, End::last))));
      c.expect(s.num() == m.num() && s.den() == m.den(), "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("length_additivity");
    for (const Word& v : nonconstant) {
      const std::size_t total = detail::len(v);
      const Word plus_s = plus_operator(v, Side::suffix);
      bool ok = total == detail::len(truncate(v, End::last)) + detail::len(plus_operator(v, Side::prefix)) &&
                total == detail::len(truncate(v, End::first)) + detail::len(plus_s) &&
                detail::len(plus_s) == ch(v).count(complement(v.first()));
      for (Letter x : {Letter::a, Letter::b})
        ok = ok && ch(v).count(x) == ch(truncate(v, End::last)).count(x) + ch(plus_operator(v, Side::prefix)).count(x);
      c.expect(ok, "v=" + show(v));
    }
    for (const Word& v : all)
      if (!v.empty())
        c.expect(minimal_period(psi(reversal(v))) == ch(v).count(complement(v.first())), "v=" + show(v));
    add(std::move(c));
  }
  {
    Check c("raney_and_stern_brocot_ratios");
    for (const Word& v : nonconstant) {
      auto r = christoffel::ratios(v);
      const std::size_t plus = detail::len(plus_operator(v, Side::prefix)), minus = detail::len(truncate(v, End::last));
      const std::size_t splus = detail::len(plus_operator(v, Side::suffix)), sminus = detail::len(truncate(v, End::first));
      Fraction ra = v.last() == Letter::a ? Fraction(plus, minus) : Fraction(minus, plus);
      Fraction sb = v.first() == Letter::a ? Fraction(splus, sminus) : Fraction(sminus, splus);
      c.expect(r.raney == ra && r.stern_brocot == sb, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("prefix_period_spectrum");
    for (const Word& v : all) {
      if (v.empty()) continue;
      auto spectrum = prefix_period_spectrum(v);
      std::set<std::size_t> by_directive;
      for (std::size_t i = 1; i <= v.size(); ++i) by_directive.insert(minimal_period(psi(v.prefix(i))));
      const bool alternating = classify_alternation(v) == Alternation::alternating;
      const Fraction ratio(psi(v).size(), extension(v));
      bool ok = spectrum.periods.size() == extension(v) && spectrum.periods == by_directive &&
                (spectrum.periods.size() == v.size()) == alternating && ratio >= spectrum.mean &&
                (ratio == spectrum.mean) == alternating;
      c.expect(ok, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("slope_continued_fractions");
    for (const Word& v : all) {
      if (v.empty()) continue;
      bool ok = evaluate(christoffel::slope_cf(v)) == slope(ch(v));
      if (!v.is_constant()) ok = ok && evaluate(christoffel::derivative_slope_cf(v)) == slope(derive(ch(v)));
      c.expect(ok, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("lyndon_factorization");
    for (const Word& v : all) {
      const Word w = ch(v);
      auto [w1, w2] = christoffel::lyndon_factorization(w);
      auto [pa, pb] = period_lengths(v);
      auto [ra, rb] = period_lengths(reversal(v));
      bool ok = w1 + w2 == w && in_ch(w1) && in_ch(w2) && w1 < w2 && is_lyndon(w) &&
                christoffel::lyndon_lengths_are_inverses(w, {w1, w2}) && pa == w1.size() && pb == w2.size() &&
                ra == w.count(Letter::b) && rb == w.count(Letter::a) &&
                christoffel::from_slope(static_cast<std::size_t>(ra), static_cast<std::size_t>(rb)) == w;
      if (!v.is_constant()) {
        const Word plus = ch(plus_operator(v, Side::prefix)), minus = ch(truncate(v, End::last));
        ok = ok && (v.last() == Letter::a ? std::make_pair(plus, minus) : std::make_pair(minus, plus)) == std::make_pair(w1, w2);
      }
      c.expect(ok, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("standard_derivative_characterization");
    const auto stand = oracle::enumerate_standard(oracle::standard_guard);
    const std::set<Word> in_stand(stand.members.begin(), stand.members.end());
    const std::size_t limit = std::min<std::size_t>(14, n + 6);
    for (std::size_t k = 1; k <= 3; ++k) {
      for (const Morphism& m : {mu_k(k), mu_hat_k(k)}) {
        for (const Word& w : detail::code_words({m.image_a, m.image_b}, limit)) {
          bool proper = w.size() >= 2 && in_stand.count(w);
          c.expect(proper == (in_stand.count(decode(m, w)) > 0), "k=" + std::to_string(k) + " w=" + w.str());
        }
      }
      for (Letter x : {Letter::a, Letter::b}) {
        Word w = Word::repeat(x, k + 1) + complement(x);
        c.expect(in_stand.count(w) && in_stand.count(decode(x == Letter::a ? mu_k(k + 1) : mu_hat_k(k + 1), w)),
                 "w=" + w.str());
      }
    }
    add(std::move(c));
  }
  {
    Check c("standard_derivative_directive_route");
    for (const Word& v : nonconstant) {
      for (auto order : {standard::SuffixOrder::ab, standard::SuffixOrder::ba}) {
        const Word w = standard::from_directive(v, order);
        bool ok = standard::derivative(w) == standard::from_directive(plus_operator(v, Side::suffix), order);
        auto s = standard::classify(w);
        ok = ok && s.is_proper && s.directive == v && s.order == order;
        c.expect(ok, "v=" + show(v) + " order=" + standard::to_string(order));
      }
    }
    add(std::move(c));
  }
  {
    Check c("standard_christoffel_bridge");
    for (const Word& v : all) {
      const Word d = standard::derivative(psi(v) + "ba"_w);
      const Word dc = derive(ch(v));
      const bool bridge = dc.starts_with("a"_w) && d == dc.substr(1) + Letter::a;
      if (v.empty() || !v.is_constant() || v.first() == Letter::a) c.expect(bridge, "v=" + show(v));
      else c.expect(!bridge && d == "a"_w && dc == "b"_w, "v=" + show(v) + " (exception)");
    }
    add(std::move(c));
  }
  {
    Check c("depth_equality");
    for (const Word& v : all) {
      const std::size_t d = christoffel::depth(ch(v));
      c.expect(standard::depth(psi(v) + "ab"_w) == d && standard::depth(psi(v) + "ba"_w) == d && depth::height(v) == d,
               "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("height_identities");
    for (const Word& v : all) {
      const std::size_t h = depth::height(v);
      const auto profile = depth::delta(v);
      bool ok = profile.delta == h && depth::height_via_H(v) == h;
      ok = ok && depth::delta(reversal(v)).delta == h && depth::delta(complement(v)).delta == h &&
           depth::delta(complement(reversal(v))).delta == h;
      if (!v.is_constant()) ok = ok && depth::height(plus_operator(v, Side::prefix)) + 1 == h;
      if (!v.empty()) {
        auto b = depth::height_bounds(v);
        ok = ok && b.lower <= h && h <= b.upper && b.attains_lower == depth::in_lower_bound_set(v) &&
             b.attains_upper == depth::in_upper_bound_set(v);
        const auto alt = classify_alternation(v);
        const bool both = alt == Alternation::alternating ||
                          (alt == Alternation::quasi_alternating && extension(v) % 2 == 0);
        ok = ok && (b.attains_lower && b.attains_upper) == both;
        std::size_t correction = 0;
        for (const Word& u : depth::alternating_components(v).components()) correction += (u.size() + 1) / 2;
        ok = ok && profile.delta == extension(v) - correction;
      }
      c.expect(ok, "v=" + show(v));
    }
    add(std::move(c));
  }
  {
    Check c("central_oracle");
    const auto central = oracle::enumerate_central(n);
    std::set<Word> by_psi;
    for (const Word& v : all)
      if (psi(v).size() <= n) by_psi.insert(psi(v));
    c.expect(std::set<Word>(central.members.begin(), central.members.end()) == by_psi, "length bound " + std::to_string(n));
    for (const Word& w : central.members) c.expect(is_central(w).is_central, "w=" + show(w));
    add(std::move(c));
  }
  {
    Check c("christoffel_oracle");
    const std::size_t bound = n + 2;
    std::set<Word> expected{"a"_w, "b"_w};
    for (const Word& v : all)
      if (detail::len(v) <= bound) expected.insert(ch(v));
    std::set<Word> found;
    for (const Word& w : ch_oracle_report.members)
      if (w.size() <= bound) found.insert(w);
    c.expect(found == expected, "length bound " + std::to_string(bound));
    for (const Word& w : found) c.expect(christoffel::is_christoffel(w), "w=" + show(w));
    add(std::move(c));
  }
  {
    Check c("standard_oracle");
    const std::size_t bound = n + 2;
    const auto stand = oracle::enumerate_standard(bound);
    const std::set<Word> members(stand.members.begin(), stand.members.end());
    c.expect(members == oracle::standard_recurrence_closure(bound), "recurrence closure, bound " + std::to_string(bound));
    std::set<Word> by_psi{"a"_w, "b"_w};
    for (const Word& v : all)
      if (psi(v).size() + 2 <= bound) by_psi.insert({psi(v) + "ab"_w, psi(v) + "ba"_w});
    c.expect(members == by_psi, "palindromization route, bound " + std::to_string(bound));
    for (const Word& w : members) c.expect(standard::is_standard(w), "w=" + show(w));
    add(std::move(c));
  }
  return report;
}

}  // namespace sturmian::verify
