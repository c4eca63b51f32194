#include "brute.hpp"
#include "sturmian/palindrome.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace sturmian;

TEST(Closure, Examples) {
  EXPECT_EQ(palindromic_closure("aab"_w), "aabaa"_w);
  EXPECT_EQ(palindromic_closure("aba"_w), "aba"_w);
  EXPECT_EQ(palindromic_closure("bababb"_w), "bababbabab"_w);
  EXPECT_EQ(palindromic_closure(Word()), Word());
}

TEST(Closure, MatchesShortestPalindromeSearch) {
  for_each_word_up_to(12, [](const Word& w) {
    ASSERT_EQ(palindromic_closure(w), brute::closure(w)) << w;
    ASSERT_EQ(longest_palindromic_suffix(w), longest_palindromic_suffix_naive(w)) << w;
  });
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi("aaba"_w), "aabaaabaa"_w);
  EXPECT_EQ(psi(Word()), Word());
  EXPECT_EQ(psi("baab"_w), "bababbabab"_w);
  EXPECT_EQ(psi("aab"_w), "aabaa"_w);
}

TEST(Psi, MatchesBruteClosure) {
  for_each_word_up_to(10, [](const Word& v) { ASSERT_EQ(psi(v), brute::psi(v)) << v; });
}

TEST(Psi, Inverse) {
  EXPECT_EQ(psi_inverse("aabaaabaa"_w), "aaba"_w);
  EXPECT_EQ(psi_inverse(Word()), Word());
  EXPECT_THROW(psi_inverse("aabab"_w), not_central);
  for_each_word_up_to(10, [](const Word& v) { ASSERT_EQ(psi_inverse(psi(v)), v); });
}

TEST(Psi, Properties) {
  std::set<Word> images;
  for_each_word_up_to(10, [&](const Word& v) {
    const Word p = psi(v);
    ASSERT_TRUE(is_palindrome(p));
    ASSERT_TRUE(images.insert(p).second) << "not injective at " << v;
    ASSERT_EQ(psi(reversal(v)).size(), p.size()) << v;
    ASSERT_EQ(psi(complement(v)), complement(p)) << v;
    for (std::size_t i = 0; i <= v.size(); ++i) {
      ASSERT_TRUE(p.starts_with(psi(v.prefix(i))));
      ASSERT_TRUE(p.ends_with(psi(v.prefix(i))));
    }
  });
}

TEST(Central, Examples) {
  auto c = is_central("aabaaabaa"_w);
  EXPECT_TRUE(c.is_central);
  EXPECT_EQ(c.directive, "aaba"_w);
  EXPECT_EQ(c.periods, std::make_pair(std::size_t{4}, std::size_t{7}));
  for (std::size_t n = 0; n <= 6; ++n) {
    auto k = is_central(Word::repeat(Letter::a, n));
    EXPECT_TRUE(k.is_central);
    EXPECT_EQ(k.periods, std::make_pair(std::size_t{1}, n + 1));
  }
  EXPECT_FALSE(is_central("abab"_w).is_central);
}

TEST(Central, MatchesBruteMembership) {
  for_each_word_up_to(14, [](const Word& w) {
    auto c = is_central(w);
    ASSERT_EQ(c.is_central, brute::is_central(w)) << w;
    if (c.is_central) {
      ASSERT_EQ(psi(c.directive), w);
      ASSERT_EQ(c.periods.first, brute::period(w));
    }
  });
}

TEST(Central, Decomposition) {
  for_each_word_up_to(9, [](const Word& v) {
    if (v.is_constant()) return;
    auto split = central_decomposition(psi(v));
    ASSERT_TRUE(split.has_value()) << v;
    auto [w1, w2] = *split;
    ASSERT_EQ(psi(v), w1 + "ab"_w + w2);
    ASSERT_EQ(psi(v), w2 + "ba"_w + w1);
    ASSERT_EQ(psi(v + Letter::a), w2 + "ba"_w + w1 + "ab"_w + w2);
    ASSERT_EQ(psi(v + Letter::b), w1 + "ab"_w + w2 + "ba"_w + w1);
  });
  EXPECT_FALSE(central_decomposition("aaa"_w).has_value());
}

TEST(Periods, Lengths) {
  EXPECT_EQ(period_lengths("aaba"_w), std::make_pair(big_int(4), big_int(7)));
  EXPECT_EQ(period_lengths(Word()), std::make_pair(big_int(1), big_int(1)));
  EXPECT_EQ(period_lengths("abaa"_w), std::make_pair(big_int(3), big_int(8)));
  for_each_word_up_to(10, [](const Word& v) {
    auto [pa, pb] = period_lengths(v);
    ASSERT_EQ(pa, brute::period(psi(v + Letter::a)));
    ASSERT_EQ(pb, brute::period(psi(v) + Letter::b));
    ASSERT_EQ(big_int(psi(v).size()), pa + pb - 2);
    if (!v.is_constant()) {
      Word plus = plus_operator(v, Side::prefix);
      ASSERT_EQ(brute::period(psi(v)), psi(plus).size() + 2) << v;
    }
  });
}

TEST(Periods, Spectrum) {
  auto s = prefix_period_spectrum("ab"_w);
  EXPECT_EQ(s.periods, (std::set<std::size_t>{1, 2}));
  EXPECT_EQ(s.mean, Fraction(3, 2));
  EXPECT_EQ(Fraction(psi("ab"_w).size(), 2), s.mean);
  EXPECT_EQ(prefix_period_spectrum("aaaa"_w).periods, (std::set<std::size_t>{1}));
  EXPECT_EQ(prefix_period_spectrum("aaba"_w).periods.size(), 3u);
  EXPECT_THROW(prefix_period_spectrum(Word()), domain_error);
}
