#include "brute.hpp"
#include "sturmian/oracle.hpp"
#include "sturmian/standard.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace sturmian;
namespace st = sturmian::standard;

TEST(Standard, FromDirective) {
  EXPECT_EQ(st::from_directive("abbaab"_w, st::SuffixOrder::ba), "ababaababaabababaababaabababa"_w);
  EXPECT_EQ(st::from_directive(Word(), st::SuffixOrder::ab), "ab"_w);
  EXPECT_EQ(st::from_directive("aabba"_w, st::SuffixOrder::ba), "aabaabaaabaabaaba"_w);
}

TEST(Standard, Recurrence) {
  EXPECT_EQ(st::via_recurrence({}, 0), "b"_w);
  EXPECT_EQ(st::via_recurrence({}, 1), "a"_w);
  std::vector<std::size_t> ones(12, 1);
  const Word f = st::via_recurrence(ones, 12);
  EXPECT_TRUE(f.starts_with("abaababaabaab"_w));
  EXPECT_EQ(f, brute::fibonacci(f.size()));
  EXPECT_THROW(st::via_recurrence({1, 0, 1}, 4), domain_error);
}

TEST(Standard, Classify) {
  auto aba = st::classify("aba"_w);
  EXPECT_TRUE(aba.is_proper);
  EXPECT_EQ(aba.directive, "a"_w);
  EXPECT_EQ(aba.order, st::SuffixOrder::ba);
  auto w = st::classify("aabaabaaabaabaaba"_w);
  EXPECT_TRUE(w.is_standard);
  EXPECT_EQ(w.directive, "aabba"_w);
  EXPECT_EQ(w.order, st::SuffixOrder::ba);
  EXPECT_EQ(w.index, 2u);
  EXPECT_FALSE(st::classify("abba"_w).is_standard);
  for_each_word_up_to(10, [](const Word& v) {
    for (auto order : {st::SuffixOrder::ab, st::SuffixOrder::ba}) {
      auto c = st::classify(st::from_directive(v, order));
      ASSERT_EQ(c.directive, v);
      ASSERT_EQ(c.order, order);
    }
  });
}

TEST(Standard, ClassifyMatchesOracle) {
  const auto oracle = oracle::enumerate_standard(14);
  const std::set<Word> members(oracle.members.begin(), oracle.members.end());
  for_each_word_up_to(14, [&](const Word& w) {
    if (!w.empty()) {
      ASSERT_EQ(st::is_standard(w), members.count(w) > 0) << w;
    }
  });
}

TEST(Standard, Derivative) {
  EXPECT_EQ(st::derivative(st::from_directive("abbaab"_w, st::SuffixOrder::ba)), "bababbababba"_w);
  EXPECT_EQ(st::derivative("bababbababba"_w), st::from_directive("ab"_w, st::SuffixOrder::ba));
  EXPECT_EQ(st::derivative("bbabbabbba"_w), "aba"_w);
  EXPECT_EQ(st::derivative(st::from_directive("aabba"_w, st::SuffixOrder::ba)), "babba"_w);
  EXPECT_EQ(st::derivative("ab"_w), "b"_w);
  EXPECT_EQ(st::derivative("ba"_w), "a"_w);
  EXPECT_THROW(st::derivative("abba"_w), domain_error);
}

TEST(Standard, Chain) {
  auto c = st::derivative_chain("aabaabaaabaabaaba"_w);
  EXPECT_EQ(c.words, (std::vector<Word>{"aabaabaaabaabaaba"_w, "babba"_w, "ba"_w, "a"_w}));
  EXPECT_EQ(c.depth(), 3u);
  EXPECT_EQ(st::derivative_chain("ab"_w).words, (std::vector<Word>{"ab"_w, "b"_w}));
  EXPECT_EQ(st::depth(st::from_directive("abbaab"_w, st::SuffixOrder::ba)), 4u);
}

TEST(Standard, DepthMatchesChristoffel) {
  for_each_word_up_to(12, [](const Word& v) {
    const std::size_t d = christoffel::depth(christoffel::from_directive(v));
    ASSERT_EQ(st::depth(psi(v) + "ab"_w), d) << v;
    ASSERT_EQ(st::depth(psi(v) + "ba"_w), d) << v;
  });
}

TEST(Standard, ConjugationBridge) {
  for_each_word_up_to(12, [](const Word& v) {
    const Word d = st::derivative(psi(v) + "ba"_w);
    const Word c = christoffel::derivative(christoffel::from_directive(v));
    if (!v.empty() && v.is_constant() && v.first() == Letter::b) {
      ASSERT_EQ(d, "a"_w);
      ASSERT_EQ(c, "b"_w);
    } else {
      ASSERT_EQ(c.first(), Letter::a) << v;
      ASSERT_EQ(d, c.substr(1) + Letter::a) << v;
    }
  });
}
