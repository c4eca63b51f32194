#include "brute.hpp"
#include "sturmian/morphism.hpp"

#include <gtest/gtest.h>

using namespace sturmian;

TEST(Morphism, MuOf) {
  auto m = mu_of("abbab"_w);
  EXPECT_EQ(m.image_a, "ababaabababa"_w);
  EXPECT_EQ(m.image_b, "ababaab"_w);
  EXPECT_EQ(mu_of(Word()), Morphism::identity());
  EXPECT_EQ(mu_of("aaba"_w)("ab"_w), psi("aaba"_w) + "ab"_w);
}

TEST(Morphism, MuOfMatchesLetterwiseComposition) {
  for_each_word_up_to(8, [](const Word& v) {
    ASSERT_EQ(mu_of(v)("a"_w), brute::mu_compose(v, "a"_w));
    ASSERT_EQ(mu_of(v)("b"_w), brute::mu_compose(v, "b"_w));
  });
}

TEST(Morphism, LambdaOf) {
  EXPECT_EQ(lambda_of("b"_w), (Morphism{"ab"_w, "b"_w}));
  for (std::size_t k = 0; k <= 5; ++k) {
    const Word ak = Word::repeat(Letter::a, k), bk = Word::repeat(Letter::b, k);
    EXPECT_EQ(lambda_of(ak + Letter::b), (Morphism{Letter::a + ak + Letter::b, ak + Letter::b}));
    EXPECT_EQ(lambda_of(bk + Letter::a), (Morphism{Letter::a + bk, Letter::a + bk + Letter::b}));
    EXPECT_EQ(phi(k), lambda_of(ak + Letter::b));
    EXPECT_EQ(phi_hat(k), lambda_of(bk + Letter::a));
  }
}

TEST(Morphism, Apply) {
  EXPECT_EQ(lambda_of("abbab"_w)("ab"_w), Letter::a + psi("abbab"_w) + Letter::b);
  EXPECT_EQ(Morphism::identity()("abba"_w), "abba"_w);
  EXPECT_EQ(mu(Letter::a)("bbbb"_w), "abababab"_w);
  EXPECT_EQ(apply(mu(Letter::a), Word()), Word());
  for_each_word_up_to(6, [](const Word& u) {
    for_each_word_up_to(3, [&](const Word& v) {
      const Morphism m = mu_of("abb"_w);
      ASSERT_EQ(m(u + v), m(u) + m(v));
    });
  });
}

TEST(Morphism, Decode) {
  EXPECT_EQ(decode(phi(1), "aababaababaabababaababaababab"_w), "abababbababb"_w);
  EXPECT_EQ(decode(Morphism::identity(), "abba"_w), "abba"_w);
  EXPECT_EQ(decode(phi_hat(2), "abbabbabbb"_w), "aab"_w);
  EXPECT_THROW(decode(phi(1), "abba"_w), not_in_code);
}

TEST(Morphism, DecodeMatchesExhaustivePreimage) {
  for (const Morphism& m : {phi(1), phi(2), phi_hat(1), mu_k(1), mu_k(2), mu_hat_k(2)}) {
    for_each_word_up_to(9, [&](const Word& w) {
      auto expected =
          brute::preimage([&](const Word& u) { return brute::apply(m.image_a, m.image_b, u); }, w, w.size());
      if (expected) {
        ASSERT_EQ(decode(m, w), *expected) << w;
      } else {
        ASSERT_THROW(decode(m, w), not_in_code) << w;
      }
    });
  }
}

TEST(Morphism, DecodeRoundTrip) {
  for_each_word_up_to(4, [](const Word& d) {
    for (const Morphism& m : {mu_of(d), lambda_of(d)}) {
      if (!classify_code(m)) continue;
      for_each_word_up_to(10, [&](const Word& v) { ASSERT_EQ(decode(m, m(v)), v); });
    }
  });
}

TEST(Morphism, PrefixDecoding) {
  const Word w = mu_k(1)("abaab"_w);
  auto d = decode_prefix(mu_k(1), w + "ab"_w);
  EXPECT_TRUE(d.decoded.starts_with("abaa"_w));
  EXPECT_EQ(mu_k(1)(d.decoded), (w + "ab"_w).prefix(d.consumed));
}

TEST(Morphism, ChristoffelMorphismCertificates) {
  auto b = is_christoffel_morphism(Morphism{"ab"_w, "b"_w});
  EXPECT_TRUE(b.is_christoffel);
  EXPECT_EQ(b.directive, "b"_w);
  auto ab = is_christoffel_morphism(Morphism{"aab"_w, "ab"_w});
  EXPECT_TRUE(ab.is_christoffel);
  EXPECT_EQ(ab.directive, "ab"_w);
  EXPECT_FALSE(is_christoffel_morphism(Morphism{"ab"_w, "ba"_w}).is_christoffel);
  for_each_word_up_to(7, [](const Word& v) {
    auto c = is_christoffel_morphism(lambda_of(v));
    ASSERT_TRUE(c.is_christoffel);
    ASSERT_EQ(c.directive, v);
  });
}

TEST(Morphism, Identities) {
  for_each_word_up_to(12, [](const Word& v) {
    ASSERT_EQ(Letter::b + lambda(Letter::b)(v), mu(Letter::b)(v) + Letter::b);
  });
  for (std::size_t k = 0; k <= 4; ++k) {
    const Word d = Word::repeat(Letter::a, k) + Letter::b;
    for_each_word_up_to(8, [&](const Word& v) {
      ASSERT_EQ(lambda_of(d)(Letter::b + v), mu_of(d)(v + Letter::b));
      ASSERT_EQ(lambda_of(d)(Letter::a + v), Letter::a + mu_of(d)(v + Letter::b));
    });
  }
  for_each_word_up_to(10, [](const Word& v) {
    for (const Word& xy : {"ab"_w, "ba"_w}) {
      ASSERT_EQ(mu_of(v)(xy), psi(v) + xy);
    }
  });
  for_each_word_up_to(10, [](const Word& v) {
    for_each_word_up_to(10 - v.size(), [&](const Word& u) { ASSERT_EQ(psi(v + u), mu_of(v)(psi(u)) + psi(v)); });
  });
}

TEST(Morphism, CodeKinds) {
  EXPECT_EQ(classify_code(phi(2)), CodeKind::prefix_code);
  EXPECT_EQ(classify_code(mu_k(2)), CodeKind::suffix_code);
  EXPECT_FALSE(classify_code(Morphism{"a"_w, "aa"_w}).has_value());
}
