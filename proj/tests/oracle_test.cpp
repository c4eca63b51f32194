#include "brute.hpp"
#include "sturmian/christoffel.hpp"
#include "sturmian/oracle.hpp"
#include "sturmian/verify.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <set>

using namespace sturmian;

TEST(Oracle, Central) {
  auto r = oracle::enumerate_central(2);
  EXPECT_EQ(r.members, (std::vector<Word>{Word(), "a"_w, "aa"_w, "b"_w, "bb"_w}));
  EXPECT_EQ(r.count, 5u);
  auto nine = oracle::enumerate_central(9).members;
  EXPECT_TRUE(std::binary_search(nine.begin(), nine.end(), "aabaaabaa"_w));
  EXPECT_THROW(oracle::enumerate_central(21), domain_error);
}

TEST(Oracle, CentralMatchesPalindromization) {
  for (std::size_t n = 0; n <= 14; ++n) {
    std::set<Word> images;
    for_each_word_up_to(n, [&](const Word& v) {
      if (psi(v).size() <= n) images.insert(psi(v));
    });
    auto r = oracle::enumerate_central(n);
    ASSERT_EQ(std::set<Word>(r.members.begin(), r.members.end()), images) << n;
  }
}

TEST(Oracle, Christoffel) {
  EXPECT_EQ(oracle::enumerate_christoffel(3).members, (std::vector<Word>{"a"_w, "aab"_w, "ab"_w, "abb"_w, "b"_w}));
  auto eleven = oracle::enumerate_christoffel(11).members;
  EXPECT_TRUE(std::binary_search(eleven.begin(), eleven.end(), "aaabaaabaab"_w));
  EXPECT_THROW(oracle::enumerate_christoffel(201), domain_error);
  auto r = oracle::enumerate_christoffel(16);
  std::set<Word> framed{"a"_w, "b"_w};
  for (const Word& c : oracle::enumerate_central(14).members) framed.insert(Letter::a + c + Letter::b);
  EXPECT_EQ(std::set<Word>(r.members.begin(), r.members.end()), framed);
  for (const Word& w : r.members) {
    EXPECT_TRUE(brute::is_christoffel(w)) << w;
  }
  for (const Word& w : r.members) {
    EXPECT_TRUE(christoffel::is_christoffel(w)) << w;
  }
}

TEST(Oracle, Standard) {
  auto r = oracle::enumerate_standard(16);
  EXPECT_EQ(std::set<Word>(r.members.begin(), r.members.end()), oracle::standard_recurrence_closure(16));
  std::vector<std::size_t> ones(10, 1);
  auto closure = oracle::standard_recurrence_closure(21);
  const Word f = brute::fibonacci(21);
  for (std::size_t n : {1, 2, 3, 5, 8, 13, 21}) {
    EXPECT_TRUE(closure.count(f.prefix(n))) << n;
  }
  auto three = oracle::enumerate_standard(3).members;
  EXPECT_EQ(three, (std::vector<Word>{"a"_w, "aab"_w, "ab"_w, "aba"_w, "b"_w, "ba"_w, "bab"_w, "bba"_w}));
  EXPECT_THROW(oracle::enumerate_standard(23), domain_error);
}

TEST(Oracle, LongStandardWordViaRecurrence) {
  const Word w = psi("abbaab"_w) + "ba"_w;
  EXPECT_EQ(w.size(), 29u);
  EXPECT_TRUE(oracle::standard_recurrence_closure(29).count(w));
}

TEST(Verify, SmokeBound) {
  auto start = std::chrono::steady_clock::now();
  auto report = verify::verify_all(2);
  EXPECT_TRUE(report.all_passed());
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
  EXPECT_THROW(verify::verify_all(13), domain_error);
}

TEST(Verify, GateBound) {
  auto start = std::chrono::steady_clock::now();
  auto report = verify::verify_all(8);
  for (const auto& r : report.results) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(60));
}

TEST(Verify, CorruptedDerivativeIsCaught) {
  verify::Options options;
  options.christoffel_derivative = [](const Word& w) {
    Word d = christoffel::derivative(w);
    return d.size() > 3 ? reversal(d) : d;
  };
  auto report = verify::verify_all(6, options);
  auto route = std::find_if(report.results.begin(), report.results.end(),
                            [](const auto& r) { return r.name == "derivative_directive_route"; });
  ASSERT_NE(route, report.results.end());
  EXPECT_FALSE(route->passed);
  EXPECT_FALSE(route->counterexample.empty());
}
