#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pebble/harness.hpp"

using namespace pebble;

TEST(Graham, SquareOfKTwo) {
  auto rep = verify_graham(make_complete(2), make_complete(2));
  EXPECT_TRUE(rep.verified());
  EXPECT_EQ(rep.parameter("f(GxH)"), "4");
  EXPECT_EQ(rep.parameter("f(G)"), "2");
}

TEST(Graham, PrismsAreBoundedAndSane) {
  for (std::size_t n : {3u, 5u}) {
    Graph c = make_cycle(n), k2 = make_complete(2);
    auto rep = verify_graham(c, k2);
    EXPECT_TRUE(rep.verified()) << n;
    const auto fgh = std::stoull(rep.parameter("f(GxH)"));
    const auto fg = std::stoull(rep.parameter("f(G)")), fh = std::stoull(rep.parameter("f(H)"));
    EXPECT_LE(fgh, fg * fh);
    EXPECT_GE(fgh, std::max(fg, fh));
    EXPECT_GE(fgh, 2 * n);
  }
}

TEST(Graham, BoundModeAgreesWithExact) {
  auto exact = verify_graham(make_cycle(3), make_complete(2));
  auto bound = verify_graham(make_cycle(3), make_complete(2), GrahamMode::bound_only(1'000'000));
  EXPECT_EQ(exact.verdict, bound.verdict);
  EXPECT_GT(bound.distributions_checked, 0u);
}

TEST(Graham, BudgetExceededIsInconclusive) {
  auto rep = verify_graham(make_cycle(3), make_complete(2), GrahamMode::bound_only(5));
  EXPECT_EQ(rep.verdict, Verdict::inconclusive);
  EXPECT_FALSE(rep.counterexample.has_value());
}

TEST(CoverLemma, BaseCaseOnKTwoPath) {
  auto rep = verify_cover_lemma(CoverLemma::even_path, 1, make_complete(1));
  EXPECT_TRUE(rep.verified());
  EXPECT_EQ(rep.parameter("pebbles"), "2");
  EXPECT_EQ(rep.distributions_checked, 3u);
}

TEST(CoverLemma, EvenPathTwoCountsAllDistributions) {
  auto rep = verify_cover_lemma(CoverLemma::even_path, 2, make_complete(1));
  EXPECT_TRUE(rep.verified());
  EXPECT_EQ(rep.parameter("pebbles"), "10");
  EXPECT_EQ(rep.distributions_checked, oracle::choose(13, 3));
  EXPECT_EQ(rep.distributions_checked, 286u);
}

TEST(CoverLemma, OddPathAsPrinted) {
  auto rep = verify_cover_lemma(CoverLemma::odd_path, 1, make_complete(1));
  EXPECT_TRUE(rep.verified());
  EXPECT_EQ(rep.parameter("pebbles"), "4");
  auto rep2 = verify_cover_lemma(CoverLemma::odd_path, 2, make_complete(1));
  EXPECT_TRUE(rep2.verified());
  EXPECT_EQ(rep2.distributions_checked, oracle::choose(20 + 4, 4));
}

TEST(CoverLemma, FullPathAndEndFibre) {
  for (std::uint64_t k = 1; k <= 4; ++k) EXPECT_TRUE(verify_cover_lemma(CoverLemma::full_path, k, make_complete(1)).verified()) << k;
  auto fibre = verify_cover_lemma(CoverLemma::end_fibre, 3, make_complete(1));
  EXPECT_TRUE(fibre.verified());
  EXPECT_EQ(fibre.parameter("pebbles"), "6");
  EXPECT_EQ(fibre.distributions_checked, 1u);
}

TEST(CoverLemma, OverKTwo) {
  Graph k2 = make_complete(2);
  EXPECT_TRUE(verify_cover_lemma(CoverLemma::even_path, 1, k2).verified());
  EXPECT_TRUE(verify_cover_lemma(CoverLemma::full_path, 2, k2).verified());
  auto fibre = verify_cover_lemma(CoverLemma::end_fibre, 3, k2);
  EXPECT_TRUE(fibre.verified());
  EXPECT_EQ(fibre.distributions_checked, oracle::choose(12 + 1, 1));
}

TEST(CoverLemma, HypothesisCheckReturnsF) {
  EXPECT_EQ(detail::require_odd_two_pebbling(make_cycle(4), {}), 4u);
  EXPECT_EQ(detail::require_odd_two_pebbling(make_complete(1), {}), 1u);
}

TEST(Caterpillar, BaseCase) {
  auto rep = verify_caterpillar_cover(2, make_complete(1));
  EXPECT_TRUE(rep.verified());
  EXPECT_EQ(rep.parameter("pebbles"), "3");
}

TEST(Caterpillar, KThreeCountsAllDistributions) {
  auto rep = verify_caterpillar_cover(3, make_complete(1));
  EXPECT_TRUE(rep.verified());
  EXPECT_EQ(rep.distributions_checked, oracle::choose(12, 4));
  EXPECT_EQ(rep.distributions_checked, 495u);
}

TEST(Caterpillar, PebbleCountIsFixed) {
  EXPECT_THROW(verify_caterpillar_cover(3, make_complete(1), 7), HypothesisError);
  EXPECT_NO_THROW(verify_caterpillar_cover(3, make_complete(1), 8));
}

TEST(Caterpillar, OverKTwo) { EXPECT_TRUE(verify_caterpillar_cover(2, make_complete(2)).verified()); }
