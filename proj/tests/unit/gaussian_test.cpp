#include <gtest/gtest.h>

#include <limits>

#include "clat/error.hpp"
#include "clat/gaussian.hpp"
#include "support/generators.hpp"

namespace clat {
namespace {

using testing::Rng;

TEST(GaussianInt, Arithmetic) {
  const GaussianInt a{3, 4}, b{1, -2};
  EXPECT_EQ(a + b, (GaussianInt{4, 2}));
  EXPECT_EQ(a * b, (GaussianInt{11, -2}));
  EXPECT_EQ(conj(a), (GaussianInt{3, -4}));
  EXPECT_EQ(norm(a), 25);
  EXPECT_EQ(exact_divide(a * b, b), a);
  EXPECT_THROW(exact_divide(a, GaussianInt{2, 0}), Error);
  EXPECT_TRUE((GaussianInt{0, -1}).is_unit());
  EXPECT_FALSE((GaussianInt{1, 1}).is_unit());
}

TEST(GaussianInt, OverflowRaises) {
  const GaussianInt big{std::numeric_limits<std::int64_t>::max() / 2 + 1, 0};
  EXPECT_THROW(big + big, Error);
  EXPECT_THROW(big * big, Error);
}

TEST(ExactDet, MatchesFloatingDeterminant) {
  Rng rng(50);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    GaussianMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = {rng.integer(-3, 3), rng.integer(-3, 3)};
    const Complex d = testing::oracle_det(g.to_complex());
    const GaussianInt e = exact_det(g);
    EXPECT_EQ(e.to_complex(), d);
  }
}

TEST(Adjugate, InvertsUpToDeterminant) {
  Rng rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    GaussianMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = {rng.integer(-3, 3), rng.integer(-3, 3)};
    const GaussianInt d = exact_det(g);
    GaussianMatrix expected(n, n);
    for (std::size_t i = 0; i < n; ++i) expected(i, i) = d;
    EXPECT_EQ(g * adjugate(g), expected);
  }
}

TEST(RoundGaussian, Classification) {
  EXPECT_EQ(round_gaussian({2.4, -0.6}), (GaussianInt{2, -1}));
  EXPECT_EQ(classify_rounding({3.0 + 1e-13, 0.0}, 1e-12), Rounding::kExact);
  EXPECT_EQ(classify_rounding({3.0 + 5e-12, 0.0}, 1e-12), Rounding::kAmbiguous);
  EXPECT_EQ(classify_rounding({3.5, 0.0}, 1e-12), Rounding::kNonIntegral);
}

TEST(UnimodularGenerator, HasDeterminantOneAndBoundedHeight) {
  Rng rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const GaussianMatrix b = rng.unimodular(n, 2);
    EXPECT_EQ(exact_det(b), (GaussianInt{1, 0}));
    EXPECT_LE(b.height(), 2);
  }
}

}  // namespace
}  // namespace clat
