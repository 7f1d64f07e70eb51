#include <gtest/gtest.h>

#include "clat/error.hpp"
#include "clat/torus.hpp"
#include "support/generators.hpp"

namespace clat {
namespace {

using testing::Rng;

constexpr Complex kI{0.0, 1.0};

Vector lattice_vector(const LatticeBasis& l, Rng& rng, int bound) {
  Vector v(l.dim());
  for (std::size_t k = 0; k < 2 * l.dim(); ++k) {
    const double c = rng.integer(-bound, bound);
    for (std::size_t i = 0; i < l.dim(); ++i) v[i] += c * l.generators()(i, k);
  }
  return v;
}

TEST(Reduce, StandardLattice) {
  const auto p = reduce(LatticeBasis::standard(1), Vector{{2.5, 3.25}});
  EXPECT_LT(std::abs(p.rep[0] - Complex(0.5, 0.25)), 1e-15);
  EXPECT_EQ(p.coords, (std::vector<double>{0.5, 0.25}));
  const auto q = reduce(LatticeBasis::standard(2), Vector{{-3.0, 4.0}, {7.0, 0.0}});
  EXPECT_EQ(q.coords, (std::vector<double>{0.0, 0.0, 0.0, 0.0}));
}

TEST(Reduce, SkewLattice) {
  const Complex tau{0.3, 1.7};
  const LatticeBasis l = LatticeBasis::make(Matrix::from_rows({{1.0, tau}}));
  const auto p = reduce(l, Vector{3.0 + 2.0 * tau + 0.25 + 0.5 * tau});
  EXPECT_NEAR(p.coords[0], 0.25, 1e-13);
  EXPECT_NEAR(p.coords[1], 0.5, 1e-13);
  EXPECT_LT(std::abs(p.rep[0] - (0.25 + 0.5 * tau)), 1e-13);
}

TEST(Reduce, Idempotent) {
  Rng rng(80);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const LatticeBasis l = testing::random_lattice(rng, n);
    const auto p = reduce(l, rng.vector(n));
    const auto q = reduce(l, p.rep);
    EXPECT_TRUE(torus_eq(p, q));
    for (std::size_t k = 0; k < 2 * n; ++k) {
      EXPECT_GE(q.coords[k], 0.0);
      EXPECT_LT(q.coords[k], 1.0);
      EXPECT_NEAR(p.coords[k], q.coords[k], 1e-9);
    }
  }
}

TEST(TorusAdd, Cases) {
  const LatticeBasis l = LatticeBasis::standard(1);
  const auto p = reduce(l, Vector{{0.3, 0.7}});
  const auto zero = reduce(l, Vector{0.0});
  EXPECT_TRUE(torus_eq(torus_add(p, zero), p));
  const auto half = reduce(l, Vector{0.5});
  EXPECT_TRUE(torus_eq(torus_add(half, half), zero));
  EXPECT_EQ(torus_add(half, half).coords, (std::vector<double>{0.0, 0.0}));
}

TEST(TorusAdd, LatticeMismatch) {
  const auto p = reduce(LatticeBasis::standard(1), Vector{0.5});
  const auto q = reduce(LatticeBasis::make(Matrix::from_rows({{2.0, 2.0 * kI}})), Vector{0.5});
  try {
    torus_add(p, q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLatticeMismatch);
  }
  // Another basis of the same lattice is accepted.
  const auto r = reduce(LatticeBasis::make(Matrix::from_rows({{Complex(1.0, 1.0), kI}})), Vector{0.5});
  EXPECT_TRUE(torus_eq(torus_add(p, r), reduce(LatticeBasis::standard(1), Vector{1.0})));
}

TEST(TorusEq, Cases) {
  const LatticeBasis l = LatticeBasis::standard(1);
  EXPECT_TRUE(torus_eq(reduce(l, Vector{0.0}), reduce(l, Vector{1.0 - 1e-13})));
  EXPECT_FALSE(torus_eq(reduce(l, Vector{0.25}), reduce(l, Vector{0.5})));
  EXPECT_TRUE(torus_eq(reduce(l, Vector{{0.2, 0.4}}), reduce(l, Vector{{5.2, -2.6}})));
}

TEST(TorusGroup, Laws) {
  Rng rng(81);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const LatticeBasis l = testing::random_lattice(rng, n);
    const auto p = reduce(l, rng.vector(n));
    const auto q = reduce(l, rng.vector(n));
    const auto r = reduce(l, rng.vector(n));
    const auto zero = reduce(l, Vector(n));
    EXPECT_TRUE(torus_eq(torus_add(torus_add(p, q), r), torus_add(p, torus_add(q, r))));
    EXPECT_TRUE(torus_eq(torus_add(p, q), torus_add(q, p)));
    EXPECT_TRUE(torus_eq(torus_add(p, zero), p));
    Vector minus = p.rep;
    for (auto& z : minus) z = -z;
    EXPECT_TRUE(torus_eq(torus_add(p, reduce(l, minus)), zero));
    EXPECT_TRUE(torus_eq(torus_add(p, torus_neg(p)), zero));
  }
}

TEST(TorusGroup, Periodicity) {
  Rng rng(82);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const LatticeBasis l = testing::random_lattice(rng, n);
    const Vector z = rng.vector(n);
    Vector shifted = lattice_vector(l, rng, 100);
    for (std::size_t i = 0; i < n; ++i) shifted[i] += z[i];
    EXPECT_TRUE(torus_eq(reduce(l, z), reduce(l, shifted)));
  }
}

}  // namespace
}  // namespace clat
