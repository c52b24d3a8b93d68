#include <gtest/gtest.h>

#include <random>

#include "fpi/linalg.hpp"

using namespace fpi;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, PrimeField F, std::size_t r, std::size_t c) {
  FpMatrix m(F, r, c);
  std::uniform_int_distribution<std::uint32_t> d(0, F.p() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(FpMatrix, RankNullity) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    PrimeField F(p);
    for (int t = 0; t < 50; ++t) {
      auto a = random_matrix(rng, F, 1 + t % 6, 1 + (t * 7) % 5);
      auto n = a.nullspace();
      EXPECT_EQ(a.rank() + n.cols(), a.cols());
      EXPECT_TRUE((a * n).is_zero());
      EXPECT_EQ(a.rank(), a.transposed().rank());
    }
  }
}

TEST(FpMatrix, InverseAndDeterminant) {
  std::mt19937_64 rng(5);
  PrimeField F(5);
  for (int t = 0; t < 60; ++t) {
    auto a = random_matrix(rng, F, 4, 4);
    auto inv = a.inverse();
    EXPECT_EQ(inv.has_value(), a.determinant() != 0);
    if (inv) {
      EXPECT_EQ(a * *inv, FpMatrix::identity(F, 4));
    }
    auto b = random_matrix(rng, F, 4, 4);
    EXPECT_EQ((a * b).determinant(), F.mul(a.determinant(), b.determinant()));
  }
}

TEST(FpMatrix, Solve) {
  std::mt19937_64 rng(9);
  PrimeField F(3);
  for (int t = 0; t < 50; ++t) {
    auto a = random_matrix(rng, F, 3, 4);
    auto x0 = random_matrix(rng, F, 4, 1);
    std::vector<std::uint32_t> xv{x0(0, 0), x0(1, 0), x0(2, 0), x0(3, 0)};
    auto b = a.apply(xv);
    auto x = a.solve(b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a.apply(*x), b);
  }
  FpMatrix z(F, 2, 1);
  EXPECT_FALSE(z.solve({1, 0}).has_value());
}
