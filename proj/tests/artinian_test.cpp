#include <gtest/gtest.h>

#include "fpi/artinian.hpp"
#include "test_support.hpp"

using namespace fpi;

namespace {

RingSpec ring(std::uint32_t p, const std::vector<std::string>& gens, std::vector<std::string> vars = {"x", "y"}) {
  return RingSpec::parse(p, std::move(vars), gens);
}

// Hom by solving X·A_i = B_i·X directly, dim M * dim N unknowns.
std::size_t intertwiner_dimension(const FiniteLengthModule& M, const FiniteLengthModule& N) {
  const auto& F = M.field;
  const std::size_t u = M.dim * N.dim;
  std::vector<FpMatrix> blocks;
  for (std::size_t i = 0; i < M.nvars; ++i) {
    FpMatrix eq(F, N.dim * M.dim, u);
    // unknown X(r, c) at index r * M.dim + c; equation (r, c) of X A - B X.
    for (std::size_t r = 0; r < N.dim; ++r)
      for (std::size_t c = 0; c < M.dim; ++c) {
        std::size_t row = r * M.dim + c;
        for (std::size_t k = 0; k < M.dim; ++k)
          eq(row, r * M.dim + k) = F.add(eq(row, r * M.dim + k), M.action[i](k, c));
        for (std::size_t k = 0; k < N.dim; ++k)
          eq(row, k * M.dim + c) = F.sub(eq(row, k * M.dim + c), N.action[i](r, k));
      }
    blocks.push_back(std::move(eq));
  }
  return FpMatrix::vstack(blocks, F, u).nullspace().cols();
}

FpMatrix random_invertible(std::mt19937_64& rng, PrimeField F, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> c(0, F.p() - 1);
  for (;;) {
    FpMatrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = c(rng);
    if (m.determinant()) return m;
  }
}

FiniteLengthModule conjugated(const FiniteLengthModule& M, const FpMatrix& P) {
  FiniteLengthModule out = M;
  auto inv = *P.inverse();
  for (auto& a : out.action) a = P * a * inv;
  out.degrees.clear();
  return out;
}

}  // namespace

TEST(Realize, RingBasisAndActions) {
  auto R = ring(5, {"x^2", "y^3"});
  auto M = realize_ring(R);
  EXPECT_EQ(M.dim, 6u);
  EXPECT_EQ(socle_dimension(M), 1u);
  EXPECT_EQ(minimal_generator_count(M), 1u);
  EXPECT_EQ(M.degrees, (std::vector<int>{0, 1, 1, 2, 2, 3}));
  EXPECT_TRUE((M.action[0] * M.action[0]).is_zero());
  EXPECT_TRUE((M.action[1] * M.action[1] * M.action[1]).is_zero());
  EXPECT_FALSE((M.action[0] * M.action[1] * M.action[1]).is_zero());
}

TEST(Realize, DimensionMatchesHilbertFunction) {
  std::mt19937_64 rng(5);
  PrimeField F(3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens{Polynomial::monomial(F, Monomial{3, 0, 0}), Polynomial::monomial(F, Monomial{0, 3, 0}),
                                 Polynomial::monomial(F, Monomial{0, 0, 2})};
    for (int k = 0; k < 2; ++k) gens.push_back(gen::random_homogeneous(rng, F, 3, 2, 3));
    RingSpec R(F, {"x", "y", "z"}, gens);
    auto M = realize_ring(R);
    std::size_t total = 0;
    for (unsigned d = 0; d <= 7; ++d) total += gen::hilbert_function(gens, F, 3, d);
    EXPECT_EQ(M.dim, total);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(M.action[i] * M.action[j], M.action[j] * M.action[i]);
  }
}

TEST(Realize, InfiniteLengthIsRejected) {
  auto R = ring(3, {"x*y"});
  try {
    realize_ring(R);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfiniteLength);
  }
}

TEST(Realize, ModuleWithSeveralGenerators) {
  auto R = ring(3, {"x^2", "y^2"});
  // R^2 / (x e1 - y e2, y e1)
  auto m = ModulePresentation::from_matrix(R, {{R.poly("x"), R.poly("y")}, {R.poly("-y"), R.zero()}}, {0, 0});
  auto M = realize_finite(m);
  // relation span: x e1 - y e2, y e1, xy e1, xy e2; so 8 - 4
  EXPECT_EQ(M.dim, 4u);
}

TEST(Dual, InvolutionAndSocle) {
  for (auto& gens : gen::staircase_ideals(6)) {
    auto M = realize_ring(ring(3, gens));
    auto D = matlis_dual(M);
    EXPECT_EQ(socle_dimension(D), minimal_generator_count(M));
    EXPECT_EQ(minimal_generator_count(D), socle_dimension(M));
    auto DD = matlis_dual(D);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(DD.action[i], M.action[i]);
  }
}

TEST(HomSpace, AgreesWithIntertwinerSystem) {
  auto cases = gen::staircase_ideals(4);
  auto more = gen::staircase_ideals(5);
  cases.insert(cases.end(), more.begin(), more.end());
  for (std::size_t a = 0; a < cases.size(); ++a)
    for (std::size_t b = 0; b < cases.size(); b += 2) {
      auto M = realize_ring(ring(2, cases[a]));
      auto N = matlis_dual(realize_ring(ring(2, cases[b])));
      auto H = hom_space(M, N);
      EXPECT_EQ(H.size(), intertwiner_dimension(M, N));
      for (auto& X : H) EXPECT_TRUE(intertwines(X, M, N));
    }
}

TEST(HomSpace, UngradedConjugateModules) {
  std::mt19937_64 rng(4);
  auto M = matlis_dual(realize_ring(ring(3, {"x^2", "x*y", "y^3"})));
  auto N = conjugated(M, random_invertible(rng, M.field, M.dim));
  EXPECT_EQ(hom_space(M, N).size(), intertwiner_dimension(M, N));
}

TEST(Isomorphism, ConjugateIsIsomorphic) {
  std::mt19937_64 rng(33);
  for (auto& gens : gen::staircase_ideals(5)) {
    auto M = realize_ring(ring(3, gens));
    auto N = conjugated(M, random_invertible(rng, M.field, M.dim));
    auto w = modules_isomorphic(M, N, {});
    ASSERT_EQ(w.verdict, IsoVerdict::isomorphic);
    ASSERT_TRUE(w.map);
    EXPECT_TRUE(intertwines(*w.map, M, N));
    EXPECT_NE(w.map->determinant(), 0u);
  }
}

TEST(Isomorphism, DistinguishesRingFromDual) {
  // Not Gorenstein: R has a 1-dim top, E = dual has a 2-dim top.
  auto M = realize_ring(ring(2, {"x^2", "x*y", "y^2"}));
  auto w = modules_isomorphic(M, matlis_dual(M));
  EXPECT_EQ(w.verdict, IsoVerdict::not_isomorphic);
  // Gorenstein: R ≅ E up to shift.
  auto G = realize_ring(ring(2, {"x^2", "y^2"}));
  EXPECT_EQ(modules_isomorphic(G, matlis_dual(G)).verdict, IsoVerdict::isomorphic);
}

TEST(Isomorphism, SameInvariantsDifferentModules) {
  // both of k-dimension 4, different socles
  auto A = realize_ring(ring(5, {"x^2", "y^2"}));
  auto B = realize_ring(ring(5, {"x^2", "x*y", "y^3"}));
  EXPECT_EQ(modules_isomorphic(A, B).verdict, IsoVerdict::not_isomorphic);
  // both Gorenstein with Hilbert function (1, 2, 1); different annihilators
  auto C = realize_ring(ring(5, {"x^2 + y^2", "x*y"}));
  auto w = modules_isomorphic(A, C);
  EXPECT_EQ(w.verdict, IsoVerdict::not_isomorphic);
  EXPECT_GT(w.trials, 0u);
}

TEST(Isomorphism, RandomTrialsWhenHomIsLarge) {
  auto M = direct_power(matlis_dual(realize_ring(ring(7, {"x^2", "y^2"}))), 2);
  IsoOptions opt;
  opt.exhaustive_limit = 1;
  opt.trials = 64;
  opt.seed = 17;
  auto w = modules_isomorphic(M, M, opt);
  EXPECT_EQ(w.verdict, IsoVerdict::isomorphic);
  EXPECT_LE(w.trials, 64u);
}

TEST(Present, RoundTrip) {
  for (auto& gens : gen::staircase_ideals(5)) {
    auto R = ring(3, gens);
    auto E = matlis_dual(realize_ring(R));
    auto P = present(E, R);
    EXPECT_EQ(P.rows(), minimal_generator_count(E));
    auto back = realize_finite(P);
    EXPECT_EQ(modules_isomorphic(back, E).verdict, IsoVerdict::isomorphic);
  }
}

TEST(Quotient, ByElement) {
  auto R = ring(3, {"x^2", "y^3"});
  auto M = realize_ring(R);
  auto Q = quotient_by_element(M, R.var(0));
  EXPECT_EQ(Q.dim, 3u);
  EXPECT_EQ(modules_isomorphic(Q, realize_ring(ring(3, {"x", "y^3"}))).verdict, IsoVerdict::isomorphic);
  auto Z = quotient_by_element(M, R.one());
  EXPECT_EQ(Z.dim, 0u);
}

TEST(ArtinianFpi, GorensteinIsWeaklyFpi) {
  for (std::uint32_t p : {2u, 3u}) {
    auto r = weakly_fpi_artinian(ring(p, {"x^2", "y^2"}));
    EXPECT_EQ(r.weakly_fpi, Verdict::yes) << p;
    EXPECT_EQ(r.power, 1u);
    EXPECT_EQ(r.dim_FE, r.dim_E);
  }
}

TEST(ArtinianFpi, NonGorensteinIsNot) {
  auto r = weakly_fpi_artinian(ring(2, {"x^2", "x*y", "y^2"}));
  EXPECT_EQ(r.weakly_fpi, Verdict::no);
  EXPECT_EQ(r.socle_dimension, 2u);
}

TEST(ArtinianFpi, AgreesWithSocleOnSmallStaircases) {
  for (std::uint32_t p : {2u, 3u})
    for (unsigned n = 1; n <= 4; ++n)
      for (auto& gens : gen::staircase_ideals(n)) {
        auto r = weakly_fpi_artinian(ring(p, gens));
        EXPECT_EQ(r.weakly_fpi == Verdict::yes, r.socle_dimension == 1) << p << " colength " << n;
        EXPECT_NE(r.weakly_fpi, Verdict::inconclusive);
      }
}

TEST(ArtinianFpi, RejectsPositiveDimension) {
  EXPECT_THROW(weakly_fpi_artinian(ring(2, {"x*y"})), Error);
}
