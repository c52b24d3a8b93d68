#include <gtest/gtest.h>

#include "fpi/artinian.hpp"
#include "fpi/resolutions.hpp"
#include "test_support.hpp"

using namespace fpi;

namespace {

// Every column of b maps to zero under a (entries reduced mod I).
bool composes_to_zero(const ModulePresentation& a, const ModulePresentation& b) {
  auto c = compose(a, b);
  for (auto& col : c.columns)
    if (!col.empty()) return false;
  return true;
}

std::size_t kdim(const ModulePresentation& m) { return realize_finite(m).dim; }

}  // namespace

TEST(Presentation, FromMatrixChecksHomogeneity) {
  auto S = RingSpec::parse(3, {"x", "y"}, {});
  EXPECT_THROW(ModulePresentation::from_matrix(S, {{S.poly("x"), S.poly("y^2")}}, {0}, std::vector<int>{1, 1}),
               Error);
  auto m = ModulePresentation::from_matrix(S, {{S.poly("x"), S.poly("y^2")}}, {0});
  EXPECT_EQ(m.col_twists, (std::vector<int>{1, 2}));
}

TEST(Syzygy, KoszulOnTwoVariables) {
  auto S = RingSpec::parse(5, {"x", "y"}, {});
  auto m = ModulePresentation::from_matrix(S, {{S.var(0), S.var(1)}}, {0});
  auto syz = syzygy_matrix(m);
  ASSERT_EQ(syz.cols(), 1u);
  EXPECT_EQ(syz.col_twists[0], 2);
  EXPECT_TRUE(composes_to_zero(m, syz));
  auto top = syz.entry(0, 0), bottom = syz.entry(1, 0);
  EXPECT_TRUE(top == S.var(1) || top == -S.var(1));
  EXPECT_EQ(bottom, top == S.var(1) ? -S.var(0) : S.var(0));
}

TEST(Syzygy, IdentityHasNoSyzygies) {
  auto S = RingSpec::parse(2, {"x", "y"}, {});
  auto m = ModulePresentation::from_matrix(S, {{S.one(), S.zero()}, {S.zero(), S.one()}}, {0, 0});
  EXPECT_EQ(syzygy_matrix(m).cols(), 0u);
  EXPECT_EQ(minimal_presentation(m).rows(), 0u);
}

TEST(Syzygy, ThreeCoordinateAxes) {
  auto S = RingSpec::parse(7, {"x", "y", "z"}, {});
  auto m = ModulePresentation::cyclic(S, {S.poly("x*y"), S.poly("x*z"), S.poly("y*z")});
  auto syz = syzygy_matrix(m);
  EXPECT_EQ(syz.cols(), 2u);
  EXPECT_EQ(syz.col_twists, (std::vector<int>{3, 3}));
  EXPECT_TRUE(composes_to_zero(m, syz));
}

TEST(Resolution, BettiNumbers) {
  auto S = RingSpec::parse(7, {"x", "y", "z"}, {});
  auto axes = minimal_free_resolution(ModulePresentation::cyclic(S, {S.poly("x*y"), S.poly("x*z"), S.poly("y*z")}));
  EXPECT_EQ(axes.betti(), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_FALSE(axes.truncated);
  auto hyper = minimal_free_resolution(ModulePresentation::cyclic(S, {S.poly("x^3 + y*z^2")}));
  EXPECT_EQ(hyper.betti(), (std::vector<std::size_t>{1, 1}));
  auto free = minimal_free_resolution(ModulePresentation::free(S, {0, 1}));
  EXPECT_EQ(free.length(), 0u);
  auto koszul = minimal_free_resolution(ModulePresentation::cyclic(S, {S.var(0), S.var(1), S.var(2)}));
  EXPECT_EQ(koszul.betti(), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(koszul.twists(3), (std::vector<int>{3}));
}

TEST(Resolution, DifferentialsCompose) {
  std::mt19937_64 rng(11);
  auto S = RingSpec::parse(3, {"x", "y", "z"}, {});
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(gen::random_homogeneous(rng, S.field(), 3, 2, 3));
    auto res = minimal_free_resolution(ModulePresentation::cyclic(S, gens));
    for (std::size_t k = 1; k < res.length(); ++k) EXPECT_TRUE(composes_to_zero(res.maps[k - 1], res.maps[k]));
    // alternating sum of ranks is 0 for a cyclic module of positive codimension
    long chi = 0;
    auto b = res.betti();
    for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
    if (res.length() > 0) {
      EXPECT_EQ(chi, 0);
    }
  }
}

TEST(Resolution, ResidueFieldOverDualNumbersIsTruncated) {
  auto R = RingSpec::parse(2, {"x"}, {"x^2"});
  auto res = minimal_free_resolution(ModulePresentation::cyclic(R, {R.var(0)}), 4);
  EXPECT_TRUE(res.truncated);
  EXPECT_EQ(res.betti(), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  for (std::size_t k = 1; k < res.length(); ++k) EXPECT_TRUE(composes_to_zero(res.maps[k - 1], res.maps[k]));
}

TEST(Frobenius, FunctorRaisesEntries) {
  auto S = RingSpec::parse(3, {"x", "y"}, {});
  auto m = ModulePresentation::from_matrix(S, {{S.poly("x"), S.poly("2*y^2")}}, {1});
  auto f = frobenius_functor(m, 1);
  EXPECT_EQ(f.entry(0, 0), S.poly("x^3"));
  EXPECT_EQ(f.entry(0, 1), S.poly("2*y^6"));
  EXPECT_EQ(f.row_twists, (std::vector<int>{3}));
  EXPECT_EQ(f.col_twists, (std::vector<int>{6, 9}));
}

TEST(Frobenius, TorOverDualNumbers) {
  auto R = RingSpec::parse(2, {"x"}, {"x^2"});
  auto k = ModulePresentation::cyclic(R, {R.var(0)});
  EXPECT_EQ(kdim(tor_frobenius(k, 0, 1)), 2u);  // R/m^[2] = R
  EXPECT_EQ(kdim(tor_frobenius(k, 1, 1)), 2u);
  EXPECT_EQ(kdim(tor_frobenius(k, 2, 1)), 2u);
}

TEST(Frobenius, TorVanishesOverPolynomialRing) {
  auto S = RingSpec::parse(3, {"x", "y"}, {});
  auto k = ModulePresentation::cyclic(S, {S.var(0), S.var(1)});
  EXPECT_EQ(tor_frobenius(k, 1, 1).rows(), 0u);
  EXPECT_EQ(tor_frobenius(k, 2, 1).rows(), 0u);
  EXPECT_EQ(tor_frobenius(k, 3, 1).rows(), 0u);
  EXPECT_EQ(kdim(tor_frobenius(k, 0, 1)), 9u);
}

TEST(Canonical, GorensteinCurveIsFree) {
  auto R = RingSpec::parse(3, {"x", "y"}, {"x*y"});
  auto w = canonical_module(R);
  auto f = is_free_rank_one(w);
  EXPECT_TRUE(f.free);
}

TEST(Canonical, CoordinateAxesNeedTwoGenerators) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = RingSpec::parse(p, {"x", "y", "z"}, {"x*y", "x*z", "y*z"});
    auto w = canonical_module(R);
    EXPECT_EQ(w.rows(), 2u) << p;
    EXPECT_FALSE(is_free_rank_one(w).free);
  }
}

TEST(Canonical, RejectsOtherDimensions) {
  auto R = RingSpec::parse(3, {"x", "y"}, {"x^2", "y^2"});
  EXPECT_THROW(canonical_module(R), Error);
}

TEST(Hom, FromFreeModuleIsTarget) {
  auto R = RingSpec::parse(3, {"x", "y"}, {"x*y"});
  auto N = ModulePresentation::cyclic(R, {R.var(0)});
  auto H = hom_presentation(ModulePresentation::free(R, {0}), N);
  auto mini = minimal_presentation(H.module);
  auto n = minimal_presentation(N);
  EXPECT_EQ(mini.rows(), n.rows());
  EXPECT_EQ(mini.cols(), n.cols());
}

TEST(Hom, ResidueFieldToItself) {
  auto R = RingSpec::parse(5, {"x", "y"}, {"x^2", "y^3"});
  auto k = ModulePresentation::cyclic(R, {R.var(0), R.var(1)});
  auto H = hom_presentation(k, k);
  EXPECT_EQ(kdim(H.module), 1u);
  auto Rm = ModulePresentation::free(R, {0});
  // Hom(k, R) is the socle of R: x*y^2.
  auto soc = hom_presentation(k, Rm);
  EXPECT_EQ(kdim(soc.module), 1u);
  EXPECT_EQ(soc.module.row_twists, (std::vector<int>{3}));
}

TEST(Hom, MatchesFiniteLengthHomDimension) {
  auto R = RingSpec::parse(3, {"x", "y"}, {"x^2", "x*y", "y^3"});
  auto k = ModulePresentation::cyclic(R, {R.var(0), R.var(1)});
  auto Rm = ModulePresentation::free(R, {0});
  auto H = hom_presentation(k, Rm);
  auto fin = hom_space(realize_finite(k), realize_finite(Rm));
  EXPECT_EQ(kdim(H.module), fin.size());
}

TEST(Pushforward, PolynomialRingIsFree) {
  auto S = RingSpec::parse(3, {"x", "y"}, {});
  auto fp = frobenius_pushforward(S);
  EXPECT_EQ(fp.module.rows(), 9u);
  EXPECT_EQ(fp.module.cols(), 0u);
  EXPECT_EQ(fp.module.scale, 3);
}

TEST(Pushforward, ArtinianKeepsLength) {
  // k is perfect, so F_*R and R have the same k-dimension.
  auto R = RingSpec::parse(2, {"x", "y"}, {"x^2", "y^3"});
  auto fp = frobenius_pushforward(R);
  EXPECT_EQ(realize_finite(fp.module).dim, 6u);
}

TEST(Pushforward, UpstairsActionIsMultiplication) {
  auto R = RingSpec::parse(2, {"x", "y"}, {"x*y"});
  auto fp = frobenius_pushforward(R);
  ASSERT_EQ(fp.basis.size(), 3u);  // e_(1,1) = xy vanishes
  auto pos = [&](Monomial a) {
    return static_cast<std::uint32_t>(std::find(fp.basis.begin(), fp.basis.end(), a) - fp.basis.begin());
  };
  // x·e_(1,0) = x^2 = x·e_(0,0) downstairs; x·e_(0,1) = xy = 0.
  Vec expected{{pos(Monomial{0, 0}), Monomial{1, 0}, 1}};
  EXPECT_EQ(fp.upstairs[0][pos(Monomial{1, 0})], expected);
  EXPECT_TRUE(fp.upstairs[0][pos(Monomial{0, 1})].empty());
  Vec to_y{{pos(Monomial{0, 1}), Monomial{0, 0}, 1}};
  EXPECT_EQ(fp.upstairs[1][pos(Monomial{0, 0})], to_y);
}

TEST(FrobeniusDual, DualNumbersGiveFreeModule) {
  auto R = RingSpec::parse(2, {"x"}, {"x^2"});
  auto d = frobenius_dual(frobenius_pushforward(R));
  EXPECT_TRUE(is_free_rank_one(d.module).free);
}

TEST(FrobeniusDual, PolynomialRingGivesFreeModule) {
  auto S = RingSpec::parse(3, {"x", "y"}, {});
  auto d = frobenius_dual(frobenius_pushforward(S));
  EXPECT_TRUE(is_free_rank_one(d.module).free);
}

TEST(FrobeniusDual, NonGorensteinArtinianIsNotFree) {
  auto R = RingSpec::parse(2, {"x", "y"}, {"x^2", "x*y", "y^2"});
  auto d = frobenius_dual(frobenius_pushforward(R));
  EXPECT_FALSE(is_free_rank_one(d.module).free);
}
