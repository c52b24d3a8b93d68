// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Time limits are wall clock on a single core.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "fpi/artinian.hpp"
#include "fpi/cli.hpp"
#include "fpi/classify.hpp"
#include "fpi/resolutions.hpp"
#include "test_support.hpp"

using namespace fpi;

namespace {

constexpr double kFlagshipSeconds = 10.0;
constexpr double kStaircaseSeconds = 60.0;
constexpr double kMembershipSeconds = 60.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RingSpec ring(std::uint32_t p, std::vector<std::string> vars, const std::vector<std::string>& gens) {
  return RingSpec::parse(p, std::move(vars), gens);
}

std::vector<RingSpec> staircase_corpus() {
  std::vector<RingSpec> out;
  for (std::uint32_t p : {2u, 3u})
    for (unsigned n = 1; n <= 6; ++n)
      for (auto& g : gen::staircase_ideals(n)) out.push_back(ring(p, {"x", "y"}, g));
  return out;
}

std::vector<RingSpec> curve_corpus() {
  const std::vector<std::string> xy{"x", "y"}, xyz{"x", "y", "z"}, xyzw{"x", "y", "z", "w"};
  return {
      ring(2, xy, {"x*y"}),
      ring(2, xyz, {"x*y", "x*z", "y*z"}),
      ring(3, xyz, {"x*y", "x*z", "y*z"}),
      ring(5, xyz, {"x*y", "x*z", "y*z"}),
      ring(3, xy, {"y^2 - x^2"}),
      ring(5, xy, {"y^2 - x^2"}),
      ring(2, xy, {"x^2"}),
      ring(3, xyz, {"x*y", "z^2"}),
      ring(3, xyzw, {"x*y", "x*z", "x*w", "y*z", "y*w", "z*w"}),
      ring(2, xyz, {"x^2", "x*y", "y^2"}),
      ring(3, xyz, {"x^2", "y^2"}),
      ring(5, xy, {"x^3 - y^3"}),
      ring(3, xyz, {"x*y", "x*z", "y^2 - y*z"}),
      ring(2, xyz, {"x*y", "y*z", "x*z - z^2"}),
      ring(3, xyz, {"x^2 - y*z", "x*y", "y^2"}),
  };
}

Outcome flagship() {
  std::ostringstream d;
  bool ok = true;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto t0 = std::chrono::steady_clock::now();
    auto R = ring(p, {"x", "y", "z"}, {"x*y", "x*z", "y*z"});
    auto r = fpi_verdict(R);
    std::vector<Polynomial> w{R.poly("y - x"), R.poly("z - x")};
    bool iso = r.canonical && r.canonical->status == EmbeddingStatus::found &&
               ideals_isomorphic(R, r.canonical->generators, w).verdict == IsoVerdict::isomorphic;
    auto h = poly_pow(R.poly("x + y + z"), p - 1);
    std::vector<Polynomial> wp, hw;
    for (auto& g : w) {
      wp.push_back(poly_pow_frobenius(g, 1));
      hw.push_back(h * g);
    }
    bool multiplier = R.lift(wp) == R.lift(hw);
    double s = seconds_since(t0);
    bool row = r.dimension == 1 && r.depth == 1 && r.cohen_macaulay && !r.gorenstein->gorenstein &&
               r.f_pure->f_pure && r.weakly_fpi == Verdict::yes && iso && multiplier && s < kFlagshipSeconds;
    ok = ok && row;
    d << "p=" << p << (row ? " ok" : " MISMATCH") << " " << s << "s; ";
  }
  return {ok, d.str()};
}

Outcome staircases() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t agree = 0, total = 0;
  for (auto& R : staircase_corpus()) {
    auto r = weakly_fpi_artinian(R);
    ++total;
    agree += (r.weakly_fpi == Verdict::yes) == (r.socle_dimension == 1) && r.weakly_fpi != Verdict::inconclusive;
  }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << agree << "/" << total << " agree, " << s << "s";
  return {agree == total && s < kStaircaseSeconds, d.str()};
}

// A graded module over F_p[x,y] of finite length: random relations plus
// pure powers of both variables on every generator.
ModulePresentation random_finite_length(std::mt19937_64& rng, const RingSpec& S) {
  const auto& F = S.field();
  std::size_t r = 1 + rng() % 2;
  std::vector<int> twists(r);
  for (auto& t : twists) t = static_cast<int>(rng() % 2);
  PolyMatrix a(r);
  auto push_column = [&](std::vector<Polynomial> col) {
    for (std::size_t i = 0; i < r; ++i) a[i].push_back(std::move(col[i]));
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t v = 0; v < 2; ++v) {
      std::vector<Polynomial> col(r, S.zero());
      col[i] = poly_pow(S.var(v), 2 + static_cast<unsigned>(rng() % 2));
      push_column(col);
    }
  for (std::size_t k = 1 + rng() % 2; k > 0; --k) {
    int deg = 2 + static_cast<int>(rng() % 2);
    std::vector<Polynomial> col(r, S.zero());
    for (std::size_t i = 0; i < r; ++i) col[i] = gen::random_homogeneous(rng, F, 2, static_cast<unsigned>(deg - twists[i]), 3);
    bool zero = std::all_of(col.begin(), col.end(), [](const Polynomial& f) { return f.is_zero(); });
    if (!zero) push_column(col);
  }
  return ModulePresentation::from_matrix(S, a, twists);
}

Outcome kunz() {
  std::mt19937_64 rng(2024);
  std::size_t vanish = 0, total = 0;
  for (int t = 0; t < 20; ++t) {
    auto S = ring(t % 2 ? 3 : 2, {"x", "y"}, {});
    auto M = random_finite_length(rng, S);
    if (realize_finite(M).dim == 0) {
      --t;
      continue;
    }
    ++total;
    bool zero = realize_finite(tor_frobenius(M, 1, 1)).dim == 0 && realize_finite(tor_frobenius(M, 2, 1)).dim == 0;
    vanish += zero;
  }
  auto D = ring(2, {"x"}, {"x^2"});
  auto tor1 = realize_finite(tor_frobenius(ModulePresentation::cyclic(D, {D.var(0)}), 1, 1)).dim;
  std::ostringstream d;
  d << vanish << "/" << total << " regular modules with Tor_1 = Tor_2 = 0; dim Tor_1(F_*R, k) over F_2[x]/(x^2) = " << tor1;
  return {vanish == total && tor1 == 2, d.str()};
}

std::vector<RingSpec> artinian_corpus() {
  auto out = staircase_corpus();
  const std::vector<std::string> xyz{"x", "y", "z"};
  for (std::uint32_t p : {2u, 3u}) {
    out.push_back(ring(p, xyz, {"x^2", "y^2", "z^2"}));
    out.push_back(ring(p, xyz, {"x^2", "y^2", "z^2", "x*y"}));
    out.push_back(ring(p, xyz, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}));
    out.push_back(ring(p, xyz, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"}));
  }
  for (auto& C : curve_corpus()) {
    auto dd = dimension_depth(C);
    if (dd.depth == 1) out.push_back(C.quotient({find_nzd(C)}));
  }
  return out;
}

Outcome injective_image() {
  std::size_t found = 0, exceptions = 0, rings = 0;
  for (auto& R : artinian_corpus()) {
    if (hilbert_data(R).dimension != 0) continue;
    ++rings;
    auto r = weakly_fpi_artinian(R);
    if (r.power) {
      ++found;
      exceptions += *r.power != 1;
    }
  }
  std::ostringstream d;
  d << rings << " rings, F(E) ≅ E^n found for " << found << ", exceptions " << exceptions;
  return {exceptions == 0 && found > 0, d.str()};
}

Outcome regular_quotient() {
  std::size_t tried = 0, iso = 0, inconclusive = 0;
  for (auto& R : curve_corpus()) {
    if (tried == 10) break;
    if (dimension_depth(R).depth != 1) continue;
    Polynomial l = find_nzd(R);
    if (l.degree() != 1 || !is_nonzerodivisor(R, l)) continue;
    ++tried;
    auto E_lp = matlis_dual(realize_ring(R.quotient({poly_pow(l, R.p())})));
    auto lhs = quotient_by_element(E_lp, l);
    auto E_l = matlis_dual(realize_ring(R.quotient({l})));
    auto v = modules_isomorphic(lhs, E_l).verdict;
    iso += v == IsoVerdict::isomorphic;
    inconclusive += v == IsoVerdict::inconclusive;
  }
  std::ostringstream d;
  d << iso << "/" << tried << " isomorphic, " << inconclusive << " inconclusive";
  return {tried == 10 && iso == tried, d.str()};
}

Outcome duality_chain() {
  std::size_t agree = 0, total = 0;
  std::string first_bad;
  auto corpus = staircase_corpus();
  for (auto& C : curve_corpus()) corpus.push_back(C);
  for (auto& R : corpus) {
    auto fpi = fpi_verdict(R).weakly_fpi;
    bool free = is_free_rank_one(frobenius_dual(frobenius_pushforward(R)).module).free;
    ++total;
    bool ok = fpi && *fpi != Verdict::inconclusive && free == (*fpi == Verdict::yes);
    agree += ok;
    if (!ok && first_bad.empty()) first_bad = ring_name(R);
  }
  std::ostringstream d;
  d << agree << "/" << total << " agree";
  if (!first_bad.empty()) d << ", first disagreement " << first_bad;
  return {agree == total, d.str()};
}

Outcome route_consistency() {
  std::size_t violations = 0, rings = 0, not_cm = 0;
  for (auto& R : curve_corpus()) {
    auto r = fpi_verdict(R);
    ++rings;
    not_cm += !r.cohen_macaulay || r.dimension != 1;
    bool fpi = r.weakly_fpi == Verdict::yes;
    if (r.gorenstein->gorenstein && !fpi) ++violations;
    if (fpi && !r.cohen_macaulay) ++violations;
    if (r.weakly_fpi == Verdict::inconclusive) ++violations;
  }
  std::ostringstream d;
  d << rings << " one-dimensional CM rings, " << violations << " violations";
  if (not_cm) d << ", " << not_cm << " corpus rings not one-dimensional CM";
  return {violations == 0 && not_cm == 0 && rings == 15, d.str()};
}

Outcome goto_census() {
  std::size_t rows = 0, few = 0, mismatches = 0, bad_rows = 0;
  bool flagship = false;
  for (std::size_t n = 1; n <= 3; ++n) {
    CensusConfig c;
    c.nvars = n;
    c.max_degree = 3;
    c.primes = {2};
    c.dimension = 1;
    auto res = run_census(c);
    if (res.partial) ++bad_rows;
    for (auto& r : res.rows) {
      ++rows;
      if (r.fpi != "true" && r.fpi != "false") {
        ++bad_rows;
        continue;
      }
      if (std::stoul(r.minimal_primes) <= 2) {
        ++few;
        mismatches += r.fpi != r.gorenstein;
      }
      if (r.ring == "F_2[x,y,z]/(y*z, x*z, x*y)") flagship = r.fpi == "true" && r.gorenstein == "false";
    }
  }
  std::ostringstream d;
  d << rows << " rows, " << few << " with at most two minimal primes, " << mismatches
    << " with FPI != Gorenstein; flagship row FPI and not Gorenstein: " << (flagship ? "yes" : "no");
  if (bad_rows) d << "; " << bad_rows << " undecided rows";
  return {mismatches == 0 && flagship && bad_rows == 0, d.str()};
}

Outcome fedder_cusp() {
  auto R = RingSpec::parse(3, {"x", "y"}, {"y^2 - x^3"}, "cusp", false);
  auto r = is_f_pure(R);
  // f^2 lies in (x^3, y^3) term by term
  bool terms = r.power && !r.power->is_zero();
  if (terms)
    for (auto& t : r.power->terms()) terms = terms && (t.mono[0] >= 3 || t.mono[1] >= 3);
  std::ostringstream d;
  d << "F-pure " << (r.f_pure ? "true" : "false");
  if (r.power) d << ", f^2 = " << R.str(*r.power) << (terms ? " in (x^3, y^3)" : " NOT in (x^3, y^3)");
  return {!r.f_pure && terms && r.power_remainder && r.power_remainder->is_zero(), d.str()};
}

Outcome membership() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(10);
  std::size_t agree = 0, members = 0;
  for (int t = 0; t < 100; ++t) {
    PrimeField F(std::vector<std::uint32_t>{2, 3, 5, 7}[t % 4]);
    std::size_t n = 1 + rng() % 3;
    std::vector<Polynomial> gens;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) {
      auto g = gen::random_homogeneous(rng, F, n, 1 + static_cast<unsigned>(rng() % 3), 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    unsigned d = 1 + static_cast<unsigned>(rng() % 4);
    Polynomial f(F, n);
    if (t % 2 == 0) {
      for (auto& g : gens)
        if (g.degree() <= static_cast<int>(d))
          f += gen::random_homogeneous(rng, F, n, d - static_cast<unsigned>(g.degree()), 2) * g;
    } else {
      f = gen::random_homogeneous(rng, F, n, d, 4);
    }
    Ideal I(F, n, gens);
    bool oracle = gen::member_by_linear_algebra(f, gens, F, n);
    members += oracle;
    agree += I.contains(f) == oracle;
  }
  double s = seconds_since(t0);
  std::ostringstream d;
  d << agree << "/100 agree (" << members << " members), " << s << "s";
  return {agree == 100 && s < kMembershipSeconds, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"flagship curve over F_2, F_3, F_5", flagship},
      {"depth-0 equivalence on staircases", staircases},
      {"Frobenius exactness over regular rings", kunz},
      {"injective F(E) is E", injective_image},
      {"regular-element quotient of E", regular_quotient},
      {"duality chain Hom(F_*R, R)", duality_chain},
      {"Gorenstein and canonical-ideal routes", route_consistency},
      {"two-primes census", goto_census},
      {"Fedder negative control", fedder_cusp},
      {"membership vs linear algebra", membership},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
