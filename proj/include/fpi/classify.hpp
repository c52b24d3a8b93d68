#pragma once

// Verdict pipeline for standard graded R = S/I of dimension 0 or 1:
// dimension and depth, Gorenstein, Fedder F-purity, a canonical ideal,
// ω ≅ ω^[p], and the composite (weakly) FPI report with cross-checks.
//
// Local statements are evaluated at the irrelevant ideal (x_1, ..., x_n).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fpi/artinian.hpp"
#include "fpi/error.hpp"
#include "fpi/groebner.hpp"
#include "fpi/linalg.hpp"
#include "fpi/resolutions.hpp"

namespace fpi {

struct ClassifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 256;                 // random draws per randomized search
  std::uint64_t exhaustive_limit = 1u << 16;  // enumerate a search space of at most this many points
  int extra_degrees = 4;                      // degrees above the lowest one tried by embedding searches
  std::uint64_t dual_check_limit = 1024;      // largest rank p^n of F_*R for the Hom(F_*R, R) cross-check
};

namespace detail {

inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      m.set(i, left);
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  if (n > 0) rec(rec, 0, d);
  return out;
}

/// Row-reduced basis of the F_p-span of tuples of polynomials.
inline std::vector<std::vector<Polynomial>> linear_basis(const RingSpec& R,
                                                         const std::vector<std::vector<Polynomial>>& items) {
  if (items.empty()) return {};
  const std::size_t width = items.front().size();
  std::map<std::pair<std::size_t, Monomial>, std::size_t,
           bool (*)(const std::pair<std::size_t, Monomial>&, const std::pair<std::size_t, Monomial>&)>
      index([](const std::pair<std::size_t, Monomial>& a, const std::pair<std::size_t, Monomial>& b) {
        if (a.first != b.first) return a.first < b.first;
        return order_compare_unchecked(a.second, b.second, MonomialOrder::grevlex()) == std::strong_ordering::greater;
      });
  for (auto& it : items)
    for (std::size_t j = 0; j < width; ++j)
      for (auto& t : it[j].terms()) index.emplace(std::pair{j, t.mono}, 0);
  std::vector<std::pair<std::size_t, Monomial>> keys;
  for (auto& [k, v] : index) {
    v = keys.size();
    keys.push_back(k);
  }
  FpMatrix m(R.field(), items.size(), keys.size());
  for (std::size_t r = 0; r < items.size(); ++r)
    for (std::size_t j = 0; j < width; ++j)
      for (auto& t : items[r][j].terms()) m(r, index.at({j, t.mono})) = t.coeff;
  auto piv = m.rref();
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    std::vector<std::vector<Term>> terms(width);
    for (std::size_t c = 0; c < keys.size(); ++c)
      if (m(r, c)) terms[keys[c].first].push_back({keys[c].second, m(r, c)});
    std::vector<Polynomial> v;
    for (auto& ts : terms) v.push_back(Polynomial::from_terms(R.field(), R.nvars(), std::move(ts)));
    out.push_back(std::move(v));
  }
  return out;
}

/// Basis of the degree-d part of the ideal of R generated by `gens`.
inline std::vector<Polynomial> ideal_degree_piece(const RingSpec& R, const std::vector<Polynomial>& gens, int d) {
  std::vector<std::vector<Polynomial>> items;
  for (auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (auto& mono : monomials_of_degree(R.nvars(), static_cast<unsigned>(d - g.degree()))) {
      auto f = R.reduce(g.times_term(mono, 1));
      if (!f.is_zero()) items.push_back({f});
    }
  }
  std::vector<Polynomial> out;
  for (auto& v : linear_basis(R, items)) out.push_back(std::move(v[0]));
  return out;
}

/// c_1 b_1 + ... for a coefficient vector.
template <class T>
T combine(const std::vector<T>& basis, const std::vector<std::uint32_t>& c, T zero) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (c[k]) zero += basis[k].scaled(c[k]);
  return zero;
}

/// Walks nonzero coefficient vectors over F_p^k: all of them when p^k is at
/// most `limit`, otherwise `trials` seeded random ones. Stops when `visit`
/// returns true. Returns (found, exhaustive).
template <class Visit>
std::pair<bool, bool> search_coefficients(std::uint32_t p, std::size_t k, const ClassifyOptions& opt,
                                          std::uint64_t stream, std::uint64_t& trials, Visit visit) {
  if (k == 0) return {false, true};
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t t = 0; t < k && small; ++t) {
    total *= p;
    if (total > opt.exhaustive_limit) small = false;
  }
  std::vector<std::uint32_t> c(k, 0);
  if (small) {
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t t = 0; t < k; ++t) {
        c[t] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      ++trials;
      if (visit(c)) return {true, true};
    }
    return {false, true};
  }
  std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    for (auto& x : c) x = coef(rng);
    if (std::all_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; })) continue;
    ++trials;
    if (visit(c)) return {true, false};
  }
  return {false, false};
}

/// f^e reduced modulo the ideal of R at every step.
inline Polynomial power_mod(const RingSpec& R, Polynomial f, std::uint64_t e) {
  Polynomial out = R.one();
  f = R.reduce(f);
  for (; e; e >>= 1) {
    if (e & 1) out = R.reduce(out * f);
    if (e > 1) f = R.reduce(f * f);
  }
  return out;
}

inline int initial_degree(const std::vector<Polynomial>& gens) {
  int d = std::numeric_limits<int>::max();
  for (auto& g : gens)
    if (!g.is_zero()) d = std::min(d, g.degree());
  return d;
}

inline std::vector<Polynomial> reduced_nonzero(const RingSpec& R, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    auto r = R.reduce(g);
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw Error(ErrorKind::NonHomogeneous, "ideal generator " + R.str(r) + " is not homogeneous");
    out.push_back(std::move(r));
  }
  return out;
}

/// dim_k (S/J)_d from the h-polynomial.
inline std::int64_t hilbert_value(const HilbertData& h, std::int64_t d) {
  auto binom = [](std::int64_t n, std::int64_t k) -> std::int64_t {
    if (k < 0 || n < k) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  std::int64_t s = 0;
  const auto dim = static_cast<std::int64_t>(h.dimension);
  for (std::size_t k = 0; k < h.numerator.size(); ++k) {
    std::int64_t e = d - static_cast<std::int64_t>(k);
    if (e < 0) continue;
    s += h.numerator[k] * (dim == 0 ? (e == 0 ? 1 : 0) : binom(e + dim - 1, dim - 1));
  }
  return s;
}

inline std::size_t minimal_generator_count(const RingSpec& R, const std::vector<Polynomial>& gens) {
  std::vector<Vec> vs;
  for (auto& g : gens) vs.push_back(vec_from_poly(g, 0, kPot));
  return minimal_subset(R, {0}, 1, vs, {}).size();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Dimension, depth, non-zero-divisors

struct DimensionDepth {
  std::size_t dimension = 0;
  std::size_t depth = 0;
  std::vector<std::size_t> betti;  // of R over the ambient polynomial ring
};

/// depth = n - pd_S(R) (Auslander-Buchsbaum); dimension from the Hilbert series.
inline DimensionDepth dimension_depth(const RingSpec& R) {
  if (R.ideal().is_unit()) throw Error(ErrorKind::Mismatch, "the unit ideal defines the zero ring");
  DimensionDepth out;
  out.dimension = hilbert_data(R).dimension;
  RingSpec S = R.ambient();
  auto res = minimal_free_resolution(ModulePresentation::cyclic(S, R.ideal().generators()));
  out.betti = res.betti();
  out.depth = R.nvars() - res.length();
  return out;
}

inline bool is_nonzerodivisor(const RingSpec& R, const Polynomial& f) {
  if (R.is_zero(f)) return false;
  if (R.ideal().is_zero()) return true;
  return ideal_colon(R.ideal(), R.ambient_ideal({f})) == R.ideal();
}

/// Up to `count` pairwise non-proportional homogeneous non-zero-divisors.
/// Order: x_1 + ... + x_n, the variables, the remaining linear forms, then
/// quadrics; within a degree the order beyond these is a seeded shuffle.
inline std::vector<Polynomial> find_nzds(const RingSpec& R, std::uint64_t seed, std::size_t count,
                                         unsigned max_degree = 2) {
  const std::size_t n = R.nvars();
  const auto& F = R.field();
  if (!R.ideal().is_zero() && !(ideal_saturation(R.ideal(), maximal_ideal(R)) == R.ideal()))
    throw Error(ErrorKind::NoNzdFound, "depth 0: every element of m is a zero divisor");
  std::vector<Polynomial> found;
  std::vector<Polynomial> seen;
  auto consider = [&](Polynomial f) {
    if (f.is_zero()) return false;
    f = f.monic();
    if (std::find(seen.begin(), seen.end(), f) != seen.end()) return false;
    seen.push_back(f);
    if (is_nonzerodivisor(R, f)) found.push_back(f);
    return found.size() >= count;
  };
  Polynomial sum = R.zero();
  for (std::size_t i = 0; i < n; ++i) sum += R.var(i);
  if (consider(sum)) return found;
  for (std::size_t i = 0; i < n; ++i)
    if (consider(R.var(i))) return found;
  const std::uint64_t cap = 4096;
  std::mt19937_64 rng(seed);
  for (unsigned d = 1; d <= max_degree; ++d) {
    auto monos = detail::monomials_of_degree(n, d);
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t t = 0; t < monos.size() && small; ++t) {
      total *= F.p();
      if (total > cap) small = false;
    }
    std::vector<std::vector<std::uint32_t>> coeffs;
    if (small) {
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::vector<std::uint32_t> c(monos.size());
        std::uint64_t v = idx;
        for (auto& x : c) {
          x = static_cast<std::uint32_t>(v % F.p());
          v /= F.p();
        }
        coeffs.push_back(std::move(c));
      }
      std::shuffle(coeffs.begin(), coeffs.end(), rng);
    } else {
      std::uniform_int_distribution<std::uint32_t> coef(0, F.p() - 1);
      for (std::uint64_t t = 0; t < cap; ++t) {
        std::vector<std::uint32_t> c(monos.size());
        for (auto& x : c) x = coef(rng);
        coeffs.push_back(std::move(c));
      }
    }
    for (auto& c : coeffs) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k < monos.size(); ++k)
        if (c[k]) terms.push_back({monos[k], c[k]});
      if (consider(Polynomial::from_terms(F, n, std::move(terms)))) return found;
    }
  }
  if (found.empty()) throw Error(ErrorKind::NoNzdFound, "no non-zero-divisor of degree <= " + std::to_string(max_degree));
  return found;
}

inline Polynomial find_nzd(const RingSpec& R, std::uint64_t seed = 0) { return find_nzds(R, seed, 1).front(); }

// ---------------------------------------------------------------------------
// Gorenstein

struct GorensteinResult {
  bool gorenstein = false;
  bool cohen_macaulay = false;
  std::vector<Polynomial> nzds;               // used for the Artinian reduction (dimension 1)
  std::vector<std::size_t> socle_dimensions;  // of R, or of R/(l) for each l in nzds
};

inline GorensteinResult is_gorenstein(const RingSpec& R, std::uint64_t seed = 0) {
  auto dd = dimension_depth(R);
  GorensteinResult out;
  out.cohen_macaulay = dd.depth == dd.dimension;
  if (dd.dimension == 0) {
    out.socle_dimensions.push_back(socle_dimension(realize_ring(R)));
    out.gorenstein = out.socle_dimensions[0] == 1;
    return out;
  }
  if (dd.dimension > 1) throw Error(ErrorKind::UnsupportedDimension, "Gorenstein test is implemented for dimension 0 and 1");
  if (!out.cohen_macaulay) return out;
  out.nzds = find_nzds(R, seed, 2);
  for (auto& l : out.nzds) out.socle_dimensions.push_back(socle_dimension(realize_ring(R.quotient({l}))));
  if (std::adjacent_find(out.socle_dimensions.begin(), out.socle_dimensions.end(), std::not_equal_to<>()) !=
      out.socle_dimensions.end())
    throw Error(ErrorKind::PipelineInvariant, "socle dimension of R/(l) depends on the non-zero-divisor l");
  out.gorenstein = out.socle_dimensions[0] == 1;
  return out;
}

// ---------------------------------------------------------------------------
// Fedder

struct FPurity {
  bool f_pure = false;
  std::vector<Polynomial> colon;         // generators of (I^[p] : I)
  std::optional<Polynomial> witness;     // colon element outside m^[p]
  std::optional<Polynomial> power;       // f^(p-1) when I = (f)
  std::optional<Polynomial> power_remainder;  // its normal form modulo m^[p]
};

/// R is F-pure iff (I^[p] : I) is not contained in m^[p] (in S).
inline FPurity is_f_pure(const RingSpec& R) {
  FPurity out;
  const auto& I = R.ideal();
  Ideal mp = frobenius_maximal(R, 1);
  if (I.is_zero()) {
    out.f_pure = true;
    out.witness = R.one();
    out.colon = {R.one()};
    return out;
  }
  Ideal colon = ideal_colon(bracket_power(I, 1), I);
  out.colon = colon.generators();
  for (auto& g : out.colon)
    if (!mp.normal_form(g).is_zero()) {
      out.f_pure = true;
      out.witness = g;
      break;
    }
  if (I.generators().size() == 1) {
    out.power = poly_pow(I.generators()[0], R.p() - 1);
    out.power_remainder = mp.normal_form(*out.power);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideal isomorphism

struct IdealIso {
  IsoVerdict verdict = IsoVerdict::inconclusive;
  std::optional<Polynomial> h, f;  // h·I = f·J
  std::string reason;
  std::uint64_t trials = 0;
};

/// Whether I ≅ J as graded R-modules (up to shift). Both must contain a
/// non-zero-divisor. Every isomorphism is multiplication by h/f with f a
/// fixed non-zero-divisor of I and h ∈ (fJ : I) of forced degree, so an
/// exhaustive pass over that degree piece is decisive.
inline IdealIso ideals_isomorphic(const RingSpec& R, const std::vector<Polynomial>& Igens,
                                  const std::vector<Polynomial>& Jgens, const ClassifyOptions& opt = {},
                                  const std::vector<Polynomial>& hints = {}) {
  IdealIso out;
  auto I = detail::reduced_nonzero(R, Igens), J = detail::reduced_nonzero(R, Jgens);
  if (I.empty() || J.empty()) {
    out.verdict = I.empty() == J.empty() ? IsoVerdict::isomorphic : IsoVerdict::not_isomorphic;
    out.reason = "zero ideal";
    return out;
  }
  Ideal IR = R.lift(I), JR = R.lift(J);
  auto reject = [&](std::string why) {
    out.verdict = IsoVerdict::not_isomorphic;
    out.reason = std::move(why);
    return out;
  };
  if (detail::minimal_generator_count(R, I) != detail::minimal_generator_count(R, J))
    return reject("minimal generator counts differ");
  const int s = detail::initial_degree(J) - detail::initial_degree(I);
  {
    // dim_k (I)_d = dim_k (J)_{d+s} in every degree
    auto hR = hilbert_data(R), hI = hilbert_data_of(IR), hJ = hilbert_data_of(JR);
    std::int64_t bound = static_cast<std::int64_t>(std::max({hR.numerator.size(), hI.numerator.size(),
                                                             hJ.numerator.size()})) + std::abs(s) + 4;
    for (std::int64_t d = 0; d <= bound; ++d) {
      auto a = detail::hilbert_value(hR, d) - detail::hilbert_value(hI, d);
      auto b = detail::hilbert_value(hR, d + s) - detail::hilbert_value(hJ, d + s);
      if (a != b) return reject("Hilbert functions differ in degree " + std::to_string(d));
    }
  }
  auto maps_onto = [&](const Polynomial& h, const Polynomial& f) {
    std::vector<Polynomial> hi, fj;
    for (auto& g : I) hi.push_back(R.reduce(h * g));
    for (auto& g : J) fj.push_back(R.reduce(f * g));
    return R.lift(hi) == R.lift(fj);
  };
  auto accept = [&](Polynomial h, Polynomial f) {
    out.verdict = IsoVerdict::isomorphic;
    out.h = std::move(h);
    out.f = std::move(f);
    return out;
  };

  // f = 1: a multiplier inside R.
  if (s >= 0) {
    for (auto& h : hints)
      if (h.degree() == s && maps_onto(h, R.one())) return accept(h, R.one());
    auto H1 = ideal_colon(JR, IR);
    auto piece = detail::ideal_degree_piece(R, H1.generators(), s);
    for (auto& h : piece) {
      ++out.trials;
      if (maps_onto(h, R.one())) return accept(h, R.one());
    }
    ClassifyOptions quick = opt;
    quick.exhaustive_limit = std::min<std::uint64_t>(opt.exhaustive_limit, 4096);
    quick.trials = std::min<std::uint64_t>(opt.trials, 64);
    std::optional<Polynomial> hit;
    detail::search_coefficients(R.p(), piece.size(), quick, 1, out.trials, [&](const std::vector<std::uint32_t>& c) {
      auto h = detail::combine(piece, c, R.zero());
      if (maps_onto(h, R.one())) hit = h;
      return hit.has_value();
    });
    if (hit) return accept(*hit, R.one());
  }

  // General route with a fixed non-zero-divisor f of I.
  auto nzd_in = [&](const std::vector<Polynomial>& gens, std::uint64_t stream) -> std::optional<Polynomial> {
    for (auto& g : gens)
      if (is_nonzerodivisor(R, g)) return g;
    int d0 = detail::initial_degree(gens);
    for (int d = d0; d <= d0 + opt.extra_degrees; ++d) {
      auto piece = detail::ideal_degree_piece(R, gens, d);
      std::optional<Polynomial> hit;
      std::uint64_t t = 0;
      ClassifyOptions o = opt;
      o.exhaustive_limit = std::min<std::uint64_t>(opt.exhaustive_limit, 4096);
      detail::search_coefficients(R.p(), piece.size(), o, stream + static_cast<std::uint64_t>(d), t,
                                  [&](const std::vector<std::uint32_t>& c) {
                                    auto f = detail::combine(piece, c, R.zero());
                                    if (is_nonzerodivisor(R, f)) hit = f;
                                    return hit.has_value();
                                  });
      if (hit) return hit;
    }
    return std::nullopt;
  };
  auto f = nzd_in(I, 100);
  if (!f) throw Error(ErrorKind::NoNzdInIdeal, "no non-zero-divisor found in the first ideal");
  if (!nzd_in(J, 200)) throw Error(ErrorKind::NoNzdInIdeal, "no non-zero-divisor found in the second ideal");
  std::vector<Polynomial> fJ;
  for (auto& g : J) fJ.push_back(*f * g);
  auto H = ideal_colon(R.lift(fJ), IR);
  const int d = f->degree() + s;
  if (d < 0) return reject("no multiplier of negative degree");
  auto piece = detail::ideal_degree_piece(R, H.generators(), d);
  std::optional<Polynomial> hit;
  auto [found, exhaustive] =
      detail::search_coefficients(R.p(), piece.size(), opt, 2, out.trials, [&](const std::vector<std::uint32_t>& c) {
        auto h = detail::combine(piece, c, R.zero());
        if (maps_onto(h, *f)) hit = h;
        return hit.has_value();
      });
  if (found) return accept(*hit, *f);
  if (exhaustive) return reject("no element of (fJ : I) of degree " + std::to_string(d) + " maps I onto fJ");
  out.reason = "random search over (fJ : I) exhausted its budget";
  return out;
}

// ---------------------------------------------------------------------------
// Canonical ideal

enum class EmbeddingStatus { found, not_generically_gorenstein, budget_exhausted };

inline std::string_view to_string(EmbeddingStatus s) {
  switch (s) {
    case EmbeddingStatus::found: return "found";
    case EmbeddingStatus::not_generically_gorenstein: return "not_generically_gorenstein";
    case EmbeddingStatus::budget_exhausted: return "budget_exhausted";
  }
  return "budget_exhausted";
}

struct CanonicalIdeal {
  EmbeddingStatus status = EmbeddingStatus::budget_exhausted;
  ModulePresentation omega;
  std::vector<Polynomial> generators;  // images of the generators of ω, in R
  int shift = 0;                       // the embedding raises degrees by this much
  std::vector<Polynomial> trace;       // generators of the trace ideal of ω
  std::optional<Polynomial> nzd;
  IsoVerdict quotient_check = IsoVerdict::inconclusive;  // ω/lω vs E_{R/(l)}
  std::uint64_t trials = 0;
};

namespace detail {

/// Whether e_j -> images[j] is injective on the module presented by `omega`.
inline bool injective_on(const ModulePresentation& omega, const std::vector<Polynomial>& images, int shift) {
  const auto& R = omega.ring;
  std::vector<Vec> cols;
  for (auto& f : images) cols.push_back(vec_from_poly(R.reduce(f), 0, kPot));
  auto ker = kernel_over(R, {-shift}, cols, omega.row_twists, {}, 1);
  if (ker.empty()) return true;
  ModuleGB gb = quotient_engine(R, omega.row_twists, 1);
  for (auto& c : omega.columns)
    if (!c.empty()) gb.add(c);
  gb.complete();
  for (auto& v : ker)
    if (!gb.reduce(v).empty()) return false;
  return true;
}

}  // namespace detail

inline CanonicalIdeal canonical_ideal(const RingSpec& R, const ClassifyOptions& opt = {}) {
  auto dd = dimension_depth(R);
  if (dd.dimension != 1) throw Error(ErrorKind::UnsupportedDimension, "canonical ideals are computed for dimension 1");
  if (dd.depth != 1) throw Error(ErrorKind::NotCohenMacaulay, "R is not Cohen-Macaulay");
  CanonicalIdeal out;
  out.omega = canonical_module(R);
  const auto& w = out.omega;
  const std::size_t m = w.rows();
  auto H = hom_presentation(w, ModulePresentation::free(R, {0}));
  const std::size_t k = H.module.rows();

  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t j = 0; j < m; ++j) {
      auto f = H.evaluate(l, j)[0];
      if (!f.is_zero() && std::find(out.trace.begin(), out.trace.end(), f) == out.trace.end()) out.trace.push_back(f);
    }
  if (out.trace.empty() || hilbert_data_of(R.lift(out.trace)).dimension > 0) {
    out.status = EmbeddingStatus::not_generically_gorenstein;
    return out;
  }

  // Degree-by-degree search in Hom(ω, R).
  int lowest = std::numeric_limits<int>::max();
  for (auto t : H.module.row_twists) lowest = std::min(lowest, t);
  for (int d = lowest; d <= lowest + opt.extra_degrees && out.status != EmbeddingStatus::found; ++d) {
    std::vector<std::vector<Polynomial>> items;
    for (std::size_t l = 0; l < k; ++l) {
      int t = H.module.row_twists[l];
      if (t > d) continue;
      std::vector<Polynomial> base;
      for (std::size_t j = 0; j < m; ++j) base.push_back(H.evaluate(l, j)[0]);
      for (auto& mono : detail::monomials_of_degree(R.nvars(), static_cast<unsigned>(d - t))) {
        std::vector<Polynomial> img;
        for (auto& b : base) img.push_back(R.reduce(b.times_term(mono, 1)));
        items.push_back(std::move(img));
      }
    }
    auto basis = detail::linear_basis(R, items);
    auto combine = [&](const std::vector<std::uint32_t>& c) {
      std::vector<Polynomial> img(m, R.zero());
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (c[b])
          for (std::size_t j = 0; j < m; ++j) img[j] += basis[b][j].scaled(c[b]);
      return img;
    };
    std::optional<std::vector<Polynomial>> hit;
    detail::search_coefficients(R.p(), basis.size(), opt, 300 + static_cast<std::uint64_t>(d - lowest), out.trials,
                                [&](const std::vector<std::uint32_t>& c) {
                                  auto img = combine(c);
                                  if (detail::injective_on(w, img, d)) hit = std::move(img);
                                  return hit.has_value();
                                });
    if (hit) {
      out.status = EmbeddingStatus::found;
      out.generators = *hit;
      out.shift = d;
    }
  }
  if (out.status != EmbeddingStatus::found) return out;

  // ω/lω must be the canonical module E of R/(l).
  out.nzd = find_nzd(R, opt.seed);
  ModulePresentation reduced = w;
  for (std::uint32_t j = 0; j < m; ++j) {
    reduced.columns.push_back(detail::reduce_vec(R, vec_from_poly(*out.nzd, j, detail::kPot)));
    reduced.col_twists.push_back(w.row_twists[j] + out.nzd->degree());
  }
  IsoOptions iso{opt.seed, opt.trials, opt.exhaustive_limit};
  out.quotient_check =
      modules_isomorphic(realize_finite(reduced), matlis_dual(realize_ring(R.quotient({*out.nzd}))), iso).verdict;
  if (out.quotient_check == IsoVerdict::not_isomorphic)
    throw Error(ErrorKind::PipelineInvariant, "ω/lω is not the canonical module of R/(l)");
  return out;
}

// ---------------------------------------------------------------------------
// The report

enum class Check { all, fpi, gorenstein, fpure, canonical };

struct CrossCheck {
  std::string name;
  std::string status;  // "pass" or "skipped"
  std::string detail;
};

struct Report {
  RingSpec ring;
  Check check = Check::all;
  bool graded = true;  // false for the affine Fedder-only report
  std::size_t dimension = 0, depth = 0;
  bool cohen_macaulay = false;
  std::vector<std::size_t> betti;
  std::optional<GorensteinResult> gorenstein;
  std::optional<FPurity> f_pure;
  std::optional<CanonicalIdeal> canonical;
  std::optional<Verdict> weakly_fpi;
  std::string method;  // artinian_E, canonical_ideal
  std::string fpi_reason;
  std::optional<ArtinianFpi> artinian;
  std::optional<IdealIso> multiplier;
  std::optional<bool> frobenius_dual_free;
  std::optional<std::size_t> minimal_primes;
  std::vector<CrossCheck> cross_checks;
  std::vector<std::string> notes;

  bool inconclusive() const {
    if (weakly_fpi && *weakly_fpi == Verdict::inconclusive) return true;
    return canonical && canonical->status == EmbeddingStatus::budget_exhausted;
  }
};

namespace detail {

inline void record(Report& r, std::string name, std::optional<bool> holds, std::string detail_text) {
  if (!holds) {
    r.cross_checks.push_back({std::move(name), "skipped", std::move(detail_text)});
    return;
  }
  if (!*holds) throw Error(ErrorKind::PipelineInvariant, "cross-check " + name + " failed: " + detail_text);
  r.cross_checks.push_back({std::move(name), "pass", std::move(detail_text)});
}

/// a ⇒ b, unknown when b is needed but undecided.
inline std::optional<bool> implies(bool a, std::optional<bool> b) {
  if (!a) return true;
  return b;
}

inline std::optional<bool> decided(const std::optional<Verdict>& v) {
  if (!v || *v == Verdict::inconclusive) return std::nullopt;
  return *v == Verdict::yes;
}

}  // namespace detail

/// Weakly FPI verdict for dim R = 1 through the canonical ideal.
inline void fpi_dimension_one(Report& r, const ClassifyOptions& opt) {
  const auto& R = r.ring;
  r.method = "canonical_ideal";
  if (!r.cohen_macaulay) {
    r.weakly_fpi = Verdict::no;
    r.fpi_reason = "not Cohen-Macaulay";
    return;
  }
  if (!r.canonical) r.canonical = canonical_ideal(R, opt);
  switch (r.canonical->status) {
    case EmbeddingStatus::not_generically_gorenstein:
      r.weakly_fpi = Verdict::no;
      r.fpi_reason = "no canonical ideal: R is not generically Gorenstein";
      return;
    case EmbeddingStatus::budget_exhausted:
      r.weakly_fpi = Verdict::inconclusive;
      r.fpi_reason = "no embedding of ω into R found within the search budget";
      return;
    case EmbeddingStatus::found: break;
  }
  const auto& w = r.canonical->generators;
  std::vector<Polynomial> wp;
  for (auto& g : w) wp.push_back(poly_pow_frobenius(g, 1));
  std::vector<Polynomial> hints;
  Polynomial sum = R.zero();
  for (std::size_t i = 0; i < R.nvars(); ++i) sum += R.var(i);
  hints.push_back(detail::power_mod(R, sum, R.p() - 1));
  if (r.canonical->nzd) hints.push_back(detail::power_mod(R, *r.canonical->nzd, R.p() - 1));
  r.multiplier = ideals_isomorphic(R, w, wp, opt, hints);
  switch (r.multiplier->verdict) {
    case IsoVerdict::isomorphic:
      r.weakly_fpi = Verdict::yes;
      r.fpi_reason = "ω ≅ ω^[p]";
      break;
    case IsoVerdict::not_isomorphic:
      r.weakly_fpi = Verdict::no;
      r.fpi_reason = "ω is not isomorphic to ω^[p]: " + r.multiplier->reason;
      break;
    case IsoVerdict::inconclusive:
      r.weakly_fpi = Verdict::inconclusive;
      r.fpi_reason = r.multiplier->reason;
      break;
  }
}

inline Report fpi_verdict(const RingSpec& R, const ClassifyOptions& opt = {}, Check check = Check::all) {
  if (!R.is_homogeneous()) throw Error(ErrorKind::NonHomogeneous, "the verdict pipeline needs a homogeneous ideal");
  Report r;
  r.ring = R;
  r.check = check;
  auto dd = dimension_depth(R);
  r.dimension = dd.dimension;
  r.depth = dd.depth;
  r.betti = dd.betti;
  r.cohen_macaulay = dd.depth == dd.dimension;
  r.notes.push_back("graded proxy: local properties are evaluated at the irrelevant ideal (x_1, ..., x_n)");
  const bool want_fpure = check == Check::all || check == Check::fpure;
  if (want_fpure) r.f_pure = is_f_pure(R);
  if (check == Check::fpure) return r;
  if (dd.dimension > 1)
    throw Error(ErrorKind::UnsupportedDimension,
                "dimension " + std::to_string(dd.dimension) + ": only dimension 0 and 1 are decided");

  const bool want_gor = check == Check::all || check == Check::gorenstein || check == Check::fpi;
  const bool want_fpi = check == Check::all || check == Check::fpi;
  if (want_gor) r.gorenstein = is_gorenstein(R, opt.seed);
  if (check == Check::canonical) {
    if (dd.dimension != 1) throw Error(ErrorKind::UnsupportedDimension, "canonical ideals are computed for dimension 1");
    r.canonical = canonical_ideal(R, opt);
    return r;
  }
  if (!want_fpi) return r;

  if (dd.dimension == 0) {
    r.method = "artinian_E";
    IsoOptions iso{opt.seed, opt.trials, opt.exhaustive_limit};
    r.artinian = weakly_fpi_artinian(R, iso);
    r.weakly_fpi = r.artinian->weakly_fpi;
    r.fpi_reason = r.artinian->witness.reason.empty() ? "F(E) ≅ E" : r.artinian->witness.reason;
  } else {
    fpi_dimension_one(r, opt);
  }
  r.notes.push_back("R is a quotient of a polynomial ring, so FPI and weakly FPI coincide");

  // Cross-checks; a failure is a pipeline error.
  auto fpi = detail::decided(r.weakly_fpi);
  bool gor = r.gorenstein && r.gorenstein->gorenstein;
  if (r.gorenstein) detail::record(r, "gorenstein_implies_fpi", detail::implies(gor, fpi), "Gorenstein rings are FPI");
  if (r.f_pure && dd.dimension == 1)
    detail::record(r, "f_pure_implies_fpi", detail::implies(r.f_pure->f_pure, fpi), "one-dimensional F-pure rings are FPI");
  if (dd.dimension == 1)
    detail::record(r, "fpi_implies_cohen_macaulay", fpi ? std::optional<bool>(!*fpi || r.cohen_macaulay) : std::nullopt,
                   "FPI rings satisfy S_1");
  if (dd.dimension == 0 && r.artinian) {
    detail::record(r, "fpi_iff_socle_one", fpi ? std::optional<bool>(*fpi == (r.artinian->socle_dimension == 1)) : std::nullopt,
                   "socle dimension " + std::to_string(r.artinian->socle_dimension));
    detail::record(r, "injective_frobenius_image_is_E",
                   r.artinian->power ? std::optional<bool>(*r.artinian->power == 1) : std::nullopt,
                   "F(E) injective forces F(E) ≅ E");
  }
  {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < R.nvars() && count <= opt.dual_check_limit; ++i) count *= R.p();
    if (count <= opt.dual_check_limit && fpi) {
      r.frobenius_dual_free = is_free_rank_one(frobenius_dual(frobenius_pushforward(R)).module).free;
      detail::record(r, "frobenius_dual_free", *r.frobenius_dual_free == *fpi,
                     "Hom_R(F_*R, R) ≅ R exactly when F(E) ≅ E");
    } else {
      detail::record(r, "frobenius_dual_free", std::nullopt, count > opt.dual_check_limit ? "F_*R too large" : "verdict inconclusive");
    }
  }
  if (dd.dimension == 1 && r.cohen_macaulay && r.gorenstein && !r.gorenstein->nzds.empty()) {
    auto red = weakly_fpi_artinian(R.quotient({r.gorenstein->nzds.front()}), {opt.seed, opt.trials, opt.exhaustive_limit});
    auto v = detail::decided(red.weakly_fpi);
    detail::record(r, "reduction_consistency", v ? std::optional<bool>(*v == r.gorenstein->gorenstein) : std::nullopt,
                   "R Gorenstein iff R/(l) weakly FPI");
  }
  if (dd.dimension == 1) {
    if (R.ideal().is_monomial()) {
      auto primes = minimal_primes_monomial(R.ideal());
      r.minimal_primes = primes.size();
      bool applies = primes.size() <= 2;
      detail::record(r, "two_primes_fpi_iff_gorenstein",
                     applies && fpi ? std::optional<bool>(*fpi == gor) : std::nullopt,
                     std::to_string(primes.size()) + " minimal primes");
    } else {
      r.notes.push_back("minimal primes are computed for monomial ideals only; the two-primes check is skipped");
      detail::record(r, "two_primes_fpi_iff_gorenstein", std::nullopt, "non-monomial ideal");
    }
    r.notes.push_back("the two-primes equivalence assumes an algebraically closed residue field; F_p is not");
  }
  return r;
}

}  // namespace fpi
