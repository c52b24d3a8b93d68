#pragma once

// Graded modules over R = S/I given by presentations, and the homological
// constructions built on them: minimal presentations, syzygies, minimal free
// resolutions, the Frobenius functor, Tor against it, the canonical module,
// Hom, and the Frobenius pushforward F_*R.
//
// A presentation is a map R^cols -> R^rows; the module is its cokernel.
// Generator i sits in degree row_twists[i] and relation j in col_twists[j],
// measured in units of 1/scale. Ordinary modules use scale 1. F_*R uses
// scale p: a basis element e_a stands for x^a, which has degree |a|/p, so
// with everything multiplied by p the degrees stay integral.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpi/error.hpp"
#include "fpi/gfpoly.hpp"
#include "fpi/groebner.hpp"
#include "fpi/module_gb.hpp"

namespace fpi {

using PolyMatrix = std::vector<std::vector<Polynomial>>;  // [row][col]

struct ModulePresentation {
  RingSpec ring;
  std::vector<int> row_twists;
  std::vector<int> col_twists;
  std::vector<Vec> columns;  // each over components [0, rows())
  int scale = 1;

  std::size_t rows() const { return row_twists.size(); }
  std::size_t cols() const { return columns.size(); }

  Polynomial entry(std::size_t i, std::size_t j) const {
    return vec_component(columns[j], static_cast<std::uint32_t>(i), ring.field(), ring.nvars());
  }

  /// Rows-by-cols matrix. Column twists are inferred from the entries when
  /// not given (a zero column gets twist 0).
  static ModulePresentation from_matrix(const RingSpec& ring, const PolyMatrix& a, std::vector<int> row_twists,
                                        std::optional<std::vector<int>> col_twists = std::nullopt, int scale = 1);

  /// R^n with the given generator degrees.
  static ModulePresentation free(const RingSpec& ring, std::vector<int> twists, int scale = 1) {
    return ModulePresentation{ring, std::move(twists), {}, {}, scale};
  }

  /// R/J for J generated by homogeneous `gens`.
  static ModulePresentation cyclic(const RingSpec& ring, const std::vector<Polynomial>& gens) {
    PolyMatrix a(1);
    for (auto& g : gens) a[0].push_back(g);
    return from_matrix(ring, a, {0});
  }
};

namespace detail {

inline const MonomialOrder kPot = MonomialOrder::grevlex();

inline Vec dense_to_vec(const std::vector<Polynomial>& v) {
  Vec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto part = vec_from_poly(v[i], static_cast<std::uint32_t>(i), kPot);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline std::vector<Polynomial> vec_to_dense(const Vec& v, std::size_t r, const RingSpec& ring) {
  std::vector<std::vector<Term>> terms(r);
  for (auto& t : v) terms.at(t.comp).push_back({t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(r);
  for (auto& ts : terms) out.push_back(Polynomial::from_terms(ring.field(), ring.nvars(), std::move(ts)));
  return out;
}

/// Componentwise normal form modulo I.
inline Vec reduce_vec(const RingSpec& ring, const Vec& v) {
  if (v.empty() || ring.ideal().is_zero()) return v;
  std::uint32_t r = 0;
  for (auto& t : v) r = std::max(r, t.comp + 1);
  auto d = vec_to_dense(v, r, ring);
  for (auto& f : d)
    if (!f.is_zero()) f = ring.reduce(f);
  return dense_to_vec(d);
}

inline long degree_of(const Vec& v, const std::vector<int>& twists, int weight) {
  const auto& t = v.front();
  return static_cast<long>(weight) * t.mono.degree() + twists[t.comp];
}

inline Vec poly_times_vec(const Polynomial& f, const Vec& v, const PrimeField& F) {
  Vec out;
  for (auto& t : f.terms()) {
    auto s = vec_scale(v, t.coeff, t.mono, F);
    out.insert(out.end(), s.begin(), s.end());
  }
  return vec_normalize(std::move(out), F, kPot);
}

/// Submodule engine for R^r: I·e_i already added.
inline ModuleGB quotient_engine(const RingSpec& ring, const std::vector<int>& twists, int weight) {
  ModuleGB gb(ring.field(), ring.nvars(), twists, kPot, weight, ring.limits());
  const auto& basis = ring.ideal().basis();
  for (std::uint32_t i = 0; i < twists.size(); ++i)
    for (auto& g : basis) gb.add(vec_from_poly(g, i, kPot));
  return gb;
}

/// Generators of { u in R^c : sum_j u_j images[j] in <extra> + I R^r },
/// reduced mod I, zero vectors dropped, in increasing degree.
inline std::vector<Vec> kernel_over(const RingSpec& ring, const std::vector<int>& target_twists,
                                    const std::vector<Vec>& images, const std::vector<int>& source_twists,
                                    const std::vector<Vec>& extra, int weight) {
  std::vector<Vec> all_extra = extra;
  for (std::uint32_t i = 0; i < target_twists.size(); ++i)
    for (auto& g : ring.ideal().basis()) all_extra.push_back(vec_from_poly(g, i, kPot));
  auto ker = kernel_vectors(ring.field(), ring.nvars(), target_twists, images, source_twists, all_extra, ring.limits(),
                            weight);
  std::vector<Vec> out;
  for (auto& v : ker) {
    auto r = reduce_vec(ring, v);
    if (!r.empty()) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    return degree_of(a, source_twists, weight) < degree_of(b, source_twists, weight);
  });
  return out;
}

/// Indices of a minimal generating subset of span(gens) modulo
/// <extra> + I R^r. Homogeneous input; graded Nakayama makes the greedy
/// pass in degree order exact.
inline std::vector<std::size_t> minimal_subset(const RingSpec& ring, const std::vector<int>& twists, int weight,
                                               const std::vector<Vec>& gens, const std::vector<Vec>& extra) {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!gens[k].empty()) order.push_back(k);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return degree_of(gens[a], twists, weight) < degree_of(gens[b], twists, weight);
  });
  ModuleGB gb = quotient_engine(ring, twists, weight);
  for (auto& e : extra)
    if (!e.empty()) gb.add(e);
  std::vector<std::size_t> keep;
  for (auto k : order) {
    if (gb.contains(gens[k])) continue;
    keep.push_back(k);
    gb.add(gens[k]);
  }
  std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
    auto da = degree_of(gens[a], twists, weight), db = degree_of(gens[b], twists, weight);
    return da != db ? da < db : a < b;
  });
  return keep;
}

inline void check_same_ring(const RingSpec& a, const RingSpec& b) {
  if (a.field() != b.field() || a.nvars() != b.nvars() || !(a.ideal() == b.ideal()))
    throw Error(ErrorKind::Mismatch, "modules over different rings");
}

}  // namespace detail

inline ModulePresentation ModulePresentation::from_matrix(const RingSpec& ring, const PolyMatrix& a,
                                                          std::vector<int> row_twists,
                                                          std::optional<std::vector<int>> col_twists, int scale) {
  const std::size_t r = a.size();
  if (row_twists.size() != r) throw Error(ErrorKind::Mismatch, "row twist count differs from row count");
  const std::size_t c = r ? a[0].size() : (col_twists ? col_twists->size() : 0);
  for (auto& row : a)
    if (row.size() != c) throw Error(ErrorKind::Mismatch, "ragged matrix");
  ModulePresentation m{ring, std::move(row_twists), {}, {}, scale};
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Polynomial> col;
    std::optional<int> twist;
    for (std::size_t i = 0; i < r; ++i) {
      Polynomial e = ring.reduce(a[i][j]);
      if (!e.is_zero()) {
        if (!e.is_homogeneous()) throw Error(ErrorKind::NonHomogeneous, "matrix entry is not homogeneous");
        int t = e.degree() * scale + m.row_twists[i];
        if (twist && *twist != t) throw Error(ErrorKind::NonHomogeneous, "column " + std::to_string(j) + " is not homogeneous");
        twist = t;
      }
      col.push_back(std::move(e));
    }
    int ct = col_twists ? (*col_twists)[j] : twist.value_or(0);
    if (twist && *twist != ct) throw Error(ErrorKind::NonHomogeneous, "column twist disagrees with entry degrees");
    m.col_twists.push_back(ct);
    m.columns.push_back(detail::dense_to_vec(col));
  }
  return m;
}

/// Dense copy of the matrix.
inline PolyMatrix to_matrix(const ModulePresentation& m) {
  PolyMatrix a(m.rows(), std::vector<Polynomial>(m.cols(), m.ring.zero()));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto col = detail::vec_to_dense(m.columns[j], m.rows(), m.ring);
    for (std::size_t i = 0; i < m.rows(); ++i) a[i][j] = std::move(col[i]);
  }
  return a;
}

/// Same matrix with twists multiplied so that the scale becomes `scale`.
inline ModulePresentation rescaled(const ModulePresentation& m, int scale) {
  if (scale % m.scale) throw Error(ErrorKind::Mismatch, "incompatible degree scales");
  int f = scale / m.scale;
  ModulePresentation r = m;
  for (auto& t : r.row_twists) t *= f;
  for (auto& t : r.col_twists) t *= f;
  r.scale = scale;
  return r;
}

/// A presentation together with how the original generators are expressed
/// in the surviving ones.
struct Minimized {
  ModulePresentation module;
  std::vector<std::size_t> kept_rows;  // original index of each surviving generator
  std::vector<Vec> substitution;       // original generator -> combination of surviving ones
};

/// Minimal presentation: unit entries are used to eliminate generators and
/// relations, then redundant relations are dropped.
inline Minimized minimize(const ModulePresentation& m) {
  const auto& ring = m.ring;
  const auto& F = ring.field();
  const std::size_t r = m.rows(), c = m.cols();
  PolyMatrix a = to_matrix(m);
  for (auto& row : a)
    for (auto& e : row) e = ring.reduce(e);
  PolyMatrix sub(r, std::vector<Polynomial>(r, ring.zero()));
  for (std::size_t i = 0; i < r; ++i) sub[i][i] = ring.one();
  std::vector<bool> row_alive(r, true), col_alive(c, true);

  for (;;) {
    std::size_t pi = r, pj = c;
    for (std::size_t j = 0; j < c && pi == r; ++j) {
      if (!col_alive[j]) continue;
      for (std::size_t i = 0; i < r; ++i)
        if (row_alive[i] && !a[i][j].is_zero() && a[i][j].is_constant()) {
          pi = i;
          pj = j;
          break;
        }
    }
    if (pi == r) break;
    const std::uint32_t inv = F.inv(a[pi][pj].leading_term().coeff);
    // Clear row pi in the other columns.
    for (std::size_t l = 0; l < c; ++l) {
      if (l == pj || !col_alive[l] || a[pi][l].is_zero()) continue;
      Polynomial f = a[pi][l].scaled(inv);
      for (std::size_t k = 0; k < r; ++k)
        if (row_alive[k] && !a[k][pj].is_zero()) a[k][l] = ring.reduce(a[k][l] - f * a[k][pj]);
    }
    // e_pi = -(1/c) sum_{k != pi} a[k][pj] e_k.
    for (std::size_t o = 0; o < r; ++o) {
      if (sub[o][pi].is_zero()) continue;
      Polynomial f = sub[o][pi].scaled(F.neg(inv));
      for (std::size_t k = 0; k < r; ++k)
        if (k != pi && row_alive[k] && !a[k][pj].is_zero()) sub[o][k] = ring.reduce(sub[o][k] + f * a[k][pj]);
      sub[o][pi] = ring.zero();
    }
    row_alive[pi] = false;
    col_alive[pj] = false;
  }

  Minimized out;
  out.module.ring = ring;
  out.module.scale = m.scale;
  std::vector<std::size_t> new_index(r, r);
  for (std::size_t i = 0; i < r; ++i)
    if (row_alive[i]) {
      new_index[i] = out.kept_rows.size();
      out.kept_rows.push_back(i);
      out.module.row_twists.push_back(m.row_twists[i]);
    }
  std::vector<Vec> cols;
  std::vector<int> twists;
  for (std::size_t j = 0; j < c; ++j) {
    if (!col_alive[j]) continue;
    std::vector<Polynomial> col;
    for (auto i : out.kept_rows) col.push_back(a[i][j]);
    Vec v = detail::dense_to_vec(col);
    if (v.empty()) continue;
    cols.push_back(std::move(v));
    twists.push_back(m.col_twists[j]);
  }
  auto keep = detail::minimal_subset(ring, out.module.row_twists, m.scale, cols, {});
  for (auto k : keep) {
    out.module.columns.push_back(cols[k]);
    out.module.col_twists.push_back(twists[k]);
  }
  for (std::size_t o = 0; o < r; ++o) {
    std::vector<Polynomial> s;
    for (auto i : out.kept_rows) s.push_back(sub[o][i]);
    out.substitution.push_back(detail::dense_to_vec(s));
  }
  return out;
}

inline ModulePresentation minimal_presentation(const ModulePresentation& m) { return minimize(m).module; }

/// Columns generate the kernel of R^cols -> R^rows (minimally).
inline ModulePresentation syzygy_matrix(const ModulePresentation& m) {
  auto ker = detail::kernel_over(m.ring, m.row_twists, m.columns, m.col_twists, {}, m.scale);
  ModulePresentation out{m.ring, m.col_twists, {}, {}, m.scale};
  for (auto k : detail::minimal_subset(m.ring, m.col_twists, m.scale, ker, {})) {
    out.col_twists.push_back(static_cast<int>(detail::degree_of(ker[k], m.col_twists, m.scale)));
    out.columns.push_back(ker[k]);
  }
  return out;
}

/// (span(gens) + B) / B inside R^r, where r = twists.size().
struct Subquotient {
  ModulePresentation module;
  std::vector<Vec> generators;  // in R^r, one per row of `module`
};

inline Subquotient subquotient_presentation(const RingSpec& ring, const std::vector<int>& twists,
                                            const std::vector<Vec>& gens, const std::vector<Vec>& B, int scale = 1) {
  std::vector<Vec> reduced;
  for (auto& g : gens) reduced.push_back(detail::reduce_vec(ring, g));
  auto keep = detail::minimal_subset(ring, twists, scale, reduced, B);
  Subquotient out;
  out.module.ring = ring;
  out.module.scale = scale;
  for (auto k : keep) {
    out.generators.push_back(reduced[k]);
    out.module.row_twists.push_back(static_cast<int>(detail::degree_of(reduced[k], twists, scale)));
  }
  auto rel = detail::kernel_over(ring, twists, out.generators, out.module.row_twists, B, scale);
  for (auto k : detail::minimal_subset(ring, out.module.row_twists, scale, rel, {})) {
    out.module.col_twists.push_back(static_cast<int>(detail::degree_of(rel[k], out.module.row_twists, scale)));
    out.module.columns.push_back(rel[k]);
  }
  return out;
}

/// d_1, d_2, ... with d_1 a minimal presentation of the module.
struct FreeResolution {
  RingSpec ring;
  std::vector<int> generator_twists;  // twists of F_0
  std::vector<ModulePresentation> maps;
  bool truncated = false;

  std::size_t length() const { return maps.size(); }
  const std::vector<int>& twists(std::size_t k) const { return k == 0 ? generator_twists : maps[k - 1].col_twists; }
  std::vector<std::size_t> betti() const {
    std::vector<std::size_t> b{generator_twists.size()};
    for (auto& d : maps) b.push_back(d.cols());
    return b;
  }
};

/// Over the polynomial ring the resolution is finite; over a quotient it
/// is cut after `max_length` maps (default n + 2) and flagged truncated.
inline FreeResolution minimal_free_resolution(const ModulePresentation& m, int max_length = -1) {
  const bool regular = m.ring.ideal().is_zero();
  std::size_t cap = max_length >= 0 ? static_cast<std::size_t>(max_length)
                                    : m.ring.nvars() + (regular ? 0 : 2);
  if (regular) cap = std::min(cap, m.ring.nvars() + 1);
  FreeResolution res;
  res.ring = m.ring;
  ModulePresentation d = minimal_presentation(m);
  res.generator_twists = d.row_twists;
  while (d.cols() > 0) {
    if (res.maps.size() == cap) {
      res.truncated = true;
      break;
    }
    res.maps.push_back(d);
    d = syzygy_matrix(d);
  }
  return res;
}

/// The product a * b of two maps (b's target is a's source).
inline ModulePresentation compose(const ModulePresentation& a, const ModulePresentation& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::Mismatch, "composition shape mismatch");
  const auto& F = a.ring.field();
  ModulePresentation out{a.ring, a.row_twists, b.col_twists, {}, a.scale};
  for (std::size_t j = 0; j < b.cols(); ++j) {
    Vec acc;
    auto col = detail::vec_to_dense(b.columns[j], b.rows(), b.ring);
    for (std::size_t k = 0; k < col.size(); ++k)
      if (!col[k].is_zero()) acc = vec_add(acc, detail::poly_times_vec(col[k], a.columns[k], F), F, detail::kPot);
    out.columns.push_back(detail::reduce_vec(a.ring, acc));
  }
  return out;
}

/// F^e(M): entries raised to the q-th power and reduced mod I; twists times q.
inline ModulePresentation frobenius_functor(const ModulePresentation& m, unsigned e) {
  const std::uint64_t q = frobenius_q(m.ring.p(), e);
  ModulePresentation out{m.ring, m.row_twists, m.col_twists, {}, m.scale};
  for (auto& t : out.row_twists) t = static_cast<int>(t * static_cast<std::int64_t>(q));
  for (auto& t : out.col_twists) t = static_cast<int>(t * static_cast<std::int64_t>(q));
  for (auto& col : m.columns) {
    Vec v;
    for (auto& t : col) v.push_back({t.comp, t.mono.pow(q), m.ring.field().pow(t.coeff, q)});
    out.columns.push_back(detail::reduce_vec(m.ring, vec_normalize(std::move(v), m.ring.field(), detail::kPot)));
  }
  return out;
}

/// Tor_i(F^e_* R, M) as the i-th homology of F^e applied to a minimal
/// resolution of M. Tor_0 is F^e(M).
inline ModulePresentation tor_frobenius(const ModulePresentation& m, int i, unsigned e) {
  if (i < 0) throw Error(ErrorKind::Mismatch, "negative homological degree");
  auto res = minimal_free_resolution(m, i + 1);
  const auto& ring = m.ring;
  if (i == 0) {
    if (res.maps.empty()) return frobenius_functor(ModulePresentation::free(ring, res.generator_twists, m.scale), e);
    return minimal_presentation(frobenius_functor(res.maps[0], e));
  }
  const auto idx = static_cast<std::size_t>(i);
  if (idx > res.length()) {
    if (res.truncated) throw Error(ErrorKind::TruncationInsufficient, "resolution too short for Tor_" + std::to_string(i));
    return ModulePresentation::free(ring, {}, m.scale);
  }
  auto di = frobenius_functor(res.maps[idx - 1], e);
  std::vector<Vec> boundaries;
  if (idx < res.length()) boundaries = frobenius_functor(res.maps[idx], e).columns;
  else if (res.truncated) throw Error(ErrorKind::TruncationInsufficient, "resolution too short for Tor_" + std::to_string(i));
  auto cycles = detail::kernel_over(ring, di.row_twists, di.columns, di.col_twists, {}, di.scale);
  return subquotient_presentation(ring, di.col_twists, cycles, boundaries, di.scale).module;
}

/// Ext^{n-1}_S(R, S(-n)) presented over R, for dim R = 1.
inline ModulePresentation canonical_module(const RingSpec& R) {
  auto h = hilbert_data(R);
  if (h.dimension != 1)
    throw Error(ErrorKind::UnsupportedDimension, "canonical module is computed for one-dimensional rings");
  const std::size_t n = R.nvars();
  RingSpec S = R.ambient();
  auto res = minimal_free_resolution(ModulePresentation::cyclic(S, R.ideal().generators()), static_cast<int>(n));
  auto dual_twists = [&](std::size_t k) {
    std::vector<int> t;
    if (k <= res.length())
      for (int a : res.twists(k)) t.push_back(static_cast<int>(n) - a);
    return t;
  };
  const std::size_t spot = n - 1;
  auto rows = dual_twists(spot);
  const std::size_t r = rows.size();
  // Cycles: kernel of d_n^T : F_{n-1}^* -> F_n^*.
  std::vector<Vec> cycles;
  if (n <= res.length()) {
    const auto& dn = res.maps[n - 1];
    auto dense = to_matrix(dn);  // rows index F_{n-1}, columns F_n
    std::vector<Vec> images;
    for (std::size_t j = 0; j < r; ++j) images.push_back(detail::dense_to_vec(dense[j]));
    cycles = detail::kernel_over(S, dual_twists(n), images, rows, {}, 1);
  } else {
    for (std::uint32_t j = 0; j < r; ++j) cycles.push_back({{j, Monomial(n), 1}});
  }
  // Boundaries: image of d_{n-1}^T : F_{n-2}^* -> F_{n-1}^*.
  std::vector<Vec> boundaries;
  if (spot >= 1) {
    auto dense = to_matrix(res.maps[spot - 1]);  // rows index F_{n-2}, columns F_{n-1}
    for (auto& row : dense) boundaries.push_back(detail::dense_to_vec(row));
  }
  auto sq = subquotient_presentation(S, rows, cycles, boundaries, 1);
  ModulePresentation over_r = sq.module;
  over_r.ring = R;
  for (auto& c : over_r.columns) c = detail::reduce_vec(R, c);
  return minimal_presentation(over_r);
}

/// Hom_R(M, N). Each generator is an n x m matrix Phi (component j*n + i is
/// Phi(e_j)_i) with Phi·A_M in the image of A_N.
struct HomModule {
  ModulePresentation module;
  std::vector<Vec> maps;
  std::size_t source_rank = 0, target_rank = 0;

  /// Image of source generator j under generator map k, in R^target_rank.
  std::vector<Polynomial> evaluate(std::size_t k, std::size_t j) const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < target_rank; ++i)
      out.push_back(vec_component(maps[k], static_cast<std::uint32_t>(j * target_rank + i), module.ring.field(),
                                  module.ring.nvars()));
    return out;
  }
};

inline HomModule hom_presentation(const ModulePresentation& M, const ModulePresentation& Nin) {
  detail::check_same_ring(M.ring, Nin.ring);
  const ModulePresentation N = Nin.scale == M.scale ? Nin : rescaled(Nin, M.scale);
  const auto& ring = M.ring;
  const int w = M.scale;
  const std::size_t m = M.rows(), n = N.rows(), a = M.cols();
  std::vector<int> src(n * m), tgt(n * a);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) src[j * n + i] = N.row_twists[i] - M.row_twists[j];
  for (std::size_t k = 0; k < a; ++k)
    for (std::size_t i = 0; i < n; ++i) tgt[k * n + i] = N.row_twists[i] - M.col_twists[k];
  // Phi -> Phi·A: e_{j,i} goes to sum_k A[j][k] e_{k,i}.
  auto A = to_matrix(M);
  std::vector<Vec> images;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Polynomial> img(n * a, ring.zero());
      for (std::size_t k = 0; k < a; ++k) img[k * n + i] = A[j][k];
      images.push_back(detail::dense_to_vec(img));
    }
  auto shifted = [&](const Vec& col, std::size_t block) {
    Vec v = col;
    for (auto& t : v) t.comp += static_cast<std::uint32_t>(block * n);
    return v;
  };
  std::vector<Vec> target_rel, source_rel;
  for (std::size_t k = 0; k < a; ++k)
    for (auto& col : N.columns) target_rel.push_back(shifted(col, k));
  for (std::size_t j = 0; j < m; ++j)
    for (auto& col : N.columns) source_rel.push_back(shifted(col, j));
  std::vector<Vec> ker;
  if (a == 0) {
    for (std::uint32_t c = 0; c < n * m; ++c) ker.push_back({{c, Monomial(ring.nvars()), 1}});
  } else {
    ker = detail::kernel_over(ring, tgt, images, src, target_rel, w);
  }
  auto sq = subquotient_presentation(ring, src, ker, source_rel, w);
  return HomModule{std::move(sq.module), std::move(sq.generators), m, n};
}

/// F_*R as an R-module, together with multiplication by each variable on
/// the upstairs copy of R (R-linear endomorphisms of F_*R).
struct FrobeniusPushforward {
  ModulePresentation module;            // scale p
  std::vector<Monomial> basis;          // exponent a of each generator e_a = x^a
  std::vector<std::vector<Vec>> upstairs;  // upstairs[i][a]: image of x_i·e_a
};

namespace detail {

inline std::size_t pushforward_index(const Monomial& a, std::uint32_t p) {
  std::size_t idx = 0;
  for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

inline Monomial pushforward_exponent(std::size_t idx, std::size_t n, std::uint32_t p) {
  Monomial a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.set(i, static_cast<std::uint32_t>(idx % p));
    idx /= p;
  }
  return a;
}

/// Writes c·x^m as c·(x^q)^p·x^a with 0 <= a_i < p; returns (q, a).
inline std::pair<Monomial, Monomial> p_adic_split(const Monomial& m, std::uint32_t p) {
  Monomial q(m.size()), a(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    q.set(i, m[i] / p);
    a.set(i, m[i] % p);
  }
  return {q, a};
}

}  // namespace detail

inline FrobeniusPushforward frobenius_pushforward(const RingSpec& R) {
  const std::uint32_t p = R.p();
  const std::size_t n = R.nvars();
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= p;
  if (count > 4096) throw Error(ErrorKind::Resource, "F_*R needs " + std::to_string(count) + " generators");
  const auto& F = R.field();
  ModulePresentation raw{R, {}, {}, {}, static_cast<int>(p)};
  std::vector<Monomial> exps;
  for (std::size_t idx = 0; idx < count; ++idx) {
    exps.push_back(detail::pushforward_exponent(idx, n, p));
    raw.row_twists.push_back(static_cast<int>(exps.back().degree()));
  }
  // Relations: g·x^b for each generator g of I and each b in [0,p)^n.
  for (auto& g : R.ideal().generators())
    for (auto& b : exps) {
      Vec v;
      for (auto& t : g.terms()) {
        auto [q, a] = detail::p_adic_split(t.mono * b, p);
        v.push_back({static_cast<std::uint32_t>(detail::pushforward_index(a, p)), q, t.coeff});
      }
      raw.columns.push_back(vec_normalize(std::move(v), F, detail::kPot));
      raw.col_twists.push_back(static_cast<int>(g.degree() + b.degree()));
    }
  auto mini = minimize(raw);
  FrobeniusPushforward out;
  out.module = std::move(mini.module);
  for (auto k : mini.kept_rows) out.basis.push_back(exps[k]);
  out.upstairs.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (auto k : mini.kept_rows) {
      Monomial a = exps[k];
      Monomial down(n);
      a.set(i, a[i] + 1);
      if (a[i] == p) {
        a.set(i, 0);
        down.set(i, 1);
      }
      Vec v = vec_scale(mini.substitution[detail::pushforward_index(a, p)], 1, down, F);
      out.upstairs[i].push_back(detail::reduce_vec(R, vec_normalize(std::move(v), F, detail::kPot)));
    }
  return out;
}

/// Whether M is isomorphic to R up to a degree shift.
struct FreeRankOne {
  bool free = false;
  int twist = 0;
  std::size_t generators = 0;
};

inline FreeRankOne is_free_rank_one(const ModulePresentation& m) {
  auto mini = minimal_presentation(m);
  FreeRankOne r;
  r.generators = mini.rows();
  r.free = mini.rows() == 1 && mini.cols() == 0;
  if (mini.rows() == 1) r.twist = mini.row_twists[0];
  return r;
}

/// Hom_R(F_*R, R) as a left R-module, (r·phi)(s) = phi(r s).
struct FrobeniusDual {
  ModulePresentation module;  // scale 1; degrees are the p-scaled degrees of the maps
  HomModule downstairs;       // the same Hom with R acting through F_*R's own structure
  std::vector<std::vector<Polynomial>> generators;  // phi(e_a) for each left generator
};

inline FrobeniusDual frobenius_dual(const FrobeniusPushforward& fp) {
  const auto& R = fp.module.ring;
  const auto& F = R.field();
  const std::uint32_t p = R.p();
  const std::size_t n = R.nvars();
  const std::size_t m = fp.module.rows();
  const int w = fp.module.scale;
  FrobeniusDual out;
  out.downstairs = hom_presentation(fp.module, ModulePresentation::free(R, {0}));
  const auto& H = out.downstairs;
  const std::size_t k = H.module.rows();

  std::vector<PolyMatrix> T(n);  // T[i][b][a]: coefficient of e_b in x_i·e_a
  for (std::size_t i = 0; i < n; ++i) {
    T[i].assign(m, std::vector<Polynomial>(m, R.zero()));
    for (std::size_t a = 0; a < m; ++a) {
      auto col = detail::vec_to_dense(fp.upstairs[i][a], m, R);
      for (std::size_t b = 0; b < m; ++b) T[i][b][a] = col[b];
    }
  }
  auto star = [&](const std::vector<Polynomial>& phi, std::size_t i) {
    std::vector<Polynomial> r(m, R.zero());
    for (std::size_t a = 0; a < m; ++a) {
      Polynomial s = R.zero();
      for (std::size_t b = 0; b < m; ++b)
        if (!phi[b].is_zero() && !T[i][b][a].is_zero()) s += phi[b] * T[i][b][a];
      r[a] = R.reduce(s);
    }
    return r;
  };
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= p;
  // orbit[c] = x^c ⋆ phi for c in [0,p)^n, indexed p-adically.
  auto orbit = [&](const std::vector<Polynomial>& phi) {
    std::vector<std::vector<Polynomial>> o(count);
    o[0] = phi;
    for (std::size_t idx = 1; idx < count; ++idx) {
      Monomial c = detail::pushforward_exponent(idx, n, p);
      std::size_t i = 0;
      while (c[i] == 0) ++i;
      Monomial prev = c;
      prev.set(i, c[i] - 1);
      o[idx] = star(o[detail::pushforward_index(prev, p)], i);
    }
    return o;
  };

  std::vector<int> comp_twists(m);
  for (std::size_t a = 0; a < m; ++a) comp_twists[a] = -fp.module.row_twists[a];
  std::vector<std::vector<Polynomial>> h(k);
  std::vector<std::vector<std::vector<Polynomial>>> orbits(k);
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t a = 0; a < m; ++a) h[l].push_back(H.evaluate(l, a)[0]);
    orbits[l] = orbit(h[l]);
  }
  // m ⋆ H, as a module under the downstairs action.
  std::vector<Vec> wgens;
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t idx = 1; idx < count; ++idx) wgens.push_back(detail::dense_to_vec(orbits[l][idx]));
    for (std::size_t j = 0; j < n; ++j) {
      Vec v = detail::dense_to_vec(h[l]);
      wgens.push_back(detail::reduce_vec(R, vec_scale(v, 1, Monomial::variable(n, j), F)));
    }
  }
  ModuleGB gb = detail::quotient_engine(R, comp_twists, w);
  for (auto& v : wgens)
    if (!v.empty()) gb.add(v);
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return H.module.row_twists[a] < H.module.row_twists[b]; });
  std::vector<std::size_t> gens;
  for (auto l : order) {
    Vec v = detail::dense_to_vec(h[l]);
    if (v.empty() || gb.contains(v)) continue;
    gens.push_back(l);
    gb.add(v);
  }
  // Relations: r = sum_c s_c^p x^c kills phi_l iff sum_c s_c·(x^c ⋆ phi_l) = 0.
  std::vector<Vec> images;
  std::vector<int> src;
  for (auto l : gens)
    for (std::size_t idx = 0; idx < count; ++idx) {
      images.push_back(detail::dense_to_vec(orbits[l][idx]));
      src.push_back(H.module.row_twists[l] + static_cast<int>(detail::pushforward_exponent(idx, n, p).degree()));
    }
  auto ker = detail::kernel_over(R, comp_twists, images, src, {}, w);
  ModulePresentation left{R, {}, {}, {}, 1};
  for (auto l : gens) {
    left.row_twists.push_back(H.module.row_twists[l]);
    out.generators.push_back(h[l]);
  }
  for (auto& v : ker) {
    std::vector<Polynomial> rel(gens.size(), R.zero());
    for (auto& t : v) {
      std::size_t l = t.comp / count, idx = t.comp % count;
      Monomial c = detail::pushforward_exponent(idx, n, p);
      rel[l] += Polynomial::monomial(F, t.mono.pow(p) * c, t.coeff);
    }
    for (auto& f : rel) f = R.reduce(f);
    Vec col = detail::dense_to_vec(rel);
    if (col.empty()) continue;
    left.columns.push_back(std::move(col));
    left.col_twists.push_back(static_cast<int>(detail::degree_of(v, src, w)));
  }
  out.module = minimal_presentation(left);
  return out;
}

}  // namespace fpi
