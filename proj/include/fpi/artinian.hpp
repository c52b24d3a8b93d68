#pragma once

// Finite-length modules as F_p-vector spaces with one action matrix per
// variable: realization from presentations, Matlis duals, socles, Hom
// spaces, isomorphism testing and the depth-0 Frobenius test F(E) ≅ E.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpi/error.hpp"
#include "fpi/gfpoly.hpp"
#include "fpi/groebner.hpp"
#include "fpi/linalg.hpp"
#include "fpi/resolutions.hpp"

namespace fpi {

/// Column convention: action[i] applied to coordinates of v gives x_i·v.
struct FiniteLengthModule {
  PrimeField field;
  std::size_t nvars = 0;
  std::size_t dim = 0;
  std::vector<FpMatrix> action;
  std::vector<int> degrees;  // per basis vector; empty when ungraded
};

namespace detail {

inline const std::size_t kMaxRealizedDimension = 20000;

inline FpMatrix stack_actions(const FiniteLengthModule& M) {
  return FpMatrix::vstack(M.action, M.field, M.dim);
}

inline FpMatrix hstack(const std::vector<FpMatrix>& parts, PrimeField F, std::size_t rows) {
  std::size_t cols = 0;
  for (auto& p : parts) cols += p.cols();
  FpMatrix m(F, rows, cols);
  std::size_t at = 0;
  for (auto& p : parts) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) m(i, at + j) = p(i, j);
    at += p.cols();
  }
  return m;
}

inline std::vector<std::uint32_t> column_of(const FpMatrix& m, std::size_t j) {
  std::vector<std::uint32_t> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

/// Row echelon basis grown one vector at a time.
class IncrementalSpan {
 public:
  IncrementalSpan(PrimeField F, std::size_t n) : F_(F), n_(n) {}
  std::size_t rank() const { return rows_.size(); }

  std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      auto c = v[pivots_[k]];
      if (!c) continue;
      for (std::size_t j = pivots_[k]; j < n_; ++j) v[j] = F_.sub(v[j], F_.mul(c, rows_[k][j]));
    }
    return v;
  }
  bool contains(const std::vector<std::uint32_t>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
  }
  bool add(const std::vector<std::uint32_t>& v) {
    auto r = reduce(v);
    std::size_t piv = 0;
    while (piv < n_ && !r[piv]) ++piv;
    if (piv == n_) return false;
    auto inv = F_.inv(r[piv]);
    for (auto& x : r) x = F_.mul(x, inv);
    // keep the echelon order by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    for (std::size_t k = pos; k < rows_.size(); ++k) {
      auto c = rows_[k][piv];
      if (!c) continue;
      for (std::size_t j = piv; j < n_; ++j) rows_[k][j] = F_.sub(rows_[k][j], F_.mul(c, r[j]));
    }
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    return true;
  }

 private:
  PrimeField F_;
  std::size_t n_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

/// How a module is generated: homogeneous generators (standard basis
/// vectors spanning a complement of mM) and a basis of words mono·g_j.
struct Generation {
  std::vector<std::size_t> generators;  // indices of standard basis vectors
  std::vector<std::pair<Monomial, std::size_t>> words;
  FpMatrix words_matrix;  // columns are the word vectors
  FpMatrix words_inverse;
};

inline Generation generation(const FiniteLengthModule& M) {
  const auto& F = M.field;
  Generation g;
  IncrementalSpan mm(F, M.dim);
  for (auto& a : M.action)
    for (std::size_t j = 0; j < M.dim; ++j) mm.add(column_of(a, j));
  std::vector<std::size_t> order(M.dim);
  for (std::size_t k = 0; k < M.dim; ++k) order[k] = k;
  if (!M.degrees.empty())
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return M.degrees[a] < M.degrees[b]; });
  for (auto k : order) {
    std::vector<std::uint32_t> e(M.dim, 0);
    e[k] = 1;
    if (mm.add(e)) g.generators.push_back(k);
  }
  IncrementalSpan words(F, M.dim);
  std::vector<std::vector<std::uint32_t>> vecs;
  for (std::size_t j = 0; j < g.generators.size(); ++j) {
    std::vector<std::uint32_t> e(M.dim, 0);
    e[g.generators[j]] = 1;
    words.add(e);
    vecs.push_back(e);
    g.words.push_back({Monomial(M.nvars), j});
  }
  for (std::size_t w = 0; w < g.words.size() && words.rank() < M.dim; ++w)
    for (std::size_t i = 0; i < M.nvars; ++i) {
      auto v = M.action[i].apply(vecs[w]);
      if (!words.add(v)) continue;
      vecs.push_back(v);
      g.words.push_back({g.words[w].first * Monomial::variable(M.nvars, i), g.words[w].second});
    }
  g.words_matrix = FpMatrix(F, M.dim, M.dim);
  for (std::size_t w = 0; w < vecs.size(); ++w)
    for (std::size_t r = 0; r < M.dim; ++r) g.words_matrix(r, w) = vecs[w][r];
  auto inv = g.words_matrix.inverse();
  if (!inv) throw Error(ErrorKind::PipelineInvariant, "word vectors do not span the module");
  g.words_inverse = *inv;
  return g;
}

inline FpMatrix monomial_action(const FiniteLengthModule& M, const Monomial& m) {
  FpMatrix r = FpMatrix::identity(M.field, M.dim);
  for (std::size_t i = 0; i < M.nvars; ++i)
    for (std::uint32_t e = 0; e < m[i]; ++e) r = M.action[i] * r;
  return r;
}

inline void check_compatible(const FiniteLengthModule& M, const FiniteLengthModule& N) {
  if (M.field != N.field || M.nvars != N.nvars) throw Error(ErrorKind::Mismatch, "modules over different rings");
}

}  // namespace detail

/// Matrix of multiplication by f.
inline FpMatrix polynomial_action(const FiniteLengthModule& M, const Polynomial& f) {
  FpMatrix r(M.field, M.dim, M.dim);
  for (auto& t : f.terms()) r = r + detail::monomial_action(M, t.mono).scaled(t.coeff);
  return r;
}

/// Explicit F_p-basis (standard monomials of each free summand) and action
/// matrices of a finite-length module given by a presentation.
inline FiniteLengthModule realize_finite(const ModulePresentation& m) {
  const auto& R = m.ring;
  const std::size_t n = R.nvars();
  const std::size_t r = m.rows();
  ModuleGB gb = detail::quotient_engine(R, m.row_twists, m.scale);
  for (auto& c : m.columns)
    if (!c.empty()) gb.add(c);
  gb.complete();
  std::vector<std::vector<Monomial>> leads(r);
  for (auto& g : gb.basis()) leads[g.front().comp].push_back(g.front().mono);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      bool pure = false;
      for (auto& l : leads[c])
        if (l.degree() == l[i]) pure = true;
      if (!pure) throw Error(ErrorKind::InfiniteLength, "module does not have finite length");
    }
  auto standard = [&](std::size_t c, const Monomial& mono) {
    for (auto& l : leads[c])
      if (l.divides(mono)) return false;
    return true;
  };
  struct Key {
    std::size_t comp;
    Monomial mono;
  };
  std::vector<Key> basis;
  for (std::size_t c = 0; c < r; ++c) {
    if (!standard(c, Monomial(n))) continue;
    std::vector<Monomial> layer{Monomial(n)};
    std::vector<Monomial> all = layer;
    while (!layer.empty()) {
      std::vector<Monomial> next;
      for (auto& mono : layer)
        for (std::size_t i = 0; i < n; ++i) {
          Monomial t = mono * Monomial::variable(n, i);
          if (!standard(c, t) || std::find(next.begin(), next.end(), t) != next.end()) continue;
          next.push_back(t);
        }
      all.insert(all.end(), next.begin(), next.end());
      if (basis.size() + all.size() > detail::kMaxRealizedDimension)
        throw Error(ErrorKind::Resource, "finite-length module is too large to realize");
      layer = std::move(next);
    }
    for (auto& mono : all) basis.push_back({c, mono});
  }
  auto degree = [&](const Key& k) { return m.scale * static_cast<int>(k.mono.degree()) + m.row_twists[k.comp]; };
  std::stable_sort(basis.begin(), basis.end(), [&](const Key& a, const Key& b) {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    if (a.comp != b.comp) return a.comp < b.comp;
    return order_compare_unchecked(a.mono, b.mono, MonomialOrder::grevlex()) == std::strong_ordering::greater;
  });
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index(r);
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k].comp][basis[k].mono] = k;

  FiniteLengthModule M{R.field(), n, basis.size(), {}, {}};
  for (auto& b : basis) M.degrees.push_back(degree(b));
  for (std::size_t i = 0; i < n; ++i) {
    FpMatrix a(R.field(), M.dim, M.dim);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Vec v{{static_cast<std::uint32_t>(basis[k].comp), basis[k].mono * Monomial::variable(n, i), 1}};
      for (auto& t : gb.reduce(v)) a(index[t.comp].at(t.mono), k) = t.coeff;
    }
    M.action.push_back(std::move(a));
  }
  return M;
}

/// R as a module over itself (R Artinian).
inline FiniteLengthModule realize_ring(const RingSpec& R) { return realize_finite(ModulePresentation::cyclic(R, {})); }

/// Hom_k(M, k) with the transposed actions; degrees negate.
inline FiniteLengthModule matlis_dual(const FiniteLengthModule& M) {
  FiniteLengthModule D{M.field, M.nvars, M.dim, {}, {}};
  for (auto& a : M.action) D.action.push_back(a.transposed());
  for (auto d : M.degrees) D.degrees.push_back(-d);
  return D;
}

inline std::size_t socle_dimension(const FiniteLengthModule& M) {
  if (M.nvars == 0) return M.dim;
  return M.dim - detail::stack_actions(M).rank();
}

/// dim_k M/mM.
inline std::size_t minimal_generator_count(const FiniteLengthModule& M) {
  return M.dim - detail::hstack(M.action, M.field, M.dim).rank();
}

inline FiniteLengthModule direct_sum(const FiniteLengthModule& M, const FiniteLengthModule& N) {
  detail::check_compatible(M, N);
  FiniteLengthModule S{M.field, M.nvars, M.dim + N.dim, {}, {}};
  for (std::size_t i = 0; i < M.nvars; ++i) {
    FpMatrix a(M.field, S.dim, S.dim);
    for (std::size_t r = 0; r < M.dim; ++r)
      for (std::size_t c = 0; c < M.dim; ++c) a(r, c) = M.action[i](r, c);
    for (std::size_t r = 0; r < N.dim; ++r)
      for (std::size_t c = 0; c < N.dim; ++c) a(M.dim + r, M.dim + c) = N.action[i](r, c);
    S.action.push_back(std::move(a));
  }
  if (!M.degrees.empty() && !N.degrees.empty()) {
    S.degrees = M.degrees;
    S.degrees.insert(S.degrees.end(), N.degrees.begin(), N.degrees.end());
  }
  return S;
}

inline FiniteLengthModule direct_power(const FiniteLengthModule& M, std::size_t n) {
  if (n == 0) {
    FiniteLengthModule Z{M.field, M.nvars, 0, {}, {}};
    for (std::size_t i = 0; i < M.nvars; ++i) Z.action.emplace_back(M.field, 0, 0);
    return Z;
  }
  FiniteLengthModule S = M;
  for (std::size_t k = 1; k < n; ++k) S = direct_sum(S, M);
  return S;
}

/// M / fM.
inline FiniteLengthModule quotient_by_element(const FiniteLengthModule& M, const Polynomial& f) {
  const auto& F = M.field;
  FpMatrix fa = polynomial_action(M, f);
  detail::IncrementalSpan span(F, M.dim);
  std::vector<std::vector<std::uint32_t>> sub;
  for (std::size_t j = 0; j < M.dim; ++j) {
    auto v = detail::column_of(fa, j);
    if (span.add(v)) sub.push_back(v);
  }
  std::vector<std::size_t> complement;
  for (std::size_t k = 0; k < M.dim; ++k) {
    std::vector<std::uint32_t> e(M.dim, 0);
    e[k] = 1;
    if (span.add(e)) complement.push_back(k);
  }
  // Coordinates in the basis [sub | complement]; keep the complement part.
  FpMatrix basis(F, M.dim, M.dim);
  for (std::size_t j = 0; j < sub.size(); ++j)
    for (std::size_t r = 0; r < M.dim; ++r) basis(r, j) = sub[j][r];
  for (std::size_t j = 0; j < complement.size(); ++j) basis(complement[j], sub.size() + j) = 1;
  auto inv = basis.inverse();
  if (!inv) throw Error(ErrorKind::PipelineInvariant, "quotient basis is singular");
  FiniteLengthModule Q{F, M.nvars, complement.size(), {}, {}};
  for (auto& a : M.action) {
    FpMatrix coords = *inv * a;
    FpMatrix q(F, Q.dim, Q.dim);
    for (std::size_t r = 0; r < Q.dim; ++r)
      for (std::size_t c = 0; c < Q.dim; ++c) q(r, c) = coords(sub.size() + r, complement[c]);
    Q.action.push_back(std::move(q));
  }
  if (!M.degrees.empty())
    for (auto k : complement) Q.degrees.push_back(M.degrees[k]);
  return Q;
}

/// k-basis of Hom_R(M, N), each as a dim N x dim M matrix X with
/// X·A_i = B_i·X. Unknowns are the images of the generators of M.
inline std::vector<FpMatrix> hom_space(const FiniteLengthModule& M, const FiniteLengthModule& N) {
  detail::check_compatible(M, N);
  const auto& F = M.field;
  if (M.dim == 0 || N.dim == 0) return {};
  auto gen = detail::generation(M);
  const std::size_t s = gen.generators.size(), dn = N.dim, unknowns = s * dn;
  std::vector<FpMatrix> word_action;  // mono_w acting on N
  word_action.reserve(gen.words.size());
  for (auto& [mono, j] : gen.words) word_action.push_back(detail::monomial_action(N, mono));
  std::vector<std::vector<std::uint32_t>> equations;
  for (std::size_t w = 0; w < gen.words.size(); ++w)
    for (std::size_t i = 0; i < M.nvars; ++i) {
      auto coords = gen.words_inverse.apply(M.action[i].apply(detail::column_of(gen.words_matrix, w)));
      // B_i·mono_w(B)·n_{j_w} - sum_u coords_u·mono_u(B)·n_{j_u} = 0
      FpMatrix lhs(F, dn, unknowns);
      FpMatrix bw = N.action[i] * word_action[w];
      std::size_t jw = gen.words[w].second;
      for (std::size_t r = 0; r < dn; ++r)
        for (std::size_t c = 0; c < dn; ++c) lhs(r, jw * dn + c) = bw(r, c);
      for (std::size_t u = 0; u < gen.words.size(); ++u) {
        if (!coords[u]) continue;
        std::size_t ju = gen.words[u].second;
        for (std::size_t r = 0; r < dn; ++r)
          for (std::size_t c = 0; c < dn; ++c)
            lhs(r, ju * dn + c) = F.sub(lhs(r, ju * dn + c), F.mul(coords[u], word_action[u](r, c)));
      }
      for (std::size_t r = 0; r < dn; ++r) {
        std::vector<std::uint32_t> row(unknowns);
        for (std::size_t c = 0; c < unknowns; ++c) row[c] = lhs(r, c);
        equations.push_back(std::move(row));
      }
    }
  FpMatrix system(F, equations.size(), unknowns);
  for (std::size_t r = 0; r < equations.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = equations[r][c];
  FpMatrix sol = system.nullspace();
  std::vector<FpMatrix> out;
  for (std::size_t k = 0; k < sol.cols(); ++k) {
    FpMatrix in_words(F, dn, M.dim);
    for (std::size_t u = 0; u < gen.words.size(); ++u) {
      std::size_t ju = gen.words[u].second;
      std::vector<std::uint32_t> nj(dn);
      for (std::size_t c = 0; c < dn; ++c) nj[c] = sol(ju * dn + c, k);
      auto img = word_action[u].apply(nj);
      for (std::size_t r = 0; r < dn; ++r) in_words(r, u) = img[r];
    }
    out.push_back(in_words * gen.words_inverse);
  }
  return out;
}

enum class IsoVerdict { isomorphic, not_isomorphic, inconclusive };

inline std::string_view to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::isomorphic: return "isomorphic";
    case IsoVerdict::not_isomorphic: return "not_isomorphic";
    case IsoVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

struct IsoWitness {
  IsoVerdict verdict = IsoVerdict::inconclusive;
  std::optional<FpMatrix> map;  // N <- M, invertible, intertwining
  std::uint64_t trials = 0;
  std::string reason;
};

struct IsoOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 256;
  std::uint64_t exhaustive_limit = 1u << 16;  // enumerate Hom when p^dim Hom is at most this
};

namespace detail {

/// dim m^k M for k = 0, 1, ... until zero.
inline std::vector<std::size_t> loewy_dimensions(const FiniteLengthModule& M) {
  std::vector<std::size_t> dims;
  FpMatrix cur = FpMatrix::identity(M.field, M.dim);
  for (;;) {
    std::size_t r = cur.rank();
    dims.push_back(r);
    if (r == 0 || dims.size() > M.dim + 1) break;
    std::vector<FpMatrix> parts;
    for (auto& a : M.action) parts.push_back(a * cur);
    cur = hstack(parts, M.field, M.dim);
  }
  return dims;
}

/// dim (0 :_M m^k) for k = 1, 2, ... until all of M.
inline std::vector<std::size_t> socle_series(const FiniteLengthModule& M) {
  std::vector<std::size_t> dims;
  if (M.dim == 0) return dims;
  FpMatrix killer = stack_actions(M);  // kernel = (0 : m)
  for (std::size_t k = 0; k <= M.dim; ++k) {
    FpMatrix reduced = killer;
    auto piv = reduced.rref();
    FpMatrix rows(M.field, piv.size(), M.dim);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < M.dim; ++j) rows(i, j) = reduced(i, j);
    std::size_t d = M.dim - piv.size();
    dims.push_back(d);
    if (d == M.dim) break;
    std::vector<FpMatrix> parts;
    for (auto& a : M.action) parts.push_back(rows * a);
    killer = FpMatrix::vstack(parts, M.field, M.dim);
  }
  return dims;
}

}  // namespace detail

inline bool intertwines(const FpMatrix& X, const FiniteLengthModule& M, const FiniteLengthModule& N) {
  for (std::size_t i = 0; i < M.nvars; ++i)
    if (!(X * M.action[i] == N.action[i] * X)) return false;
  return true;
}

inline IsoWitness modules_isomorphic(const FiniteLengthModule& M, const FiniteLengthModule& N, IsoOptions opt = {}) {
  detail::check_compatible(M, N);
  IsoWitness w;
  auto reject = [&](const char* why) {
    w.verdict = IsoVerdict::not_isomorphic;
    w.reason = why;
    return w;
  };
  if (M.dim != N.dim) return reject("k-dimensions differ");
  if (M.dim == 0) {
    w.verdict = IsoVerdict::isomorphic;
    w.map = FpMatrix(M.field, 0, 0);
    return w;
  }
  if (socle_dimension(M) != socle_dimension(N)) return reject("socle dimensions differ");
  if (minimal_generator_count(M) != minimal_generator_count(N)) return reject("minimal generator counts differ");
  if (detail::loewy_dimensions(M) != detail::loewy_dimensions(N)) return reject("Loewy series differ");
  if (detail::socle_series(M) != detail::socle_series(N)) return reject("socle series differ");

  auto basis = hom_space(M, N);
  if (basis.empty()) return reject("Hom(M, N) = 0");
  const auto& F = M.field;
  const std::size_t k = basis.size();
  auto combine = [&](const std::vector<std::uint32_t>& c) {
    FpMatrix X(F, N.dim, M.dim);
    for (std::size_t t = 0; t < k; ++t)
      if (c[t]) X = X + basis[t].scaled(c[t]);
    return X;
  };
  auto accept = [&](FpMatrix X) {
    w.verdict = IsoVerdict::isomorphic;
    w.map = std::move(X);
    return w;
  };
  // Exhaustive when p^k is small.
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t t = 0; t < k && small; ++t) {
    total *= F.p();
    if (total > opt.exhaustive_limit) small = false;
  }
  if (small) {
    std::vector<std::uint32_t> c(k, 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t t = 0; t < k; ++t) {
        c[t] = static_cast<std::uint32_t>(v % F.p());
        v /= F.p();
      }
      ++w.trials;
      FpMatrix X = combine(c);
      if (X.determinant() != 0) return accept(std::move(X));
    }
    return reject("no invertible element in Hom(M, N) (exhaustive)");
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint32_t> coef(0, F.p() - 1);
  std::vector<std::uint32_t> c(k);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    for (auto& x : c) x = coef(rng);
    ++w.trials;
    FpMatrix X = combine(c);
    if (X.determinant() != 0) return accept(std::move(X));
  }
  w.verdict = IsoVerdict::inconclusive;
  w.reason = "no invertible element among random draws";
  return w;
}

/// A presentation over R of a graded finite-length module: generators span
/// a complement of mM, relations rewrite x_i·(word) in the word basis.
inline ModulePresentation present(const FiniteLengthModule& M, const RingSpec& R) {
  if (M.degrees.size() != M.dim) throw Error(ErrorKind::Mismatch, "presenting needs a graded module");
  const auto& F = M.field;
  const std::size_t n = M.nvars;
  auto gen = detail::generation(M);
  ModulePresentation P{R, {}, {}, {}, 1};
  for (auto k : gen.generators) P.row_twists.push_back(M.degrees[k]);
  auto word_vec = [&](std::size_t u, std::uint32_t c) {
    Vec v{{static_cast<std::uint32_t>(gen.words[u].second), gen.words[u].first, c}};
    return v;
  };
  for (std::size_t w = 0; w < gen.words.size(); ++w)
    for (std::size_t i = 0; i < n; ++i) {
      auto coords = gen.words_inverse.apply(M.action[i].apply(detail::column_of(gen.words_matrix, w)));
      Vec rel{{static_cast<std::uint32_t>(gen.words[w].second), gen.words[w].first * Monomial::variable(n, i), 1}};
      for (std::size_t u = 0; u < coords.size(); ++u)
        if (coords[u]) {
          auto t = word_vec(u, F.neg(coords[u]));
          rel.insert(rel.end(), t.begin(), t.end());
        }
      rel = detail::reduce_vec(R, vec_normalize(std::move(rel), F, detail::kPot));
      if (rel.empty()) continue;
      P.columns.push_back(std::move(rel));
      P.col_twists.push_back(P.row_twists[gen.words[w].second] + static_cast<int>(gen.words[w].first.degree()) + 1);
    }
  return minimal_presentation(P);
}

enum class Verdict { yes, no, inconclusive };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

/// Depth-0 test: E = dual of R, F(E) computed from a presentation of E.
struct ArtinianFpi {
  std::size_t length = 0;           // dim_k R
  std::size_t socle_dimension = 0;
  std::size_t dim_E = 0, dim_FE = 0;
  std::optional<std::size_t> power;  // n with F(E) ≅ E^n, when found
  Verdict injective = Verdict::inconclusive;
  Verdict weakly_fpi = Verdict::inconclusive;
  IsoWitness witness;
};

inline ArtinianFpi weakly_fpi_artinian(const RingSpec& R, IsoOptions opt = {}) {
  auto h = hilbert_data(R);
  if (h.dimension != 0) throw Error(ErrorKind::UnsupportedDimension, "the Artinian test needs a zero-dimensional ring");
  ArtinianFpi out;
  auto ring = realize_ring(R);
  out.length = ring.dim;
  out.socle_dimension = socle_dimension(ring);
  auto E = matlis_dual(ring);
  auto FE = realize_finite(frobenius_functor(present(E, R), 1));
  out.dim_E = E.dim;
  out.dim_FE = FE.dim;
  if (FE.dim == 0 || FE.dim % E.dim != 0) {
    out.injective = Verdict::no;
    out.weakly_fpi = Verdict::no;
    out.witness.verdict = IsoVerdict::not_isomorphic;
    out.witness.reason = "dim F(E) is not a multiple of dim E";
    return out;
  }
  std::size_t n = FE.dim / E.dim;
  out.witness = modules_isomorphic(FE, direct_power(E, n), opt);
  switch (out.witness.verdict) {
    case IsoVerdict::isomorphic:
      out.injective = Verdict::yes;
      out.power = n;
      out.weakly_fpi = n == 1 ? Verdict::yes : Verdict::no;
      break;
    case IsoVerdict::not_isomorphic:
      out.injective = Verdict::no;
      out.weakly_fpi = Verdict::no;
      break;
    case IsoVerdict::inconclusive:
      out.injective = Verdict::inconclusive;
      out.weakly_fpi = n == 1 ? Verdict::inconclusive : Verdict::no;
      break;
  }
  return out;
}

}  // namespace fpi
