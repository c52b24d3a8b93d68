#pragma once

// Ideals of S = F_p[x_1..x_n], quotient rings R = S/I, and ideal arithmetic:
// normal forms, colon, saturation, intersection, bracket powers, Hilbert
// data and minimal primes of monomial ideals.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpi/error.hpp"
#include "fpi/gfpoly.hpp"
#include "fpi/module_gb.hpp"
#include "fpi/poly_io.hpp"

namespace fpi {

/// Reduced Gröbner basis of the ideal generated by `gens`, as polynomials
/// sorted ascending by leading term.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, PrimeField F, std::size_t nvars,
                                              MonomialOrder ord = MonomialOrder::grevlex(), Limits limits = {}) {
  ModuleGB gb(F, nvars, {0}, ord, 1, limits);
  for (auto& g : gens)
    if (!g.is_zero()) gb.add(vec_from_poly(g, 0, ord));
  std::vector<Polynomial> out;
  for (auto& v : gb.reduced_basis()) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (auto& t : v) terms.push_back({t.mono, t.coeff});
    out.push_back(Polynomial::from_terms(F, nvars, std::move(terms), ord));
  }
  return out;
}

/// Ideal of the polynomial ring S with a lazily computed grevlex basis.
/// Copies share the cache; the cache is filled at most once under a lock.
class Ideal {
 public:
  Ideal() : cache_(std::make_shared<Cache>()) {}
  Ideal(PrimeField F, std::size_t nvars, std::vector<Polynomial> gens, Limits limits = {})
      : F_(F), nvars_(nvars), limits_(limits), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.nvars() != nvars) throw Error(ErrorKind::Mismatch, "generator has wrong variable count");
      if (!g.is_zero()) gens_.push_back(g.order() == MonomialOrder::grevlex() ? g : g.with_order(MonomialOrder::grevlex()));
    }
  }
  static Ideal unit(PrimeField F, std::size_t nvars, Limits limits = {}) {
    return Ideal(F, nvars, {Polynomial::constant(F, nvars, 1)}, limits);
  }

  const PrimeField& field() const { return F_; }
  std::size_t nvars() const { return nvars_; }
  const Limits& limits() const { return limits_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Reduced grevlex basis (cached).
  const std::vector<Polynomial>& basis() const {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->basis) cache_->basis = groebner_basis(gens_, F_, nvars_, MonomialOrder::grevlex(), limits_);
    return *cache_->basis;
  }
  std::vector<Polynomial> basis(const MonomialOrder& ord) const {
    if (ord == MonomialOrder::grevlex()) return basis();
    return groebner_basis(gens_, F_, nvars_, ord, limits_);
  }

  Polynomial normal_form(const Polynomial& f) const {
    if (f.is_zero() || gens_.empty()) return f.order() == MonomialOrder::grevlex() ? f : f.with_order(MonomialOrder::grevlex());
    ModuleGB& gb = engine();
    Vec r = gb.reduce(vec_from_poly(f, 0, MonomialOrder::grevlex()));
    std::vector<Term> terms;
    for (auto& t : r) terms.push_back({t.mono, t.coeff});
    return Polynomial::from_terms(F_, nvars_, std::move(terms));
  }
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& J) const {
    for (auto& g : J.generators())
      if (!contains(g)) return false;
    return true;
  }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    auto& b = basis();
    return b.size() == 1 && b.front().is_constant();
  }
  bool is_homogeneous() const {
    for (auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }
  bool is_monomial() const {
    for (auto& g : gens_)
      if (!g.is_monomial()) return false;
    return true;
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    if (a.nvars_ != b.nvars_ || !(a.F_ == b.F_)) return false;
    return a.basis() == b.basis();
  }

  Ideal operator+(const Ideal& b) const {
    auto g = gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return Ideal(F_, nvars_, std::move(g), limits_);
  }
  Ideal operator*(const Ideal& b) const {
    std::vector<Polynomial> g;
    for (auto& x : gens_)
      for (auto& y : b.gens_) g.push_back(x * y);
    return Ideal(F_, nvars_, std::move(g), limits_);
  }
  Ideal times(const Polynomial& f) const {
    std::vector<Polynomial> g;
    for (auto& x : gens_) g.push_back(x * f);
    return Ideal(F_, nvars_, std::move(g), limits_);
  }
  Ideal with(const std::vector<Polynomial>& more) const {
    auto g = gens_;
    g.insert(g.end(), more.begin(), more.end());
    return Ideal(F_, nvars_, std::move(g), limits_);
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<Polynomial>> basis;
    std::unique_ptr<ModuleGB> engine;
  };

  // Reduction engine built from the reduced basis; callers only read it.
  ModuleGB& engine() const {
    const auto& b = basis();
    std::lock_guard lock(cache_->mutex);
    if (!cache_->engine) {
      auto e = std::make_unique<ModuleGB>(F_, nvars_, std::vector<int>{0}, MonomialOrder::grevlex(), 1, limits_);
      for (auto& g : b) e->add(vec_from_poly(g, 0, MonomialOrder::grevlex()));
      cache_->engine = std::move(e);
    }
    return *cache_->engine;
  }

  PrimeField F_{};
  std::size_t nvars_ = 0;
  Limits limits_{};
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// The ambient object R = S/I. Ideals of R are represented by their
/// preimages in S (ambient ideals containing I).
class RingSpec {
 public:
  RingSpec() = default;
  RingSpec(PrimeField F, std::vector<std::string> vars, std::vector<Polynomial> ideal_gens, std::string label = {},
           Limits limits = {}, bool require_homogeneous = true)
      : F_(F), vars_(std::move(vars)), label_(std::move(label)), limits_(limits) {
    if (vars_.empty() || vars_.size() > kMaxVars - 2)
      throw Error(ErrorKind::Mismatch, "variable count must be between 1 and " + std::to_string(kMaxVars - 2));
    for (auto& g : ideal_gens)
      if (require_homogeneous && !g.is_homogeneous())
        throw Error(ErrorKind::NonHomogeneous, "generator " + to_string(g, vars_) + " is not homogeneous");
    ideal_ = Ideal(F_, vars_.size(), std::move(ideal_gens), limits_);
  }

  /// Convenience constructor from polynomial strings.
  static RingSpec parse(std::uint32_t p, std::vector<std::string> vars, const std::vector<std::string>& gens,
                        std::string label = {}, bool require_homogeneous = true) {
    PrimeField F(p);
    std::vector<Polynomial> polys;
    for (auto& g : gens) polys.push_back(parse_polynomial(g, vars, F));
    return RingSpec(F, std::move(vars), std::move(polys), std::move(label), {}, require_homogeneous);
  }

  const PrimeField& field() const { return F_; }
  std::uint32_t p() const { return F_.p(); }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const Ideal& ideal() const { return ideal_; }
  const std::string& label() const { return label_; }
  const Limits& limits() const { return limits_; }
  void set_limits(const Limits& l) {
    limits_ = l;
    ideal_ = Ideal(F_, vars_.size(), ideal_.generators(), l);
  }

  Polynomial zero() const { return Polynomial(F_, nvars()); }
  Polynomial one() const { return Polynomial::constant(F_, nvars(), 1); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(F_, nvars(), i); }
  Polynomial poly(const std::string& text) const { return parse_polynomial(text, vars_, F_); }
  std::string str(const Polynomial& f) const { return to_string(f, vars_); }

  Polynomial reduce(const Polynomial& f) const { return ideal_.normal_form(f); }
  bool is_zero(const Polynomial& f) const { return ideal_.contains(f); }

  /// Preimage in S of the ideal of R generated by `gens`.
  Ideal lift(const std::vector<Polynomial>& gens) const { return ideal_.with(gens); }
  Ideal ambient_ideal(const std::vector<Polynomial>& gens) const { return Ideal(F_, nvars(), gens, limits_); }

  RingSpec ambient() const { return RingSpec(F_, vars_, {}, label_.empty() ? "" : label_ + " ambient", limits_, false); }
  RingSpec quotient(const std::vector<Polynomial>& more, std::string label = {}) const {
    auto g = ideal_.generators();
    g.insert(g.end(), more.begin(), more.end());
    return RingSpec(F_, vars_, std::move(g), std::move(label), limits_, false);
  }
  bool is_homogeneous() const { return ideal_.is_homogeneous(); }

 private:
  PrimeField F_{};
  std::vector<std::string> vars_;
  Ideal ideal_;
  std::string label_;
  Limits limits_{};
};

namespace detail {

inline Polynomial poly_from_vec(const Vec& v, std::uint32_t comp, const PrimeField& F, std::size_t nvars) {
  return vec_component(v, comp, F, nvars);
}

/// Generators of the kernel of S^c -> S^r / <extra> sending e_j to cols[j].
/// Degree bookkeeping: a term (comp, m) has degree weight*|m| + twist.
inline std::vector<Vec> kernel_vectors(const PrimeField& F, std::size_t nvars, const std::vector<int>& row_twists,
                                       const std::vector<Vec>& cols, const std::vector<int>& col_twists,
                                       const std::vector<Vec>& extra, const Limits& limits, int weight = 1) {
  const auto r = static_cast<std::uint32_t>(row_twists.size());
  std::vector<int> twists = row_twists;
  twists.insert(twists.end(), col_twists.begin(), col_twists.end());
  const auto ord = MonomialOrder::grevlex();
  ModuleGB gb(F, nvars, twists, ord, weight, limits);
  for (auto& e : extra)
    if (!e.empty()) gb.add(e);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Vec v = cols[j];
    v.push_back({r + static_cast<std::uint32_t>(j), Monomial(nvars), 1});
    gb.add(vec_normalize(std::move(v), F, ord));
  }
  gb.complete();
  std::vector<Vec> out;
  for (auto& g : gb.basis()) {
    if (g.front().comp < r) continue;
    Vec t = g;
    for (auto& term : t) term.comp -= r;
    out.push_back(std::move(t));
  }
  return out;
}

inline int poly_degree_or_zero(const Polynomial& f) { return std::max(0, f.degree()); }

}  // namespace detail

/// (I : J) = { f : f J ⊆ I }.
inline Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  const auto& F = I.field();
  const std::size_t n = I.nvars();
  std::vector<Polynomial> hs = J.generators();
  if (hs.empty()) return Ideal::unit(F, n, I.limits());
  if (I.is_zero()) return Ideal(F, n, {}, I.limits());
  const auto ord = MonomialOrder::grevlex();
  const auto& gs = I.generators();
  const auto l = static_cast<std::uint32_t>(hs.size());
  std::vector<int> row_twists(l), col_twists;
  std::vector<Vec> cols;
  Vec s;
  for (std::uint32_t k = 0; k < l; ++k) {
    row_twists[k] = -detail::poly_degree_or_zero(hs[k]);
    auto v = vec_from_poly(hs[k], k, ord);
    s.insert(s.end(), v.begin(), v.end());
  }
  cols.push_back(vec_normalize(std::move(s), F, ord));
  col_twists.push_back(0);
  for (std::uint32_t k = 0; k < l; ++k)
    for (auto& g : gs) {
      cols.push_back(vec_from_poly(g, k, ord));
      col_twists.push_back(detail::poly_degree_or_zero(g) + row_twists[k]);
    }
  auto ker = detail::kernel_vectors(F, n, row_twists, cols, col_twists, {}, I.limits());
  std::vector<Polynomial> out;
  for (auto& v : ker) {
    auto f = detail::poly_from_vec(v, 0, F, n);
    if (!f.is_zero()) out.push_back(f);
  }
  Ideal result(F, n, std::move(out), I.limits());
  return Ideal(F, n, result.basis(), I.limits());
}

/// I ∩ J.
inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  const auto& F = I.field();
  const std::size_t n = I.nvars();
  if (I.is_zero() || J.is_zero()) return Ideal(F, n, {}, I.limits());
  const auto ord = MonomialOrder::grevlex();
  std::vector<Vec> cols;
  std::vector<int> col_twists;
  cols.push_back({{0, Monomial(n), 1}, {1, Monomial(n), 1}});
  col_twists.push_back(0);
  for (auto& g : I.generators()) {
    cols.push_back(vec_from_poly(g, 0, ord));
    col_twists.push_back(detail::poly_degree_or_zero(g));
  }
  for (auto& h : J.generators()) {
    cols.push_back(vec_from_poly(h, 1, ord));
    col_twists.push_back(detail::poly_degree_or_zero(h));
  }
  auto ker = detail::kernel_vectors(F, n, {0, 0}, cols, col_twists, {}, I.limits());
  std::vector<Polynomial> out;
  for (auto& v : ker) {
    auto f = detail::poly_from_vec(v, 0, F, n);
    if (!f.is_zero()) out.push_back(f);
  }
  Ideal result(F, n, std::move(out), I.limits());
  return Ideal(F, n, result.basis(), I.limits());
}

/// Elimination ideal I ∩ F_p[x_{k+1}..x_n], computed with the block order.
/// The result keeps the ambient variable count.
inline Ideal eliminate(const Ideal& I, std::size_t k) {
  auto b = I.basis(MonomialOrder::elimination(k));
  std::vector<Polynomial> keep;
  for (auto& g : b) {
    bool free = true;
    for (auto& t : g.terms())
      for (std::size_t i = 0; i < k; ++i)
        if (t.mono[i]) free = false;
    if (free) keep.push_back(g.with_order(MonomialOrder::grevlex()));
  }
  return Ideal(I.field(), I.nvars(), std::move(keep), I.limits());
}

/// I ∩ J through one auxiliary variable t: eliminate t from tI + (1-t)J.
/// Independent of ideal_intersect; used to cross-check it.
inline Ideal ideal_intersect_elimination(const Ideal& I, const Ideal& J) {
  const auto& F = I.field();
  const std::size_t n = I.nvars();
  const std::size_t m = n + 1;
  Polynomial t = Polynomial::variable(F, m, 0);
  Polynomial one_minus_t = Polynomial::constant(F, m, 1) - t;
  std::vector<Polynomial> gens;
  for (auto& g : I.generators()) gens.push_back(t * g.widened(m, 1));
  for (auto& h : J.generators()) gens.push_back(one_minus_t * h.widened(m, 1));
  Ideal big(F, m, std::move(gens), I.limits());
  Ideal elim = eliminate(big, 1);
  std::vector<Polynomial> out;
  for (auto& g : elim.generators()) {
    std::vector<Term> terms;
    for (auto& tt : g.terms()) {
      Monomial mm(n);
      for (std::size_t i = 0; i < n; ++i) mm.set(i, tt.mono[i + 1]);
      terms.push_back({mm, tt.coeff});
    }
    out.push_back(Polynomial::from_terms(F, n, std::move(terms)));
  }
  Ideal result(F, n, std::move(out), I.limits());
  return Ideal(F, n, result.basis(), I.limits());
}

/// f ∈ √I, via 1 ∈ I + (1 - t f) in S[t].
inline bool radical_member(const Polynomial& f, const Ideal& I) {
  const auto& F = I.field();
  const std::size_t m = I.nvars() + 1;
  std::vector<Polynomial> gens;
  for (auto& g : I.generators()) gens.push_back(g.widened(m, 1));
  gens.push_back(Polynomial::constant(F, m, 1) - Polynomial::variable(F, m, 0) * f.widened(m, 1));
  return Ideal(F, m, std::move(gens), I.limits()).is_unit();
}

/// (I : J^∞) as the stabilising chain I ⊆ (I:J) ⊆ ((I:J):J) ⊆ ...
inline Ideal ideal_saturation(const Ideal& I, const Ideal& J, int max_iterations = 64) {
  Ideal cur(I.field(), I.nvars(), I.basis(), I.limits());
  for (int it = 0; it < max_iterations; ++it) {
    Ideal next = ideal_colon(cur, J);
    if (next == cur) return cur;
    cur = next;
  }
  throw Error(ErrorKind::Resource, "saturation did not stabilise within " + std::to_string(max_iterations) + " steps");
}

/// I^[q], q = p^e: generated by the q-th powers of the generators.
inline Ideal bracket_power(const Ideal& I, unsigned e) {
  if (e == 0) return I;
  std::vector<Polynomial> gens;
  for (auto& g : I.generators()) gens.push_back(poly_pow_frobenius(g, e));
  return Ideal(I.field(), I.nvars(), std::move(gens), I.limits());
}

/// Ideal of R = S/I generated by x_1..x_n, lifted to S.
inline Ideal maximal_ideal(const RingSpec& R) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < R.nvars(); ++i) v.push_back(R.var(i));
  return R.lift(v);
}

/// m^[q] in the ambient ring (no I added).
inline Ideal frobenius_maximal(const RingSpec& R, unsigned e) {
  std::vector<Polynomial> v;
  std::uint64_t q = frobenius_q(R.p(), e);
  for (std::size_t i = 0; i < R.nvars(); ++i)
    v.push_back(Polynomial::monomial(R.field(), Monomial::variable(R.nvars(), i, static_cast<std::uint32_t>(q))));
  return R.ambient_ideal(v);
}

// ---------------------------------------------------------------------------
// Hilbert data

struct HilbertData {
  std::size_t dimension = 0;
  std::vector<std::int64_t> numerator;  // h-polynomial; series = numerator(t) / (1-t)^dimension
  std::optional<std::uint64_t> colength;  // set iff dimension == 0

  std::int64_t multiplicity() const {
    std::int64_t s = 0;
    for (auto c : numerator) s += c;
    return s;
  }
};

namespace detail {

using IntPoly = std::vector<std::int64_t>;

inline IntPoly ip_trim(IntPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}
inline IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return ip_trim(r);
}
inline IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return ip_trim(r);
}
inline IntPoly ip_shift(const IntPoly& a, std::size_t k) {
  if (a.empty()) return a;
  IntPoly r(k, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}
inline IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return ip_trim(r);
}

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order_compare_unchecked(a, b, MonomialOrder::lex()) == std::strong_ordering::less;
  });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

/// Numerator K(t) of the Hilbert series K(t)/(1-t)^n of S/M, M monomial.
inline IntPoly monomial_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  for (auto& g : gens)
    if (g.is_one()) return {};
  // Pairwise coprime generators: product of (1 - t^deg).
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!gens[i].coprime(gens[j])) coprime = false;
  if (coprime) {
    IntPoly r{1};
    for (auto& g : gens) {
      IntPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      r = ip_mul(r, f);
    }
    return r;
  }
  // K(M) = K(M + (x)) + t K(M : x).
  std::vector<std::size_t> count(nvars, 0);
  for (auto& g : gens)
    for (std::size_t i = 0; i < nvars; ++i)
      if (g[i]) ++count[i];
  std::size_t best = 0;
  for (std::size_t i = 1; i < nvars; ++i)
    if (count[i] > count[best]) best = i;
  // x_best is shared by at least two generators, so M + (x) has fewer
  // generators and M : x has smaller exponent sum.
  Monomial piv = Monomial::variable(nvars, best, 1);
  std::vector<Monomial> plus = gens;
  plus.push_back(piv);
  std::vector<Monomial> colon;
  for (auto& g : gens) {
    Monomial q = g;
    if (q[best]) q.set(best, q[best] - 1);
    colon.push_back(q);
  }
  auto plus_min = minimalize_monomials(plus);
  auto colon_min = minimalize_monomials(colon);
  return ip_add(monomial_numerator(plus_min, nvars), ip_shift(monomial_numerator(colon_min, nvars), piv.degree()));
}

inline std::vector<Monomial> leading_monomials(const Ideal& I) {
  std::vector<Monomial> lm;
  for (auto& g : I.basis()) lm.push_back(g.leading_term().mono);
  return lm;
}

}  // namespace detail

/// Dimension, h-polynomial and colength of S/I for homogeneous I.
inline HilbertData hilbert_data_of(const Ideal& I) {
  if (!I.is_homogeneous()) throw Error(ErrorKind::NonHomogeneous, "Hilbert data needs a homogeneous ideal");
  const std::size_t n = I.nvars();
  auto lm = detail::minimalize_monomials(detail::leading_monomials(I));
  HilbertData h;
  for (auto& m : lm)
    if (m.is_one()) {
      h.dimension = 0;
      h.colength = 0;
      return h;
    }
  // Krull dimension: largest set of variables supporting no generator.
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto& m : lm) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i)
        if (m[i] && !(mask >> i & 1u)) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  h.dimension = best;
  detail::IntPoly k = detail::monomial_numerator(lm, n);
  // Divide by (1 - t)^(n - dim).
  for (std::size_t step = 0; step < n - best; ++step) {
    detail::IntPoly q(k.size() > 0 ? k.size() - 1 : 0, 0);
    std::int64_t carry = 0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      carry += k[i];
      q[i] = carry;
    }
    k = detail::ip_trim(q);
  }
  h.numerator = k;
  if (best == 0) {
    std::int64_t s = 0;
    for (auto c : k) s += c;
    h.colength = static_cast<std::uint64_t>(s);
  }
  return h;
}

inline HilbertData hilbert_data(const RingSpec& R) { return hilbert_data_of(R.ideal()); }

/// Minimal primes of a monomial ideal, each a set of variable indices.
/// (0) yields the single prime (0), i.e. the empty set; the unit ideal none.
inline std::vector<std::vector<std::size_t>> minimal_primes_monomial(const Ideal& I) {
  if (!I.is_monomial()) throw Error(ErrorKind::NonMonomial, "minimal primes are computed for monomial ideals only");
  const std::size_t n = I.nvars();
  std::vector<std::uint32_t> supports;
  for (auto& g : I.generators()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.leading_term().mono[i]) s |= 1u << i;
    if (s == 0) return {};
    supports.push_back(s);
  }
  std::vector<std::uint32_t> covers;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool covers_all = true;
    for (auto s : supports)
      if (!(s & mask)) {
        covers_all = false;
        break;
      }
    if (!covers_all) continue;
    bool minimal = true;
    for (auto c : covers)
      if ((c & mask) == c) {
        minimal = false;
        break;
      }
    if (minimal) covers.push_back(mask);
  }
  // Enumeration is by increasing mask value, so a superset can precede a
  // subset; filter again.
  std::vector<std::vector<std::size_t>> out;
  for (auto c : covers) {
    bool minimal = true;
    for (auto d : covers)
      if (d != c && (d & c) == d) minimal = false;
    if (!minimal) continue;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      if (c >> i & 1u) vars.push_back(i);
    out.push_back(vars);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fpi
