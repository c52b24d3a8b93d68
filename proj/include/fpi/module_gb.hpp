#pragma once

// Buchberger's algorithm for submodules of a graded free module S^r over
// S = F_p[x_1..x_n]. Ideals are the rank-one case. Terms are ordered
// position-over-term: the component with the smaller index is larger, ties
// broken by the monomial order.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "fpi/error.hpp"
#include "fpi/gfpoly.hpp"

namespace fpi {

/// Budget applied to every Gröbner computation. Exceeding it raises
/// ErrorKind::Resource and discards the partial state.
struct Limits {
  std::int64_t max_degree = 1 << 16;    // largest S-pair degree processed
  std::uint64_t max_steps = 50'000'000;  // reduction steps per engine
};

struct VecTerm {
  std::uint32_t comp = 0;
  Monomial mono;
  std::uint32_t coeff = 0;
  friend bool operator==(const VecTerm&, const VecTerm&) = default;
};

/// Element of S^r: terms strictly descending in the module order.
using Vec = std::vector<VecTerm>;

inline std::strong_ordering pot_compare(std::uint32_t ca, const Monomial& a, std::uint32_t cb, const Monomial& b,
                                        const MonomialOrder& ord) {
  if (ca != cb) return cb <=> ca;
  return order_compare_unchecked(a, b, ord);
}

inline void vec_sort(Vec& v, const MonomialOrder& ord) {
  std::sort(v.begin(), v.end(), [&](const VecTerm& x, const VecTerm& y) {
    return pot_compare(x.comp, x.mono, y.comp, y.mono, ord) == std::strong_ordering::greater;
  });
}

/// Converts possibly unsorted terms with duplicates into a canonical Vec.
inline Vec vec_normalize(Vec v, const PrimeField& F, const MonomialOrder& ord) {
  vec_sort(v, ord);
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (!out.back().coeff) out.pop_back();
    } else if (t.coeff % F.p()) {
      out.push_back({t.comp, t.mono, t.coeff % F.p()});
    }
  }
  return out;
}

inline Vec vec_from_poly(const Polynomial& f, std::uint32_t comp, const MonomialOrder& ord) {
  Vec v;
  v.reserve(f.size());
  for (auto& t : f.terms()) v.push_back({comp, t.mono, t.coeff});
  if (!(f.order() == ord)) vec_sort(v, ord);
  return v;
}

/// Component `comp` of v as a polynomial.
inline Polynomial vec_component(const Vec& v, std::uint32_t comp, const PrimeField& F, std::size_t nvars) {
  std::vector<Term> terms;
  for (auto& t : v)
    if (t.comp == comp) terms.push_back({t.mono, t.coeff});
  return Polynomial::from_terms(F, nvars, std::move(terms));
}

/// f[fb..] - c * m * g[gb..], merged in order.
inline Vec vec_axpy(const Vec& f, std::size_t fb, std::uint32_t c, const Monomial& m, const Vec& g, std::size_t gb,
                    const PrimeField& F, const MonomialOrder& ord) {
  Vec r;
  r.reserve(f.size() - fb + g.size() - gb);
  std::uint32_t negc = F.neg(c);
  std::size_t i = fb, j = gb;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      r.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    if (i == f.size()) {
      r.push_back({g[j].comp, gm, F.mul(negc, g[j].coeff)});
      ++j;
      continue;
    }
    auto cmp = pot_compare(f[i].comp, f[i].mono, g[j].comp, gm, ord);
    if (cmp == std::strong_ordering::greater) {
      r.push_back(f[i++]);
    } else if (cmp == std::strong_ordering::less) {
      r.push_back({g[j].comp, gm, F.mul(negc, g[j].coeff)});
      ++j;
    } else {
      auto v = F.add(f[i].coeff, F.mul(negc, g[j].coeff));
      if (v) r.push_back({f[i].comp, f[i].mono, v});
      ++i;
      ++j;
    }
  }
  return r;
}

inline Vec vec_add(const Vec& a, const Vec& b, const PrimeField& F, const MonomialOrder& ord, std::uint32_t cb = 1) {
  if (b.empty()) return a;
  return vec_axpy(a, 0, F.neg(cb % F.p()), Monomial(b.front().mono.size()), b, 0, F, ord);
}

inline Vec vec_scale(const Vec& v, std::uint32_t c, const Monomial& m, const PrimeField& F) {
  Vec r;
  c %= F.p();
  if (!c) return r;
  r.reserve(v.size());
  for (auto& t : v) r.push_back({t.comp, t.mono * m, F.mul(t.coeff, c)});
  return r;
}

/// Buchberger engine with the coprime (rank one only) and chain criteria,
/// sugar selection, and optional degree truncation.
class ModuleGB {
 public:
  ModuleGB(PrimeField field, std::size_t nvars, std::vector<int> twists, MonomialOrder ord = MonomialOrder::grevlex(),
           int weight = 1, Limits limits = {})
      : F_(field), nvars_(nvars), ord_(ord), twists_(std::move(twists)), weight_(weight), limits_(limits),
        by_comp_(twists_.size()) {}

  std::size_t rank() const { return twists_.size(); }
  const MonomialOrder& order() const { return ord_; }
  const PrimeField& field() const { return F_; }
  std::size_t nvars() const { return nvars_; }

  long term_degree(std::uint32_t comp, const Monomial& m) const {
    return static_cast<long>(weight_) * m.degree() + twists_[comp];
  }
  long vec_degree(const Vec& v) const {
    long d = std::numeric_limits<long>::min();
    for (auto& t : v) d = std::max(d, term_degree(t.comp, t.mono));
    return d;
  }

  /// Adds a generator. It is top-reduced against the current basis; zero
  /// results are dropped. Returns true when the basis grew.
  bool add(const Vec& v) {
    Vec r = top_reduce(v);
    if (r.empty()) return false;
    insert(std::move(r), vec_degree(v));
    return true;
  }

  /// Processes pending pairs. With a degree bound only pairs of sugar at
  /// most that bound are handled (the rest stay queued); this is exact for
  /// homogeneous input up to that degree.
  void complete(std::optional<long> max_degree = std::nullopt) {
    while (!pairs_.empty()) {
      auto it = pairs_.begin();
      auto [sugar, i, j] = *it;
      if (max_degree && sugar > *max_degree) return;
      if (sugar > limits_.max_degree)
        throw Error(ErrorKind::Resource, "Groebner pair degree " + std::to_string(sugar) + " exceeds limit " +
                                             std::to_string(limits_.max_degree));
      pairs_.erase(it);
      const auto& gi = basis_[i];
      const auto& gj = basis_[j];
      Monomial l = gi.front().mono.lcm(gj.front().mono);
      if (chain_skippable(i, j, l)) {
        set_state(i, j, kChainSkipped);
        continue;
      }
      if (rank() == 1 && gi.front().mono.coprime(gj.front().mono)) {
        set_state(i, j, kDone);
        continue;
      }
      Vec s = vec_axpy(vec_scale(gi, 1, l / gi.front().mono, F_), 0, 1, l / gj.front().mono, gj, 0, F_, ord_);
      set_state(i, j, kDone);
      Vec r = top_reduce(s);
      if (!r.empty()) insert(std::move(r), sugar);
    }
  }

  bool is_complete() const { return pairs_.empty(); }

  /// Full normal form (leading and tail terms).
  Vec reduce(const Vec& v) const {
    Vec f = v, out;
    std::size_t start = 0;
    while (start < f.size()) {
      const auto& lead = f[start];
      int d = find_divisor(lead.comp, lead.mono);
      if (d < 0) {
        out.push_back(lead);
        ++start;
        continue;
      }
      step();
      const auto& g = basis_[d];
      f = vec_axpy(f, start + 1, lead.coeff, lead.mono / g.front().mono, g, 1, F_, ord_);
      start = 0;
    }
    return out;
  }

  /// Membership test. For homogeneous data, completes the basis up to the
  /// degree of v first.
  bool contains(const Vec& v) {
    if (v.empty()) return true;
    complete(homogeneous_ ? std::optional<long>(vec_degree(v)) : std::nullopt);
    return reduce(v).empty();
  }

  /// The reduced Gröbner basis (monic, interreduced), sorted by leading term.
  std::vector<Vec> reduced_basis() {
    complete();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j || basis_[j].front().comp != basis_[i].front().comp) continue;
        if (!basis_[j].front().mono.divides(basis_[i].front().mono)) continue;
        // Equal leading terms: keep the earlier one.
        redundant = !(basis_[j].front().mono == basis_[i].front().mono) || j < i;
      }
      if (!redundant) keep.push_back(i);
    }
    ModuleGB minimal(F_, nvars_, twists_, ord_, weight_, limits_);
    for (auto i : keep) minimal.raw_insert(basis_[i]);
    std::vector<Vec> out;
    for (auto i : keep) {
      const Vec& g = basis_[i];
      Vec tail(g.begin() + 1, g.end());
      Vec r{g.front()};
      Vec t = minimal.reduce(tail);
      r.insert(r.end(), t.begin(), t.end());
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
      return pot_compare(a.front().comp, a.front().mono, b.front().comp, b.front().mono, ord_) ==
             std::strong_ordering::less;
    });
    return out;
  }

  const std::vector<Vec>& basis() const { return basis_; }

 private:
  enum : std::uint8_t { kNone = 0, kPending = 1, kDone = 2, kChainSkipped = 3 };

  void step() const {
    if (++steps_ > limits_.max_steps) throw Error(ErrorKind::Resource, "Groebner step budget exhausted");
  }

  int find_divisor(std::uint32_t comp, const Monomial& m) const {
    for (auto idx : by_comp_[comp])
      if (basis_[idx].front().mono.divides(m)) return static_cast<int>(idx);
    return -1;
  }

  Vec top_reduce(Vec f) const {
    while (!f.empty()) {
      int d = find_divisor(f.front().comp, f.front().mono);
      if (d < 0) break;
      step();
      const auto& g = basis_[d];
      f = vec_axpy(f, 1, f.front().coeff, f.front().mono / g.front().mono, g, 1, F_, ord_);
    }
    return f;
  }

  void raw_insert(Vec v) {
    std::size_t idx = basis_.size();
    by_comp_[v.front().comp].push_back(idx);
    basis_.push_back(std::move(v));
    sugar_.push_back(0);
    state_.emplace_back(idx, kNone);
  }

  void insert(Vec v, long sugar) {
    auto inv = F_.inv(v.front().coeff);
    if (inv != 1)
      for (auto& t : v) t.coeff = F_.mul(t.coeff, inv);
    if (homogeneous_) {
      long d0 = term_degree(v.front().comp, v.front().mono);
      for (auto& t : v)
        if (term_degree(t.comp, t.mono) != d0) {
          homogeneous_ = false;
          break;
        }
    }
    std::size_t idx = basis_.size();
    std::uint32_t comp = v.front().comp;
    const Monomial lead = v.front().mono;
    sugar = std::max(sugar, vec_degree(v));
    basis_.push_back(std::move(v));
    sugar_.push_back(sugar);
    state_.emplace_back(idx, kNone);
    for (auto j : by_comp_[comp]) {
      const Monomial& lj = basis_[j].front().mono;
      Monomial l = lead.lcm(lj);
      long s = std::max(sugar + weight_ * static_cast<long>((l / lead).degree()),
                        sugar_[j] + weight_ * static_cast<long>((l / lj).degree()));
      pairs_.insert({s, j, idx});
      state_[idx][j] = kPending;
    }
    by_comp_[comp].push_back(idx);
  }

  std::uint8_t state(std::size_t i, std::size_t j) const { return i > j ? state_[i][j] : state_[j][i]; }
  void set_state(std::size_t i, std::size_t j, std::uint8_t s) { (i > j ? state_[i][j] : state_[j][i]) = s; }

  bool chain_skippable(std::size_t i, std::size_t j, const Monomial& l) const {
    std::uint32_t comp = basis_[i].front().comp;
    for (auto k : by_comp_[comp]) {
      if (k == i || k == j) continue;
      if (!basis_[k].front().mono.divides(l)) continue;
      if (state(i, k) == kDone && state(j, k) == kDone) return true;
    }
    return false;
  }

  PrimeField F_;
  std::size_t nvars_;
  MonomialOrder ord_;
  std::vector<int> twists_;
  int weight_;
  Limits limits_;
  bool homogeneous_ = true;
  std::vector<Vec> basis_;
  std::vector<long> sugar_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::vector<std::vector<std::uint8_t>> state_;
  std::set<std::tuple<long, std::size_t, std::size_t>> pairs_;
  mutable std::uint64_t steps_ = 0;
};

}  // namespace fpi
