#pragma once

// Exact arithmetic over prime fields: F_p scalars, exponent vectors,
// monomial orders and sparse multivariate polynomials.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpi/error.hpp"

namespace fpi {

/// Hard cap on the number of ring variables, auxiliary ones included.
inline constexpr std::size_t kMaxVars = 16;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The prime field F_p with 2 <= p < 2^31.
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t result = 1 % p_, base = a % p_;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw Error(ErrorKind::Mismatch, "inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
  }
  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  /// Symmetric representative in (-p/2, p/2], used for display.
  std::int64_t centered(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_ = 2;
};

/// Exponent vector with inline storage. Length is the ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw Error(ErrorKind::Resource, "too many variables");
  }
  Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (auto e : exps) set(i++, e);
  }
  static Monomial from(std::span<const std::uint32_t> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }
  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t e = 1) {
    Monomial m(nvars);
    m.set(i, e);
    return m;
  }

  std::size_t size() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, std::uint32_t v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = v;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] && other.e_[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }
  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }
  Monomial lcm(const Monomial& b) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, std::max(e_[i], b.e_[i]));
    return r;
  }
  Monomial pow(std::uint64_t k) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, static_cast<std::uint32_t>(e_[i] * k));
    return r;
  }
  /// Same exponents, embedded into a ring with more variables (new ones get 0).
  Monomial widened(std::size_t nvars, std::size_t offset = 0) const {
    Monomial r(nvars);
    for (std::size_t i = 0; i < n_; ++i) r.set(i + offset, e_[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
    return h;
  }

 private:
  std::array<std::uint32_t, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// lex, graded reverse lex, or an elimination order for the first `block`
/// variables (block degree first, grevlex to break ties).
struct MonomialOrder {
  enum class Kind { Lex, GRevLex, Elimination };
  Kind kind = Kind::GRevLex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::GRevLex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::Elimination, k}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

namespace detail {

inline std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace detail

inline std::strong_ordering order_compare_unchecked(const Monomial& a, const Monomial& b,
                                                    const MonomialOrder& ord) {
  switch (ord.kind) {
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case MonomialOrder::Kind::GRevLex:
      return detail::grevlex_cmp(a, b);
    case MonomialOrder::Kind::Elimination: {
      std::uint32_t da = 0, db = 0;
      for (std::size_t i = 0; i < ord.block && i < a.size(); ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da <=> db;
      return detail::grevlex_cmp(a, b);
    }
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering order_compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  if (a.size() != b.size()) throw Error(ErrorKind::Mismatch, "monomials over different variable counts");
  return order_compare_unchecked(a, b, ord);
}

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial. Terms are kept strictly descending under `order()`
/// with no zero coefficients; that invariant makes equality structural.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(PrimeField field, std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex())
      : field_(field), nvars_(nvars), order_(order) {}

  static Polynomial constant(PrimeField field, std::size_t nvars, std::int64_t c,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial r(field, nvars, order);
    if (auto v = field.from_int(c)) r.terms_.push_back({Monomial(nvars), v});
    return r;
  }
  static Polynomial monomial(PrimeField field, const Monomial& m, std::uint32_t c = 1,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial r(field, m.size(), order);
    if (c % field.p()) r.terms_.push_back({m, c % field.p()});
    return r;
  }
  static Polynomial variable(PrimeField field, std::size_t nvars, std::size_t i,
                             MonomialOrder order = MonomialOrder::grevlex()) {
    return monomial(field, Monomial::variable(nvars, i), 1, order);
  }
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static Polynomial from_terms(PrimeField field, std::size_t nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial r(field, nvars, order);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
    for (auto& t : terms) {
      if (t.mono.size() != nvars) throw Error(ErrorKind::Mismatch, "term has wrong variable count");
      auto& c = acc[t.mono];
      c = field.add(c, t.coeff % field.p());
    }
    for (auto& [m, c] : acc)
      if (c) r.terms_.push_back({m, c});
    r.sort();
    return r;
  }

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& leading_term() const { return terms_.front(); }

  /// Highest total degree; -1 for zero.
  int degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }
  bool is_homogeneous() const {
    for (auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }
  bool is_monomial() const { return terms_.size() <= 1; }

  std::uint32_t coefficient(const Monomial& m) const {
    for (auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return 0;
  }

  Polynomial with_order(const MonomialOrder& ord) const {
    Polynomial r = *this;
    r.order_ = ord;
    r.sort();
    return r;
  }
  Polynomial homogeneous_part(std::uint32_t d) const {
    Polynomial r(field_, nvars_, order_);
    for (auto& t : terms_)
      if (t.mono.degree() == d) r.terms_.push_back(t);
    return r;
  }
  /// Scales so the leading coefficient is 1.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_term().coeff));
  }
  Polynomial scaled(std::uint32_t c) const {
    Polynomial r(field_, nvars_, order_);
    c %= field_.p();
    if (!c) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono, field_.mul(t.coeff, c)});
    return r;
  }
  Polynomial times_term(const Monomial& m, std::uint32_t c) const {
    Polynomial r(field_, nvars_, order_);
    c %= field_.p();
    if (!c) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
    return r;
  }
  /// Embeds into a ring with `nvars` variables, shifting indices by `offset`.
  Polynomial widened(std::size_t nvars, std::size_t offset = 0) const {
    Polynomial r(field_, nvars, order_);
    for (auto& t : terms_) r.terms_.push_back({t.mono.widened(nvars, offset), t.coeff});
    r.sort();
    return r;
  }

  Polynomial operator-() const { return scaled(field_.neg(1)); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_, a.nvars_, a.order_);
    std::vector<Term> raw;
    raw.reserve(a.size() * b.size());
    for (auto& s : a.terms_)
      for (auto& t : b.terms_) raw.push_back({s.mono * t.mono, a.field_.mul(s.coeff, t.coeff)});
    return from_terms(a.field_, a.nvars_, std::move(raw), a.order_);
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.field_ != b.field_ || a.size() != b.size()) return false;
    if (a.order_ == b.order_) return a.terms_ == b.terms_;
    return a.terms_ == b.with_order(a.order_).terms_;
  }

 private:
  void sort() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& x, const Term& y) {
      return order_compare_unchecked(x.mono, y.mono, order_) == std::strong_ordering::greater;
    });
  }

  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.field_ != b.field_)
      throw Error(ErrorKind::Mismatch, "polynomials from different rings");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& bb, bool subtract) {
    check_compatible(a, bb);
    const Polynomial& b = (bb.order_ == a.order_) ? bb : bb.with_order(a.order_);
    Polynomial r(a.field_, a.nvars_, a.order_);
    r.terms_.reserve(a.size() + b.size());
    const auto& F = a.field_;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      std::strong_ordering c = std::strong_ordering::less;
      if (i == a.size()) c = std::strong_ordering::less;
      else if (j == b.size()) c = std::strong_ordering::greater;
      else c = order_compare_unchecked(a.terms_[i].mono, b.terms_[j].mono, a.order_);
      if (c == std::strong_ordering::greater) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c == std::strong_ordering::less) {
        auto t = b.terms_[j++];
        if (subtract) t.coeff = F.neg(t.coeff);
        r.terms_.push_back(t);
      } else {
        auto v = subtract ? F.sub(a.terms_[i].coeff, b.terms_[j].coeff) : F.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (v) r.terms_.push_back({a.terms_[i].mono, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

  PrimeField field_{};
  std::size_t nvars_ = 0;
  MonomialOrder order_{};
  std::vector<Term> terms_;
};

/// f^k by repeated squaring (ordinary multiplication).
inline Polynomial poly_pow(const Polynomial& f, std::uint64_t k) {
  Polynomial result = Polynomial::constant(f.field(), f.nvars(), 1, f.order());
  Polynomial base = f;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

/// f^(p^e). In characteristic p this is termwise: c*m -> c^(p^e) * m^(p^e).
inline Polynomial poly_pow_frobenius(const Polynomial& f, unsigned e) {
  const auto& F = f.field();
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= F.p();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (auto& t : f.terms()) terms.push_back({t.mono.pow(q), F.pow(t.coeff, q)});
  return Polynomial::from_terms(F, f.nvars(), std::move(terms), f.order());
}

inline std::uint64_t frobenius_q(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  return q;
}

}  // namespace fpi
