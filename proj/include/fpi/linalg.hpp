#pragma once

// Dense matrices over F_p. Sizes here are small (finite-length modules of a
// few hundred dimensions at most), so plain Gaussian elimination suffices.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpi/error.hpp"
#include "fpi/gfpoly.hpp"

namespace fpi {

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(PrimeField F, std::size_t rows, std::size_t cols) : F_(F), r_(rows), c_(cols), a_(rows * cols, 0) {}

  static FpMatrix identity(PrimeField F, std::size_t n) {
    FpMatrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  const PrimeField& field() const { return F_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const {
    for (auto v : a_)
      if (v) return false;
    return true;
  }

  FpMatrix transposed() const {
    FpMatrix t(F_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.c_ != b.r_) throw Error(ErrorKind::Mismatch, "matrix product shape mismatch");
    const auto& F = a.F_;
    FpMatrix r(F, a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        auto v = a(i, k);
        if (!v) continue;
        for (std::size_t j = 0; j < b.c_; ++j) r(i, j) = F.add(r(i, j), F.mul(v, b(k, j)));
      }
    return r;
  }
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
    check_same(a, b);
    FpMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.F_.add(a.a_[i], b.a_[i]);
    return r;
  }
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
    check_same(a, b);
    FpMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.F_.sub(a.a_[i], b.a_[i]);
    return r;
  }
  FpMatrix scaled(std::uint32_t c) const {
    FpMatrix r = *this;
    for (auto& v : r.a_) v = F_.mul(v, c);
    return r;
  }
  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const {
    if (v.size() != c_) throw Error(ErrorKind::Mismatch, "matrix-vector shape mismatch");
    std::vector<std::uint32_t> out(r_, 0);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) out[i] = F_.add(out[i], F_.mul((*this)(i, j), v[j]));
    return out;
  }

  /// Stacks vertically (same column count).
  static FpMatrix vstack(const std::vector<FpMatrix>& parts, PrimeField F, std::size_t cols) {
    std::size_t rows = 0;
    for (auto& p : parts) {
      if (p.cols() != cols) throw Error(ErrorKind::Mismatch, "vstack column mismatch");
      rows += p.rows();
    }
    FpMatrix m(F, rows, cols);
    std::size_t at = 0;
    for (auto& p : parts) {
      for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(at + i, j) = p(i, j);
      at += p.rows();
    }
    return m;
  }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
      std::size_t piv = row;
      while (piv < r_ && !(*this)(piv, col)) ++piv;
      if (piv == r_) continue;
      swap_rows(piv, row);
      auto inv = F_.inv((*this)(row, col));
      for (std::size_t j = col; j < c_; ++j) (*this)(row, j) = F_.mul((*this)(row, j), inv);
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == row) continue;
        auto f = (*this)(i, col);
        if (!f) continue;
        for (std::size_t j = col; j < c_; ++j) (*this)(i, j) = F_.sub((*this)(i, j), F_.mul(f, (*this)(row, j)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    FpMatrix m = *this;
    return m.rref().size();
  }

  /// Basis of { v : A v = 0 }, as the columns of the returned matrix.
  FpMatrix nullspace() const {
    FpMatrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(c_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < c_; ++j)
      if (!is_pivot[j]) free.push_back(j);
    FpMatrix basis(F_, c_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      basis(free[k], k) = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = F_.neg(m(i, free[k]));
    }
    return basis;
  }

  /// Some x with A x = b, if one exists.
  std::optional<std::vector<std::uint32_t>> solve(const std::vector<std::uint32_t>& b) const {
    if (b.size() != r_) throw Error(ErrorKind::Mismatch, "solve shape mismatch");
    FpMatrix aug(F_, r_, c_ + 1);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == c_) return std::nullopt;
    std::vector<std::uint32_t> x(c_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, c_);
    return x;
  }

  std::optional<FpMatrix> inverse() const {
    if (r_ != c_) return std::nullopt;
    FpMatrix aug(F_, r_, 2 * c_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = 1;
    }
    auto pivots = aug.rref();
    if (pivots.size() < r_ || pivots[r_ - 1] >= c_) return std::nullopt;
    FpMatrix inv(F_, r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
    return inv;
  }

  std::uint32_t determinant() const {
    if (r_ != c_) throw Error(ErrorKind::Mismatch, "determinant of a non-square matrix");
    FpMatrix m = *this;
    std::uint32_t det = 1;
    for (std::size_t col = 0; col < c_; ++col) {
      std::size_t piv = col;
      while (piv < r_ && !m(piv, col)) ++piv;
      if (piv == r_) return 0;
      if (piv != col) {
        m.swap_rows(piv, col);
        det = F_.neg(det);
      }
      det = F_.mul(det, m(col, col));
      auto inv = F_.inv(m(col, col));
      for (std::size_t i = col + 1; i < r_; ++i) {
        auto f = F_.mul(m(i, col), inv);
        if (!f) continue;
        for (std::size_t j = col; j < c_; ++j) m(i, j) = F_.sub(m(i, j), F_.mul(f, m(col, j)));
      }
    }
    return det;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  static void check_same(const FpMatrix& a, const FpMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw Error(ErrorKind::Mismatch, "matrix shape mismatch");
  }

  PrimeField F_{};
  std::size_t r_ = 0, c_ = 0;
  std::vector<std::uint32_t> a_;
};

}  // namespace fpi
