#ifndef KIRWAN_MATRIX_HPP
#define KIRWAN_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kirwan/errors.hpp"
#include "kirwan/ratfunc.hpp"
#include "kirwan/scalar.hpp"

namespace kirwan {

/// Dense matrix over an exact field F (Scalar or RatFunc).
template <typename F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    for (const auto& row : init) {
      if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!kirwan::is_zero(x)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (kirwan::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Reduced row echelon form; pivots receives the pivot column of each
  /// nonzero row.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const {
    Matrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && kirwan::is_zero(m(sel, col))) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t c = 0; c < cols_; ++c) std::swap(m(sel, c), m(row, c));
      F inv = F(1) / m(row, col);
      for (std::size_t c = col; c < cols_; ++c) m(row, c) = m(row, c) * inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || kirwan::is_zero(m(r, col))) continue;
        F factor = m(r, col);
        for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(row, c);
      }
      piv.push_back(col);
      ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
  }

  std::size_t rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
  }

  /// Basis of the right kernel, one vector per column of the result.
  Matrix nullspace() const {
    std::vector<std::size_t> piv;
    Matrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free.push_back(c);
    Matrix basis(cols_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      basis(free[k], k) = F(1);
      for (std::size_t i = 0; i < piv.size(); ++i) basis(piv[i], k) = -r(i, free[k]);
    }
    return basis;
  }

  F det() const {
    if (rows_ != cols_) throw PreconditionError("determinant of a non-square matrix");
    Matrix m = *this;
    F acc(1);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t sel = col;
      while (sel < rows_ && kirwan::is_zero(m(sel, col))) ++sel;
      if (sel == rows_) return F(0);
      if (sel != col) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(m(sel, c), m(col, c));
        acc = -acc;
      }
      acc = acc * m(col, col);
      F inv = F(1) / m(col, col);
      for (std::size_t r = col + 1; r < rows_; ++r) {
        if (kirwan::is_zero(m(r, col))) continue;
        F factor = m(r, col) * inv;
        for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(col, c);
      }
    }
    return acc;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw PreconditionError("inverse of a non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
      aug(r, cols_ + r) = F(1);
    }
    std::vector<std::size_t> piv;
    Matrix red = aug.rref(&piv);
    if (piv.size() < rows_ || piv[rows_ - 1] >= cols_) throw PreconditionError("matrix is singular");
    Matrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) inv(r, c) = red(r, cols_ + c);
    return inv;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

using ScalarMatrix = Matrix<Scalar>;

}  // namespace kirwan

#endif
