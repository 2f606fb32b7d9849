#pragma once

#include "rhspaces/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rhspaces {

/// Dense row-major matrix over an exact scalar type (Rational or GaussianRational).
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> data() const { return data_; }

  bool is_zero() const {
    for (const T& x : data_) {
      if (!rhspaces::is_zero(x)) return false;
    }
    return true;
  }

  Matrix& operator+=(const Matrix& other) {
    require_same_shape(other, "add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& other) {
    require_same_shape(other, "subtract");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& scalar) {
    for (T& x : data_) x *= scalar;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (T& x : a.data_) x = -x;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& other, const char* op) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw std::invalid_argument(std::string("shape mismatch in ") + op);
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

using RealMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<GaussianRational>;

/// Exact product; zero entries of the left factor are skipped, so signed
/// permutation matrices multiply in O(n^2).
template <typename T>
Matrix<T> mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in mul");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const T& bkj = b(k, j);
        if (is_zero(bkj)) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return mul(a, b);
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// Plain transpose for real matrices.
template <typename T>
Matrix<T> conjugate_transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = conj(a(i, j));
  return out;
}

template <typename T>
bool is_self_adjoint(const Matrix<T>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (!(a(i, j) == conj(a(j, i)))) return false;
  return true;
}

template <typename T>
bool is_skew_adjoint(const Matrix<T>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (!(a(i, j) == -conj(a(j, i)))) return false;
  return true;
}

/// Kronecker product a ⊗ b.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& aij = a(i, j);
      if (is_zero(aij)) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!is_zero(b(p, q))) out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  }
  return out;
}

/// Copies the block starting at (row, col) of shape rows x cols.
template <typename T>
Matrix<T> block(const Matrix<T>& a, std::size_t row, std::size_t col, std::size_t rows,
                std::size_t cols) {
  if (row + rows > a.rows() || col + cols > a.cols()) throw std::invalid_argument("block out of range");
  Matrix<T> out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(row + i, col + j);
  return out;
}

template <typename T>
void set_block(Matrix<T>& a, std::size_t row, std::size_t col, const Matrix<T>& b) {
  if (row + b.rows() > a.rows() || col + b.cols() > a.cols()) {
    throw std::invalid_argument("block out of range");
  }
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) a(row + i, col + j) = b(i, j);
}

/// Real-linear combination sum_i coeffs[i] * basis[i]; all basis matrices share a shape.
template <typename T>
Matrix<T> linear_combination(std::span<const Matrix<T>> basis, std::span<const Rational> coeffs) {
  if (basis.size() != coeffs.size()) throw std::invalid_argument("coefficient count mismatch");
  if (basis.empty()) throw std::invalid_argument("empty basis has no shape");
  Matrix<T> out(basis[0].rows(), basis[0].cols());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (sgn(coeffs[b]) == 0) continue;
    if (basis[b].rows() != out.rows() || basis[b].cols() != out.cols()) {
      throw std::invalid_argument("shape mismatch in linear combination");
    }
    const T c(coeffs[b]);
    auto src = basis[b].data();
    for (std::size_t i = 0; i < out.rows(); ++i) {
      for (std::size_t j = 0; j < out.cols(); ++j) {
        const T& x = src[i * out.cols() + j];
        if (!is_zero(x)) out(i, j) += c * x;
      }
    }
  }
  return out;
}

}  // namespace rhspaces
