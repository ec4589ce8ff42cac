// Copyright 2026 The hvskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hvskit/error.hpp"
#include "hvskit/scalar.hpp"

namespace hvskit::exact {

/// Dense row-major matrix over an exact field (Rational or Gaussian).
///
/// Matrices of maps follow the column-vector convention: the image of the
/// j-th basis vector is the j-th column. Matrices of bilinear forms hold
/// B(e_i, e_j) at (i, j).
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      require(row.size() == cols_, ErrorKind::InvalidInput, "ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!exact::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix conjugate() const {
    Matrix c(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) c.data_[k] = exact::conj(data_[k]);
    return c;
  }

  Matrix adjoint() const { return conjugate().transpose(); }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorKind::InvalidInput, "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }

  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, ErrorKind::InvalidInput,
            "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::InvalidInput, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    T t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (exact::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (exact::is_zero(b(k, j))) continue;
          t = aik;
          t *= b(k, j);
          c(i, j) += t;
        }
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  const std::vector<T>& data() const { return data_; }

 private:
  void check_same_shape(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::InvalidInput,
            "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<Gaussian>;

inline GMatrix to_gaussian(const QMatrix& m) {
  GMatrix g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = Gaussian(m(i, j));
  return g;
}

inline bool is_real(const GMatrix& m) {
  for (const auto& x : m.data())
    if (!x.is_real()) return false;
  return true;
}

/// Real part; throws unless every entry is real.
inline QMatrix to_rational(const GMatrix& m) {
  require(is_real(m), ErrorKind::InvalidInput, "matrix has non-real entries");
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).re();
  return q;
}

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  require(a.rows() == b.rows(), ErrorKind::InvalidInput, "hstack row mismatch");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  require(a.cols() == b.cols(), ErrorKind::InvalidInput, "vstack column mismatch");
  Matrix<T> m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

template <class T>
Matrix<T> power(const Matrix<T>& m, unsigned long e) {
  require(m.square(), ErrorKind::InvalidInput, "power of non-square matrix");
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> base = m;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Jordan block of size k with eigenvalue 1 (ones on the superdiagonal).
template <class T>
Matrix<T> jordan_block(std::size_t k) {
  Matrix<T> j = Matrix<T>::identity(k);
  for (std::size_t i = 0; i + 1 < k; ++i) j(i, i + 1) = T(1);
  return j;
}

template <class T>
std::string shape_string(const Matrix<T>& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace hvskit::exact
