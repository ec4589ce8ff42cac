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

#include <optional>
#include <vector>

#include "hvskit/matrix.hpp"

namespace hvskit::exact {

template <class T>
struct RowEchelon {
  Matrix<T> R;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over the field. The first nonzero entry of a
/// column is taken as pivot; over Q every choice is exact anyway.
template <class T>
RowEchelon<T> rref(Matrix<T> m) {
  RowEchelon<T> out;
  std::size_t row = 0;
  T f;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      T c = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (is_zero(m(row, j))) continue;
        f = c;
        f *= m(row, j);
        m(i, j) -= f;
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.R = std::move(m);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  if (m.empty()) return 0;
  // forward elimination only
  Matrix<T> a = m;
  std::size_t row = 0;
  T f;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, col))) continue;
      T c = a(i, col) / a(row, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (is_zero(a(row, j))) continue;
        f = c;
        f *= a(row, j);
        a(i, j) -= f;
      }
    }
    ++row;
  }
  return row;
}

/// Basis of {x : m x = 0} as the columns of the result (cols = nullity).
template <class T>
Matrix<T> nullspace(const Matrix<T>& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<T> basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.R(r, free[k]);
  }
  return basis;
}

/// Maximal independent subset of the columns of m, in order.
template <class T>
Matrix<T> column_space(const Matrix<T>& m) {
  auto e = rref(m);
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return m.select(rows, e.pivots);
}

template <class T>
std::vector<std::size_t> pivot_columns(const Matrix<T>& m) {
  return rref(m).pivots;
}

/// Some X with a X = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.rows() == b.rows(), ErrorKind::InvalidInput, "solve: row mismatch");
  auto e = rref(hstack(a, b));
  if (a.cols() == 0) {
    if (!b.is_zero()) return std::nullopt;
    return Matrix<T>(0, b.cols());
  }
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.R(r, a.cols() + j);
  }
  return x;
}

template <class T>
std::optional<Matrix<T>> try_inverse(const Matrix<T>& m) {
  require(m.square(), ErrorKind::InvalidInput, "inverse of non-square matrix");
  std::size_t n = m.rows();
  auto e = rref(hstack(m, Matrix<T>::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.R.block(0, n, n, n);
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  auto inv = try_inverse(m);
  require(inv.has_value(), ErrorKind::PreconditionFailed, "matrix is singular");
  return *inv;
}

template <class T>
T det(Matrix<T> a) {
  require(a.square(), ErrorKind::InvalidInput, "determinant of non-square matrix");
  T d(1), f;
  std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(a(p, col))) ++p;
    if (p == n) return T(0);
    if (p != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(p, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(a(i, col))) continue;
      T c = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) {
        f = c;
        f *= a(col, j);
        a(i, j) -= f;
      }
    }
  }
  return d;
}

/// Coefficients (lowest degree first) of det(zI - m), a monic polynomial of
/// degree dim m. Reduction to upper Hessenberg form by similarity, then the
/// standard recurrence on leading principal minors.
template <class T>
std::vector<T> char_poly_coeffs(Matrix<T> a) {
  require(a.square(), ErrorKind::InvalidInput, "characteristic polynomial of non-square matrix");
  std::size_t n = a.rows();
  T f;
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::size_t p = k + 1;
    while (p < n && is_zero(a(p, k))) ++p;
    if (p == n) continue;
    if (p != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, k + 1));
    }
    for (std::size_t i = k + 2; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      T c = a(i, k) / a(k + 1, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(a(k + 1, j))) continue;
        f = c;
        f *= a(k + 1, j);
        a(i, j) -= f;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (is_zero(a(r, i))) continue;
        f = c;
        f *= a(r, i);
        a(r, k + 1) += f;
      }
    }
  }
  // p[m] = char poly of the leading m x m block
  std::vector<std::vector<T>> p(n + 1);
  p[0] = {T(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<T> cur(m + 1);
    // (z - a_mm) p[m-1]
    for (std::size_t d = 0; d < m; ++d) {
      cur[d + 1] += p[m - 1][d];
      f = a(m - 1, m - 1);
      f *= p[m - 1][d];
      cur[d] -= f;
    }
    T prod(1);
    for (std::size_t i = m - 1; i-- > 0;) {
      prod *= a(i + 1, i);
      if (is_zero(prod)) break;
      T coef = prod * a(i, m - 1);
      if (is_zero(coef)) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) {
        f = coef;
        f *= p[i][d];
        cur[d] -= f;
      }
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

}  // namespace hvskit::exact
