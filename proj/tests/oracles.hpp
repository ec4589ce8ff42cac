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

// Reference computations used to cross-check the library. They share no
// code with it beyond the scalar and matrix containers: determinants by
// Bareiss, characteristic polynomials by Faddeev-LeVerrier, inertia and
// signatures in floating point, spectra straight from the block formula.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hvskit/hvs.hpp"

namespace oracle {

using hvskit::exact::Gaussian;
using hvskit::exact::GMatrix;
using hvskit::exact::QMatrix;
using hvskit::exact::Rational;

inline Rational det_bareiss(QMatrix a) {
  std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  Rational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Coefficients of det(zI - M), low degree first.
inline std::vector<Rational> char_poly_leverrier(const QMatrix& m) {
  std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix M = QMatrix::identity(n) * Rational(0);
  QMatrix I = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    M = m * M + I * c[n - k + 1];
    QMatrix AM = m * M;
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

using CMat = Eigen::MatrixXcd;

inline CMat to_complex(const GMatrix& m) {
  CMat c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      c(i, j) = {m(i, j).re().get_d(), m(i, j).im().get_d()};
  return c;
}

struct FloatInertia {
  std::size_t plus = 0, minus = 0, zero = 0;
};

inline FloatInertia float_inertia(const CMat& h, double tol = 1e-9) {
  FloatInertia out;
  if (h.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double ev = es.eigenvalues()(i);
    if (std::abs(ev) < tol) ++out.zero;
    else if (ev > 0) ++out.plus;
    else ++out.minus;
  }
  return out;
}

/// Signature of (1 - z) conj(V) + (1 - conj z) V^t at z = exp(2 pi i s).
inline long float_signature(const GMatrix& V, double s) {
  const double pi = std::acos(-1.0);
  std::complex<double> z = std::polar(1.0, 2 * pi * s);
  CMat v = to_complex(V);
  CMat f = (1.0 - z) * v.conjugate() + (1.0 - std::conj(z)) * v.transpose();
  f = (f + f.adjoint()) / 2.0;
  FloatInertia in = float_inertia(f, 1e-7);
  return static_cast<long>(in.plus) - static_cast<long>(in.minus);
}

/// Spectrum contribution of a circle block, written from the block formula:
/// odd k gives (k - u (-1)^floor(a)) / 2 at a = s and a = s + 1, even k
/// gives k / 2 at both.
inline std::vector<Rational> block_spectrum(unsigned k, const Rational& s, int u) {
  std::vector<Rational> out;
  for (int shift : {0, 1}) {
    Rational a = s + shift;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    long m;
    if (k % 2 == 0) m = k / 2;
    else m = (static_cast<long>(k) - u * (mpz_odd_p(fl.get_mpz_t()) ? -1 : 1)) / 2;
    for (long i = 0; i < m; ++i) out.push_back(a);
  }
  return out;
}

inline std::vector<Rational> spectrum_of(const hvskit::BlockSpec& spec) {
  std::vector<Rational> out;
  for (const auto& b : spec.circle)
    for (unsigned r = 0; r < b.mult; ++r) {
      auto part = block_spectrum(b.k, b.s.value(), b.u);
      out.insert(out.end(), part.begin(), part.end());
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline QMatrix random_qmatrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 4);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = hvskit::exact::frac(num(rng), den(rng));
  return m;
}

/// Random hermitian Gaussian-rational matrix with numerators and
/// denominators bounded by `bound`.
inline GMatrix random_hermitian(std::mt19937_64& rng, std::size_t n, int bound = 100) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  auto q = [&] { return hvskit::exact::frac(num(rng), den(rng)); };
  GMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = Gaussian(q());
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = Gaussian(q(), q());
      h(j, i) = h(i, j).conj();
    }
  }
  return h;
}

}  // namespace oracle
