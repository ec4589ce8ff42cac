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

#include <string>
#include <utility>
#include <vector>

#include "hvskit/error.hpp"
#include "hvskit/linalg.hpp"
#include "hvskit/scalar.hpp"

namespace hvskit::exact {

/// Univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }

  static Poly constant(T x) { return Poly(std::vector<T>{std::move(x)}); }
  static Poly monomial(std::size_t d, T x = T(1)) {
    std::vector<T> c(d + 1);
    c[d] = std::move(x);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& lead() const { return c_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) {
      acc *= x;
      acc += c_[k];
    }
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    T t;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (exact::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        t = a.c_[i];
        t *= b.c_[j];
        c[i + j] += t;
      }
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(Poly a, const T& s) {
    for (auto& x : a.c_) x *= s;
    a.trim();
    return a;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * (T(1) / lead());
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<int>(k));
    return Poly(std::move(d));
  }

  Poly conjugate() const {
    Poly p = *this;
    for (auto& x : p.c_) x = exact::conj(x);
    return p;
  }

 private:
  void trim() {
    while (!c_.empty() && exact::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using RatPoly = Poly<Rational>;
using GaussPoly = Poly<Gaussian>;

/// Quotient and remainder of a by b (b nonzero).
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  require(!b.is_zero(), ErrorKind::InvalidInput, "polynomial division by zero");
  std::vector<T> r = a.coeffs();
  long db = b.degree();
  if (a.degree() < db) return {Poly<T>(), a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1));
  T inv = T(1) / b.lead();
  T t;
  for (long k = a.degree() - db; k >= 0; --k) {
    T c = r[static_cast<std::size_t>(k + db)] * inv;
    if (exact::is_zero(c)) continue;
    q[static_cast<std::size_t>(k)] = c;
    for (long j = 0; j <= db; ++j) {
      t = c;
      t *= b.coeff(static_cast<std::size_t>(j));
      r[static_cast<std::size_t>(k + j)] -= t;
    }
  }
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class T>
Poly<T> to_poly(const std::vector<T>& coeffs) {
  return Poly<T>(coeffs);
}

/// p * conj(p); rational for every Gaussian p, with the roots of p and
/// their complex conjugates.
RatPoly norm_poly(const GaussPoly& p);
GaussPoly to_gaussian(const RatPoly& p);

/// Euler phi.
unsigned long euler_phi(unsigned long d);
/// The d-th cyclotomic polynomial (cached).
const RatPoly& cyclotomic(unsigned long d);

struct CyclotomicSplit {
  std::vector<std::pair<unsigned long, unsigned>> factors;  // (d, multiplicity), d ascending
  RatPoly remainder;                                       // monic, coprime to every Phi_d tried
};

/// Trial division by Phi_d for all d <= 2 deg^2 + 1 with phi(d) <= deg.
CyclotomicSplit cyclotomic_split(const RatPoly& p);

/// Number of distinct real roots of p in the half-open interval (a, b].
/// Either bound may be absent (infinite).
long sturm_count(const RatPoly& p, const Rational* a, const Rational* b);

/// True if p has a root on the unit circle (p must be nonzero).
bool has_unit_circle_root(const RatPoly& p);

std::string to_string(const RatPoly& p);

/// det(zI - M), monic of degree dim M.
template <class T>
Poly<T> char_poly(const Matrix<T>& m) {
  require(m.square(), ErrorKind::InvalidInput, "characteristic polynomial of a non-square matrix");
  return Poly<T>(char_poly_coeffs(m));
}

}  // namespace hvskit::exact
