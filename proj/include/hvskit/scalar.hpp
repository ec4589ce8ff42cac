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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hvskit::exact {

/// Arbitrary precision rational in canonical form (reduced, positive
/// denominator). GMP keeps the invariant after every arithmetic operation.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// n/d in canonical form (the two-argument mpq_class constructor does not
/// reduce).
inline Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}
inline Rational conj(const Rational& x) { return x; }

/// Element a + b*i of the Gaussian rationals Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const Gaussian& x) { return x.is_zero(); }
inline Gaussian conj(const Gaussian& x) { return x.conj(); }

/// i^n for any integer n.
Gaussian i_power(long n);

/// Canonical wire encoding: "p/q" (q omitted when 1) for rationals and
/// "a+b*i" / "a-b*i" for non-real Gaussian rationals.
std::string to_string(const Rational& x);
std::string to_string(const Gaussian& x);

/// Accepts the canonical encoding plus the lenient forms "i", "-i",
/// "b*i", "a+i", and surrounding whitespace. Throws Error(InvalidInput).
Rational parse_rational(std::string_view text);
Gaussian parse_gaussian(std::string_view text);

}  // namespace hvskit::exact
