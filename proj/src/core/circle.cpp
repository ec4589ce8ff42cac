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

#include "hvskit/circle.hpp"

#include <cmath>
#include <numeric>
#include <optional>

#include "hvskit/error.hpp"
#include "hvskit/poly.hpp"

namespace hvskit::exact {

namespace {

Rational floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

// Representative of x modulo 1 in (-1/2, 1/2].
Rational centered(const Rational& x) {
  Rational y = x - floor_of(x);
  if (y > Rational(1, 2)) y -= 1;
  return y;
}

// Im((1 + i t)^q): its roots are tan(j pi / q) for -q/2 < j < q/2.
const RatPoly& tangent_poly(unsigned long q) {
  static thread_local std::vector<std::optional<RatPoly>> cache;
  if (cache.size() <= q) cache.resize(q + 1);
  if (!cache[q]) {
    GaussPoly base{Gaussian(1), Gaussian::i()};
    GaussPoly acc = GaussPoly::constant(Gaussian(1));
    for (unsigned long k = 0; k < q; ++k) acc = acc * base;
    std::vector<Rational> im;
    for (const auto& c : acc.coeffs()) im.push_back(c.im());
    cache[q] = RatPoly(im);
  }
  return *cache[q];
}

// Sign of angle(t) - f, where angle(t) = atan(t)/pi lies in (-1/2, 1/2)
// and f is a rational in [-1/2, 1/2].
int compare_angle(const Rational& t, const Rational& f) {
  if (f == Rational(1, 2)) return -1;
  if (f == Rational(-1, 2)) return 1;
  unsigned long q = f.get_den().get_ui();
  if (q == 1) return sgn(t);  // f = 0
  const RatPoly& P = tangent_poly(q);
  if (is_zero(P(t))) {
    // Niven: the only rational tangents of rational multiples of pi
    Rational a = sgn(t) == 0 ? Rational(0) : (t == 1 ? Rational(1, 4) : Rational(-1, 4));
    require(sgn(t) == 0 || abs(t) == 1, ErrorKind::Internal, "unexpected rational tangent");
    return sgn(a - f);
  }
  long p = f.get_num().get_si();
  long above_target = static_cast<long>((q + 1) / 2) - 1 - p;
  long above_t = sturm_count(P, &t, nullptr);
  return above_t <= above_target ? 1 : -1;
}

bool t_in_arc(const Rational& t, const Rational& lo, const Rational& hi) {
  return compare_angle(t, lo) > 0 && compare_angle(t, hi) < 0;
}

Rational to_rational(double x) {
  Rational r(x);  // exact binary value of the double
  return r;
}

}  // namespace

AngleFraction::AngleFraction(Rational s) {
  s_ = s - floor_of(s);
  if (sgn(s_) == 0) s_ = 1;
  s_.canonicalize();
}

UnitCirclePoint circle_point(const Rational& t) {
  Rational t2 = t * t;
  Rational den = 1 + t2;
  return UnitCirclePoint{Rational((1 - t2) / den), Rational(2 * t / den)};
}

bool point_in_arc(const UnitCirclePoint& z, const Rational& lo, const Rational& hi) {
  require(lo < hi && hi - lo <= 1, ErrorKind::InvalidInput, "invalid arc");
  Rational half(1, 2);
  bool minus_one = z.re == -1 && sgn(z.im) == 0;
  Rational t = minus_one ? Rational(0) : Rational(z.im / (1 + z.re));
  // the angle lives in (-1/2, 1/2] (-1 sits at 1/2); try each lift of the arc
  Rational m = floor_of(lo) - 1;
  for (; m <= floor_of(hi) + 1; m += 1) {
    Rational a = lo - m, b = hi - m;
    if (minus_one) {
      if (a < half && half < b) return true;
      continue;
    }
    if (a >= half || b <= -half) continue;
    bool above = a < -half || compare_angle(t, a) > 0;
    bool below = b > half || compare_angle(t, b) < 0;
    if (above && below) return true;
  }
  return false;
}

UnitCirclePoint gap_sample(const Rational& s1, const Rational& s2, const Rational& weight) {
  require(s1 < s2, ErrorKind::InvalidInput, "gap_sample: empty arc");
  require(s2 - s1 <= 1, ErrorKind::InvalidInput, "gap_sample: arc longer than the circle");
  require(sgn(weight) > 0 && weight < 1, ErrorKind::InvalidInput, "gap_sample: weight outside (0, 1)");
  Rational half(1, 2);
  Rational w = weight;
  Rational x, y;
  for (;;) {
    x = s1 + w * (s2 - s1);
    y = centered(x);
    if (sgn(y) != 0) break;
    w /= 2;  // the target fell on the point 1; move towards s1
  }
  if (y == half) return UnitCirclePoint{Rational(-1), Rational(0)};
  // lift the arc so that it contains y, then clip to (-1/2, 1/2)
  Rational shift = x - y;
  Rational lo = s1 - shift, hi = s2 - shift;
  if (lo < -half) lo = -half;
  if (hi > half) hi = half;

  double guess = std::tan(M_PI * y.get_d());
  for (int bits : {4, 8, 12, 20, 40}) {
    double scale = std::ldexp(1.0, bits);
    Rational t = to_rational(std::round(guess * scale)) / to_rational(scale);
    if (t_in_arc(t, lo, hi)) return circle_point(t);
  }
  // exact bisection in t
  Rational tl(-1), tu(1);
  for (;;) {
    if (t_in_arc(tl, lo, hi)) return circle_point(tl);
    if (compare_angle(tl, lo) <= 0) break;
    tl *= 2;
  }
  for (;;) {
    if (t_in_arc(tu, lo, hi)) return circle_point(tu);
    if (compare_angle(tu, hi) >= 0) break;
    tu *= 2;
  }
  for (;;) {
    Rational m = (tl + tu) / 2;
    if (t_in_arc(m, lo, hi)) return circle_point(m);
    if (compare_angle(m, lo) <= 0) tl = m;
    else tu = m;
  }
}

std::vector<AngleFraction> root_angles(unsigned long d) {
  require(d >= 1, ErrorKind::InvalidInput, "root_angles: d must be positive");
  std::vector<AngleFraction> out;
  for (unsigned long j = 1; j <= d; ++j)
    if (std::gcd(j, d) == 1) out.emplace_back(frac(static_cast<long>(j), static_cast<long>(d)));
  return out;
}

std::string to_string(const AngleFraction& a) { return to_string(a.value()); }

std::string to_string(const UnitCirclePoint& z) {
  return "(" + to_string(z.re) + ", " + to_string(z.im) + ")";
}

}  // namespace hvskit::exact
