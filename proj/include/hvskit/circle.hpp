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
#include <vector>

#include "hvskit/scalar.hpp"

namespace hvskit::exact {

/// Root of unity exp(2 pi i s), s in lowest terms within (0, 1].
class AngleFraction {
 public:
  AngleFraction() : s_(1) {}
  /// Reduces any rational modulo 1 into (0, 1].
  explicit AngleFraction(Rational s);

  const Rational& value() const { return s_; }
  unsigned long denominator() const { return s_.get_den().get_ui(); }

  friend bool operator==(const AngleFraction& a, const AngleFraction& b) { return a.s_ == b.s_; }
  friend bool operator!=(const AngleFraction& a, const AngleFraction& b) { return a.s_ != b.s_; }
  friend bool operator<(const AngleFraction& a, const AngleFraction& b) { return a.s_ < b.s_; }

 private:
  Rational s_;
};

struct UnitCirclePoint {
  Rational re{1};
  Rational im{0};

  Gaussian as_gaussian() const { return Gaussian(re, im); }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
};

/// ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)); the point with angle atan(t)/pi.
UnitCirclePoint circle_point(const Rational& t);

/// A certified point strictly inside the open arc of angles (s1, s2),
/// with s1 < s2 <= s1 + 1 as rationals. The weight in (0, 1) selects the
/// target position inside the arc, so different weights give independent
/// samples. The certificate is an exact Sturm count; floats only seed it.
UnitCirclePoint gap_sample(const Rational& s1, const Rational& s2, const Rational& weight = Rational(1, 2));

/// Exact test: does the angle of circle_point(t) lie strictly between the
/// rationals lo < hi (taken modulo 1, hi - lo <= 1)?
bool point_in_arc(const UnitCirclePoint& z, const Rational& lo, const Rational& hi);

/// Primitive d-th root angles j/d with gcd(j, d) = 1, ascending in (0, 1].
std::vector<AngleFraction> root_angles(unsigned long d);

std::string to_string(const AngleFraction& a);
std::string to_string(const UnitCirclePoint& z);

}  // namespace hvskit::exact
