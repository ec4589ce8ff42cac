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

#include "hvskit/scalar.hpp"

#include <cctype>
#include <string>

#include "hvskit/error.hpp"

namespace hvskit::exact {

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  require(!o.is_zero(), ErrorKind::InvalidInput, "division by zero");
  Rational n = o.norm();
  Rational r = (re_ * o.re_ + im_ * o.im_) / n;
  Rational m = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

Gaussian i_power(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return Gaussian(1);
    case 1: return Gaussian::i();
    case 2: return Gaussian(-1);
    default: return -Gaussian::i();
  }
}

std::string to_string(const Rational& x) {
  // mpq_class::get_str already omits a unit denominator
  return x.get_str();
}

std::string to_string(const Gaussian& x) {
  if (x.is_real()) return to_string(x.re());
  std::string im;
  if (x.im() == 1) im = "i";
  else if (x.im() == -1) im = "-i";
  else im = to_string(x.im()) + "*i";
  if (is_zero(x.re())) return im;
  if (sgn(x.im()) > 0) return to_string(x.re()) + "+" + im;
  return to_string(x.re()) + im;
}

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

[[noreturn]] void bad_scalar(std::string_view text) {
  fail(ErrorKind::InvalidInput, "malformed scalar \"" + std::string(text) + "\"");
}

bool parse_rational_strict(const std::string& s, Rational& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t digits = 0, slash = 0;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (std::isdigit(static_cast<unsigned char>(s[j]))) {
      ++digits;
    } else if (s[j] == '/' && slash == 0 && digits > 0 && j + 1 < s.size()) {
      slash = j;
    } else {
      return false;
    }
  }
  if (digits == 0) return false;
  std::string body = s[0] == '+' ? s.substr(1) : s;
  if (slash != 0 && s.substr(slash + 1).find_first_not_of('0') == std::string::npos) return false;
  if (out.set_str(body, 10) != 0) return false;
  out.canonicalize();
  return true;
}

// Imaginary coefficient of a term ending in "i": "", "+", "-", "b", "b*".
bool parse_imag(std::string t, Rational& out) {
  if (!t.empty() && t.back() == '*') {
    t.pop_back();
    if (t.empty() || t.back() == '+' || t.back() == '-') return false;
  }
  if (t.empty() || t == "+") {
    out = 1;
    return true;
  }
  if (t == "-") {
    out = -1;
    return true;
  }
  return parse_rational_strict(t, out);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Rational r;
  if (!parse_rational_strict(strip(text), r)) bad_scalar(text);
  return r;
}

Gaussian parse_gaussian(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) bad_scalar(text);
  if (s.back() != 'i') {
    Rational r;
    if (!parse_rational_strict(s, r)) bad_scalar(text);
    return Gaussian(r);
  }
  s.pop_back();
  // split at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t j = s.size(); j-- > 1;) {
    if (s[j] == '+' || s[j] == '-') {
      split = j;
      break;
    }
  }
  Rational re(0), im;
  if (split == std::string::npos) {
    if (!parse_imag(s, im)) bad_scalar(text);
  } else {
    if (!parse_rational_strict(s.substr(0, split), re)) bad_scalar(text);
    if (!parse_imag(s.substr(split), im)) bad_scalar(text);
  }
  return Gaussian(re, im);
}

}  // namespace hvskit::exact
