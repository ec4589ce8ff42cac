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

#include "hvskit/poly.hpp"

#include <map>
#include <mutex>

namespace hvskit::exact {

RatPoly norm_poly(const GaussPoly& p) {
  GaussPoly n = p * p.conjugate();
  std::vector<Rational> c;
  c.reserve(n.coeffs().size());
  for (const auto& x : n.coeffs()) {
    require(x.is_real(), ErrorKind::Internal, "norm polynomial is not real");
    c.push_back(x.re());
  }
  return RatPoly(std::move(c));
}

GaussPoly to_gaussian(const RatPoly& p) {
  std::vector<Gaussian> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return GaussPoly(std::move(c));
}

unsigned long euler_phi(unsigned long d) {
  unsigned long result = d;
  for (unsigned long p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

namespace {

std::map<unsigned long, RatPoly>& cyclotomic_cache() {
  static std::map<unsigned long, RatPoly> cache;
  return cache;
}

const RatPoly& cyclotomic_locked(unsigned long d) {
  auto& cache = cyclotomic_cache();
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // z^d - 1 is the product of Phi_e over the divisors e of d
  RatPoly p = RatPoly::monomial(d) - RatPoly::constant(Rational(1));
  for (unsigned long e = 1; e < d; ++e)
    if (d % e == 0) p = divmod(p, cyclotomic_locked(e)).first;
  return cache.emplace(d, std::move(p)).first->second;
}

}  // namespace

const RatPoly& cyclotomic(unsigned long d) {
  require(d >= 1, ErrorKind::InvalidInput, "cyclotomic index must be positive");
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_locked(d);
}

CyclotomicSplit cyclotomic_split(const RatPoly& p) {
  require(!p.is_zero(), ErrorKind::InvalidInput, "cyclotomic split of zero polynomial");
  CyclotomicSplit out;
  RatPoly rest = p.monic();
  unsigned long deg = static_cast<unsigned long>(p.degree());
  // phi(d) >= sqrt(d / 2), so phi(d) <= deg forces d <= 2 deg^2
  unsigned long bound = 2 * deg * deg + 1;
  for (unsigned long d = 1; d <= bound && rest.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<unsigned long>(rest.degree())) continue;
    const RatPoly& phi = cyclotomic(d);
    unsigned mult = 0;
    for (;;) {
      auto [q, r] = divmod(rest, phi);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(d, mult);
  }
  out.remainder = rest;
  return out;
}

namespace {

int sign_at(const RatPoly& p, const Rational* x, bool plus_infinity) {
  if (x != nullptr) return sgn(p(*x));
  int s = sgn(p.lead());
  if (!plus_infinity && p.degree() % 2 == 1) s = -s;
  return s;
}

long variations(const std::vector<RatPoly>& seq, const Rational* x, bool plus_infinity) {
  long v = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sign_at(q, x, plus_infinity);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

long sturm_count(const RatPoly& p, const Rational* a, const Rational* b) {
  if (p.degree() <= 0) return 0;
  // squarefree part keeps the count of distinct roots honest at endpoints
  RatPoly g = gcd(p, p.derivative());
  RatPoly sq = divmod(p, g).first;
  std::vector<RatPoly> seq{sq, sq.derivative()};
  while (!seq.back().is_zero()) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return variations(seq, a, false) - variations(seq, b, true);
}

bool has_unit_circle_root(const RatPoly& p) {
  require(!p.is_zero(), ErrorKind::InvalidInput, "unit circle test of zero polynomial");
  if (is_zero(p(Rational(-1)))) return true;
  // z = (1 + i t) / (1 - i t) covers the circle minus -1 as t runs over R
  long n = p.degree();
  GaussPoly plus{Gaussian(1), Gaussian::i()};
  GaussPoly minus{Gaussian(1), -Gaussian::i()};
  GaussPoly q;
  for (long k = 0; k <= n; ++k) {
    if (is_zero(p.coeff(static_cast<std::size_t>(k)))) continue;
    GaussPoly term = GaussPoly::constant(Gaussian(p.coeff(static_cast<std::size_t>(k))));
    for (long j = 0; j < k; ++j) term = term * plus;
    for (long j = k; j < n; ++j) term = term * minus;
    q += term;
  }
  std::vector<Rational> re, im;
  for (const auto& c : q.coeffs()) {
    re.push_back(c.re());
    im.push_back(c.im());
  }
  RatPoly g = gcd(RatPoly(re), RatPoly(im));
  if (g.is_zero()) return true;
  return sturm_count(g, nullptr, nullptr) > 0;
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(static_cast<std::size_t>(k));
    if (is_zero(c)) continue;
    Rational a = abs(c);
    std::string sign = sgn(c) < 0 ? "-" : "+";
    if (out.empty()) sign = sgn(c) < 0 ? "-" : "";
    else sign = " " + sign + " ";
    std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    std::string coef = (a == 1 && k > 0) ? "" : to_string(a);
    if (!coef.empty() && !mono.empty()) coef += "*";
    out += sign + coef + mono;
  }
  return out;
}

}  // namespace hvskit::exact
