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

#include <numeric>

#include "hvskit/error.hpp"
#include "hvskit/hvs.hpp"
#include "hvskit/linalg.hpp"

namespace hvskit {

using namespace exact;

namespace {

template <class T>
Matrix<T> eval_at(const Poly<T>& p, const Matrix<T>& h) {
  std::size_t n = h.rows();
  Matrix<T> acc(n, n);
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = acc * h;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += p.coeffs()[k];
  }
  return acc;
}

// K_j = nullity(f(h)^j) / deg f for j = 0, 1, ... until it stabilises,
// then block counts c_k = 2 K_k - K_{k-1} - K_{k+1}.
template <class T>
std::map<unsigned, unsigned> block_counts(const Poly<T>& f, const Matrix<T>& h, unsigned mult) {
  Matrix<T> F = eval_at(f, h);
  std::size_t n = h.rows();
  std::size_t deg = static_cast<std::size_t>(f.degree());
  std::vector<long> K{0};
  Matrix<T> P = Matrix<T>::identity(n);
  for (unsigned j = 1; j <= mult + 1; ++j) {
    P = P * F;
    std::size_t null = n - rank(P);
    require(null % deg == 0, ErrorKind::Internal, "generalized eigenspace dimension is not a multiple");
    K.push_back(static_cast<long>(null / deg));
    if (K.back() == K[K.size() - 2]) break;
  }
  K.push_back(K.back());
  std::map<unsigned, unsigned> out;
  for (std::size_t k = 1; k + 1 < K.size(); ++k) {
    long c = 2 * K[k] - K[k - 1] - K[k + 1];
    require(c >= 0, ErrorKind::Internal, "negative Jordan block count");
    if (c > 0) out[static_cast<unsigned>(k)] = static_cast<unsigned>(c);
  }
  return out;
}

GaussPoly char_poly_gaussian(const GMatrix& h) { return GaussPoly(char_poly_coeffs(h)); }

}  // namespace

std::vector<AngleFraction> orbit_angles(const CyclotomicOrbit& o) {
  std::vector<AngleFraction> out;
  for (const auto& a : root_angles(o.d)) {
    if (o.orbit == 0) {
      out.push_back(a);
      continue;
    }
    long j = a.value().get_num().get_si() * static_cast<long>(o.d / a.denominator());
    if (j % 4 == o.orbit) out.push_back(a);
  }
  return out;
}

GaussPoly orbit_poly(const CyclotomicOrbit& o) {
  GaussPoly phi = to_gaussian(cyclotomic(o.d));
  if (o.orbit == 0) return phi;
  require(o.d % 4 == 0, ErrorKind::InvalidInput, "orbit split needs 4 | d");
  // primitive roots with z^(d/4) = i are exactly those with j = 1 mod 4
  Gaussian target = o.orbit == 1 ? Gaussian::i() : -Gaussian::i();
  GaussPoly g = GaussPoly::monomial(o.d / 4) - GaussPoly::constant(target);
  return gcd(phi, g);
}

EigenSplit eigen_split(const GMatrix& h) {
  require(h.square(), ErrorKind::InvalidInput, "monodromy must be square");
  EigenSplit out;
  if (h.rows() == 0) {
    out.remainder = GaussPoly::constant(Gaussian(1));
    return out;
  }
  if (is_real(h)) {
    RatPoly p(char_poly_coeffs(to_rational(h)));
    auto split = cyclotomic_split(p);
    for (auto [d, mult] : split.factors) out.orbits.push_back({CyclotomicOrbit{d, 0}, mult});
    out.remainder = to_gaussian(split.remainder);
    return out;
  }
  GaussPoly p = char_poly_gaussian(h);
  auto candidates = cyclotomic_split(norm_poly(p));
  for (auto [d, mult] : candidates.factors) {
    std::vector<int> orbits = d % 4 == 0 ? std::vector<int>{1, 3} : std::vector<int>{0};
    for (int orbit : orbits) {
      CyclotomicOrbit o{d, orbit};
      GaussPoly f = orbit_poly(o);
      unsigned m = 0;
      for (;;) {
        auto [q, r] = divmod(p, f);
        if (!r.is_zero()) break;
        p = std::move(q);
        ++m;
      }
      if (m > 0) out.orbits.push_back({o, m});
    }
  }
  out.remainder = p.monic();
  return out;
}

std::vector<AngleFraction> eigen_angles(const GMatrix& h) {
  EigenSplit es = eigen_split(h);
  if (es.remainder.degree() > 0)
    require(!has_unit_circle_root(norm_poly(es.remainder)), ErrorKind::PreconditionFailed,
            "monodromy has a unit-circle eigenvalue that is not a root of unity");
  std::vector<AngleFraction> out;
  for (const auto& [o, m] : es.orbits)
    for (const auto& a : orbit_angles(o)) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Rational, unsigned> eigen_multiplicities(const GMatrix& h) {
  std::map<Rational, unsigned> out;
  for (const auto& [o, m] : eigen_split(h).orbits)
    for (const auto& a : orbit_angles(o)) out[a.value()] += m;
  return out;
}

unsigned JordanData::max_block(unsigned long d) const {
  unsigned out = 0;
  for (const auto& [o, counts] : blocks)
    if (o.d == d && !counts.empty()) out = std::max(out, counts.rbegin()->first);
  return out;
}

JordanData jordan_data(const GMatrix& h) {
  require(h.square(), ErrorKind::InvalidInput, "monodromy must be square");
  require(rank(h) == h.rows(), ErrorKind::PreconditionFailed, "jordan_data: h is singular");
  EigenSplit es = eigen_split(h);
  JordanData out;
  out.noncyclotomic_dim = static_cast<std::size_t>(std::max<long>(0, es.remainder.degree()));
  bool real = is_real(h);
  QMatrix hq = real ? to_rational(h) : QMatrix();
  for (const auto& [o, mult] : es.orbits) {
    if (real) out.blocks[o] = block_counts(cyclotomic(o.d), hq, mult);
    else out.blocks[o] = block_counts(orbit_poly(o), h, mult);
  }
  return out;
}

}  // namespace hvskit
