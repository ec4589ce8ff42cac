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

// Random fixtures shared by the unit tests and the acceptance binary.
#pragma once

#include <numeric>
#include <random>

#include "hvskit/hvs.hpp"
#include "hvskit/linalg.hpp"
#include "hvskit/seifert.hpp"

namespace gen {

using namespace hvskit;
using hvskit::exact::frac;

/// Circle blocks with angle denominators <= max_den and nominal dimension
/// <= max_dim (a realization may double a Galois orbit).
inline BlockSpec random_circle_spec(std::mt19937_64& rng, std::size_t max_dim = 12, long max_den = 8) {
  std::uniform_int_distribution<long> den(1, max_den);
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    BlockSpec spec;
    std::size_t nblocks = 1 + rng() % 4;
    std::size_t dim = 0;
    for (std::size_t i = 0; i < nblocks; ++i) {
      long d = den(rng);
      long j = 1 + static_cast<long>(rng() % d);
      while (std::gcd(j, d) != 1) j = 1 + static_cast<long>(rng() % d);
      unsigned k = 1 + static_cast<unsigned>(rng() % 3);
      if (d == 1) k = 1 + static_cast<unsigned>(rng() % 2);  // simple at 1
      CircleBlock b{k, AngleFraction(frac(j, d)), coin(rng) ? 1 : -1, 1};
      bool literal = d <= 2 || d == 4;
      dim += k * (literal ? 1 : exact::euler_phi(d));
      spec.circle.push_back(b);
    }
    if (dim <= max_dim) return spec;
  }
}

struct RandomRealization {
  BlockSpec spec;
  Realization r;
};

/// A realized random spec whose actual dimension is <= max_dim.
inline RandomRealization random_realization(std::mt19937_64& rng, std::size_t max_dim = 12, long max_den = 8) {
  for (;;) {
    BlockSpec spec = random_circle_spec(rng, max_dim, max_den);
    Realization r = realize_blocks(spec, rng());
    if (r.hvs.dim() <= max_dim) return {spec, r};
  }
}

/// Random invertible rational matrix.
inline GMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-3, 3);
  for (;;) {
    QMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = c(rng);
    if (exact::rank(t) == n) return exact::to_gaussian(t);
  }
}

inline Hvs fix_pair(int epsilon = -1) {
  return direct_sum(block_V(1, Rational(1), 1, epsilon), block_V(1, Rational(1), -1, epsilon));
}

/// Fibred link data assembled from the standard inventory:
/// (n-1) W^1_1(+1), c V^2_1(+1), g (V^1_1(+1) + V^1_1(-1)) and a rational
/// eigenvalue != 1 part, optionally scrambled by a rational change of basis.
/// The eigenvalue != 1 part is drawn until the whole structure passes the
/// twist test, as monodromies of links of singularities do.
inline FibredLinkData random_fibred(std::mt19937_64& rng, bool scramble = true) {
  for (;;) {
    unsigned n = 1 + static_cast<unsigned>(rng() % 3);
    unsigned c = static_cast<unsigned>(rng() % 3);
    unsigned g = static_cast<unsigned>(rng() % 2);
    Hvs v = empty_hvs(-1);
    std::size_t parts = rng() % 3;
    for (std::size_t i = 0; i < parts; ++i) {
      static const unsigned long ds[] = {2, 3, 4, 5, 6, 8};
      unsigned long d = ds[rng() % 6];
      unsigned k = 1 + static_cast<unsigned>(rng() % 2);
      v = direct_sum(v, rational_unit(k, d, -1, rng()));
    }
    for (unsigned i = 0; i + 1 < n; ++i) v = direct_sum(v, block_W(1, Rational(1), 1));
    for (unsigned i = 0; i < c; ++i) v = direct_sum(v, block_V(2, Rational(1), 1));
    for (unsigned i = 0; i < g; ++i) {
      // the literal pair is complex for epsilon = -1; use the rational form
      // [[0, 1], [-1, 0]] with h = I, V = 0 which is isomorphic to it
      Hvs p{-1, exact::to_gaussian(QMatrix{{0, 1}, {-1, 0}}), GMatrix::identity(2), GMatrix(2, 2)};
      v = direct_sum(v, p);
    }
    if (v.dim() == 0 || v.dim() > 16) continue;
    if (scramble) v = change_basis(v, random_invertible(rng, v.dim()));
    FibredLinkData fl{-1, n, c, g, v.h, v.b, v.V};
    if (!twist_check(fl).ok()) continue;
    return fl;
  }
}

}  // namespace gen
