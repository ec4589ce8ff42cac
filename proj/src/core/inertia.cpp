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

#include "hvskit/inertia.hpp"

#include <vector>

#include "hvskit/error.hpp"

namespace hvskit::exact {

Inertia symmetric_inertia(const QMatrix& s) {
  require(s.square(), ErrorKind::InvalidInput, "inertia of non-square matrix");
  require(s == s.transpose(), ErrorKind::InvalidInput, "inertia: matrix is not symmetric");
  Inertia out;
  QMatrix a = s;
  std::vector<std::size_t> live(a.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  Rational f;

  auto drop = [&live](std::size_t idx) {
    for (std::size_t p = 0; p < live.size(); ++p)
      if (live[p] == idx) {
        live.erase(live.begin() + static_cast<long>(p));
        return;
      }
  };

  while (!live.empty()) {
    std::size_t k = 0;
    bool diag = false;
    for (std::size_t idx : live)
      if (!is_zero(a(idx, idx))) {
        k = idx;
        diag = true;
        break;
      }
    if (diag) {
      Rational piv = a(k, k);
      if (sgn(piv) > 0) ++out.plus;
      else ++out.minus;
      drop(k);
      for (std::size_t i : live) {
        if (is_zero(a(i, k))) continue;
        Rational c = a(i, k) / piv;
        for (std::size_t j : live) {
          if (is_zero(a(k, j))) continue;
          f = c;
          f *= a(k, j);
          a(i, j) -= f;
        }
      }
      continue;
    }
    // zero diagonal: look for a nonzero off-diagonal entry
    std::size_t kk = 0, ll = 0;
    bool found = false;
    for (std::size_t p = 0; p < live.size() && !found; ++p)
      for (std::size_t q = p + 1; q < live.size(); ++q)
        if (!is_zero(a(live[p], live[q]))) {
          kk = live[p];
          ll = live[q];
          found = true;
          break;
        }
    if (!found) {
      out.zero += live.size();
      break;
    }
    // [[0, x], [x, 0]] has one positive and one negative eigenvalue
    Rational x = a(kk, ll);
    ++out.plus;
    ++out.minus;
    drop(kk);
    drop(ll);
    for (std::size_t i : live) {
      Rational ik = a(i, kk), il = a(i, ll);
      if (is_zero(ik) && is_zero(il)) continue;
      for (std::size_t j : live) {
        f = ik * a(ll, j) + il * a(kk, j);
        if (is_zero(f)) continue;
        f /= x;
        a(i, j) -= f;
      }
    }
  }
  return out;
}

QMatrix realify(const GMatrix& h) {
  std::size_t n = h.rows();
  QMatrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Gaussian& x = h(i, j);
      r(i, j) = x.re();
      r(i + n, j + n) = x.re();
      r(i, j + n) = -x.im();
      r(i + n, j) = x.im();
    }
  return r;
}

Inertia hermitian_inertia(const GMatrix& h) {
  require(h.square(), ErrorKind::InvalidInput, "inertia of non-square matrix");
  require(h == h.adjoint(), ErrorKind::InvalidInput, "inertia: matrix is not hermitian");
  if (is_real(h)) return symmetric_inertia(to_rational(h));
  Inertia twice = symmetric_inertia(realify(h));
  require(twice.plus % 2 == 0 && twice.minus % 2 == 0 && twice.zero % 2 == 0,
          ErrorKind::Internal, "realified inertia is not even");
  return Inertia{twice.plus / 2, twice.minus / 2, twice.zero / 2};
}

std::string to_string(const Inertia& in) {
  return "(" + std::to_string(in.plus) + ", " + std::to_string(in.minus) + ", " +
         std::to_string(in.zero) + ")";
}

}  // namespace hvskit::exact
