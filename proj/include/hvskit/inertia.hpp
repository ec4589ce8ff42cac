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

#include <cstddef>
#include <string>

#include "hvskit/matrix.hpp"

namespace hvskit::exact {

struct Inertia {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;

  long signature() const { return static_cast<long>(plus) - static_cast<long>(minus); }
  std::size_t dim() const { return plus + minus + zero; }
  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.plus == b.plus && a.minus == b.minus && a.zero == b.zero;
  }
};

/// Inertia of a rational symmetric matrix. Symmetric elimination with 1x1
/// pivots, falling back to a 2x2 pivot when the diagonal is exhausted.
Inertia symmetric_inertia(const QMatrix& s);

/// The real symmetric 2n x 2n matrix [[A, -B], [B, A]] of H = A + iB; its
/// inertia is twice that of H.
QMatrix realify(const GMatrix& h);

/// Inertia of a hermitian matrix over Q(i). Throws for non-hermitian input.
Inertia hermitian_inertia(const GMatrix& h);

std::string to_string(const Inertia& in);

}  // namespace hvskit::exact
