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

#include "hvskit/hvs.hpp"

namespace hvskit {

/// Homological dimensions of a Seifert cobordism between two links.
struct CobordismInvariants {
  long dimU0 = 0, dimU1 = 0;
  long b1Sigma0 = 0, b1Sigma1 = 0;
  long b1Glued = 0;  // b_1 of Y glued with both surfaces
  long irr2 = 0;
  long kerH1 = 0;  // dim ker(H_1(M_0 u M_1) -> H_1(W))
};

/// Lower bound for the dimension of the subspace on which the Seifert form
/// vanishes. Half-integral values are rounded up, which keeps it a valid
/// bound for an integer dimension.
long null_space_bound(long b1Sigma, long b1Glued, long irr2, long kerA);

/// dim U - 2 dim U_null + n(z); bound for |sigma(z)|.
long lagrange_bound(long dimU, long dimNull, long nullity);

struct MurasugiReport {
  long lhs = 0;  // |sigma_0 - sigma_1|
  long rhs = 0;
  long slack() const { return rhs - lhs; }
  bool pass() const { return lhs <= rhs; }
};

MurasugiReport murasugi_check(long sig0, long sig1, long null0, long null1, const CobordismInvariants& ci);

struct IrrReport {
  long value = 0;
  bool consistent = true;  // false when the sum came out negative
};

IrrReport irr_sum(long dimH2WM, const std::vector<long>& b1Mi);

struct LinkSpectrumData {
  Spectrum spectrum;                       // fractured spectrum
  std::vector<AngleFraction> jump_angles;  // monodromy eigenvalue angles
  unsigned c = 0, g = 0, n = 1;
};

struct DeformationScenario {
  LinkSpectrumData central;
  std::vector<LinkSpectrumData> satellites;
  long irr1 = 0;
  long irr2 = 0;
};

/// One inequality at one sample s. `inequality` is 1 for the window
/// (s, s+1) and 2 for the complement of [s, s+1].
struct SemicontRow {
  Rational s;
  int inequality = 1;
  long lhs = 0;
  long rhs = 0;
  bool pass() const { return lhs >= rhs; }
  long slack() const { return lhs - rhs; }
};

struct SemicontReport {
  std::vector<SemicontRow> rows;
  long delta1 = 0, delta2 = 0;  // zero for the fractured variant
  bool pass() const;
};

/// Admissible sample points s in [0, 1]: one midpoint for every gap cut out
/// by the central jump angles and by the fractional parts of all spectrum
/// entries, plus the endpoints 0 and 1 when 1 is not a central jump.
std::vector<Rational> admissible_samples(const DeformationScenario& ds);

SemicontReport semicontinuity_check(const DeformationScenario& ds);
SemicontReport semicontinuity_mhs_check(const DeformationScenario& ds);

}  // namespace hvskit
