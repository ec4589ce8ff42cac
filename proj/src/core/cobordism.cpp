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

#include "hvskit/cobordism.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "hvskit/error.hpp"
#include "hvskit/seifert.hpp"

namespace hvskit {

using exact::frac;

long null_space_bound(long b1Sigma, long b1Glued, long irr2, long kerA) {
  long twice = 2 * b1Sigma - b1Glued - 2 * irr2 - 2 * kerA;
  // ceil(twice / 2) for either sign
  return twice >= 0 ? (twice + 1) / 2 : -((-twice) / 2);
}

long lagrange_bound(long dimU, long dimNull, long nullity) {
  require(dimNull >= 0 && dimNull <= dimU, ErrorKind::PreconditionFailed,
          "dim U_null = " + std::to_string(dimNull) + " exceeds dim U = " + std::to_string(dimU));
  return dimU - 2 * dimNull + nullity;
}

MurasugiReport murasugi_check(long sig0, long sig1, long null0, long null1, const CobordismInvariants& ci) {
  MurasugiReport r;
  r.lhs = std::labs(sig0 - sig1);
  r.rhs = ci.dimU0 + ci.dimU1 - 2 * ci.b1Sigma0 - 2 * ci.b1Sigma1 + ci.b1Glued + 2 * ci.irr2 +
          2 * ci.kerH1 + null0 + null1;
  return r;
}

IrrReport irr_sum(long dimH2WM, const std::vector<long>& b1Mi) {
  IrrReport r;
  r.value = dimH2WM;
  for (long b : b1Mi) r.value -= b;
  r.consistent = r.value >= 0;
  return r;
}

bool SemicontReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const SemicontRow& r) { return r.pass(); });
}

namespace {

Rational fractional(const Rational& a) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return a - Rational(f);
}

void check_scenario(const DeformationScenario& ds) {
  require(!ds.satellites.empty(), ErrorKind::InvalidInput, "scenario needs at least one satellite");
  auto check_sp = [](const Spectrum& sp) {
    for (const auto& a : sp)
      require(sgn(a) > 0 && a <= 2, ErrorKind::InvalidInput, "spectrum entry " + exact::to_string(a) +
                                                                 " is outside (0, 2]");
  };
  check_sp(ds.central.spectrum);
  for (const auto& s : ds.satellites) check_sp(s.spectrum);
}

SemicontReport evaluate(const DeformationScenario& ds, const Spectrum& central,
                        const std::vector<Spectrum>& sats, long delta1, long delta2) {
  SemicontReport rep;
  rep.delta1 = delta1;
  rep.delta2 = delta2;
  long irr = ds.irr1 + ds.irr2;
  for (const auto& s : admissible_samples(ds)) {
    Rational hi = s + 1;
    SemicontRow in{s, 1, static_cast<long>(count_open(central, s, hi)), delta1 - irr};
    SemicontRow out{s, 2, static_cast<long>(count_outside_closed(central, s, hi)), delta2 - irr};
    for (const auto& sp : sats) {
      in.rhs += static_cast<long>(count_open(sp, s, hi));
      out.rhs += static_cast<long>(count_outside_closed(sp, s, hi));
    }
    rep.rows.push_back(in);
    rep.rows.push_back(out);
  }
  return rep;
}

}  // namespace

std::vector<Rational> admissible_samples(const DeformationScenario& ds) {
  std::set<Rational> cuts{Rational(0), Rational(1)};
  bool one_is_jump = false;
  for (const auto& a : ds.central.jump_angles) {
    cuts.insert(a.value());
    if (a.value() == 1) one_is_jump = true;
  }
  auto add_spectrum = [&cuts](const Spectrum& sp) {
    for (const auto& a : sp) cuts.insert(fractional(a));
  };
  add_spectrum(ds.central.spectrum);
  for (const auto& s : ds.satellites) add_spectrum(s.spectrum);

  std::vector<Rational> out;
  if (!one_is_jump) out.push_back(Rational(0));
  for (auto it = cuts.begin(); std::next(it) != cuts.end(); ++it) {
    Rational mid = (*it + *std::next(it)) / 2;
    out.push_back(mid);
  }
  if (!one_is_jump) out.push_back(Rational(1));
  return out;
}

SemicontReport semicontinuity_check(const DeformationScenario& ds) {
  check_scenario(ds);
  std::vector<Spectrum> sats;
  for (const auto& s : ds.satellites) sats.push_back(s.spectrum);
  return evaluate(ds, ds.central.spectrum, sats, 0, 0);
}

SemicontReport semicontinuity_mhs_check(const DeformationScenario& ds) {
  check_scenario(ds);
  long d1 = ds.central.c, d2 = static_cast<long>(ds.central.c) + ds.central.g;
  std::vector<Spectrum> sats;
  for (const auto& s : ds.satellites) {
    sats.push_back(mhs_spectrum(s.spectrum, s.c, s.g));
    d1 -= s.c;
    d2 -= static_cast<long>(s.c) + s.g;
  }
  Spectrum central = mhs_spectrum(ds.central.spectrum, ds.central.c, ds.central.g);
  return evaluate(ds, central, sats, d1, d2);
}

}  // namespace hvskit
