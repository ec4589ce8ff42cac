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

#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "hvskit/hvs.hpp"
#include "hvskit/linalg.hpp"
#include "oracles.hpp"

using namespace hvskit;
using exact::frac;

namespace {

Hvs nonsplit() {
  return Hvs{-1, GMatrix{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}, GMatrix{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}},
             GMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}};
}

const Rational kLiteral[] = {frac(1, 4), frac(1, 2), frac(3, 4), Rational(1)};

}  // namespace

TEST_CASE("calibration: every literal model block satisfies the axioms") {
  for (int eps : {-1, 1})
    for (unsigned k = 1; k <= 4; ++k)
      for (const auto& s : kLiteral)
        for (int u : {1, -1}) {
          CAPTURE(eps);
          CAPTURE(k);
          CAPTURE(exact::to_string(s));
          CAPTURE(u);
          CHECK(validate_hvs(block_W(k, s, u, eps)).ok());
          CHECK(validate_hvs(block_V(k, s, u, eps)).ok());
        }
  for (unsigned k = 1; k <= 3; ++k) {
    CHECK(validate_hvs(block_offcircle(k, Gaussian(frac(1, 2)))).ok());
    CHECK(validate_hvs(block_offcircle(k, Gaussian(Rational(0), frac(1, 2)))).ok());
  }
  auto r = validate_hvs(nonsplit());
  CHECK(r.ok());
  CHECK(r.rank_V == 2);
  CHECK_FALSE(r.simple);
}

TEST_CASE("validate_hvs examples") {
  Hvs c1{-1, GMatrix{{0}}, GMatrix{{1}}, GMatrix{{-1}}};
  CHECK(validate_hvs(c1).ok());
  Hvs bad{-1, GMatrix{{1}}, GMatrix{{1}}, GMatrix{{1}}};
  auto r = validate_hvs(bad);
  CHECK_FALSE(r.ok());
  bool named = false;
  for (const auto& f : r.failures) named |= f.identity == "V*b = h - I";
  CHECK(named);
  CHECK_THROWS_AS(validate_hvs(Hvs{-1, GMatrix(2, 2), GMatrix::identity(3), GMatrix(3, 3)}), Error);
}

TEST_CASE("model block values") {
  Hvs w = block_W(1, Rational(1), 1);
  CHECK(w.b == GMatrix{{0}});
  CHECK(w.h == GMatrix{{1}});
  CHECK(w.V == GMatrix{{-1}});
  Hvs m = block_W(1, frac(1, 2), 1);
  CHECK(m.dim() == 1);
  CHECK(m.h == GMatrix{{-1}});
  CHECK(validate_hvs(m).nondegenerate);
  // V~^2_1(-1): the variation is invertible and the form has rank one
  Hvs w2 = block_W(2, Rational(1), -1);
  auto r2 = validate_hvs(w2);
  CHECK(r2.ok());
  CHECK(r2.simple);
  CHECK(exact::rank(w2.b) == 1);
  CHECK_THROWS_AS(block_W(1, frac(1, 3), 1), Error);
  CHECK_THROWS_AS(block_offcircle(1, Gaussian(1)), Error);
  CHECK_THROWS_AS(block_offcircle(1, Gaussian(0)), Error);
}

TEST_CASE("model forms are invariant under the Jordan block") {
  for (int eps : {-1, 1})
    for (unsigned k = 1; k <= 5; ++k)
      for (int u : {1, -1}) {
        GMatrix b = model_form(k, u, eps);
        GMatrix J = exact::jordan_block<Gaussian>(k);
        CHECK(J.adjoint() * b * J == b);
        CHECK(b.adjoint() == b * Gaussian(eps));
        CHECK(exact::rank(b) == k);
      }
}

TEST_CASE("direct sums") {
  Hvs w = block_W(1, Rational(1), 1);
  CHECK(direct_sum(w, empty_hvs(-1)).V == w.V);
  Hvs ww = direct_sum(w, w);
  CHECK(ww.dim() == 2);
  CHECK(ww.V == GMatrix{{-1, 0}, {0, -1}});
  CHECK_THROWS_AS(direct_sum(w, block_W(1, Rational(1), 1, 1)), Error);
}

TEST_CASE("change of basis preserves the axioms and the invariants") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 15; ++t) {
    auto rr = gen::random_realization(rng, 8);
    GMatrix T = gen::random_invertible(rng, rr.r.hvs.dim());
    Hvs moved = change_basis(rr.r.hvs, T);
    CHECK(validate_hvs(moved).ok());
    CHECK(jordan_data(moved.h) == jordan_data(rr.r.hvs.h));
    CHECK(signature_profile(moved) == signature_profile(rr.r.hvs));
  }
}

TEST_CASE("split_by_form") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    Hvs a = realize_blocks(gen::random_circle_spec(rng, 6, 4), rng()).hvs;
    Hvs b = realize_blocks(gen::random_circle_spec(rng, 6, 4), rng()).hvs;
    if (!validate_hvs(a).nondegenerate) continue;
    std::vector<std::size_t> u1;
    for (std::size_t i = 0; i < a.dim(); ++i) u1.push_back(i);
    auto [x, y] = split_by_form(direct_sum(a, b), u1);
    CHECK(x.V == a.V);
    CHECK(y.V == b.V);
    CHECK(y.b == b.b);
  }
  CHECK_THROWS_AS(split_by_form(nonsplit(), {0, 2}), Error);
  Hvs v = block_V(2, frac(1, 2), 1);
  auto [all, none] = split_by_form(v, {0, 1});
  CHECK(all.V == v.V);
  CHECK(none.dim() == 0);
}

TEST_CASE("jordan data") {
  auto one = [](const JordanData& jd) { return jd.blocks.at(CyclotomicOrbit{1, 0}); };
  CHECK(one(jordan_data(exact::jordan_block<Gaussian>(2))) == std::map<unsigned, unsigned>{{2, 1}});
  CHECK(one(jordan_data(GMatrix::identity(3))) == std::map<unsigned, unsigned>{{1, 3}});
  GMatrix phi6{{0, -1}, {1, 1}};
  auto jd = jordan_data(phi6);
  REQUIRE(jd.blocks.size() == 1);
  CHECK(jd.blocks.begin()->first.d == 6);
  CHECK(jd.blocks.begin()->second == std::map<unsigned, unsigned>{{1, 1}});
  CHECK_THROWS_AS(jordan_data(GMatrix(2, 2)), Error);
  GMatrix h2{{2, 0}, {0, 1}};
  CHECK(jordan_data(h2).noncyclotomic_dim == 1);
}

TEST_CASE("realized structures carry the requested Jordan data") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 25; ++t) {
    auto rr = gen::random_realization(rng);
    CHECK(validate_hvs(rr.r.hvs).ok());
    // rebuild the (orbit angle, k) counts from the measured spec
    std::map<std::pair<Rational, unsigned>, unsigned> want, got;
    for (const auto& b : rr.r.measured.circle) want[{b.s.value(), b.k}] += b.mult;
    auto jd = jordan_data(rr.r.hvs.h);
    for (const auto& [o, sizes] : jd.blocks)
      for (const auto& a : orbit_angles(o))
        for (const auto& [k, m] : sizes) got[{a.value(), k}] += m;
    CHECK(want == got);
  }
  auto r3 = realize_blocks(BlockSpec{-1, {{1, AngleFraction(frac(1, 3)), 1, 1}}, {}});
  CHECK(r3.hvs.dim() == 2);
  CHECK(exact::is_real(r3.hvs.h));
  auto r1 = realize_blocks(BlockSpec{-1, {{1, AngleFraction(Rational(1)), 1, 1}}, {}});
  CHECK(r1.hvs.V == block_W(1, Rational(1), 1).V);
  CHECK(r1.measured.circle.size() == 1);
  CHECK(r1.measured.circle[0].u == 1);
}

TEST_CASE("spectrum from blocks") {
  auto sp = [](std::vector<CircleBlock> c) { return spectrum_from_blocks(BlockSpec{-1, c, {}}); };
  CHECK(sp({{1, AngleFraction(Rational(1)), 1, 1}}) == Spectrum{1});
  CHECK(sp({{2, AngleFraction(Rational(1)), 1, 1}}) == Spectrum{1, 2});
  CHECK(sp({{1, AngleFraction(Rational(1)), 1, 1}, {1, AngleFraction(Rational(1)), -1, 1}}) == Spectrum{1, 2});
  CHECK_THROWS_AS(spectrum_from_blocks(BlockSpec{-1, {}, {{1, Gaussian(frac(1, 2)), 1}}}), Error);

  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    BlockSpec spec = gen::random_circle_spec(rng, 20, 12);
    for (auto& b : spec.circle) b.mult = 1 + rng() % 3;
    Spectrum s = spectrum_from_blocks(spec);
    CHECK(s == oracle::spectrum_of(spec));
    std::size_t dim = 0;
    for (const auto& b : spec.circle) dim += b.k * b.mult;
    CHECK(s.size() == dim);
  }
}

TEST_CASE("signatures") {
  Hvs w = block_W(1, Rational(1), 1);
  Hvs wm = block_W(1, Rational(1), -1);
  for (Rational t : {frac(1, 3), Rational(2), frac(-7, 2)}) {
    UnitCirclePoint z = exact::circle_point(t);
    CHECK(hvs_signature(w, z) == -1);
    CHECK(hvs_signature(empty_hvs(-1), z) == 0);
    CHECK(hvs_signature(direct_sum(w, wm), z) == 0);
  }
  CHECK_THROWS_AS(hvs_signature(w, UnitCirclePoint{}), Error);

  auto p = signature_profile(w);
  CHECK(p.jumps == std::vector<AngleFraction>{AngleFraction(Rational(1))});
  CHECK(p.arc_values == std::vector<long>{-1});

  for (int u : {1, -1}) {
    auto q = signature_profile(block_W(1, frac(1, 2), u));
    REQUIRE(q.jumps.size() == 2);
    CHECK(q.jumps[0].value() == frac(1, 2));
    CHECK(q.arc_values[0] != q.arc_values[1]);
    auto both = signature_profile(direct_sum(w, block_W(1, frac(1, 2), u)));
    REQUIRE(both.arc_values.size() == 2);
    CHECK(both.arc_values[0] == q.arc_values[0] - 1);
    CHECK(both.arc_values[1] == q.arc_values[1] - 1);
  }
}

TEST_CASE("signature profiles agree with floating point and are additive") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) {
    auto a = gen::random_realization(rng, 8);
    auto b = gen::random_realization(rng, 6);
    auto p = signature_profile(a.r.hvs, 2);
    auto arcs = arcs_of(p.jumps);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      double mid = (arcs[i].first.get_d() + arcs[i].second.get_d()) / 2;
      CHECK(p.arc_values[i] == oracle::float_signature(a.r.hvs.V, mid));
    }
    Hvs sum = direct_sum(a.r.hvs, b.r.hvs);
    for (Rational x : {frac(1, 7), frac(2, 9), frac(5, 11)}) {
      UnitCirclePoint z = exact::circle_point(x);
      CHECK(hvs_signature(sum, z) == hvs_signature(a.r.hvs, z) + hvs_signature(b.r.hvs, z));
      CHECK(hvs_nullity(sum, z) == hvs_nullity(a.r.hvs, z) + hvs_nullity(b.r.hvs, z));
    }
  }
}

TEST_CASE("spectrum from signatures") {
  CHECK(spectrum_from_signatures(block_W(1, Rational(1), 1), 1, 0).spectrum == Spectrum{1});
  for (int u : {1, -1}) {
    auto r = realize_blocks(BlockSpec{-1, {{1, AngleFraction(frac(1, 2)), u, 1}}, {}});
    auto s = spectrum_from_signatures(r.hvs, 0, 0);
    CHECK(s.determined);
    CHECK(s.spectrum == spectrum_from_blocks(r.measured));
  }
  auto r = realize_blocks(
      BlockSpec{-1, {{1, AngleFraction(frac(1, 4)), 1, 1}, {1, AngleFraction(frac(3, 4)), -1, 1}}, {}});
  CHECK(spectrum_from_signatures(r.hvs, 0, 0).spectrum == spectrum_from_blocks(r.measured));
  CHECK_THROWS_AS(spectrum_from_signatures(nonsplit(), 0, 0), Error);

  std::mt19937_64 rng(61);
  for (int t = 0; t < 30; ++t) {
    auto rr = gen::random_realization(rng);
    Spectrum want = spectrum_from_blocks(rr.r.measured);
    auto got = spectrum_from_signatures(rr.r.hvs, multiplicity(want, Rational(1)), multiplicity(want, Rational(2)));
    CHECK(got.determined);
    CHECK(got.spectrum == want);
    CHECK(check_sigspec(rr.r.hvs, want).ok());
  }
}

TEST_CASE("check_sigspec") {
  Hvs w = block_W(1, Rational(1), 1);
  CHECK(check_sigspec(w, Spectrum{1}).ok());
  auto bad = check_sigspec(w, Spectrum{frac(1, 2)});
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.failures.empty());
  CHECK(check_sigspec(empty_hvs(-1), Spectrum{}).ok());
}
