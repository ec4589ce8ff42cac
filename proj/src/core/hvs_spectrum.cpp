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

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <tuple>

#include "hvskit/error.hpp"
#include "hvskit/hvs.hpp"
#include "hvskit/linalg.hpp"

namespace hvskit {

using namespace exact;

// ---------------------------------------------------------------------------
// block specs and spectra

BlockSpec BlockSpec::normalized() const {
  std::map<std::tuple<unsigned, Rational, int>, unsigned> merged;
  for (const auto& c : circle) {
    require(c.k >= 1, ErrorKind::InvalidInput, "block size must be positive");
    require(c.u == 1 || c.u == -1, ErrorKind::InvalidInput, "block sign must be +1 or -1");
    if (c.mult > 0) merged[{c.k, c.s.value(), c.u}] += c.mult;
  }
  BlockSpec out;
  out.epsilon = epsilon;
  for (const auto& [key, mult] : merged)
    out.circle.push_back({std::get<0>(key), AngleFraction(std::get<1>(key)), std::get<2>(key), mult});
  out.offcircle = offcircle;
  return out;
}

std::size_t BlockSpec::dim() const {
  std::size_t n = 0;
  for (const auto& c : circle) n += static_cast<std::size_t>(c.k) * c.mult;
  for (const auto& o : offcircle) n += 2 * static_cast<std::size_t>(o.k) * o.mult;
  return n;
}

Spectrum make_spectrum(std::vector<Rational> entries) {
  for (const auto& a : entries)
    require(sgn(a) > 0 && a <= 2, ErrorKind::InvalidInput,
            "spectrum entry " + to_string(a) + " is outside (0, 2]");
  std::sort(entries.begin(), entries.end());
  return entries;
}

std::size_t count_open(const Spectrum& sp, const Rational& lo, const Rational& hi) {
  std::size_t n = 0;
  for (const auto& a : sp)
    if (lo < a && a < hi) ++n;
  return n;
}

std::size_t count_outside_closed(const Spectrum& sp, const Rational& lo, const Rational& hi) {
  std::size_t n = 0;
  for (const auto& a : sp)
    if (a < lo || hi < a) ++n;
  return n;
}

std::size_t multiplicity(const Spectrum& sp, const Rational& a) {
  return static_cast<std::size_t>(std::count(sp.begin(), sp.end(), a));
}

Spectrum spectrum_union(const Spectrum& a, const Spectrum& b) {
  Spectrum out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Spectrum& sp) {
  std::string out = "{";
  for (std::size_t i = 0; i < sp.size(); ++i) out += (i ? ", " : "") + to_string(sp[i]);
  return out + "}";
}

Spectrum spectrum_from_blocks(const BlockSpec& spec) {
  require(spec.offcircle.empty(), ErrorKind::PreconditionFailed,
          "the spectrum is defined only without off-circle blocks");
  std::vector<Rational> entries;
  for (const auto& c : spec.circle) {
    const Rational& s = c.s.value();
    Rational a1 = s == 1 ? Rational(1) : s;
    Rational a2 = a1 + 1;
    for (const Rational& alpha : {a1, a2}) {
      long fl = alpha >= 1 ? (alpha >= 2 ? 2 : 1) : 0;
      long per;
      if (c.k % 2 == 1) per = (static_cast<long>(c.k) - c.u * (fl % 2 == 0 ? 1 : -1)) / 2;
      else per = static_cast<long>(c.k) / 2;
      for (long r = 0; r < per * static_cast<long>(c.mult); ++r) entries.push_back(alpha);
    }
  }
  return make_spectrum(std::move(entries));
}

// ---------------------------------------------------------------------------
// signatures

GMatrix signature_form(const GMatrix& V, const UnitCirclePoint& z) {
  require(!z.is_one(), ErrorKind::PreconditionFailed, "signature is undefined at z = 1");
  require(V.square(), ErrorKind::InvalidInput, "signature form needs a square matrix");
  Gaussian w = Gaussian(1) - z.as_gaussian();
  return w * V.conjugate() + w.conj() * V.transpose();
}

Inertia hvs_inertia(const Hvs& v, const UnitCirclePoint& z) {
  return hermitian_inertia(signature_form(v.V, z));
}

long hvs_signature(const Hvs& v, const UnitCirclePoint& z) { return hvs_inertia(v, z).signature(); }

std::size_t hvs_nullity(const Hvs& v, const UnitCirclePoint& z) { return hvs_inertia(v, z).zero; }

std::vector<std::pair<Rational, Rational>> arcs_of(const std::vector<AngleFraction>& jumps) {
  std::vector<std::pair<Rational, Rational>> out;
  Rational prev(0);
  for (const auto& j : jumps) {
    out.emplace_back(prev, j.value());
    prev = j.value();
  }
  return out;
}

namespace {

std::vector<AngleFraction> with_one(std::vector<AngleFraction> jumps) {
  jumps.emplace_back(Rational(1));
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
  return jumps;
}

std::optional<UnitCirclePoint> rational_root(const Rational& s) {
  if (s == Rational(1, 4)) return UnitCirclePoint{Rational(0), Rational(1)};
  if (s == Rational(1, 2)) return UnitCirclePoint{Rational(-1), Rational(0)};
  if (s == Rational(3, 4)) return UnitCirclePoint{Rational(0), Rational(-1)};
  return std::nullopt;
}

}  // namespace

SignatureProfile signature_profile_of(const GMatrix& V, const std::vector<AngleFraction>& eigen,
                                      unsigned density) {
  require(density >= 1, ErrorKind::InvalidInput, "sample density must be at least 1");
  SignatureProfile out;
  out.jumps = with_one(eigen);
  for (const auto& [lo, hi] : arcs_of(out.jumps)) {
    std::optional<long> value;
    for (unsigned j = 1; j <= density; ++j) {
      Rational w(static_cast<long>(j), static_cast<long>(density + 1));
      w.canonicalize();
      long sig = hermitian_inertia(signature_form(V, gap_sample(lo, hi, w))).signature();
      if (value && *value != sig)
        fail(ErrorKind::Internal, "signature is not constant on the arc (" + to_string(lo) + ", " +
                                      to_string(hi) + ")");
      value = sig;
    }
    out.arc_values.push_back(*value);
  }
  for (const auto& j : out.jumps) {
    auto z = rational_root(j.value());
    if (!z) {
      out.point_data.emplace_back();
      continue;
    }
    Inertia in = hermitian_inertia(signature_form(V, *z));
    out.point_data.emplace_back(std::make_pair(in.signature(), in.zero));
  }
  return out;
}

SignatureProfile signature_profile(const Hvs& v, unsigned density) {
  return signature_profile_of(v.V, eigen_angles(v.h), density);
}

// ---------------------------------------------------------------------------
// spectrum from signatures

SpectrumSolve spectrum_from_signatures(const Hvs& v, unsigned m1, unsigned m2) {
  std::size_t n = v.dim();
  require(rank(v.V) == n, ErrorKind::PreconditionFailed, "spectrum_from_signatures needs a simple HVS");
  auto mults = eigen_multiplicities(v.h);
  auto jumps = with_one(eigen_angles(v.h));
  unsigned at_one = mults.count(Rational(1)) ? mults[Rational(1)] : 0;
  require(at_one == m1 + m2, ErrorKind::Inconsistent,
          "multiplicities of 1 and 2 must add up to the multiplicity of eigenvalue 1 (" +
              std::to_string(at_one) + ")");
  std::vector<Rational> angles;
  for (const auto& [s, m] : mults)
    if (s != 1) angles.push_back(s);
  std::size_t r = angles.size();
  std::size_t nv = 2 * r;  // m(s_i) at 2i, m(s_i + 1) at 2i + 1

  SpectrumSolve out;
  for (const auto& s : angles) {
    out.unknowns.push_back("m(" + to_string(s) + ")");
    out.unknowns.push_back("m(" + to_string(Rational(s + 1)) + ")");
  }

  std::vector<std::vector<Rational>> rows;
  auto arcs = arcs_of(jumps);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    long sig = hermitian_inertia(signature_form(v.V, gap_sample(arcs[a].first, arcs[a].second))).signature();
    long twice = static_cast<long>(n) - sig;
    require(twice % 2 == 0, ErrorKind::Inconsistent, "dim - signature is odd");
    std::vector<Rational> row(nv + 1);
    for (std::size_t i = 0; i < r; ++i) {
      if (angles[i] <= arcs[a].first) row[2 * i + 1] = 1;
      else row[2 * i] = 1;
    }
    row[nv] = twice / 2 - static_cast<long>(m1);
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> row(nv + 1);
    row[2 * i] = 1;
    row[2 * i + 1] = 1;
    row[nv] = mults[angles[i]];
    rows.push_back(std::move(row));
  }
  if (is_real(v.V)) {
    // a real structure has sigma(conj z) = sigma(z): m(s) = m(2 - s)
    for (std::size_t i = 0; i < r; ++i) {
      auto it = std::find(angles.begin(), angles.end(), Rational(1 - angles[i]));
      if (it == angles.end()) continue;
      std::vector<Rational> row(nv + 1);
      row[2 * i] = 1;
      row[2 * static_cast<std::size_t>(it - angles.begin()) + 1] = -1;
      rows.push_back(std::move(row));
    }
  }

  QMatrix A(rows.size(), nv), B(rows.size(), 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < nv; ++j) A(i, j) = rows[i][j];
    B(i, 0) = rows[i][nv];
  }
  auto x = solve(A, B);
  require(x.has_value(), ErrorKind::Inconsistent, "signature data admit no spectrum");
  QMatrix null = nullspace(A);
  std::vector<Rational> entries(m1, Rational(1));
  entries.insert(entries.end(), m2, Rational(2));
  if (null.cols() > 0) {
    out.determined = false;
    for (std::size_t c = 0; c < null.cols(); ++c) {
      std::vector<Rational> dir;
      for (std::size_t i = 0; i < nv; ++i) dir.push_back(null(i, c));
      out.ambiguous.push_back(std::move(dir));
    }
    return out;
  }
  for (std::size_t i = 0; i < nv; ++i) {
    const Rational& m = (*x)(i, 0);
    require(m.get_den() == 1 && sgn(m) >= 0, ErrorKind::Inconsistent,
            "signature data force a non-integral or negative multiplicity " + to_string(m) + " for " +
                out.unknowns[i]);
    Rational alpha = i % 2 == 0 ? angles[i / 2] : Rational(angles[i / 2] + 1);
    for (long c = 0; c < m.get_num().get_si(); ++c) entries.push_back(alpha);
  }
  out.determined = true;
  out.spectrum = make_spectrum(std::move(entries));
  return out;
}

SigSpecCheck check_sigspec(const Hvs& v, const Spectrum& sp) {
  std::size_t n = v.dim();
  require(rank(v.V) == n, ErrorKind::PreconditionFailed, "check_sigspec needs a simple HVS");
  std::vector<AngleFraction> cuts = eigen_angles(v.h);
  for (const auto& a : sp) cuts.emplace_back(a);
  cuts = with_one(std::move(cuts));
  SigSpecCheck out;
  for (const auto& [lo, hi] : arcs_of(cuts)) {
    Rational x = (lo + hi) / 2;
    UnitCirclePoint z = gap_sample(lo, hi);
    long sig = hvs_signature(v, z);
    long inside = static_cast<long>(count_open(sp, x, x + 1));
    long outside = static_cast<long>(count_outside_closed(sp, x, x + 1));
    ++out.windows;
    long dim = static_cast<long>(n);
    if (2 * inside != dim - sig || 2 * outside != dim + sig) {
      SigSpecWitness w;
      w.x = x;
      w.z = z;
      w.inside = inside;
      w.inside_expected = (dim - sig) / 2;
      w.outside = outside;
      w.outside_expected = (dim + sig) / 2;
      out.failures.push_back(w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// realization

namespace {

QMatrix companion(const RatPoly& p) {
  std::size_t n = static_cast<std::size_t>(p.degree());
  QMatrix c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

// Basis of the rational epsilon-symmetric forms b with h^t b h = b.
std::vector<QMatrix> invariant_forms(const QMatrix& h, int epsilon) {
  std::size_t n = h.rows();
  std::size_t nv = n * n;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= i) {
        std::vector<Rational> row(nv);
        row[j * n + i] += 1;
        row[i * n + j] -= epsilon;
        rows.push_back(std::move(row));
      }
      std::vector<Rational> row(nv);
      for (std::size_t p = 0; p < n; ++p) {
        if (is_zero(h(p, i))) continue;
        for (std::size_t q = 0; q < n; ++q)
          if (!is_zero(h(q, j))) row[p * n + q] += h(p, i) * h(q, j);
      }
      row[i * n + j] -= 1;
      rows.push_back(std::move(row));
    }
  QMatrix A(rows.size(), nv);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < nv; ++c) A(r, c) = rows[r][c];
  QMatrix null = nullspace(A);
  std::vector<QMatrix> out;
  for (std::size_t c = 0; c < null.cols(); ++c) {
    QMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = null(i * n + j, c);
    out.push_back(std::move(b));
  }
  return out;
}

std::optional<QMatrix> random_nondegenerate(const std::vector<QMatrix>& basis, std::mt19937_64& rng) {
  if (basis.empty()) return std::nullopt;
  std::size_t n = basis[0].rows();
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int attempt = 0; attempt < 24; ++attempt) {
    QMatrix b(n, n);
    for (const auto& e : basis) b += e * Rational(coef(rng));
    if (rank(b) == n) return b;
  }
  return std::nullopt;
}

}  // namespace

Hvs rational_unit(unsigned k, unsigned long d, int epsilon, std::uint64_t seed) {
  require(k >= 1 && d >= 2, ErrorKind::InvalidInput, "rational unit needs k >= 1 and d >= 2");
  RatPoly p = RatPoly::constant(Rational(1));
  for (unsigned j = 0; j < k; ++j) p = p * cyclotomic(d);
  QMatrix h = companion(p);
  std::mt19937_64 rng(seed);
  for (int copies = 1; copies <= 2; ++copies) {
    if (copies == 2) h = exact::direct_sum(h, h);
    auto b = random_nondegenerate(invariant_forms(h, epsilon), rng);
    if (!b) continue;
    std::size_t n = h.rows();
    QMatrix V = (h - QMatrix::identity(n)) * inverse(*b);
    return Hvs{epsilon, to_gaussian(*b), to_gaussian(h), to_gaussian(V)};
  }
  fail(ErrorKind::Internal, "no non-degenerate invariant form for Phi_" + std::to_string(d) + "^" +
                                std::to_string(k));
}

Realization realize_blocks(const BlockSpec& spec_in, std::uint64_t seed) {
  BlockSpec spec = spec_in.normalized();
  require(spec.offcircle.empty(), ErrorKind::PreconditionFailed, "realize_blocks takes circle blocks only");
  Realization out;
  out.hvs = empty_hvs(spec.epsilon);
  out.measured.epsilon = spec.epsilon;

  // (k, d) -> per-angle requested count and the first requested sign per angle
  std::map<std::pair<unsigned, unsigned long>, std::map<Rational, unsigned>> want;
  std::map<std::pair<unsigned, unsigned long>, std::map<Rational, int>> sign;
  for (const auto& c : spec.circle) {
    const Rational& s = c.s.value();
    Rational q = s * 4;
    if (q.get_den() == 1) {
      Hvs blk = block_W(c.k, s, c.u, spec.epsilon);
      for (unsigned r = 0; r < c.mult; ++r) out.hvs = direct_sum(out.hvs, blk);
      out.measured.circle.push_back(c);
      continue;
    }
    auto key = std::make_pair(c.k, c.s.denominator());
    want[key][s] += c.mult;
    sign[key].emplace(s, c.u);
  }

  std::uint64_t salt = seed;
  for (const auto& [key, per_angle] : want) {
    auto [k, d] = key;
    unsigned units = 0;
    for (const auto& [s, m] : per_angle) units = std::max(units, m);
    int default_sign = sign[key].begin()->second;
    for (unsigned r = 0; r < units; ++r) {
      Hvs unit = rational_unit(k, d, spec.epsilon, ++salt * 0x9E3779B97F4A7C15ULL);
      std::size_t copies = unit.dim() / (k * euler_phi(d));
      out.hvs = direct_sum(out.hvs, unit);
      if (k % 2 == 0) {
        for (const auto& a : root_angles(d)) {
          auto it = sign[key].find(a.value());
          int u = it == sign[key].end() ? default_sign : it->second;
          out.measured.circle.push_back({k, a, u, static_cast<unsigned>(copies)});
        }
        continue;
      }
      // odd k: m(s + 1) - m(s) is the sum of the signs at the root exp(2 pi i s)
      SpectrumSolve sol = spectrum_from_signatures(unit, 0, 0);
      require(sol.determined, ErrorKind::Internal, "unit spectrum is not determined by signatures");
      for (const auto& a : root_angles(d)) {
        long lo = static_cast<long>(multiplicity(sol.spectrum, a.value()));
        long hi = static_cast<long>(multiplicity(sol.spectrum, a.value() + 1));
        long diff = hi - lo;
        long c = static_cast<long>(copies);
        require((c + diff) % 2 == 0 && std::abs(diff) <= c, ErrorKind::Internal,
                "measured signs are inconsistent with the block count");
        long plus = (c + diff) / 2, minus = (c - diff) / 2;
        if (plus > 0) out.measured.circle.push_back({k, a, 1, static_cast<unsigned>(plus)});
        if (minus > 0) out.measured.circle.push_back({k, a, -1, static_cast<unsigned>(minus)});
      }
    }
  }
  out.measured = out.measured.normalized();
  return out;
}

}  // namespace hvskit
