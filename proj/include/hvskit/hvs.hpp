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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hvskit/circle.hpp"
#include "hvskit/inertia.hpp"
#include "hvskit/matrix.hpp"
#include "hvskit/poly.hpp"

namespace hvskit {

using exact::AngleFraction;
using exact::Gaussian;
using exact::GMatrix;
using exact::Inertia;
using exact::QMatrix;
using exact::Rational;
using exact::UnitCirclePoint;

/// Hermitian variation structure (U; b, h, V) with sign epsilon.
///
/// Matrices act on column vectors and the dual of a map is its transpose.
/// Under that reading the axioms are
///   b^H = eps b,  h^H b h = b,  V b = h - I,  V^H = -eps V h^H.
struct Hvs {
  int epsilon = -1;
  GMatrix b, h, V;

  std::size_t dim() const { return h.rows(); }
};

struct AxiomFailure {
  std::string identity;
  GMatrix residual;
};

struct HvsValidation {
  std::vector<AxiomFailure> failures;
  std::size_t rank_V = 0;
  bool simple = false;         // V invertible
  bool nondegenerate = false;  // b invertible
  bool ok() const { return failures.empty(); }
};

HvsValidation validate_hvs(const Hvs& v);

Hvs empty_hvs(int epsilon);

/// The non-degenerate form b^k_+ or b^k_- (u = +1 / -1) invariant under J_k.
GMatrix model_form(unsigned k, int u, int epsilon);

/// V^k_lambda(u) = (b^k_u, lambda J_k, (lambda J_k - I)(b^k_u)^{-1}) for
/// lambda = exp(2 pi i s) in {1, i, -1, -i}. Not simple when lambda = 1.
Hvs block_V(unsigned k, const Rational& s, int u, int epsilon = -1);

/// W^k_lambda(u): block_V for lambda != 1, the degenerate simple
/// structure with h = J_k for lambda = 1.
Hvs block_W(unsigned k, const Rational& s, int u, int epsilon = -1);

/// The simple non-degenerate 2k-dimensional block for 0 < |lambda| < 1.
Hvs block_offcircle(unsigned k, const Gaussian& lambda, int epsilon = -1);

Hvs direct_sum(const Hvs& a, const Hvs& b);

/// The same structure in the basis given by the columns of T.
Hvs change_basis(const Hvs& v, const GMatrix& T);

/// Restriction to the coordinate subspace `idx` (b, h and V restricted;
/// only meaningful when the subspace is a direct summand).
Hvs restrict_to(const Hvs& v, const std::vector<std::size_t>& idx);

/// Splits v along U1 = span(e_i : i in u1) and its coordinate complement.
/// Requires b and h block diagonal with b|U1 non-degenerate.
std::pair<Hvs, Hvs> split_by_form(const Hvs& v, const std::vector<std::size_t>& u1);

// ---------------------------------------------------------------------------
// Jordan data

/// Cyclotomic factor of a characteristic polynomial. For non-real matrices
/// Phi_d with 4 | d splits over Q(i); orbit 1 collects the primitive roots
/// exp(2 pi i j / d) with j = 1 mod 4, orbit 3 those with j = 3 mod 4.
/// Orbit 0 means all primitive d-th roots.
struct CyclotomicOrbit {
  unsigned long d = 1;
  int orbit = 0;
  friend bool operator<(const CyclotomicOrbit& a, const CyclotomicOrbit& b) {
    return a.d != b.d ? a.d < b.d : a.orbit < b.orbit;
  }
  friend bool operator==(const CyclotomicOrbit& a, const CyclotomicOrbit& b) {
    return a.d == b.d && a.orbit == b.orbit;
  }
};

std::vector<AngleFraction> orbit_angles(const CyclotomicOrbit& o);
exact::GaussPoly orbit_poly(const CyclotomicOrbit& o);

struct JordanData {
  /// per orbit: block size -> number of blocks at each root of the orbit
  std::map<CyclotomicOrbit, std::map<unsigned, unsigned>> blocks;
  std::size_t noncyclotomic_dim = 0;

  friend bool operator==(const JordanData& a, const JordanData& b) {
    return a.blocks == b.blocks && a.noncyclotomic_dim == b.noncyclotomic_dim;
  }
  unsigned max_block(unsigned long d) const;
};

JordanData jordan_data(const GMatrix& h);

/// Cyclotomic orbits dividing the characteristic polynomial of h, with the
/// algebraic multiplicity per root, and the residual polynomial.
struct EigenSplit {
  std::vector<std::pair<CyclotomicOrbit, unsigned>> orbits;
  exact::GaussPoly remainder;
};
EigenSplit eigen_split(const GMatrix& h);

/// Angles of the root-of-unity eigenvalues of h, ascending in (0, 1].
/// Throws PreconditionFailed if some other eigenvalue lies on the unit
/// circle.
std::vector<AngleFraction> eigen_angles(const GMatrix& h);

/// Algebraic multiplicity of each root-of-unity eigenvalue, keyed by angle.
std::map<Rational, unsigned> eigen_multiplicities(const GMatrix& h);

// ---------------------------------------------------------------------------
// Block specifications and spectra

struct CircleBlock {
  unsigned k = 1;
  AngleFraction s;
  int u = 1;
  unsigned mult = 1;
};

struct OffCircleBlock {
  unsigned k = 1;
  Gaussian lambda;
  unsigned mult = 1;
};

struct BlockSpec {
  int epsilon = -1;
  std::vector<CircleBlock> circle;
  std::vector<OffCircleBlock> offcircle;

  /// Merges equal (k, s, u) entries and sorts.
  BlockSpec normalized() const;
  std::size_t dim() const;
};

/// Sorted multiset of rationals in (0, 2].
using Spectrum = std::vector<Rational>;

Spectrum make_spectrum(std::vector<Rational> entries);
std::size_t count_open(const Spectrum& sp, const Rational& lo, const Rational& hi);
std::size_t count_outside_closed(const Spectrum& sp, const Rational& lo, const Rational& hi);
std::size_t multiplicity(const Spectrum& sp, const Rational& a);
Spectrum spectrum_union(const Spectrum& a, const Spectrum& b);
std::string to_string(const Spectrum& sp);

Spectrum spectrum_from_blocks(const BlockSpec& spec);

// ---------------------------------------------------------------------------
// Signatures

/// The hermitian form (1 - z) conj(V) + (1 - conj z) V^t; for real V this
/// is (1 - z) V + (1 - conj z) V^t.
GMatrix signature_form(const GMatrix& V, const UnitCirclePoint& z);

Inertia hvs_inertia(const Hvs& v, const UnitCirclePoint& z);
long hvs_signature(const Hvs& v, const UnitCirclePoint& z);
std::size_t hvs_nullity(const Hvs& v, const UnitCirclePoint& z);

struct SignatureProfile {
  std::vector<AngleFraction> jumps;  // ascending, always contains 1
  std::vector<long> arc_values;      // arc i is the open arc ending at jumps[i]
  /// (signature, nullity) at a jump when that root of unity has rational
  /// coordinates (angles 1/4, 1/2, 3/4)
  std::vector<std::optional<std::pair<long, std::size_t>>> point_data;

  friend bool operator==(const SignatureProfile& a, const SignatureProfile& b) {
    return a.jumps == b.jumps && a.arc_values == b.arc_values && a.point_data == b.point_data;
  }
};

/// Arc bounds for the partition by `jumps` (ascending, last one 1): arc i
/// is (jumps[i-1], jumps[i]) with jumps[-1] read as 0.
std::vector<std::pair<Rational, Rational>> arcs_of(const std::vector<AngleFraction>& jumps);

/// Evaluates every arc at `density` independent certified samples; throws
/// Internal if two samples on one arc disagree.
SignatureProfile signature_profile(const Hvs& v, unsigned density = 1);

/// Profile of the form signature_form(V, z) with jump candidates `eigen`
/// (plus 1). Also serves fractured Seifert matrices in place of V.
SignatureProfile signature_profile_of(const GMatrix& V, const std::vector<AngleFraction>& eigen,
                                      unsigned density = 1);

struct SpectrumSolve {
  bool determined = false;
  Spectrum spectrum;
  std::vector<std::string> unknowns;             // "m(a)" labels
  std::vector<std::vector<Rational>> ambiguous;  // null directions when underdetermined
};

/// Reconstructs the spectrum of a simple HVS with root-of-unity monodromy
/// from its signature arcs. m1, m2 are the multiplicities of 1 and 2.
/// Throws Inconsistent when the arc counts admit no solution.
SpectrumSolve spectrum_from_signatures(const Hvs& v, unsigned m1, unsigned m2);

struct SigSpecWitness {
  Rational x;  // the window is (x, x + 1)
  UnitCirclePoint z;
  long inside = 0, inside_expected = 0;    // |Sp in (x, x+1)| vs (dim - sigma)/2
  long outside = 0, outside_expected = 0;  // |Sp outside [x, x+1]| vs (dim + sigma)/2
};

struct SigSpecCheck {
  std::size_t windows = 0;
  std::vector<SigSpecWitness> failures;
  bool ok() const { return failures.empty(); }
};

SigSpecCheck check_sigspec(const Hvs& v, const Spectrum& sp);

struct Realization {
  Hvs hvs;
  BlockSpec measured;
};

/// Builds an HVS with the requested circle blocks. Angles 1/4, 1/2, 3/4, 1
/// use the literal model blocks. Other roots of unity use rational
/// companion structures covering a whole Galois orbit, with the invariant
/// form chosen at random (seeded); their signs are measured afterwards.
Realization realize_blocks(const BlockSpec& spec, std::uint64_t seed = 1);

/// Rational HVS with h the companion matrix of Phi_d^k (doubled when no
/// single copy carries a non-degenerate invariant epsilon-form).
Hvs rational_unit(unsigned k, unsigned long d, int epsilon, std::uint64_t seed);

}  // namespace hvskit
