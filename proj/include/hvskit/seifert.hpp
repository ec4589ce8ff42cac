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
#include <optional>
#include <string>
#include <vector>

#include "hvskit/hvs.hpp"

namespace hvskit {

/// Homological variation structure of a fibred link: monodromy h and
/// intersection form b on H_1 of the fibre, the variation Var, the number
/// of link components n and the declared graph invariants c, g.
struct FibredLinkData {
  int epsilon = -1;
  unsigned n = 1;
  unsigned c = 0;
  unsigned g = 0;
  GMatrix h, b, Var;

  Hvs as_hvs() const { return Hvs{epsilon, b, h, Var}; }
  std::size_t dim() const { return h.rows(); }
};

/// Bases (as matrix columns) of the canonical subspaces of H_1(Sigma).
struct SubspaceDecomposition {
  GMatrix U_neq1, U_im, U_bnd, U_B, U_fix;
};

/// Coordinates of U_neq1, U_im and U_bnd inside the chosen basis of U^Sigma.
struct FracturedBlocks {
  std::vector<std::size_t> neq1, im, bnd;
};

struct FracturedData {
  unsigned n = 1, c = 0, g = 0;
  std::size_t dimU = 0;
  GMatrix basis;  // columns span U^Sigma inside H_1(Sigma)
  QMatrix S;      // fractured Seifert matrix
  GMatrix h_res, b_res;
  int epsilon = -1;
  std::optional<FracturedBlocks> blocks;
};

/// The basis of U_fix is a complement chosen at random when `seed` is
/// nonzero; every exported quantity is independent of that choice.
SubspaceDecomposition decompose_subspaces(const FibredLinkData& fl, std::uint64_t seed = 0);

FracturedData extract_fractured(const FibredLinkData& fl, std::uint64_t seed = 0);

/// The fractured HVS (b_res, h_res, (S^t)^{-1}) on U^Sigma.
Hvs fractured_hvs(const FracturedData& fd);

/// Rebuilds the fibration structure from S, n and c (and g).
FibredLinkData mend(const FracturedData& fd);

struct NamedCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CheckReport {
  std::vector<NamedCheck> checks;
  bool ok() const;
  void add(std::string name, bool pass, std::string detail = {});
};

CheckReport seifert_checks(const FracturedData& fd);

struct LinkingReport {
  QMatrix L;
  Inertia inertia;
  bool kernel_is_diagonal = false;  // L (1, ..., 1)^t = 0
  bool ok() const { return inertia.plus == 0 && inertia.zero == 1 && kernel_is_diagonal; }
};

/// `clk` holds the fractured linking numbers off the diagonal; the diagonal
/// is ignored and replaced so that rows sum to zero.
LinkingReport linking_matrix_check(const QMatrix& clk);

Inertia fractured_inertia(const QMatrix& S, const UnitCirclePoint& z);
long fractured_signature(const QMatrix& S, const UnitCirclePoint& z);
std::size_t fractured_nullity(const QMatrix& S, const UnitCirclePoint& z);

struct TwistReport {
  unsigned long N = 1;
  Inertia inertia;                   // of the hermitian part of b^t (h^N - I)
  std::optional<GMatrix> witness;    // column vector with a positive value
  bool ok() const { return inertia.plus == 0; }
};

TwistReport twist_check(const FibredLinkData& fl);

struct PlumbingGraph {
  std::vector<unsigned> genus;  // one entry per vertex
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> arrowheads;
};

struct PlumbingInvariants {
  long c = 0;
  long gsum = 0;
  long n = 0;
  long b1M = 0;
};

PlumbingInvariants plumbing_invariants(const PlumbingGraph& g);

/// Sp_frct + g {1, 2} + c {2}.
Spectrum mhs_spectrum(const Spectrum& sp_frct, unsigned c, unsigned g);

/// The fractured spectrum, recovered from the signatures of the fractured
/// HVS with the integral part read off the eigenvalue-one block.
struct FracturedSpectrum {
  SpectrumSolve solve;
  unsigned m1 = 0, m2 = 0;
};
FracturedSpectrum fractured_spectrum(const FracturedData& fd);

}  // namespace hvskit
