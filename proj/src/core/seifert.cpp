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

#include "hvskit/seifert.hpp"

#include <numeric>
#include <optional>
#include <queue>
#include <random>

#include "hvskit/error.hpp"
#include "hvskit/linalg.hpp"

namespace hvskit {

using namespace exact;

namespace {

std::string join_failures(const HvsValidation& r) {
  std::string out;
  for (const auto& f : r.failures) out += (out.empty() ? "" : "; ") + f.identity;
  return out;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(i);
  return out;
}

// Columns of `pool` that extend `base` to a basis of span(base, pool).
GMatrix complement(const GMatrix& base, const GMatrix& pool) {
  GMatrix acc = base;
  GMatrix out(pool.rows(), 0);
  std::size_t r = rank(acc);
  for (std::size_t j = 0; j < pool.cols(); ++j) {
    GMatrix next = hstack(acc, pool.column(j));
    std::size_t rn = rank(next);
    if (rn > r) {
      acc = std::move(next);
      out = hstack(out, pool.column(j));
      r = rn;
    }
  }
  return out;
}

// Reduced echelon basis of the column span: the identity for the whole
// space and unit vectors for coordinate subspaces.
GMatrix canonical_basis(const GMatrix& m) {
  if (m.cols() == 0) return GMatrix(m.rows(), 0);
  auto e = rref(m.transpose());
  return e.R.block(0, 0, e.pivots.size(), m.rows()).transpose();
}

GMatrix random_mix(const GMatrix& m, std::uint64_t seed) {
  if (seed == 0 || m.cols() <= 1) return m;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::size_t k = m.cols();
  for (int attempt = 0; attempt < 32; ++attempt) {
    GMatrix R(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) R(i, j) = Gaussian(coef(rng));
    if (rank(R) == k) return m * R;
  }
  return m;
}

GMatrix unipotent_part(const GMatrix& h) {
  GMatrix A = h - GMatrix::identity(h.rows());
  return A * A;
}

void require_simple_at_one(const GMatrix& h) {
  GMatrix A = h - GMatrix::identity(h.rows());
  GMatrix A2 = A * A;
  require(rank(A2) == rank(A2 * A), ErrorKind::PreconditionFailed,
          "monodromy has a Jordan block of size >= 3 at eigenvalue 1 (link is not simple)");
}

QMatrix rational_or_throw(const GMatrix& m, const char* what) {
  require(is_real(m), ErrorKind::InvalidInput, std::string(what) + " must be rational");
  return to_rational(m);
}

}  // namespace

SubspaceDecomposition decompose_subspaces(const FibredLinkData& fl, std::uint64_t seed) {
  Hvs v = fl.as_hvs();
  HvsValidation val = validate_hvs(v);
  require(val.ok(), ErrorKind::PreconditionFailed, "fibration data violate the HVS axioms: " + join_failures(val));
  require_simple_at_one(fl.h);
  std::size_t dim = fl.dim();
  GMatrix A = fl.h - GMatrix::identity(dim);
  GMatrix A2 = unipotent_part(fl.h);

  SubspaceDecomposition d;
  d.U_neq1 = canonical_basis(A2);
  GMatrix U1 = nullspace(A2);
  d.U_im = canonical_basis(A * U1);
  if (d.U_im.cols() > 0) {
    auto y = solve(A * U1, d.U_im);
    require(y.has_value(), ErrorKind::Internal, "no preimage for U_im");
    d.U_B = U1 * *y;
  } else {
    d.U_B = GMatrix(dim, 0);
  }
  d.U_bnd = canonical_basis(nullspace(fl.b));
  require(fl.n >= 1, ErrorKind::InvalidInput, "a link has at least one component");
  require(d.U_bnd.cols() == fl.n - 1, ErrorKind::Inconsistent,
          "kernel of the intersection form has dimension " + std::to_string(d.U_bnd.cols()) +
              ", expected n - 1 = " + std::to_string(fl.n - 1));
  require((A * d.U_bnd).is_zero(), ErrorKind::Inconsistent, "monodromy does not fix the boundary classes");
  std::size_t sum = d.U_neq1.cols() + d.U_im.cols() + d.U_bnd.cols();
  require(rank(hstack(hstack(d.U_neq1, d.U_im), d.U_bnd)) == sum, ErrorKind::Inconsistent,
          "U_neq1 + U_im + U_bnd is not direct");

  // U_fix: complement of U_bnd in { x in ker(h - I) : b(U_B, x) = 0 }
  GMatrix E = nullspace(vstack(A, d.U_B.adjoint() * fl.b));
  d.U_fix = complement(d.U_bnd, random_mix(E, seed));
  return d;
}

FracturedData extract_fractured(const FibredLinkData& fl, std::uint64_t seed) {
  SubspaceDecomposition d = decompose_subspaces(fl, seed);
  std::size_t dim = fl.dim();
  require(d.U_im.cols() == fl.c, ErrorKind::Inconsistent,
          "declared c = " + std::to_string(fl.c) + " but dim U_im = " + std::to_string(d.U_im.cols()));
  require(d.U_fix.cols() == 2 * fl.g, ErrorKind::Inconsistent,
          "declared g = " + std::to_string(fl.g) + " but dim U_fix = " + std::to_string(d.U_fix.cols()));
  std::size_t ker_var = dim - rank(fl.Var);
  require(ker_var == 2 * fl.g + fl.c, ErrorKind::Inconsistent,
          "dim ker Var = " + std::to_string(ker_var) + " differs from 2g + c = " +
              std::to_string(2 * fl.g + fl.c));

  GMatrix Q = hstack(hstack(d.U_neq1, d.U_im), d.U_bnd);
  std::size_t r = Q.cols();
  require(rank(hstack(Q, fl.Var)) == r && rank(fl.Var) == r, ErrorKind::Inconsistent,
          "image of Var differs from U_neq1 + U_im + U_bnd");

  FracturedData fd;
  fd.n = fl.n;
  fd.c = fl.c;
  fd.g = fl.g;
  fd.epsilon = fl.epsilon;
  fd.dimU = r;
  fd.basis = Q;
  fd.blocks = FracturedBlocks{range(0, d.U_neq1.cols()),
                              range(d.U_neq1.cols(), d.U_neq1.cols() + d.U_im.cols()),
                              range(d.U_neq1.cols() + d.U_im.cols(), r)};
  if (r == 0) {
    fd.S = QMatrix();
    fd.h_res = GMatrix();
    fd.b_res = GMatrix();
    return fd;
  }
  auto var_coords = solve(Q, fl.Var);  // Var = Q Var'
  require(var_coords.has_value(), ErrorKind::Internal, "Var does not factor through U^Sigma");
  // alpha^t beta = S(Var alpha, beta) for beta in U^Sigma:  Var'^t S = Q
  auto S = solve(var_coords->transpose(), Q);
  require(S.has_value(), ErrorKind::Inconsistent, "no fractured Seifert matrix satisfies S^t Var = id");
  fd.S = rational_or_throw(*S, "fractured Seifert matrix");
  auto h_res = solve(Q, fl.h * Q);
  require(h_res.has_value(), ErrorKind::Internal, "U^Sigma is not monodromy invariant");
  fd.h_res = *h_res;
  fd.b_res = Q.adjoint() * fl.b * Q;
  return fd;
}

Hvs fractured_hvs(const FracturedData& fd) {
  require(fd.S.rows() == fd.dimU && fd.S.cols() == fd.dimU, ErrorKind::InvalidInput,
          "S must be dimU x dimU");
  auto inv = try_inverse(fd.S.transpose());
  require(inv.has_value(), ErrorKind::PreconditionFailed, "fractured Seifert matrix is degenerate");
  return Hvs{fd.epsilon, fd.b_res, fd.h_res, to_gaussian(*inv)};
}

namespace {

Hvs fix_block(int epsilon) {
  QMatrix b = epsilon == -1 ? QMatrix{{0, 1}, {-1, 0}} : QMatrix{{1, 0}, {0, -1}};
  return Hvs{epsilon, to_gaussian(b), GMatrix::identity(2), GMatrix(2, 2)};
}

// Splits the fractured HVS into its eigenvalue != 1 and eigenvalue 1 parts.
std::pair<Hvs, Hvs> split_at_one(const Hvs& F) {
  GMatrix A2 = unipotent_part(F.h);
  GMatrix N = canonical_basis(A2), E = canonical_basis(nullspace(A2));
  Hvs G = change_basis(F, hstack(N, E));
  return split_by_form(G, range(0, N.cols()));
}

}  // namespace

FibredLinkData mend(const FracturedData& fd) {
  Hvs F = fractured_hvs(fd);
  HvsValidation val = validate_hvs(F);
  require(val.ok(), ErrorKind::PreconditionFailed,
          "fractured data do not form an HVS: " + join_failures(val));
  auto [F_neq1, F_1] = split_at_one(F);
  std::size_t k = F_1.dim();
  require(F_1.h == GMatrix::identity(k) && F_1.b.is_zero(), ErrorKind::PreconditionFailed,
          "eigenvalue-one part of the fractured HVS is not a sum of W^1_1 blocks");
  Inertia in = hermitian_inertia(F_1.V);
  require(in.zero == 0, ErrorKind::PreconditionFailed, "variation is singular on the eigenvalue-one part");
  require(fd.n >= 1 && in.minus + 1 >= fd.n, ErrorKind::Inconsistent,
          "fewer negative W^1_1 blocks than n - 1 boundary classes");
  std::size_t c_plus = in.minus - (fd.n - 1);
  std::size_t c_minus = in.plus;
  require(c_plus + c_minus == fd.c, ErrorKind::Inconsistent,
          "eigenvalue-one part has " + std::to_string(c_plus + c_minus) + " image blocks, declared c = " +
              std::to_string(fd.c));

  Hvs out = F_neq1;
  for (unsigned i = 0; i + 1 < fd.n; ++i) out = direct_sum(out, block_W(1, Rational(1), 1, fd.epsilon));
  for (std::size_t i = 0; i < c_plus; ++i) out = direct_sum(out, block_V(2, Rational(1), 1, fd.epsilon));
  for (std::size_t i = 0; i < c_minus; ++i) out = direct_sum(out, block_V(2, Rational(1), -1, fd.epsilon));
  for (unsigned i = 0; i < fd.g; ++i) out = direct_sum(out, fix_block(fd.epsilon));
  return FibredLinkData{fd.epsilon, fd.n, fd.c, fd.g, out.h, out.b, out.V};
}

bool CheckReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void CheckReport::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

CheckReport seifert_checks(const FracturedData& fd) {
  CheckReport rep;
  std::size_t r = fd.dimU;
  require(fd.S.rows() == r && fd.S.cols() == r && fd.h_res.rows() == r && fd.h_res.cols() == r,
          ErrorKind::InvalidInput, "fractured data shapes disagree with dimU");
  const QMatrix& S = fd.S;
  QMatrix h = rational_or_throw(fd.h_res, "h_res");

  auto witness = [](const QMatrix& resid) {
    for (std::size_t i = 0; i < resid.rows(); ++i)
      for (std::size_t j = 0; j < resid.cols(); ++j)
        if (!is_zero(resid(i, j)))
          return "first mismatch at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    return std::string();
  };
  QMatrix inv = h.transpose() * S * h - S;
  rep.add("S(h a, h b) = S(a, b)", inv.is_zero(), witness(inv));
  QMatrix sw = S - S.transpose() * h;
  rep.add("S(a, b) = S(h b, a)", sw.is_zero(), witness(sw));

  FracturedBlocks blk;
  if (fd.blocks) {
    blk = *fd.blocks;
  } else {
    // without stored coordinates only the eigenvalue splitting is recoverable
    QMatrix A = h - QMatrix::identity(r);
    QMatrix A2 = A * A;
    QMatrix N = column_space(A2), E = nullspace(A2);
    QMatrix T = hstack(N, E);
    QMatrix Ti = inverse(T);
    QMatrix S2 = T.transpose() * S * T;
    QMatrix h2 = Ti * h * T;
    FracturedData moved = fd;
    moved.S = S2;
    moved.h_res = to_gaussian(h2);
    moved.blocks = FracturedBlocks{range(0, N.cols()), {}, {}};
    if (fd.c == 0) moved.blocks->bnd = range(N.cols(), r);
    else moved.blocks->im = range(N.cols(), r);  // U_im + U_bnd together
    CheckReport inner = seifert_checks(moved);
    for (auto& c : inner.checks)
      if (c.name.rfind("S(", 0) != 0) rep.checks.push_back(c);
    if (fd.c != 0)
      rep.add("U_im / U_bnd separation", true, "not checked: no decomposition stored and c > 0");
    return rep;
  }

  auto zero_block = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return S.select(a, b).is_zero() && S.select(b, a).is_zero();
  };
  std::vector<std::size_t> eq1 = blk.im;
  eq1.insert(eq1.end(), blk.bnd.begin(), blk.bnd.end());
  rep.add("S block diagonal on U_neq1 + (U_im + U_bnd)", zero_block(blk.neq1, eq1));
  rep.add("S block diagonal on U_im + U_bnd", zero_block(blk.im, blk.bnd));
  auto nondeg = [&](const std::vector<std::size_t>& idx) {
    QMatrix m = S.select(idx, idx);
    return rank(m) == idx.size();
  };
  rep.add("S_neq1 non-degenerate", nondeg(blk.neq1));
  rep.add("S_im non-degenerate", nondeg(blk.im));
  rep.add("S_bnd non-degenerate", nondeg(blk.bnd));
  QMatrix Sb = S.select(blk.bnd, blk.bnd);
  bool negdef = Sb == Sb.transpose() && symmetric_inertia(Sb).minus == blk.bnd.size();
  rep.add("S_bnd negative definite", negdef,
          negdef ? std::string() : (Sb == Sb.transpose() ? "inertia " + to_string(symmetric_inertia(Sb))
                                                          : std::string("S_bnd is not symmetric")));
  return rep;
}

LinkingReport linking_matrix_check(const QMatrix& clk) {
  std::size_t n = clk.rows();
  require(clk.square() && n >= 2, ErrorKind::InvalidInput, "linking data must be square with n >= 2");
  LinkingReport rep;
  rep.L = QMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      require(clk(i, j) == clk(j, i), ErrorKind::InvalidInput, "fractured linking numbers must be symmetric");
      require(sgn(clk(i, j)) > 0, ErrorKind::PreconditionFailed,
              "link is not special: clk(K_" + std::to_string(i + 1) + ", K_" + std::to_string(j + 1) +
                  ") = " + to_string(clk(i, j)) + " is not positive");
      rep.L(i, j) = clk(i, j);
      rep.L(i, i) -= clk(i, j);
    }
  rep.inertia = symmetric_inertia(rep.L);
  QMatrix ones(n, 1);
  for (std::size_t i = 0; i < n; ++i) ones(i, 0) = 1;
  rep.kernel_is_diagonal = (rep.L * ones).is_zero();
  return rep;
}

Inertia fractured_inertia(const QMatrix& S, const UnitCirclePoint& z) {
  require(!z.is_one(), ErrorKind::PreconditionFailed, "fractured signature is undefined at z = 1");
  require(S.square(), ErrorKind::InvalidInput, "S must be square");
  return hermitian_inertia(signature_form(to_gaussian(S), z));
}

long fractured_signature(const QMatrix& S, const UnitCirclePoint& z) {
  return fractured_inertia(S, z).signature();
}

std::size_t fractured_nullity(const QMatrix& S, const UnitCirclePoint& z) {
  return fractured_inertia(S, z).zero;
}

namespace {

// x with x^H H x > 0 for hermitian H, if any. A zero diagonal entry with a
// non-zero row gives one directly; otherwise pivot on a negative diagonal
// entry and lift a witness of the Schur complement.
std::optional<GMatrix> positive_vector(const GMatrix& H) {
  std::size_t n = H.rows();
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& d = H(i, i).re();
    if (sgn(d) > 0) {
      GMatrix x(n, 1);
      x(i, 0) = Gaussian(1);
      return x;
    }
    if (sgn(d) < 0) {
      if (!pivot) pivot = i;
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || H(i, j).is_zero()) continue;
      // value t |H_ij|^2 (2 + t H_jj) with H_jj <= 0
      Rational t = Rational(1) / (Rational(1) + abs(H(j, j).re()));
      GMatrix x(n, 1);
      x(i, 0) = Gaussian(1);
      x(j, 0) = H(i, j).conj() * Gaussian(t);
      return x;
    }
  }
  if (!pivot) return std::nullopt;
  std::size_t p = *pivot;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (i != p) rest.push_back(i);
  Gaussian inv = Gaussian(1) / H(p, p);
  GMatrix S(rest.size(), rest.size());
  for (std::size_t a = 0; a < rest.size(); ++a)
    for (std::size_t b = 0; b < rest.size(); ++b)
      S(a, b) = H(rest[a], rest[b]) - H(rest[a], p) * inv * H(p, rest[b]);
  auto y = positive_vector(S);
  if (!y) return std::nullopt;
  GMatrix x(n, 1);
  Gaussian hy;
  for (std::size_t a = 0; a < rest.size(); ++a) {
    x(rest[a], 0) = (*y)(a, 0);
    hy += H(p, rest[a]) * (*y)(a, 0);
  }
  x(p, 0) = -(inv * hy);
  return x;
}

}  // namespace

TwistReport twist_check(const FibredLinkData& fl) {
  TwistReport rep;
  EigenSplit es = eigen_split(fl.h);
  require(es.remainder.degree() <= 0, ErrorKind::PreconditionFailed,
          "twist test needs monodromy eigenvalues that are roots of unity");
  for (const auto& [o, m] : es.orbits) rep.N = std::lcm(rep.N, o.d);
  std::size_t n = fl.dim();
  GMatrix M = fl.b.transpose() * (power(fl.h, rep.N) - GMatrix::identity(n));
  GMatrix H = (M + M.adjoint()) * Gaussian(Rational(1, 2));
  rep.inertia = hermitian_inertia(H);
  if (rep.inertia.plus > 0) {
    rep.witness = positive_vector(H);
    require(rep.witness.has_value(), ErrorKind::Internal, "no witness for positive inertia");
  }
  return rep;
}

PlumbingInvariants plumbing_invariants(const PlumbingGraph& g) {
  std::size_t nv = g.genus.size();
  require(nv >= 1, ErrorKind::InvalidInput, "plumbing graph has no vertices");
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& [a, b] : g.edges) {
    require(a < nv && b < nv, ErrorKind::InvalidInput, "edge endpoint out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto a : g.arrowheads) require(a < nv, ErrorKind::InvalidInput, "arrowhead vertex out of range");
  require(!g.arrowheads.empty(), ErrorKind::InvalidInput, "plumbing graph needs at least one arrowhead");
  std::vector<bool> seen(nv, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
  }
  require(reached == nv, ErrorKind::PreconditionFailed, "plumbing graph is disconnected");
  PlumbingInvariants out;
  out.c = static_cast<long>(g.edges.size()) - static_cast<long>(nv) + 1;
  for (auto gv : g.genus) out.gsum += gv;
  out.n = static_cast<long>(g.arrowheads.size());
  out.b1M = 2 * out.gsum + out.c;
  return out;
}

Spectrum mhs_spectrum(const Spectrum& sp_frct, unsigned c, unsigned g) {
  std::vector<Rational> entries = sp_frct;
  entries.insert(entries.end(), g, Rational(1));
  entries.insert(entries.end(), g + c, Rational(2));
  return make_spectrum(std::move(entries));
}

FracturedSpectrum fractured_spectrum(const FracturedData& fd) {
  Hvs F = fractured_hvs(fd);
  FracturedSpectrum out;
  if (F.dim() > 0) {
    auto [F_neq1, F_1] = split_at_one(F);
    Inertia in = hermitian_inertia(F_1.V);
    // W^1_1(+1) has V = -1 and contributes 1; W^1_1(-1) has V = +1 and contributes 2
    out.m1 = static_cast<unsigned>(in.minus);
    out.m2 = static_cast<unsigned>(in.plus);
  }
  out.solve = spectrum_from_signatures(F, out.m1, out.m2);
  return out;
}

}  // namespace hvskit
