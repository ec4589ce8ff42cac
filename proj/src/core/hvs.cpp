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

#include "hvskit/hvs.hpp"

#include <algorithm>

#include "hvskit/error.hpp"
#include "hvskit/linalg.hpp"

namespace hvskit {

using namespace exact;

namespace {

void require_shape(const Hvs& v) {
  std::size_t n = v.h.rows();
  require(v.epsilon == 1 || v.epsilon == -1, ErrorKind::InvalidInput, "epsilon must be +1 or -1");
  require(v.h.square() && v.b.rows() == n && v.b.cols() == n && v.V.rows() == n && v.V.cols() == n,
          ErrorKind::InvalidInput,
          "HVS matrices must be square of equal size (b " + shape_string(v.b) + ", h " +
              shape_string(v.h) + ", V " + shape_string(v.V) + ")");
}

int lambda_power(const Rational& s) {
  // exp(2 pi i s) = i^(4 s) for s in {1/4, 1/2, 3/4, 1}
  Rational q = s * 4;
  require(q.get_den() == 1 && q > 0 && q <= 4, ErrorKind::PreconditionFailed,
          "literal model blocks need exp(2 pi i s) in {1, i, -1, -i}; got s = " + to_string(s));
  return static_cast<int>(q.get_num().get_si());
}

int m_of(int epsilon) { return epsilon == -1 ? 1 : 0; }

/// Linear constraints on the entries of an unknown n x n matrix X over Q(i),
/// solved as a real system in (Re X, Im X).
class EntrySystem {
 public:
  explicit EntrySystem(std::size_t n) : n_(n) {}

  struct Term {
    std::size_t i, j;
    Gaussian coef;
    bool conj;  // coefficient multiplies conj(X_ij)
  };

  void add(const std::vector<Term>& terms, const Gaussian& rhs) {
    std::vector<Rational> re(2 * n_ * n_ + 1), im(2 * n_ * n_ + 1);
    for (const auto& t : terms) {
      std::size_t x = 2 * (t.i * n_ + t.j), y = x + 1;
      const Rational& cr = t.coef.re();
      const Rational& ci = t.coef.im();
      if (!t.conj) {  // (cr + i ci)(x + i y)
        re[x] += cr, re[y] -= ci;
        im[x] += ci, im[y] += cr;
      } else {  // (cr + i ci)(x - i y)
        re[x] += cr, re[y] += ci;
        im[x] += ci, im[y] -= cr;
      }
    }
    re.back() = rhs.re();
    im.back() = rhs.im();
    rows_.push_back(std::move(re));
    rows_.push_back(std::move(im));
  }

  void fix(std::size_t i, std::size_t j, const Gaussian& value) { add({{i, j, Gaussian(1), false}}, value); }

  /// A solution with free variables set to zero.
  GMatrix solve() const {
    std::size_t nv = 2 * n_ * n_;
    QMatrix a(rows_.size(), nv), rhs(rows_.size(), 1);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < nv; ++c) a(r, c) = rows_[r][c];
      rhs(r, 0) = rows_[r][nv];
    }
    auto x = exact::solve(a, rhs);
    require(x.has_value(), ErrorKind::Internal, "model block system is inconsistent");
    GMatrix out(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        out(i, j) = Gaussian((*x)(2 * (i * n_ + j), 0), (*x)(2 * (i * n_ + j) + 1, 0));
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace

HvsValidation validate_hvs(const Hvs& v) {
  require_shape(v);
  std::size_t n = v.dim();
  HvsValidation out;
  GMatrix I = GMatrix::identity(n);
  Gaussian eps(v.epsilon);
  auto check = [&out](const char* name, GMatrix residual) {
    if (!residual.is_zero()) out.failures.push_back({name, std::move(residual)});
  };
  check("b^H = eps*b", v.b.adjoint() - eps * v.b);
  check("h^H*b*h = b", v.h.adjoint() * v.b * v.h - v.b);
  check("V*b = h - I", v.V * v.b - (v.h - I));
  check("V^H = -eps*V*h^H", v.V.adjoint() + eps * (v.V * v.h.adjoint()));
  if (rank(v.h) != n) out.failures.push_back({"h invertible", GMatrix()});
  out.rank_V = rank(v.V);
  out.simple = out.rank_V == n;
  out.nondegenerate = rank(v.b) == n;
  return out;
}

Hvs empty_hvs(int epsilon) { return Hvs{epsilon, GMatrix(), GMatrix(), GMatrix()}; }

GMatrix model_form(unsigned k, int u, int epsilon) {
  require(k >= 1, ErrorKind::InvalidInput, "block size must be positive");
  require(u == 1 || u == -1, ErrorKind::InvalidInput, "sign u must be +1 or -1");
  int m = m_of(epsilon);
  Gaussian corner = i_power(-m * m - static_cast<long>(k) + 1) * Gaussian(u);
  EntrySystem sys(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      // 1-based i + j <= k is zero, i + j = k + 1 is the antidiagonal
      if (i + j + 2 <= k) sys.fix(i, j, Gaussian(0));
      if (i + j + 1 == k) sys.fix(i, j, (i % 2 == 0) ? corner : -corner);
      // b^H = eps b
      sys.add({{j, i, Gaussian(1), true}, {i, j, Gaussian(-epsilon), false}}, Gaussian(0));
      // J^t b J = b with J = I + N
      std::vector<EntrySystem::Term> t{{i, j, Gaussian(-1), false}};
      for (std::size_t p : {i, i - 1})
        for (std::size_t q : {j, j - 1})
          if (p < k && q < k && p <= i && q <= j) t.push_back({p, q, Gaussian(1), false});
      sys.add(t, Gaussian(0));
    }
  GMatrix b = sys.solve();
  require(rank(b) == k, ErrorKind::Internal, "model form is degenerate");
  return b;
}

Hvs block_V(unsigned k, const Rational& s, int u, int epsilon) {
  int p = lambda_power(s);
  Gaussian lambda = i_power(p);
  GMatrix J = jordan_block<Gaussian>(k);
  Hvs v;
  v.epsilon = epsilon;
  v.b = model_form(k, u, epsilon);
  v.h = lambda * J;
  v.V = (v.h - GMatrix::identity(k)) * inverse(v.b);
  return v;
}

Hvs block_W(unsigned k, const Rational& s, int u, int epsilon) {
  if (lambda_power(s) != 4) return block_V(k, s, u, epsilon);
  require(k >= 1, ErrorKind::InvalidInput, "block size must be positive");
  require(u == 1 || u == -1, ErrorKind::InvalidInput, "sign u must be +1 or -1");
  int m = m_of(epsilon);
  GMatrix bt(k, k);
  if (k > 1) bt.set_block(1, 1, model_form(k - 1, u, epsilon));
  // solve for W = V^{-1}: W (J - I) = bt, W = -eps J^t W^H, fixed corner pattern
  Gaussian corner = i_power(-m * m - static_cast<long>(k)) * Gaussian(u);
  EntrySystem sys(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i + j + 2 <= k) sys.fix(i, j, Gaussian(0));
      if (i + j + 1 == k) sys.fix(i, j, (i % 2 == 0) ? corner : -corner);
      if (j >= 1) sys.fix(i, j - 1, bt(i, j));
      // W_ij + eps * sum_p J_pi conj(W_jp) = 0
      std::vector<EntrySystem::Term> t{{i, j, Gaussian(1), false}};
      t.push_back({j, i, Gaussian(epsilon), true});
      if (i >= 1) t.push_back({j, i - 1, Gaussian(epsilon), true});
      sys.add(t, Gaussian(0));
    }
  GMatrix W = sys.solve();
  Hvs v;
  v.epsilon = epsilon;
  v.b = bt;
  v.h = jordan_block<Gaussian>(k);
  v.V = inverse(W);
  return v;
}

Hvs block_offcircle(unsigned k, const Gaussian& lambda, int epsilon) {
  require(k >= 1, ErrorKind::InvalidInput, "block size must be positive");
  Rational nrm = lambda.norm();
  require(sgn(nrm) > 0 && nrm < 1, ErrorKind::PreconditionFailed,
          "off-circle block needs 0 < |lambda| < 1; got " + to_string(lambda));
  GMatrix I = GMatrix::identity(k);
  GMatrix J = jordan_block<Gaussian>(k);
  Gaussian mu = Gaussian(1) / lambda.conj();
  GMatrix h2 = mu * inverse(J.adjoint());
  Hvs v;
  v.epsilon = epsilon;
  v.b = GMatrix(2 * k, 2 * k);
  v.b.set_block(0, k, I);
  v.b.set_block(k, 0, Gaussian(epsilon) * I);
  v.h = direct_sum(lambda * J, h2);
  v.V = GMatrix(2 * k, 2 * k);
  v.V.set_block(0, k, Gaussian(epsilon) * (lambda * J - I));
  v.V.set_block(k, 0, h2 - I);
  return v;
}

Hvs direct_sum(const Hvs& a, const Hvs& b) {
  require(a.epsilon == b.epsilon, ErrorKind::InvalidInput, "direct sum of HVS with different epsilon");
  return Hvs{a.epsilon, exact::direct_sum(a.b, b.b), exact::direct_sum(a.h, b.h),
             exact::direct_sum(a.V, b.V)};
}

Hvs change_basis(const Hvs& v, const GMatrix& T) {
  require(T.square() && T.rows() == v.dim(), ErrorKind::InvalidInput, "change of basis shape mismatch");
  GMatrix Ti = inverse(T);
  return Hvs{v.epsilon, T.adjoint() * v.b * T, Ti * v.h * T, Ti * v.V * Ti.adjoint()};
}

Hvs restrict_to(const Hvs& v, const std::vector<std::size_t>& idx) {
  return Hvs{v.epsilon, v.b.select(idx, idx), v.h.select(idx, idx), v.V.select(idx, idx)};
}

std::pair<Hvs, Hvs> split_by_form(const Hvs& v, const std::vector<std::size_t>& u1) {
  require_shape(v);
  std::size_t n = v.dim();
  std::vector<bool> in1(n, false);
  for (auto i : u1) {
    require(i < n, ErrorKind::InvalidInput, "split index out of range");
    require(!in1[i], ErrorKind::InvalidInput, "split index repeated");
    in1[i] = true;
  }
  std::vector<std::size_t> u2;
  for (std::size_t i = 0; i < n; ++i)
    if (!in1[i]) u2.push_back(i);
  auto off_zero = [&](const GMatrix& m) {
    return m.select(u1, u2).is_zero() && m.select(u2, u1).is_zero();
  };
  require(off_zero(v.b), ErrorKind::PreconditionFailed, "split: b is not block diagonal");
  require(off_zero(v.h), ErrorKind::PreconditionFailed, "split: h is not block diagonal");
  require(rank(v.b.select(u1, u1)) == u1.size(), ErrorKind::PreconditionFailed,
          "split: b restricted to the first block is degenerate");
  require(off_zero(v.V), ErrorKind::Internal,
          "split: V is not block diagonal although b and h are; the input violates the HVS axioms");
  return {restrict_to(v, u1), restrict_to(v, u2)};
}

}  // namespace hvskit
