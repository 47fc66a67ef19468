/*
 * Copyright 2026 The SCET Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "scet/gadget.h"

#include <algorithm>
#include <cmath>

#include "scet/error.h"
#include "scet/params.h"

namespace scet {

namespace {

constexpr std::size_t kMaxDecodeBits = 56;

double dot(const std::vector<double>& a, std::span<const std::int64_t> b) {
  double acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * static_cast<double>(b[i]);
  return acc;
}

}  // namespace

GadgetCtx::GadgetCtx(std::uint64_t q, std::size_t n) : q_(q), n_(n) {
  check_modulus(q);
  k_ = ceil_log2(q);
  s_ = IntMatrix(k_, k_);
  for (std::size_t j = 0; j + 1 < k_; ++j) {
    s_(j, j) = 2;
    s_(j + 1, j) = -1;
  }
  last_col_.assign(k_, 0);
  if (q == (std::uint64_t{1} << k_)) {
    last_col_[k_ - 1] = 2;
  } else {
    for (std::size_t i = 0; i < k_; ++i) last_col_[i] = (q >> i) & 1;
  }
  s_.set_column(k_ - 1, last_col_);

  gs_.assign(k_, std::vector<double>(k_, 0.0));
  gs_norm_sq_.assign(k_, 0.0);
  gs_norm_.assign(k_, 0.0);
  mu_.assign(k_, std::vector<double>(k_, 0.0));
  for (std::size_t i = 0; i < k_; ++i) {
    IntVector col = s_.column(i);
    std::vector<double> v(col.begin(), col.end());
    for (std::size_t j = 0; j < i; ++j) {
      double m = dot(gs_[j], col) / gs_norm_sq_[j];
      mu_[i][j] = m;
      for (std::size_t r = 0; r < k_; ++r) v[r] -= m * gs_[j][r];
    }
    double sq = 0;
    for (double x : v) sq += x * x;
    gs_[i] = std::move(v);
    gs_norm_sq_[i] = sq;
    gs_norm_[i] = std::sqrt(sq);
  }

  IntVector g = gadget_vector(q);
  for (std::size_t j = 0; j < k_; ++j) {
    __int128 acc = 0;
    for (std::size_t i = 0; i < k_; ++i) acc += static_cast<__int128>(g[i]) * s_(i, j);
    if (reduce128(acc, q) != 0) throw Error(ErrorCode::kInternal, "gadget basis not in kernel");
  }
  if (max_gs_norm() > std::sqrt(5.0) + 1e-9) {
    throw Error(ErrorCode::kInternal, "gadget basis Gram-Schmidt norm exceeds sqrt(5)");
  }
}

double GadgetCtx::max_gs_norm() const {
  return *std::max_element(gs_norm_.begin(), gs_norm_.end());
}

double GadgetCtx::decoding_radius() const {
  return static_cast<double>(q_) / (2.0 * max_gs_norm());
}

IntVector gadget_vector(std::uint64_t q) {
  check_modulus(q);
  std::size_t k = ceil_log2(q);
  IntVector g(k);
  for (std::size_t i = 0; i < k; ++i) g[i] = std::int64_t{1} << i;
  return g;
}

IntVector g_decompose(Residue u, const GadgetCtx& ctx) {
  if (u >= ctx.modulus()) throw Error(ErrorCode::kInvalidArgument, "residue out of range");
  IntVector z(ctx.k());
  for (std::size_t i = 0; i < ctx.k(); ++i) z[i] = static_cast<std::int64_t>((u >> i) & 1);
  return z;
}

IntVector g_decompose(const ZqVector& u, const GadgetCtx& ctx) {
  if (u.size() != ctx.n()) throw Error(ErrorCode::kDimensionMismatch, "g_decompose block count");
  if (u.modulus() != ctx.modulus()) throw Error(ErrorCode::kModulusMismatch, "g_decompose modulus");
  IntVector out;
  out.reserve(ctx.nk());
  for (std::size_t b = 0; b < u.size(); ++b) {
    IntVector z = g_decompose(u[b], ctx);
    out.insert(out.end(), z.begin(), z.end());
  }
  return out;
}

IntVector g_sample_pre(Residue u, double s, const GadgetCtx& ctx, Rng& rng) {
  const std::size_t k = ctx.k();
  const IntMatrix& basis = ctx.basis();
  IntVector c = g_decompose(u, ctx);
  for (std::size_t step = k; step-- > 0;) {
    double center = dot(ctx.gs_vectors()[step], c) / ctx.gs_norms_squared()[step];
    std::int64_t z = sample_z({s / ctx.gs_norms()[step], center}, rng);
    if (z == 0) continue;
    for (std::size_t r = 0; r < k; ++r) c[r] -= z * basis(r, step);
  }
  return c;
}

IntVector g_sample_pre(const ZqVector& u, double s, const GadgetCtx& ctx, Rng& rng) {
  if (u.size() != ctx.n()) throw Error(ErrorCode::kDimensionMismatch, "g_sample_pre block count");
  if (u.modulus() != ctx.modulus()) throw Error(ErrorCode::kModulusMismatch, "g_sample_pre modulus");
  IntVector out;
  out.reserve(ctx.nk());
  for (std::size_t b = 0; b < u.size(); ++b) {
    IntVector z = g_sample_pre(u[b], s, ctx, rng);
    out.insert(out.end(), z.begin(), z.end());
  }
  return out;
}

// Nearest plane against the dual basis D = q S^{-t}, taken in the order whose
// Gram-Schmidt vectors are q s~_i / ||s~_i||^2. Coordinates are tracked as
// w = S^t b', which shifts by q e_i per step, so all lattice arithmetic stays
// integral; only the rounding decisions use floating point.
GadgetDecoding g_invert_block(const ZqVector& b, const GadgetCtx& ctx) {
  const std::size_t k = ctx.k();
  const std::uint64_t q = ctx.modulus();
  if (b.size() != k) throw Error(ErrorCode::kDimensionMismatch, "g_invert_block length");
  if (b.modulus() != q) throw Error(ErrorCode::kModulusMismatch, "g_invert_block modulus");
  if (k > kMaxDecodeBits) throw Error(ErrorCode::kInvalidArgument, "modulus too large to decode");

  const IntMatrix& basis = ctx.basis();
  const double qd = static_cast<double>(q);
  std::vector<__int128> w(k);
  std::vector<double> tau(k);
  for (std::size_t i = 0; i < k; ++i) {
    __int128 acc = 0;
    for (std::size_t r = 0; r < k; ++r) acc += static_cast<__int128>(basis(r, i)) * b[r];
    w[i] = acc;
    double t = static_cast<double>(acc);
    for (std::size_t j = 0; j < i; ++j) t -= ctx.mu(i, j) * tau[j];
    double c = std::round(t / qd);
    w[i] -= static_cast<__int128>(c) * q;
    tau[i] = t - c * qd;
  }

  // Solve S^t e = w: e_{j+1} = 2 e_j - w_j, and the last row pins e_0.
  std::vector<__int128> offset(k, 0);
  for (std::size_t j = 0; j + 1 < k; ++j) offset[j + 1] = 2 * offset[j] + w[j];
  __int128 num = w[k - 1];
  for (std::size_t i = 0; i < k; ++i) num += ctx.last_column()[i] * offset[i];
  if (num % static_cast<__int128>(q) != 0) {
    throw Error(ErrorCode::kDecodingFailure, "inconsistent gadget residual");
  }
  __int128 e0 = num / static_cast<__int128>(q);

  IntVector e(k);
  double sq = 0;
  for (std::size_t j = 0; j < k; ++j) {
    __int128 ej = (static_cast<__int128>(1) << j) * e0 - offset[j];
    if (ej > static_cast<__int128>(q) || ej < -static_cast<__int128>(q)) {
      throw Error(ErrorCode::kDecodingFailure, "gadget residual out of range");
    }
    e[j] = static_cast<std::int64_t>(ej);
    sq += static_cast<double>(e[j]) * static_cast<double>(e[j]);
  }
  if (std::sqrt(sq) >= ctx.decoding_radius()) {
    throw Error(ErrorCode::kDecodingFailure, "gadget residual beyond decoding radius");
  }

  Residue x = sub_mod(b[0], reduce(e[0], q), q);
  Residue pow2 = 1;
  for (std::size_t j = 0; j < k; ++j) {
    if (add_mod(mul_mod(x, pow2, q), reduce(e[j], q), q) != b[j]) {
      throw Error(ErrorCode::kDecodingFailure, "gadget decoding verification failed");
    }
    pow2 = add_mod(pow2, pow2, q);
  }
  return {x, std::move(e)};
}

GadgetBlockDecoding g_invert(const ZqVector& b, const GadgetCtx& ctx) {
  const std::size_t k = ctx.k();
  if (b.size() != ctx.nk()) throw Error(ErrorCode::kDimensionMismatch, "g_invert length");
  GadgetBlockDecoding out{ZqVector(ctx.n(), ctx.modulus()), {}};
  out.error.reserve(ctx.nk());
  for (std::size_t blk = 0; blk < ctx.n(); ++blk) {
    ZqVector part(k, ctx.modulus());
    for (std::size_t i = 0; i < k; ++i) part[i] = b[blk * k + i];
    GadgetDecoding d = g_invert_block(part, ctx);
    out.x[blk] = d.x;
    out.error.insert(out.error.end(), d.error.begin(), d.error.end());
  }
  return out;
}

ZqMatrix gadget_matrix(std::size_t n, std::uint64_t q) {
  return tagged_gadget(ZqMatrix::identity(n, q));
}

ZqMatrix tagged_gadget(const ZqMatrix& h) {
  if (h.rows() != h.cols()) throw Error(ErrorCode::kDimensionMismatch, "tag matrix must be square");
  const std::uint64_t q = h.modulus();
  const std::size_t n = h.rows();
  const std::size_t k = ceil_log2(q);
  ZqMatrix out(n, n * k, q);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      Residue v = h(r, j);
      for (std::size_t l = 0; l < k; ++l) {
        out(r, j * k + l) = v;
        v = add_mod(v, v, q);
      }
    }
  }
  return out;
}

}  // namespace scet
