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

#include "scet/hashes.h"

#include <openssl/evp.h>

#include <memory>
#include <set>

#include "scet/error.h"
#include "scet/params.h"
#include "scet/wire.h"

namespace scet {

namespace {

using Poly = std::vector<Residue>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a mod f for monic f.
Poly poly_mod(Poly a, const Poly& f, std::uint64_t q) {
  const std::size_t df = f.size() - 1;
  trim(a);
  while (a.size() > df) {
    Residue lead = a.back();
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = sub_mod(a[shift + i], mul_mod(lead, f[i], q), q);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], q), q);
    }
  }
  return poly_mod(std::move(out), f, q);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t q) {
  Poly acc{1};
  base = poly_mod(std::move(base), f, q);
  while (e > 0) {
    if (e & 1) acc = poly_mulmod(acc, base, f, q);
    base = poly_mulmod(base, base, f, q);
    e >>= 1;
  }
  return acc;
}

// Remainder of a by b over the field Z_q.
Poly poly_rem(Poly a, const Poly& b, std::uint64_t q) {
  Residue inv_lead = inv_mod(b.back(), q);
  const std::size_t db = b.size() - 1;
  trim(a);
  while (!a.empty() && a.size() > db) {
    Residue factor = mul_mod(a.back(), inv_lead, q);
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = sub_mod(a[shift + i], mul_mod(factor, b[i], q), q);
    }
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(Poly a, Poly b, std::uint64_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(std::move(a), b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};

}  // namespace

std::vector<std::uint8_t> shake256(std::string_view domain, std::span<const std::uint8_t> input,
                                   std::size_t out_len) {
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1) {
    throw Error(ErrorCode::kInternal, "SHAKE256 unavailable");
  }
  std::uint8_t len_prefix[8];
  for (int i = 0; i < 8; ++i) len_prefix[i] = static_cast<std::uint8_t>(domain.size() >> (8 * i));
  std::vector<std::uint8_t> out(out_len);
  if (EVP_DigestUpdate(ctx.get(), len_prefix, sizeof len_prefix) != 1 ||
      EVP_DigestUpdate(ctx.get(), domain.data(), domain.size()) != 1 ||
      EVP_DigestUpdate(ctx.get(), input.data(), input.size()) != 1 ||
      EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
    throw Error(ErrorCode::kInternal, "SHAKE256 failed");
  }
  return out;
}

std::vector<Residue> xof_expand(std::string_view domain, std::span<const std::uint8_t> input,
                                std::size_t count, std::uint64_t q) {
  check_modulus(q);
  const std::size_t bits = std::max<std::size_t>(ceil_log2(q), 1);
  std::vector<Residue> out;
  out.reserve(count);
  // Start with twice the needed stream.
  std::size_t stream_bytes = (2 * count * bits + 7) / 8 + 16;
  std::vector<std::uint8_t> stream = shake256(domain, input, stream_bytes);
  std::size_t bitpos = 0;
  while (out.size() < count) {
    if (bitpos + bits > stream.size() * 8) {
      // Longer squeezes extend the same prefix.
      stream_bytes *= 2;
      stream = shake256(domain, input, stream_bytes);
    }
    Residue v = 0;
    for (std::size_t b = 0; b < bits; ++b, ++bitpos) {
      v |= static_cast<Residue>((stream[bitpos / 8] >> (bitpos % 8)) & 1) << b;
    }
    if (v < q) out.push_back(v);
  }
  return out;
}

Bits hash_H(const Bits& mu) {
  wire::Writer w;
  w.put_u64(mu.size());
  w.put_bytes(pack_bits(mu));
  std::vector<std::uint8_t> digest = shake256(kDomainH, w.bytes(), (mu.size() + 7) / 8);
  return unpack_bits(digest, mu.size());
}

ZqVector hash_H1(const ZqMatrix& a, std::size_t out_len) {
  std::vector<Residue> v = xof_expand(kDomainH1, wire::serialize(a), out_len, a.modulus());
  return ZqVector::from_residues(a.modulus(), std::move(v));
}

ZqVector hash_H3(std::span<const std::uint8_t> input, std::size_t out_len, std::uint64_t q) {
  return ZqVector::from_residues(q, xof_expand(kDomainH3, input, out_len, q));
}

bool is_irreducible(const std::vector<Residue>& f, std::uint64_t q) {
  if (f.size() < 2 || f.back() == 0) return false;
  const std::size_t n = f.size() - 1;
  Poly monic = f;
  Residue inv = inv_mod(f.back(), q);
  for (auto& c : monic) c = mul_mod(c, inv, q);
  const Poly x{0, 1};
  Poly h = poly_mod(x, monic, q);
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = poly_powmod(h, q, monic, q);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = sub_mod(diff[1], 1, q);
    trim(diff);
    if (diff.empty()) return false;
    if (gcd_degree(diff, monic, q) != 0) return false;
  }
  return true;
}

FrdCtx::FrdCtx(std::size_t n, std::uint64_t q, std::vector<Residue> f)
    : n_(n), q_(q), f_(std::move(f)) {
  check_modulus(q);
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "FRD dimension must be positive");
  if (!is_prime(q)) throw Error(ErrorCode::kInvalidArgument, "FRD encoding needs a prime modulus");
  if (f_.size() != n + 1 || f_.back() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "FRD polynomial must be monic of degree n");
  }
  for (auto c : f_) {
    if (c >= q) throw Error(ErrorCode::kInvalidArgument, "FRD coefficient not reduced");
  }
  if (!is_irreducible(f_, q)) throw Error(ErrorCode::kInvalidArgument, "FRD polynomial is reducible");
}

FrdCtx FrdCtx::find(std::size_t n, std::uint64_t q) {
  if (!is_prime(q)) throw Error(ErrorCode::kInvalidArgument, "FRD encoding needs a prime modulus");
  Rng rng(0x46524400u ^ (static_cast<std::uint64_t>(n) << 32) ^ q);
  for (;;) {
    std::vector<Residue> f(n + 1);
    for (std::size_t i = 0; i < n; ++i) f[i] = sample_uniform(q, rng);
    f[n] = 1;
    if (f[0] == 0 && n > 1) continue;
    if (is_irreducible(f, q)) return FrdCtx(n, q, std::move(f));
  }
}

ZqMatrix frd_encode(const ZqVector& t, const FrdCtx& ctx) {
  const std::size_t n = ctx.n();
  const std::uint64_t q = ctx.modulus();
  if (t.size() != n) throw Error(ErrorCode::kDimensionMismatch, "FRD input length differs from n");
  if (t.modulus() != q) throw Error(ErrorCode::kModulusMismatch, "FRD modulus");
  const auto& f = ctx.poly();
  ZqMatrix out(n, n, q);
  std::vector<Residue> p(t.entries().begin(), t.entries().end());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out(i, j) = p[i];
    // p <- p * x mod f.
    Residue top = p[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) p[i] = sub_mod(p[i - 1], mul_mod(top, f[i], q), q);
    p[0] = sub_mod(0, mul_mod(top, f[0], q), q);
  }
  return out;
}

Residue wat_eval(const WatHash& w, const ZqVector& h) {
  if (w.x.size() != h.size()) throw Error(ErrorCode::kDimensionMismatch, "hash key length");
  if (w.x.modulus() != h.modulus()) throw Error(ErrorCode::kModulusMismatch, "hash key modulus");
  const std::uint64_t q = h.modulus();
  Residue acc = 1 % q;
  for (std::size_t i = 0; i < h.size(); ++i) acc = add_mod(acc, mul_mod(w.x[i], h[i], q), q);
  return acc;
}

double wat_nonabort_estimate(const ZqVector& h_star, std::span<const ZqVector> h,
                             std::size_t trials, Rng& rng) {
  const std::uint64_t q = h_star.modulus();
  const std::size_t n = h_star.size();
  if (h.size() >= q) throw Error(ErrorCode::kInvalidArgument, "query budget must be below q");
  if (!is_prime(q)) throw Error(ErrorCode::kInvalidArgument, "modulus must be prime");
  if (trials == 0) throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  std::set<std::vector<Residue>> seen;
  seen.emplace(h_star.entries().begin(), h_star.entries().end());
  for (const auto& v : h) {
    if (v.size() != n || v.modulus() != q) {
      throw Error(ErrorCode::kDimensionMismatch, "query points must share shape and modulus");
    }
    if (!seen.emplace(v.entries().begin(), v.entries().end()).second) {
      throw Error(ErrorCode::kInvalidArgument, "query points must be distinct");
    }
  }
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    WatHash w{sample_uniform_vector(n, q, rng)};
    while (w.x.is_zero()) w.x = sample_uniform_vector(n, q, rng);
    if (wat_eval(w, h_star) != 0) continue;
    bool ok = true;
    for (const auto& v : h) {
      if (wat_eval(w, v) == 0) {
        ok = false;
        break;
      }
    }
    hits += ok;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

double wat_nonabort_estimate(std::uint64_t q, std::size_t query_budget, std::size_t trials,
                             Rng& rng, std::size_t n) {
  check_modulus(q);
  if (query_budget >= q) throw Error(ErrorCode::kInvalidArgument, "query budget must be below q");
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  std::set<std::vector<Residue>> seen;
  std::vector<ZqVector> points;
  while (points.size() < query_budget + 1) {
    ZqVector v = sample_uniform_vector(n, q, rng);
    if (v.is_zero()) continue;
    if (seen.emplace(v.entries().begin(), v.entries().end()).second) points.push_back(std::move(v));
  }
  ZqVector h_star = std::move(points.front());
  return wat_nonabort_estimate(h_star, std::span(points).subspan(1), trials, rng);
}

}  // namespace scet
