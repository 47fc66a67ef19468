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

// Composite containers: magic, kind byte, 32-byte parameter digest, record
// count, then one self-describing record per component.

#include <algorithm>

#include "scet/error.h"
#include "scet/scheme.h"

namespace scet {

namespace {

constexpr std::string_view kDomainParams = "SCET/params";

using Digest = std::array<std::uint8_t, 32>;

void put_params(wire::Writer& w, const ParamSet& ps) {
  w.put_u64(ps.n);
  w.put_u64(ps.q);
  w.put_u64(ps.mbar);
  w.put_u64(ps.ell);
  w.put_f64(ps.alpha);
  w.put_f64(ps.sigma1);
  w.put_f64(ps.sigma2);
  w.put_u64(ps.num_receivers);
  w.put_u64(ps.num_senders);
  w.put_u64(ps.query_budget);
}

ParamSet get_params(wire::Reader& r) {
  ParamSet ps;
  ps.n = r.get_u64();
  ps.q = r.get_u64();
  ps.mbar = r.get_u64();
  ps.ell = r.get_u64();
  ps.alpha = r.get_f64();
  ps.sigma1 = r.get_f64();
  ps.sigma2 = r.get_f64();
  ps.num_receivers = r.get_u64();
  ps.num_senders = r.get_u64();
  ps.query_budget = r.get_u64();
  return ps;
}

wire::Writer begin(wire::Kind kind, const ParamSet& ps, std::uint64_t records) {
  wire::Writer w;
  w.put_magic();
  w.put_u8(static_cast<std::uint8_t>(kind));
  Digest d = params_digest(ps);
  w.put_bytes(d);
  w.put_u64(records);
  return w;
}

// Reads the composite header; returns the record count.
std::uint64_t open(wire::Reader& r, wire::Kind kind, const ParamSet* ps) {
  r.expect_magic();
  auto got = static_cast<wire::Kind>(r.get_u8());
  if (got != kind) {
    throw Error(ErrorCode::kBadKind, "expected container kind " +
                                         std::to_string(static_cast<int>(kind)) + ", found " +
                                         std::to_string(static_cast<int>(got)));
  }
  auto digest = r.get_bytes(32);
  if (ps != nullptr) {
    Digest want = params_digest(*ps);
    if (!std::equal(want.begin(), want.end(), digest.begin())) {
      throw Error(ErrorCode::kParamMismatch, "file was produced under a different parameter set");
    }
  }
  return r.get_u64();
}

void expect_records(std::uint64_t got, std::uint64_t want) {
  if (got != want) throw Error(ErrorCode::kBadKind, "unexpected record count");
}

void expect_shape(const ZqMatrix& a, std::size_t rows, std::size_t cols) {
  if (a.rows() != rows || a.cols() != cols) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix shape differs from parameters");
  }
}

void expect_shape(const IntMatrix& a, std::size_t rows, std::size_t cols) {
  if (a.rows() != rows || a.cols() != cols) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix shape differs from parameters");
  }
}

void expect_len(std::size_t got, std::size_t want) {
  if (got != want) throw Error(ErrorCode::kDimensionMismatch, "vector length differs from parameters");
}

template <typename Pk>
wire::Bytes write_pk(wire::Kind kind, const ParamSet& ps, const Pk& pk) {
  wire::Writer w = begin(kind, ps, 2);
  w.put(pk.a);
  w.put(pk.a_prime);
  return std::move(w).bytes();
}

template <typename Sk>
wire::Bytes write_sk(wire::Kind kind, const ParamSet& ps, const Sk& sk) {
  wire::Writer w = begin(kind, ps, 2);
  w.put(sk.t);
  w.put(sk.t_prime);
  return std::move(w).bytes();
}

template <typename Pk>
Pk read_pk(wire::Kind kind, std::span<const std::uint8_t> bytes, const ParamSet& ps) {
  wire::Reader r(bytes);
  expect_records(open(r, kind, &ps), 2);
  Pk pk{r.get_matrix(ps.q), r.get_matrix(ps.q)};
  r.expect_end();
  expect_shape(pk.a, ps.n, ps.m());
  expect_shape(pk.a_prime, ps.n, ps.m());
  return pk;
}

template <typename Sk>
Sk read_sk(wire::Kind kind, std::span<const std::uint8_t> bytes, const ParamSet& ps) {
  wire::Reader r(bytes);
  expect_records(open(r, kind, &ps), 2);
  Sk sk{r.get_int_matrix(), r.get_int_matrix()};
  r.expect_end();
  expect_shape(sk.t, ps.mbar, ps.nk());
  expect_shape(sk.t_prime, ps.mbar, ps.nk());
  return sk;
}

}  // namespace

Digest params_digest(const ParamSet& ps) {
  wire::Writer w;
  put_params(w, ps);
  std::vector<std::uint8_t> h = shake256(kDomainParams, w.bytes(), 32);
  Digest d;
  std::copy(h.begin(), h.end(), d.begin());
  return d;
}

wire::Kind peek_kind(std::span<const std::uint8_t> bytes) {
  wire::Reader r(bytes);
  r.expect_magic();
  return static_cast<wire::Kind>(r.get_u8());
}

std::size_t container_element_count(std::span<const std::uint8_t> bytes) {
  wire::Reader r(bytes);
  r.expect_magic();
  r.get_u8();
  r.get_bytes(32);
  std::uint64_t records = r.get_u64();
  std::size_t total = 0;
  for (std::uint64_t i = 0; i < records; ++i) {
    r.expect_magic();
    r.get_u8();
    r.get_u64();
    std::uint64_t rows = r.get_u64();
    std::uint64_t cols = r.get_u64();
    if (rows != 0 && cols > r.remaining() / 8 / rows) {
      throw Error(ErrorCode::kTruncated, "record shape exceeds stream length");
    }
    r.get_bytes(rows * cols * 8);
    total += rows * cols;
  }
  r.expect_end();
  return total;
}

wire::Bytes serialize(const PublicParams& pp) {
  const ParamSet& ps = pp.params;
  const std::uint64_t records = 1 + 2 * (ps.n + 1) + 5;
  wire::Writer w = begin(wire::Kind::kPublicParams, ps, records);
  w.put_u64(ps.name.size());
  w.put_bytes(std::span(reinterpret_cast<const std::uint8_t*>(ps.name.data()), ps.name.size()));
  put_params(w, ps);
  w.put(ZqVector::from_residues(ps.q, pp.frd.poly()));
  for (const auto& c : pp.c) w.put(c);
  for (const auto& c : pp.c_prime) w.put(c);
  w.put(pp.b);
  w.put(pp.b_prime);
  w.put(pp.u_mat);
  w.put(pp.u_mat_prime);
  w.put(pp.u);
  return std::move(w).bytes();
}

PublicParams deserialize_public_params(std::span<const std::uint8_t> bytes) {
  wire::Reader r(bytes);
  std::uint64_t records = open(r, wire::Kind::kPublicParams, nullptr);
  std::uint64_t name_len = r.get_u64();
  auto name = r.get_bytes(name_len);
  ParamSet ps = get_params(r);
  ps.name.assign(name.begin(), name.end());
  {
    // The header digest must agree with the embedded parameters.
    wire::Reader again(bytes);
    open(again, wire::Kind::kPublicParams, &ps);
  }
  check_modulus(ps.q);
  if (ps.n == 0 || ps.n > 4096) throw Error(ErrorCode::kInvalidParams, "implausible dimension");
  expect_records(records, 1 + 2 * (ps.n + 1) + 5);

  ZqVector f = r.get_vector(ps.q);
  PublicParams pp{ps, FrdCtx(ps.n, ps.q, {f.entries().begin(), f.entries().end()}),
                  {}, {}, {}, {}, {}, {}, {}};
  for (std::size_t i = 0; i <= ps.n; ++i) {
    pp.c.push_back(r.get_matrix(ps.q));
    expect_shape(pp.c.back(), ps.n, ps.nk());
  }
  for (std::size_t i = 0; i <= ps.n; ++i) {
    pp.c_prime.push_back(r.get_matrix(ps.q));
    expect_shape(pp.c_prime.back(), ps.n, ps.nk());
  }
  pp.b = r.get_matrix(ps.q);
  pp.b_prime = r.get_matrix(ps.q);
  pp.u_mat = r.get_matrix(ps.q);
  pp.u_mat_prime = r.get_matrix(ps.q);
  pp.u = r.get_vector(ps.q);
  r.expect_end();
  expect_shape(pp.b, ps.n, ps.m());
  expect_shape(pp.b_prime, ps.n, ps.m());
  expect_shape(pp.u_mat, ps.n, ps.ell);
  expect_shape(pp.u_mat_prime, ps.n, ps.ell);
  expect_len(pp.u.size(), ps.n);
  return pp;
}

wire::Bytes serialize(const ParamSet& ps, const ReceiverPublicKey& pk) {
  return write_pk(wire::Kind::kReceiverPublicKey, ps, pk);
}
wire::Bytes serialize(const ParamSet& ps, const SenderPublicKey& pk) {
  return write_pk(wire::Kind::kSenderPublicKey, ps, pk);
}
wire::Bytes serialize(const ParamSet& ps, const ReceiverSecretKey& sk) {
  return write_sk(wire::Kind::kReceiverSecretKey, ps, sk);
}
wire::Bytes serialize(const ParamSet& ps, const SenderSecretKey& sk) {
  return write_sk(wire::Kind::kSenderSecretKey, ps, sk);
}

wire::Bytes serialize(const ParamSet& ps, const Ciphertext& ct) {
  wire::Writer w = begin(wire::Kind::kCiphertext, ps, 8);
  w.put(ct.c0);
  w.put(ct.c1);
  w.put_ints(ct.r_e);
  w.put_ints(ct.r_s);
  w.put(ct.c0_prime);
  w.put(ct.c1_prime);
  w.put_ints(ct.r_e_prime);
  w.put_ints(ct.e);
  return std::move(w).bytes();
}

wire::Bytes serialize(const ParamSet& ps, const TagKey& tag) {
  wire::Writer w = begin(wire::Kind::kTagKey, ps, 1);
  w.put(tag.t_prime);
  return std::move(w).bytes();
}

ReceiverPublicKey deserialize_receiver_pk(std::span<const std::uint8_t> bytes, const ParamSet& ps) {
  return read_pk<ReceiverPublicKey>(wire::Kind::kReceiverPublicKey, bytes, ps);
}
SenderPublicKey deserialize_sender_pk(std::span<const std::uint8_t> bytes, const ParamSet& ps) {
  return read_pk<SenderPublicKey>(wire::Kind::kSenderPublicKey, bytes, ps);
}
ReceiverSecretKey deserialize_receiver_sk(std::span<const std::uint8_t> bytes, const ParamSet& ps) {
  return read_sk<ReceiverSecretKey>(wire::Kind::kReceiverSecretKey, bytes, ps);
}
SenderSecretKey deserialize_sender_sk(std::span<const std::uint8_t> bytes, const ParamSet& ps) {
  return read_sk<SenderSecretKey>(wire::Kind::kSenderSecretKey, bytes, ps);
}

Ciphertext deserialize_ciphertext(std::span<const std::uint8_t> bytes, const ParamSet& ps) {
  wire::Reader r(bytes);
  expect_records(open(r, wire::Kind::kCiphertext, &ps), 8);
  Ciphertext ct;
  ct.c0 = r.get_vector(ps.q);
  ct.c1 = r.get_vector(ps.q);
  ct.r_e = r.get_ints();
  ct.r_s = r.get_ints();
  ct.c0_prime = r.get_vector(ps.q);
  ct.c1_prime = r.get_vector(ps.q);
  ct.r_e_prime = r.get_ints();
  ct.e = r.get_ints();
  r.expect_end();
  const std::size_t m = ps.m();
  expect_len(ct.c0.size(), m);
  expect_len(ct.c1.size(), ps.ell);
  expect_len(ct.r_e.size(), m);
  expect_len(ct.r_s.size(), m);
  expect_len(ct.c0_prime.size(), m);
  expect_len(ct.c1_prime.size(), ps.ell);
  expect_len(ct.r_e_prime.size(), m);
  expect_len(ct.e.size(), m + ps.nk());
  return ct;
}

TagKey deserialize_tag_key(std::span<const std::uint8_t> bytes, const ParamSet& ps) {
  wire::Reader r(bytes);
  expect_records(open(r, wire::Kind::kTagKey, &ps), 1);
  TagKey tag{r.get_int_matrix()};
  r.expect_end();
  expect_shape(tag.t_prime, ps.mbar, ps.nk());
  return tag;
}

}  // namespace scet
