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

// Signcryption with equality test: setup, key generation, signcrypt,
// unsigncrypt, tag extraction and the equality test.
//
// Every key has two tracks. The plain track (A, T) carries the message and
// the signature; the primed track (A', T') carries H(mu) and is what a tag
// holder can open.

#ifndef SCET_SCHEME_H_
#define SCET_SCHEME_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "scet/bits.h"
#include "scet/gaussian.h"
#include "scet/hashes.h"
#include "scet/params.h"
#include "scet/wire.h"
#include "scet/zq.h"

namespace scet {

struct PublicParams {
  ParamSet params;
  FrdCtx frd;
  std::vector<ZqMatrix> c;        // C_0..C_n, each n x nk
  std::vector<ZqMatrix> c_prime;  // C'_0..C'_n
  ZqMatrix b, b_prime;            // n x m
  ZqMatrix u_mat, u_mat_prime;    // U, U': n x ell
  ZqVector u;                     // signature syndrome, length n
};

struct ReceiverPublicKey {
  ZqMatrix a, a_prime;
  friend bool operator==(const ReceiverPublicKey&, const ReceiverPublicKey&) = default;
};
struct ReceiverSecretKey {
  IntMatrix t, t_prime;  // tag 0
  friend bool operator==(const ReceiverSecretKey&, const ReceiverSecretKey&) = default;
};
struct ReceiverKeys {
  ReceiverPublicKey pk;
  ReceiverSecretKey sk;
};

struct SenderPublicKey {
  ZqMatrix a, a_prime;
  friend bool operator==(const SenderPublicKey&, const SenderPublicKey&) = default;
};
struct SenderSecretKey {
  IntMatrix t, t_prime;  // tag 1
  friend bool operator==(const SenderSecretKey&, const SenderSecretKey&) = default;
};
struct SenderKeys {
  SenderPublicKey pk;
  SenderSecretKey sk;
};

// Holds only T'.
struct TagKey {
  IntMatrix t_prime;
  friend bool operator==(const TagKey&, const TagKey&) = default;
};

struct Ciphertext {
  ZqVector c0;        // m
  ZqVector c1;        // ell
  IntVector r_e;      // m
  IntVector r_s;      // m
  ZqVector c0_prime;  // m
  ZqVector c1_prime;  // ell
  IntVector r_e_prime;  // m
  IntVector e;        // m + nk

  // Number of ring elements: 3m + (m + nk) + 2(m + ell) for well-formed input.
  std::size_t element_count() const;
  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// Throws kInvalidParams when a functional constraint fails.
PublicParams setup(const ParamSet& ps, std::uint64_t seed);

ReceiverKeys keygen_receiver(const PublicParams& pp, Rng& rng);
SenderKeys keygen_sender(const PublicParams& pp, Rng& rng);

Ciphertext signcrypt(const PublicParams& pp, const ReceiverPublicKey& pk_r,
                     const SenderSecretKey& sk_s, const SenderPublicKey& pk_s, const Bits& mu,
                     Rng& rng);

// Returns nullopt on any failed check. Randomness feeds the preimage step.
// Throws kDimensionMismatch when ct does not have the shape ps prescribes.
std::optional<Bits> unsigncrypt(const PublicParams& pp, const ReceiverSecretKey& sk_r,
                                const ReceiverPublicKey& pk_r, const SenderPublicKey& pk_s,
                                const Ciphertext& ct, Rng& rng);

TagKey tag_extract(const ReceiverSecretKey& sk_r);

struct TestSide {
  const TagKey& tag;
  const Ciphertext& ct;
  const ReceiverPublicKey& pk_r;
  const SenderPublicKey& pk_s;
};

enum class TestOutcome { kEqual, kNotEqual, kDecodeFailure };

TestOutcome test_equality_detailed(const PublicParams& pp, const TestSide& i, const TestSide& j,
                                   Rng& rng);
// An undecodable side counts as unequal.
bool test_equality(const PublicParams& pp, const TestSide& i, const TestSide& j, Rng& rng);

// Recovers H(mu) from one side with the tag; nullopt when decoding fails.
std::optional<Bits> open_tag_track(const PublicParams& pp, const TestSide& side, Rng& rng);

// bit_i = 1 iff |lift(v_i - floor(q/2))| < q/4.
Bits decode_bits(const ZqVector& v);

// Pieces of the construction exposed for tests.
ZqVector receiver_tag_vector(const PublicParams& pp, const ZqMatrix& a_r, const ZqMatrix& a_s,
                             const ZqMatrix& b, const IntVector& r);
ZqMatrix signature_matrix(const PublicParams& pp, const SenderPublicKey& pk_s,
                          const ReceiverPublicKey& pk_r, const Bits& mu, const Ciphertext& ct);
// Bound sigma2 * sqrt(m + nk) on the signature norm.
double signature_norm_bound(const ParamSet& ps);

// --- file containers ----------------------------------------------------

// SHAKE256 digest over the numeric fields of the parameter set.
std::array<std::uint8_t, 32> params_digest(const ParamSet& ps);

wire::Bytes serialize(const PublicParams& pp);
wire::Bytes serialize(const ParamSet& ps, const ReceiverPublicKey& pk);
wire::Bytes serialize(const ParamSet& ps, const ReceiverSecretKey& sk);
wire::Bytes serialize(const ParamSet& ps, const SenderPublicKey& pk);
wire::Bytes serialize(const ParamSet& ps, const SenderSecretKey& sk);
wire::Bytes serialize(const ParamSet& ps, const Ciphertext& ct);
wire::Bytes serialize(const ParamSet& ps, const TagKey& tag);

PublicParams deserialize_public_params(std::span<const std::uint8_t> bytes);
// Each reader checks the kind byte and the parameter digest (kParamMismatch)
// and validates every shape against ps.
ReceiverPublicKey deserialize_receiver_pk(std::span<const std::uint8_t> bytes, const ParamSet& ps);
ReceiverSecretKey deserialize_receiver_sk(std::span<const std::uint8_t> bytes, const ParamSet& ps);
SenderPublicKey deserialize_sender_pk(std::span<const std::uint8_t> bytes, const ParamSet& ps);
SenderSecretKey deserialize_sender_sk(std::span<const std::uint8_t> bytes, const ParamSet& ps);
Ciphertext deserialize_ciphertext(std::span<const std::uint8_t> bytes, const ParamSet& ps);
TagKey deserialize_tag_key(std::span<const std::uint8_t> bytes, const ParamSet& ps);

// Kind byte of a composite container, after checking the magic.
wire::Kind peek_kind(std::span<const std::uint8_t> bytes);

// Sum of rows * cols over the records of any composite container other than
// public parameters, read from the bytes alone.
std::size_t container_element_count(std::span<const std::uint8_t> bytes);

// Element counts for size accounting.
std::size_t element_count(const ReceiverPublicKey& pk);
std::size_t element_count(const SenderSecretKey& sk);
std::size_t element_count(const ReceiverSecretKey& sk);
std::size_t element_count(const SenderPublicKey& pk);

}  // namespace scet

#endif  // SCET_SCHEME_H_
