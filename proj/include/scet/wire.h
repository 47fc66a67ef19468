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

// Binary container. Every element record is
//
//   magic "SCETv1\0\0" (8 bytes) | kind (1 byte) | q | rows | cols | entries
//
// with q, rows, cols and every entry as 8-byte little-endian words. Residues
// are stored unsigned; integer matrices/vectors store two's complement and
// carry q = 0. Vectors are stored as rows = length, cols = 1.

#ifndef SCET_WIRE_H_
#define SCET_WIRE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scet/zq.h"

namespace scet::wire {

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::array<std::uint8_t, 8> kMagic = {'S', 'C', 'E', 'T',
                                                       'v', '1', 0, 0};

enum class Kind : std::uint8_t {
  kMatrix = 1,
  kVector = 2,
  kIntMatrix = 3,
  kIntVector = 4,
  // Composite scheme files.
  kPublicParams = 16,
  kReceiverPublicKey = 17,
  kReceiverSecretKey = 18,
  kSenderPublicKey = 19,
  kSenderSecretKey = 20,
  kCiphertext = 21,
  kTagKey = 22,
};

class Writer {
 public:
  void put_magic() { bytes_.insert(bytes_.end(), kMagic.begin(), kMagic.end()); }
  void put_u8(std::uint8_t v) { bytes_.push_back(v); }
  void put_u64(std::uint64_t v);
  void put_i64(std::int64_t v) { put_u64(static_cast<std::uint64_t>(v)); }
  void put_f64(double v);
  void put_bytes(std::span<const std::uint8_t> v) {
    bytes_.insert(bytes_.end(), v.begin(), v.end());
  }

  void put(const ZqMatrix& m);
  void put(const ZqVector& v);
  void put(const IntMatrix& m);
  void put_ints(std::span<const std::int64_t> v);

  const Bytes& bytes() const& { return bytes_; }
  Bytes bytes() && { return std::move(bytes_); }

 private:
  Bytes bytes_;
};

// Bounds-checked reader; every short read raises kTruncated.
class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void expect_magic();
  std::uint8_t get_u8();
  std::uint64_t get_u64();
  std::int64_t get_i64() { return static_cast<std::int64_t>(get_u64()); }
  double get_f64();
  std::span<const std::uint8_t> get_bytes(std::size_t n);

  // `expected_q` rejects records whose modulus differs (kModulusMismatch).
  ZqMatrix get_matrix(std::optional<std::uint64_t> expected_q = std::nullopt);
  ZqVector get_vector(std::optional<std::uint64_t> expected_q = std::nullopt);
  IntMatrix get_int_matrix();
  IntVector get_ints();

  std::size_t remaining() const { return bytes_.size() - pos_; }
  bool at_end() const { return pos_ == bytes_.size(); }
  void expect_end();

 private:
  struct Header {
    Kind kind;
    std::uint64_t q;
    std::uint64_t rows;
    std::uint64_t cols;
  };
  Header get_header(Kind expected);

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

Bytes serialize(const ZqMatrix& m);
Bytes serialize(const ZqVector& v);
Bytes serialize(const IntMatrix& m);
Bytes serialize_ints(std::span<const std::int64_t> v);

ZqMatrix deserialize_matrix(std::span<const std::uint8_t> bytes,
                            std::optional<std::uint64_t> expected_q = std::nullopt);
ZqVector deserialize_vector(std::span<const std::uint8_t> bytes,
                            std::optional<std::uint64_t> expected_q = std::nullopt);
IntMatrix deserialize_int_matrix(std::span<const std::uint8_t> bytes);
IntVector deserialize_ints(std::span<const std::uint8_t> bytes);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace scet::wire

#endif  // SCET_WIRE_H_
