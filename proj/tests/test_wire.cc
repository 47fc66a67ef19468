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

#include <random>

#include "doctest.h"
#include "scet/bits.h"
#include "scet/error.h"
#include "scet/gaussian.h"
#include "scet/wire.h"

using namespace scet;

TEST_CASE("matrix records roundtrip bit-exactly") {
  Rng rng(4);
  ZqMatrix m = sample_uniform_matrix(3, 5, 1 << 16, rng);
  wire::Bytes bytes = wire::serialize(m);
  CHECK(bytes.size() == 8 + 1 + 3 * 8 + 15 * 8);
  CHECK(wire::deserialize_matrix(bytes) == m);
  CHECK(wire::serialize(wire::deserialize_matrix(bytes)) == bytes);

  ZqVector v = sample_uniform_vector(7, 12289, rng);
  CHECK(wire::deserialize_vector(wire::serialize(v)) == v);

  IntMatrix r = sample_matrix(4, 6, 3.0, rng);
  CHECK(wire::deserialize_int_matrix(wire::serialize(r)) == r);

  IntVector e = {-5, 0, 7, INT64_MIN, INT64_MAX};
  CHECK(wire::deserialize_ints(wire::serialize_ints(e)) == e);
}

TEST_CASE("malformed records are rejected with specific codes") {
  Rng rng(5);
  wire::Bytes bytes = wire::serialize(sample_uniform_matrix(2, 2, 97, rng));

  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };

  wire::Bytes truncated(bytes.begin(), bytes.end() - 1);
  CHECK(code_of([&] { wire::deserialize_matrix(truncated); }) == ErrorCode::kTruncated);

  wire::Bytes bad_magic = bytes;
  bad_magic[0] ^= 1;
  CHECK(code_of([&] { wire::deserialize_matrix(bad_magic); }) == ErrorCode::kBadMagic);

  CHECK(code_of([&] { wire::deserialize_vector(bytes); }) == ErrorCode::kBadKind);
  CHECK(code_of([&] { wire::deserialize_matrix(bytes, 101); }) == ErrorCode::kModulusMismatch);

  wire::Bytes out_of_range = bytes;
  out_of_range[out_of_range.size() - 1] = 0xff;
  CHECK_THROWS_AS(wire::deserialize_matrix(out_of_range), Error);

  wire::Bytes trailing = bytes;
  trailing.push_back(0);
  CHECK_THROWS_AS(wire::deserialize_matrix(trailing), Error);
}

TEST_CASE("hex bit strings") {
  Bits b = {1, 0, 1, 0, 1, 1, 1, 1};
  CHECK(bits_to_hex(b) == "af");
  CHECK(hex_to_bits("AF", 8) == b);
  CHECK(hex_to_bits("a", 3) == Bits{1, 0, 1});
  CHECK_THROWS_AS(hex_to_bits("b", 3), Error);  // nonzero padding bit
  CHECK_THROWS_AS(hex_to_bits("afa", 8), Error);
  CHECK_THROWS_AS(hex_to_bits("zz", 8), Error);

  Rng rng(6);
  for (std::size_t len : {1u, 7u, 8u, 31u, 64u}) {
    Bits x(len);
    for (auto& v : x) v = rng() & 1;
    CHECK(hex_to_bits(bits_to_hex(x), len) == x);
    CHECK(unpack_bits(pack_bits(x), len) == x);
  }
}
