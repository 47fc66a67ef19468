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

#ifndef SCET_ERROR_H_
#define SCET_ERROR_H_

#include <stdexcept>
#include <string>

namespace scet {

enum class ErrorCode {
  kDimensionMismatch,
  kModulusMismatch,
  kInvalidArgument,
  // Wire format.
  kTruncated,
  kBadMagic,
  kBadKind,
  kParamMismatch,
  kIo,
  // Trapdoor machinery.
  kNonInvertibleTag,
  kDecodingFailure,
  kNotPositiveDefinite,
  kInvalidParams,
  kInternal,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scet

#endif  // SCET_ERROR_H_
