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

// Parameter sets, the numeric policy every sampler draws its widths from, and
// the constraint checker.

#ifndef SCET_PARAMS_H_
#define SCET_PARAMS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace scet {

// --- numeric policy ------------------------------------------------------

// epsilon in the smoothing bound eta_eps(Z) >= sqrt(ln(2(1 + 1/eps)) / pi).
inline constexpr double kSmoothingEpsilon = 0x1p-30;

// sqrt(ln(2(1 + 1/eps)) / pi) ~= 2.615 for eps = 2^-30.
double smoothing_floor();

// Concretization of omega(sqrt(log x)) as sqrt(2 ln x). Clamped at x >= 2.
double omega_sqrt_log(double x);

// omega(sqrt(n log n)) := sqrt(n) * omega(sqrt(log n)).
double omega_sqrt_n_log_n(double n);

// Randomized-rounding width used by the nonspherical sampler: 4 * floor.
double rounding_base();

// Width for sampling on cosets of the gadget lattice: sqrt(5) * floor, the
// Gram-Schmidt bound of its basis times the floor.
double gadget_width();

// Singular value bound sigma / sqrt(2 pi) * (sqrt(rows) + sqrt(cols)) for a
// rows x cols matrix with i.i.d. D_sigma entries.
double s1_bound(double sigma, std::size_t rows, std::size_t cols);

// ceil(log2 q).
std::size_t ceil_log2(std::uint64_t q);

bool is_prime(std::uint64_t q);

// --- parameter sets ------------------------------------------------------

struct ParamSet {
  std::string name;
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::size_t mbar = 0;
  std::size_t ell = 0;
  double alpha = 0;
  double sigma1 = 0;
  double sigma2 = 0;
  std::size_t num_receivers = 1;  // N
  std::size_t num_senders = 1;    // M
  std::size_t query_budget = 1;   // Q

  std::size_t k() const { return ceil_log2(q); }
  std::size_t nk() const { return n * k(); }
  std::size_t m() const { return mbar + nk(); }
  double alpha_q() const { return alpha * static_cast<double>(q); }
  // s1 bound for an mbar x nk trapdoor with width sigma1.
  double trapdoor_s1_bound() const { return s1_bound(sigma1, mbar, nk()); }
  // beta := 2 sigma1 sigma2 sqrt(n+1) / sqrt(2 pi) (sqrt(mbar) + sqrt(nk)) sqrt(m+nk).
  double sis_beta() const;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

// Smallest set where every functional constraint holds; insecure.
ParamSet toy_profile();
// Larger set satisfying every constraint numerically; no security claim.
ParamSet demo_profile();

enum class ConstraintKind { kFunctional, kHardness };

enum class ConstraintStatus {
  kPass,
  kFail,
  // Hardness constraint that does not hold. Reported, never enforced.
  kInsecureToy,
};

const char* status_name(ConstraintStatus s);

struct ConstraintResult {
  std::string id;
  std::string formula;
  ConstraintKind kind;
  ConstraintStatus status;
  double lhs;
  double rhs;
  // Relative slack (lhs - rhs) / |rhs| in the direction of the inequality;
  // negative when violated.
  double margin;

  bool passed() const { return status == ConstraintStatus::kPass; }
};

struct ConstraintReport {
  ParamSet params;
  std::vector<ConstraintResult> results;

  bool functional_ok() const;
  bool all_ok() const;
  // Constraint with the smallest margin among all entries.
  const ConstraintResult& binding() const;
  std::vector<std::string> failing_ids() const;
  const ConstraintResult* find(const std::string& id) const;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

ConstraintReport check_constraints(const ParamSet& ps);

nlohmann::json to_json(const ParamSet& ps);
// Inverse of to_json; derived fields (k, m) are ignored. Throws
// kInvalidArgument on missing or mistyped fields.
ParamSet params_from_json(const nlohmann::json& j);

}  // namespace scet

#endif  // SCET_PARAMS_H_
