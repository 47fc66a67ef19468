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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "scet/params.h"

using namespace scet;

TEST_CASE("numeric policy constants") {
  const double floor = std::sqrt(std::log(2.0 * (1.0 + std::ldexp(1.0, 30))) / std::numbers::pi);
  CHECK(smoothing_floor() == doctest::Approx(floor));
  CHECK(smoothing_floor() == doctest::Approx(2.615).epsilon(1e-3));
  CHECK(omega_sqrt_log(100) == doctest::Approx(std::sqrt(2 * std::log(100.0))));
  CHECK(rounding_base() == doctest::Approx(4 * floor));
  CHECK(gadget_width() == doctest::Approx(std::sqrt(5.0) * floor));
  CHECK(ceil_log2(12289) == 14);
  CHECK(ceil_log2(1024) == 10);
  CHECK(ceil_log2(1025) == 11);
  CHECK(is_prime(12289));
  CHECK(is_prime(16777213));
  CHECK(is_prime(1048573));
  CHECK_FALSE(is_prime(12288));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("profiles") {
  ParamSet toy = toy_profile();
  CHECK(toy.n == 4);
  CHECK(toy.q == 12289);
  CHECK(toy.mbar == 56);
  CHECK(toy.ell == 32);
  CHECK(toy.alpha_q() == doctest::Approx(8));
  CHECK(toy.m() == 112);
  CHECK(toy.nk() == 56);

  ConstraintReport rt = check_constraints(toy);
  CHECK(rt.functional_ok());
  CHECK_FALSE(rt.all_ok());
  for (const auto& r : rt.results) {
    if (r.kind == ConstraintKind::kFunctional) {
      CHECK(r.status == ConstraintStatus::kPass);
    } else {
      CHECK(r.status != ConstraintStatus::kFail);
    }
  }
  REQUIRE(rt.find("sis-hardness") != nullptr);
  CHECK(rt.find("sis-hardness")->status == ConstraintStatus::kInsecureToy);

  ConstraintReport rd = check_constraints(demo_profile());
  CHECK(rd.all_ok());
}

TEST_CASE("each constraint trips when its inequality is broken") {
  ParamSet weak = demo_profile();
  weak.alpha = 1.9 * std::sqrt(static_cast<double>(weak.n)) / static_cast<double>(weak.q);
  CHECK(check_constraints(weak).failing_ids() == std::vector<std::string>{"lwe-hardness"});

  ParamSet narrow = toy_profile();
  narrow.sigma2 = 40;
  auto ids = check_constraints(narrow).failing_ids();
  CHECK(std::find(ids.begin(), ids.end(), "sampled-sigma2") != ids.end());
  CHECK_FALSE(check_constraints(narrow).functional_ok());

  ParamSet composite = toy_profile();
  composite.q = 12288;
  ids = check_constraints(composite).failing_ids();
  CHECK(std::find(ids.begin(), ids.end(), "modulus-prime") != ids.end());

  ParamSet noisy = toy_profile();
  noisy.alpha = 400.0 / noisy.q;
  ids = check_constraints(noisy).failing_ids();
  CHECK(std::find(ids.begin(), ids.end(), "message-decoding") != ids.end());

  ParamSet budget = toy_profile();
  budget.query_budget = budget.q;
  ids = check_constraints(budget).failing_ids();
  CHECK(std::find(ids.begin(), ids.end(), "abort-budget") != ids.end());
}

TEST_CASE("reports render and parameter sets survive json") {
  ConstraintReport r = check_constraints(toy_profile());
  CHECK(r.to_text().find("sis-hardness") != std::string::npos);
  nlohmann::json j = r.to_json();
  CHECK(j["functional_ok"] == true);
  CHECK(j["constraints"].size() == r.results.size());
  CHECK(params_from_json(to_json(toy_profile())) == toy_profile());
  CHECK(params_from_json(to_json(demo_profile())) == demo_profile());
  CHECK_THROWS(params_from_json(nlohmann::json{{"n", 4}}));
}
