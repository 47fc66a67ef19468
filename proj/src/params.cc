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

#include "scet/params.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "scet/error.h"
#include "scet/zq.h"

namespace scet {

double smoothing_floor() {
  static const double floor =
      std::sqrt(std::log(2.0 * (1.0 + 1.0 / kSmoothingEpsilon)) / std::numbers::pi);
  return floor;
}

double omega_sqrt_log(double x) { return std::sqrt(2.0 * std::log(std::max(x, 2.0))); }

double omega_sqrt_n_log_n(double n) { return std::sqrt(n) * omega_sqrt_log(n); }

double rounding_base() { return 4.0 * smoothing_floor(); }

double gadget_width() { return std::sqrt(5.0) * smoothing_floor(); }

double s1_bound(double sigma, std::size_t rows, std::size_t cols) {
  return sigma / std::sqrt(2.0 * std::numbers::pi) *
         (std::sqrt(static_cast<double>(rows)) + std::sqrt(static_cast<double>(cols)));
}

std::size_t ceil_log2(std::uint64_t q) {
  std::size_t k = 0;
  while (k < 64 && (std::uint64_t{1} << k) < q) ++k;
  return k;
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (q % p == 0) return q == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = q - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, q);
    if (x == 1 || x == q - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, q);
      if (x == q - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

double ParamSet::sis_beta() const {
  const double root_mk = std::sqrt(static_cast<double>(m() + nk()));
  return 2.0 * sigma1 * sigma2 * std::sqrt(static_cast<double>(n) + 1.0) /
         std::sqrt(2.0 * std::numbers::pi) *
         (std::sqrt(static_cast<double>(mbar)) + std::sqrt(static_cast<double>(nk()))) *
         root_mk;
}

ParamSet toy_profile() {
  ParamSet ps;
  ps.name = "toy";
  ps.n = 4;
  ps.q = 12289;
  ps.mbar = 56;
  ps.ell = 32;
  ps.alpha = 8.0 / 12289.0;
  ps.sigma1 = 3.0;
  ps.sigma2 = 150.0;
  ps.num_receivers = 2;
  ps.num_senders = 2;
  ps.query_budget = 10;
  return ps;
}

ParamSet demo_profile() {
  ParamSet ps;
  ps.name = "demo";
  ps.n = 8;
  ps.q = 16777213;  // largest prime below 2^24
  ps.mbar = 192;
  ps.ell = 64;
  ps.alpha = 8.0 / 16777213.0;
  ps.sigma1 = 3.0;
  ps.sigma2 = 240.0;
  ps.num_receivers = 4;
  ps.num_senders = 4;
  ps.query_budget = 100;
  return ps;
}

const char* status_name(ConstraintStatus s) {
  switch (s) {
    case ConstraintStatus::kPass: return "pass";
    case ConstraintStatus::kFail: return "fail";
    case ConstraintStatus::kInsecureToy: return "insecure-toy";
  }
  return "?";
}

namespace {

class ReportBuilder {
 public:
  // lhs >= rhs (or lhs > rhs when strict).
  void at_least(std::string id, std::string formula, ConstraintKind kind, double lhs,
                double rhs, bool strict = false) {
    bool ok = strict ? lhs > rhs : lhs >= rhs;
    double margin = rhs != 0 ? (lhs - rhs) / std::abs(rhs) : (lhs - rhs);
    ConstraintStatus status = ok ? ConstraintStatus::kPass
                              : kind == ConstraintKind::kHardness
                                  ? ConstraintStatus::kInsecureToy
                                  : ConstraintStatus::kFail;
    results_.push_back({std::move(id), std::move(formula), kind, status, lhs, rhs, margin});
  }

  std::vector<ConstraintResult> take() { return std::move(results_); }

 private:
  std::vector<ConstraintResult> results_;
};

}  // namespace

ConstraintReport check_constraints(const ParamSet& ps) {
  using K = ConstraintKind;
  ReportBuilder b;
  const double n = static_cast<double>(ps.n);
  const double q = static_cast<double>(ps.q);
  const double floor = smoothing_floor();
  const double omega = omega_sqrt_log(n);

  // Structural checks are encoded as lhs in {0, 1} against 0.5.
  b.at_least("modulus-range", "2 <= q <= 2^62", K::kFunctional,
             ps.q >= 2 && ps.q <= kMaxModulus ? 1.0 : 0.0, 0.5);
  b.at_least("modulus-prime", "q prime (FRD field, abort-resistant family)",
             K::kFunctional, is_prime(ps.q) ? 1.0 : 0.0, 0.5);
  b.at_least("dimensions", "min(n, mbar, ell, N, M) >= 1", K::kFunctional,
             static_cast<double>(std::min({ps.n, ps.mbar, ps.ell, ps.num_receivers,
                                           ps.num_senders})),
             0.5);

  // s1 of the trapdoors, from the singular value bound.
  const double s1 = ps.trapdoor_s1_bound();
  const double s1_term = s1 * s1 + 1.0;
  const double inv_alpha = ps.alpha > 0 ? 1.0 / ps.alpha : 0.0;

  b.at_least("sigma1-omega", "sigma1 >= omega(sqrt(log n))", K::kFunctional,
             ps.sigma1, omega);
  b.at_least("sigma1-smoothing", "sigma1 >= eta_eps(Z)", K::kFunctional, ps.sigma1,
             floor);
  b.at_least("invert-alpha", "1/alpha >= 2 sqrt(5 (s1(R)^2 + 1)) omega(sqrt(log n))",
             K::kFunctional, inv_alpha, 2.0 * std::sqrt(5.0 * s1_term) * omega);
  b.at_least("invert-alpha-smoothing", "1/alpha >= 2 sqrt(5 (s1(R)^2 + 1)) eta_eps(Z)",
             K::kFunctional, inv_alpha, 2.0 * std::sqrt(5.0 * s1_term) * floor);
  b.at_least("sampled-sigma2", "sigma2 >= sqrt(7 (s1(T)^2 + 1)) omega(sqrt(log n))",
             K::kFunctional, ps.sigma2, std::sqrt(7.0 * s1_term) * omega);
  b.at_least("sampled-sigma2-smoothing", "sigma2 >= sqrt(7 (s1(T)^2 + 1)) eta_eps(Z)",
             K::kFunctional, ps.sigma2, std::sqrt(7.0 * s1_term) * floor);
  b.at_least("perturbation-pd",
             "sigma2^2 - base^2 > gadget_width^2 (s1(T)^2 + 1)", K::kFunctional,
             ps.sigma2 * ps.sigma2 - rounding_base() * rounding_base(),
             gadget_width() * gadget_width() * s1_term, /*strict=*/true);
  // Tail-cut message noise stays inside the bit-decoding window.
  b.at_least("message-decoding", "q/4 > 10 alpha q", K::kFunctional, q / 4.0,
             10.0 * ps.alpha_q(), /*strict=*/true);
  b.at_least("abort-budget", "q > Q >= 1", K::kFunctional,
             ps.query_budget >= 1 ? q : 0.0, static_cast<double>(ps.query_budget),
             /*strict=*/true);

  b.at_least("lwe-hardness", "alpha q >= 2 sqrt(n)", K::kHardness, ps.alpha_q(),
             2.0 * std::sqrt(n));
  const double beta = ps.sis_beta();
  const double sis_dim = static_cast<double>(2 * ps.mbar + 2 * ps.nk() + 1);
  b.at_least("sis-existence", "beta >= sqrt(2mbar+2nk+1) q^(n/(2mbar+2nk+1))",
             K::kHardness, beta, std::sqrt(sis_dim) * std::pow(q, n / sis_dim));
  b.at_least("sis-hardness", "q >= beta omega(sqrt(n log n))", K::kHardness, q,
             beta * omega_sqrt_n_log_n(n));

  return ConstraintReport{ps, b.take()};
}

bool ConstraintReport::functional_ok() const {
  return std::all_of(results.begin(), results.end(), [](const ConstraintResult& r) {
    return r.kind != ConstraintKind::kFunctional || r.passed();
  });
}

bool ConstraintReport::all_ok() const {
  return std::all_of(results.begin(), results.end(),
                     [](const ConstraintResult& r) { return r.passed(); });
}

const ConstraintResult& ConstraintReport::binding() const {
  return *std::min_element(results.begin(), results.end(),
                           [](const ConstraintResult& a, const ConstraintResult& b) {
                             return a.margin < b.margin;
                           });
}

std::vector<std::string> ConstraintReport::failing_ids() const {
  std::vector<std::string> ids;
  for (const auto& r : results)
    if (!r.passed()) ids.push_back(r.id);
  return ids;
}

const ConstraintResult* ConstraintReport::find(const std::string& id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

std::string ConstraintReport::to_text() const {
  std::ostringstream out;
  out << "parameter set '" << params.name << "': n=" << params.n << " q=" << params.q
      << " k=" << params.k() << " mbar=" << params.mbar << " m=" << params.m()
      << " ell=" << params.ell << " alpha*q=" << params.alpha_q()
      << " sigma1=" << params.sigma1 << " sigma2=" << params.sigma2 << "\n";
  out << "policy: eps=2^-30 eta_eps(Z)=" << smoothing_floor()
      << " omega(sqrt(log x))=sqrt(2 ln x) base=" << rounding_base()
      << " gadget_width=" << gadget_width() << "\n";
  char line[256];
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "  [%-12s] %-10s %-26s lhs=%-12.6g rhs=%-12.6g margin=%+.3g  (%s)\n",
                  status_name(r.status),
                  r.kind == ConstraintKind::kFunctional ? "functional" : "hardness",
                  r.id.c_str(), r.lhs, r.rhs, r.margin, r.formula.c_str());
    out << line;
  }
  out << "functional: " << (functional_ok() ? "ok" : "FAILED")
      << "  all: " << (all_ok() ? "ok" : "not all hold")
      << "  binding: " << binding().id << "\n";
  return out.str();
}

nlohmann::json to_json(const ParamSet& ps) {
  return {{"name", ps.name},          {"n", ps.n},
          {"q", ps.q},                {"k", ps.k()},
          {"mbar", ps.mbar},          {"m", ps.m()},
          {"ell", ps.ell},            {"alpha", ps.alpha},
          {"sigma1", ps.sigma1},      {"sigma2", ps.sigma2},
          {"N", ps.num_receivers},    {"M", ps.num_senders},
          {"Q", ps.query_budget}};
}

ParamSet params_from_json(const nlohmann::json& j) {
  try {
    ParamSet ps;
    ps.name = j.value("name", std::string("custom"));
    ps.n = j.at("n").get<std::size_t>();
    ps.q = j.at("q").get<std::uint64_t>();
    ps.mbar = j.at("mbar").get<std::size_t>();
    ps.ell = j.at("ell").get<std::size_t>();
    ps.alpha = j.at("alpha").get<double>();
    ps.sigma1 = j.at("sigma1").get<double>();
    ps.sigma2 = j.at("sigma2").get<double>();
    ps.num_receivers = j.value("N", std::size_t{1});
    ps.num_senders = j.value("M", std::size_t{1});
    ps.query_budget = j.value("Q", std::size_t{1});
    return ps;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("parameter file: ") + e.what());
  }
}

nlohmann::json ConstraintReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& r : results) {
    cs.push_back({{"id", r.id},
                  {"formula", r.formula},
                  {"kind", r.kind == ConstraintKind::kFunctional ? "functional" : "hardness"},
                  {"status", status_name(r.status)},
                  {"lhs", r.lhs},
                  {"rhs", r.rhs},
                  {"margin", r.margin}});
  }
  return {{"params", scet::to_json(params)},
          {"policy",
           {{"epsilon", kSmoothingEpsilon},
            {"smoothing_floor", smoothing_floor()},
            {"omega", "sqrt(2 ln x)"},
            {"rounding_base", rounding_base()},
            {"gadget_width", gadget_width()}}},
          {"constraints", cs},
          {"functional_ok", functional_ok()},
          {"all_ok", all_ok()},
          {"binding", binding().id}};
}

}  // namespace scet
