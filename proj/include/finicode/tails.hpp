// Copyright 2026 The finicode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FINICODE_TAILS_HPP
#define FINICODE_TAILS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "finicode/coder.hpp"
#include "finicode/probability.hpp"

namespace finicode {

enum class CodeDirection { Encode, Decode };

struct TailConfig {
  std::uint64_t trials = 100000;
  std::int64_t half_width = 16384;        // largest window tried
  std::int64_t initial_half_width = 32;   // doubled until position 0 resolves
  std::uint64_t seed = 1;
  CodeDirection direction = CodeDirection::Encode;
  std::vector<std::int64_t> thresholds;   // empty: log-spaced default grid
  std::vector<double> thetas = {0.25, 0.5, 0.75};
  double fit_lo = 1e2;
  double fit_hi = 1e4;
  int fit_points_per_decade = 10;
  double max_censoring = 0.01;
  int batches = 10;
};

/// Radius certificate at position 0 of one trial. A censored trial only
/// tells us the radius exceeds `radius` (the largest half-width tried).
struct TrialOutcome {
  std::int64_t radius = 0;
  bool censored = false;
  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

struct TailPoint {
  std::int64_t n = 0;
  double survival_lo = 0;  // P(N > n), censored trials counted as not exceeding
  double survival_hi = 0;  // censored trials counted as exceeding
  double censoring = 0;    // fraction of trials whose N > n is undecided
  double truncated = 0;    // E(N ^ n), censored radius taken at the censoring point
  double truncated_se = 0;
  std::uint64_t samples = 0;
};

struct ThetaMoment {
  double theta = 0;
  double mean = 0;  // lower bound on E(N^theta)
  double se = 0;
};

struct ExponentFit {
  bool ok = false;
  double slope = 0;
  double ci_lo = 0;
  double ci_hi = 0;
  int points = 0;
  double range_lo = 0;
  double range_hi = 0;
};

struct TailReport {
  std::uint64_t trials = 0;
  std::uint64_t censored = 0;
  std::int64_t half_width = 0;
  std::vector<TailPoint> points;
  std::vector<ThetaMoment> theta_moments;
  ExponentFit fit;
  /// sum_{k<n} #(N > k) == sum min(N, n) at every threshold, as integers.
  bool truncation_identity = false;
};

/// Log-spaced integer thresholds between lo and hi inclusive.
std::vector<std::int64_t> log_grid(double lo, double hi, int per_decade);

/// Summarises trial outcomes. Deterministic given the outcomes and config.
TailReport aggregate_tail(std::span<const TrialOutcome> outcomes, const TailConfig& cfg);

/// Ordinary least squares slope of y on x.
double ols_slope(std::span<const double> x, std::span<const double> y);

struct CurvePoint {
  std::int64_t n = 0;
  double value = 0;  // E(N ^ n) / sqrt(n)
  double se = 0;
  bool below_constant = false;  // value + 3 se < constant
};

/// E(N ^ n)/sqrt(n) at each requested n (all must be report thresholds).
/// Throws InsufficientCoverage when censoring at some n exceeds max_censoring.
std::vector<CurvePoint> truncated_moment_curve(const TailReport& report, std::span<const std::int64_t> ns,
                                               double constant, double max_censoring = 0.01);

/// |sigma_q - sigma_p| / (2 lambda_q sqrt(2 pi)), bits.
double theorem1_constant(const ProbabilityVector& p, const ProbabilityVector& q);

}  // namespace finicode

#endif  // FINICODE_TAILS_HPP
