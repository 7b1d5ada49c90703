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

#include "finicode/tails.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/students_t.hpp>

#include "finicode/errors.hpp"
#include "finicode/info.hpp"

namespace finicode {

std::vector<std::int64_t> log_grid(double lo, double hi, int per_decade) {
  if (lo < 1 || hi < lo || per_decade < 1) throw std::invalid_argument("bad grid");
  std::vector<std::int64_t> out;
  const double step = 1.0 / per_decade;
  for (double e = std::log10(lo); e <= std::log10(hi) + 1e-12; e += step) {
    auto v = static_cast<std::int64_t>(std::llround(std::pow(10.0, e)));
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  return out;
}

double ols_slope(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

namespace {

struct Fit {
  double slope = 0;
  int points = 0;
};

// Survival at each threshold from a subset of outcomes; censored trials whose
// bound is below n make the point unusable.
Fit fit_exponent(std::span<const TrialOutcome> o, std::span<const std::int64_t> grid, double max_censoring) {
  std::vector<double> x, y;
  for (auto n : grid) {
    std::uint64_t above = 0, unknown = 0;
    for (const auto& t : o) {
      if (t.censored && t.radius < n)
        ++unknown;
      else if (t.radius > n || t.censored)
        ++above;
    }
    double cens = static_cast<double>(unknown) / static_cast<double>(o.size());
    if (cens >= max_censoring || above == 0) continue;
    x.push_back(std::log(static_cast<double>(n)));
    y.push_back(-std::log(static_cast<double>(above) / static_cast<double>(o.size())));
  }
  Fit f;
  f.points = static_cast<int>(x.size());
  if (f.points >= 2) f.slope = ols_slope(x, y);
  return f;
}

}  // namespace

TailReport aggregate_tail(std::span<const TrialOutcome> outcomes, const TailConfig& cfg) {
  if (outcomes.empty()) throw std::invalid_argument("no trials");
  TailReport rep;
  rep.trials = outcomes.size();
  rep.half_width = cfg.half_width;
  const double T = static_cast<double>(outcomes.size());

  std::vector<std::int64_t> thresholds = cfg.thresholds;
  if (thresholds.empty()) {
    thresholds = log_grid(1, static_cast<double>(cfg.half_width), cfg.fit_points_per_decade);
    auto fg = log_grid(cfg.fit_lo, cfg.fit_hi, cfg.fit_points_per_decade);
    thresholds.insert(thresholds.end(), fg.begin(), fg.end());
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  std::vector<std::int64_t> radii;
  for (const auto& o : outcomes) {
    radii.push_back(o.radius);
    if (o.censored) ++rep.censored;
  }
  std::vector<std::int64_t> sorted = radii;
  std::sort(sorted.begin(), sorted.end());

  // Running sum over k of #(radius > k), to check against sum of min(radius, n).
  std::int64_t k = 0;
  std::size_t idx = 0;
  unsigned __int128 tail_sum = 0;
  rep.truncation_identity = true;

  for (auto n : thresholds) {
    TailPoint pt;
    pt.n = n;
    pt.samples = outcomes.size();
    std::uint64_t above = 0, unknown = 0;
    double s = 0, s2 = 0;
    unsigned __int128 direct = 0;
    for (const auto& o : outcomes) {
      if (o.censored && o.radius < n)
        ++unknown;
      else if (o.radius > n || o.censored)
        ++above;
      double m = static_cast<double>(std::min(o.radius, n));
      s += m;
      s2 += m * m;
      direct += static_cast<std::uint64_t>(std::min(o.radius, n));
    }
    for (; k < n; ++k) {
      while (idx < sorted.size() && sorted[idx] <= k) ++idx;
      tail_sum += sorted.size() - idx;
    }
    if (direct != tail_sum) rep.truncation_identity = false;
    pt.survival_lo = static_cast<double>(above) / T;
    pt.survival_hi = static_cast<double>(above + unknown) / T;
    pt.censoring = static_cast<double>(unknown) / T;
    pt.truncated = s / T;
    double var = T > 1 ? std::max(0.0, (s2 - s * s / T) / (T - 1)) : 0.0;
    pt.truncated_se = std::sqrt(var / T);
    rep.points.push_back(pt);
  }

  for (double theta : cfg.thetas) {
    double s = 0, s2 = 0;
    for (auto r : radii) {
      double v = std::pow(static_cast<double>(r), theta);
      s += v;
      s2 += v * v;
    }
    double var = T > 1 ? std::max(0.0, (s2 - s * s / T) / (T - 1)) : 0.0;
    rep.theta_moments.push_back({theta, s / T, std::sqrt(var / T)});
  }

  auto grid = log_grid(cfg.fit_lo, cfg.fit_hi, cfg.fit_points_per_decade);
  Fit all = fit_exponent(outcomes, grid, cfg.max_censoring);
  rep.fit.range_lo = cfg.fit_lo;
  rep.fit.range_hi = cfg.fit_hi;
  rep.fit.points = all.points;
  rep.fit.slope = all.slope;
  rep.fit.ok = all.points >= 3;
  if (rep.fit.ok && cfg.batches >= 2 && outcomes.size() >= static_cast<std::size_t>(cfg.batches)) {
    std::vector<double> slopes;
    const std::size_t B = static_cast<std::size_t>(cfg.batches);
    for (std::size_t b = 0; b < B; ++b) {
      std::size_t lo = outcomes.size() * b / B, hi = outcomes.size() * (b + 1) / B;
      Fit f = fit_exponent(outcomes.subspan(lo, hi - lo), grid, cfg.max_censoring);
      if (f.points >= 2) slopes.push_back(f.slope);
    }
    if (slopes.size() >= 2) {
      double m = std::accumulate(slopes.begin(), slopes.end(), 0.0) / static_cast<double>(slopes.size());
      double v = 0;
      for (double x : slopes) v += (x - m) * (x - m);
      v /= static_cast<double>(slopes.size() - 1);
      boost::math::students_t dist(static_cast<double>(slopes.size() - 1));
      double half = boost::math::quantile(boost::math::complement(dist, 0.025)) *
                    std::sqrt(v / static_cast<double>(slopes.size()));
      rep.fit.ci_lo = rep.fit.slope - half;
      rep.fit.ci_hi = rep.fit.slope + half;
    } else {
      rep.fit.ci_lo = rep.fit.ci_hi = rep.fit.slope;
    }
  }
  return rep;
}

std::vector<CurvePoint> truncated_moment_curve(const TailReport& report, std::span<const std::int64_t> ns,
                                               double constant, double max_censoring) {
  std::vector<CurvePoint> out;
  for (auto n : ns) {
    auto it = std::find_if(report.points.begin(), report.points.end(),
                           [n](const TailPoint& p) { return p.n == n; });
    if (it == report.points.end())
      throw std::invalid_argument("threshold " + std::to_string(n) + " not in report");
    if (it->censoring > max_censoring)
      throw InsufficientCoverage("censoring " + std::to_string(it->censoring) + " at n = " + std::to_string(n));
    CurvePoint c;
    c.n = n;
    double rt = std::sqrt(static_cast<double>(n));
    c.value = it->truncated / rt;
    c.se = it->truncated_se / rt;
    c.below_constant = c.value + 3 * c.se < constant;
    out.push_back(c);
  }
  return out;
}

double theorem1_constant(const ProbabilityVector& p, const ProbabilityVector& q) {
  double sp = std::sqrt(informational_variance(p).to_double());
  double sq = std::sqrt(informational_variance(q).to_double());
  double lambda = static_cast<double>(max_surprisal(q));
  return std::abs(sq - sp) / (2 * lambda * std::sqrt(2 * M_PI));
}

}  // namespace finicode
