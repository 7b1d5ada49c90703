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

#include "finicode/walk.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "finicode/errors.hpp"
#include "finicode/gaps.hpp"
#include "finicode/info.hpp"
#include "finicode/kernels.hpp"
#include "finicode/sampling.hpp"

namespace finicode {

namespace {

// Surprisal in bits by symbol id.
std::vector<std::int64_t> bits_by_id(const ProbabilityVector& pv) {
  auto bits = pv.surprisal_bits();
  int max_id = *std::max_element(pv.symbols().begin(), pv.symbols().end());
  std::vector<std::int64_t> out(static_cast<std::size_t>(max_id) + 1, -1);
  for (std::size_t i = 0; i < pv.size(); ++i) out[static_cast<std::size_t>(pv.symbol(i))] = bits[i];
  return out;
}

// Surprisal shared by every non-marker output symbol, if there is one. A
// censored non-marker position then still has a known Y_i.
std::optional<std::int64_t> common_nonmarker_bits(const ProbabilityVector& q) {
  auto bits = q.surprisal_bits();
  std::optional<std::int64_t> common;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.symbol(i) == kMarker) continue;
    if (common && *common != bits[i]) return std::nullopt;
    common = bits[i];
  }
  return common;
}

struct TrialResult {
  bool used = false;
  double excess = 0;
  double sum_x = 0;
  double sum_y = 0;
};

struct Ctx {
  const CodeSpec& code;
  DyadicSampler sampler;
  std::vector<std::int64_t> p_bits, q_bits;
  double hp, hq;
  std::optional<std::int64_t> common;
};

TrialResult walk_trial(const Ctx& c, const WalkConfig& cfg, std::int64_t n, std::uint64_t stream) {
  const std::int64_t cap = std::max(cfg.initial_margin, cfg.max_margin_factor * n);
  for (std::int64_t m = cfg.initial_margin;; m = std::min(2 * m, cap)) {
    Window w = sample_range(c.sampler, -m, n - 1 + m, cfg.seed, stream);
    CodedWindow y = c.code.encode(w);
    TrialResult r;
    bool known = true;
    for (std::int64_t i = 0; i < n && known; ++i) {
      int xi = w.at(i);
      r.sum_x += static_cast<double>(c.p_bits[static_cast<std::size_t>(xi)]) - c.hp;
      std::int64_t yb;
      if (y.status_at(i).determined)
        yb = c.q_bits[static_cast<std::size_t>(y.output.at(i))];
      else if (xi != kMarker && c.common)
        yb = *c.common;
      else {
        known = false;
        break;
      }
      r.sum_y += static_cast<double>(yb) - c.hq;
    }
    if (known) {
      r.used = true;
      r.excess = std::max(0.0, r.sum_y - r.sum_x);
      return r;
    }
    if (m >= cap) return {};
  }
}

}  // namespace

WalkReport info_walk_experiment(const CodeSpec& code, const WalkConfig& cfg, int threads) {
  if (cfg.n_list.empty()) throw std::invalid_argument("n_list is empty");
  if (cfg.trials < 2) throw std::invalid_argument("need at least two trials");
  const ProbabilityVector& p = code.input();
  const ProbabilityVector& q = code.output();
  Ctx ctx{code, DyadicSampler(p), bits_by_id(p), bits_by_id(q), entropy(p).to_double(),
          entropy(q).to_double(), common_nonmarker_bits(q)};

  WalkReport rep;
  rep.lambda_q = static_cast<double>(max_surprisal(q));
  rep.lemma1_bound = std::abs(std::sqrt(informational_variance(q).to_double()) -
                              std::sqrt(informational_variance(p).to_double())) /
                     std::sqrt(2 * M_PI);

  TailConfig tc = cfg.tail;
  tc.thresholds = cfg.n_list;
  tc.half_width = std::max(tc.half_width, *std::max_element(cfg.n_list.begin(), cfg.n_list.end()));
  rep.tail = tail_experiment(code, tc, threads);

  const int nt = threads > 0 ? threads : worker_threads();
  for (std::size_t ni = 0; ni < cfg.n_list.size(); ++ni) {
    const std::int64_t n = cfg.n_list[ni];
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<TrialResult> res(cfg.trials);
    const auto T = static_cast<std::int64_t>(cfg.trials);
    // Streams above 2^62 keep walk trials apart from tail trials.
    const std::uint64_t base = (std::uint64_t{1} << 62) | (static_cast<std::uint64_t>(ni) << 40);
#pragma omp parallel for schedule(dynamic, 8) num_threads(nt)
    for (std::int64_t t = 0; t < T; ++t)
      res[static_cast<std::size_t>(t)] = walk_trial(ctx, cfg, n, base | static_cast<std::uint64_t>(t));

    WalkPoint pt;
    pt.n = n;
    double s = 0, s2 = 0, sx = 0, sy = 0;
    for (const auto& r : res) {
      if (!r.used) {
        ++pt.excluded;
        continue;
      }
      ++pt.used;
      s += r.excess;
      s2 += r.excess * r.excess;
      sx += r.sum_x;
      sy += r.sum_y;
    }
    double frac = static_cast<double>(pt.excluded) / static_cast<double>(cfg.trials);
    if (frac > cfg.max_excluded || pt.used < 2)
      throw InsufficientCoverage("walk at n = " + std::to_string(n) + ": " + std::to_string(pt.excluded) +
                                 " of " + std::to_string(cfg.trials) + " trials unresolved");
    const double U = static_cast<double>(pt.used);
    pt.excess = s / U;
    pt.excess_se = std::sqrt(std::max(0.0, (s2 - s * s / U) / (U - 1)) / U);
    const double rt = std::sqrt(static_cast<double>(n));
    pt.scaled = pt.excess / rt;
    pt.scaled_se = pt.excess_se / rt;
    pt.mean_x = sx / (U * static_cast<double>(n));
    pt.mean_y = sy / (U * static_cast<double>(n));

    auto tp = std::find_if(rep.tail.points.begin(), rep.tail.points.end(),
                           [n](const TailPoint& x) { return x.n == n; });
    pt.rhs = 2 * rep.lambda_q * tp->truncated;
    pt.rhs_se = 2 * rep.lambda_q * tp->truncated_se;
    pt.lemma2_ok = pt.excess <= pt.rhs + 3 * std::hypot(pt.excess_se, pt.rhs_se);
    pt.lemma1_ok = pt.scaled + 3 * pt.scaled_se >= rep.lemma1_bound;
    rep.points.push_back(pt);
  }
  return rep;
}

}  // namespace finicode
