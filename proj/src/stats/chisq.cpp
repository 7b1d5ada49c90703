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

#include "finicode/chisq.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <boost/math/distributions/chi_squared.hpp>

#include "finicode/kernels.hpp"
#include "finicode/sampling.hpp"

namespace finicode {

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed, std::span<const double> probs,
                               double alpha) {
  if (observed.size() != probs.size() || observed.empty()) throw std::invalid_argument("size mismatch");
  ChiSquareResult r;
  for (auto o : observed) r.samples += o;
  const double N = static_cast<double>(r.samples);
  double pooled_o = 0, pooled_e = 0;
  int cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    double e = N * probs[i];
    double o = static_cast<double>(observed[i]);
    if (e < 5) {
      pooled_o += o;
      pooled_e += e;
      ++r.pooled_cells;
      continue;
    }
    r.statistic += (o - e) * (o - e) / e;
    ++cells;
  }
  if (r.pooled_cells > 0 && pooled_e > 0) {
    r.statistic += (pooled_o - pooled_e) * (pooled_o - pooled_e) / pooled_e;
    ++cells;
  }
  r.df = cells - 1;
  if (r.df < 1) throw std::invalid_argument("too few cells for a chi-square test");
  boost::math::chi_squared dist(r.df);
  r.critical = boost::math::quantile(boost::math::complement(dist, alpha));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  r.pass = r.statistic <= r.critical;
  return r;
}

namespace {

struct Counts {
  std::vector<std::uint64_t> uni, bi;
  std::uint64_t excluded = 0;
};

}  // namespace

MeasureTestReport measure_preservation_test(const CodeSpec& code, const MeasureTestConfig& cfg, int threads) {
  const ProbabilityVector& q = code.output();
  const std::size_t k = q.size();
  std::unordered_map<int, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[q.symbol(i)] = i;
  auto qp = q.probs_as_double();

  const std::int64_t R = cfg.region_half_width;
  // A rough count of determined positions per window; more windows are
  // added below if it falls short.
  std::uint64_t windows = std::max<std::uint64_t>(1, (cfg.min_samples + 2 * R) / (2 * R + 1));
  DyadicSampler sampler(code.input());

  MeasureTestReport rep;
  std::vector<std::uint64_t> uni(k, 0), bi(k * k, 0);
  std::uint64_t done = 0, total = 0;
  const int nt = threads > 0 ? threads : worker_threads();
  while (total < cfg.min_samples) {
    std::vector<Counts> per(windows);
    const auto W = static_cast<std::int64_t>(windows);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (std::int64_t wi = 0; wi < W; ++wi) {
      Counts& c = per[static_cast<std::size_t>(wi)];
      c.uni.assign(k, 0);
      c.bi.assign(k * k, 0);
      const std::uint64_t stream = done + static_cast<std::uint64_t>(wi);
      std::int64_t margin = R;
      CodedWindow y;
      for (int d = 0;; ++d, margin *= 2) {
        y = code.encode(sample_range(sampler, -R - margin, R + margin, cfg.seed, stream));
        bool all = true;
        for (std::int64_t i = -R; i <= R && all; ++i) all = y.status_at(i).determined;
        if (all || d >= cfg.max_doublings) break;
      }
      auto sym = [&](std::int64_t i) -> std::ptrdiff_t {
        if (!y.status_at(i).determined) return -1;
        return static_cast<std::ptrdiff_t>(index.at(y.output.at(i)));
      };
      for (std::int64_t i = -R; i <= R; ++i) {
        auto a = sym(i);
        if (a < 0)
          ++c.excluded;
        else
          ++c.uni[static_cast<std::size_t>(a)];
      }
      for (std::int64_t i = -R; i + 1 <= R; i += 2) {
        auto a = sym(i), b = sym(i + 1);
        if (a >= 0 && b >= 0) ++c.bi[static_cast<std::size_t>(a) * k + static_cast<std::size_t>(b)];
      }
    }
    for (const auto& c : per) {
      for (std::size_t i = 0; i < k; ++i) {
        uni[i] += c.uni[i];
        total += c.uni[i];
      }
      for (std::size_t i = 0; i < k * k; ++i) bi[i] += c.bi[i];
      rep.excluded_positions += c.excluded;
    }
    done += windows;
    windows = 1;
  }
  rep.windows = done;

  std::vector<double> bp(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) bp[a * k + b] = qp[a] * qp[b];
  rep.unigram = chi_square_gof(uni, qp, cfg.alpha);
  rep.bigram = chi_square_gof(bi, bp, cfg.alpha);
  return rep;
}

}  // namespace finicode
