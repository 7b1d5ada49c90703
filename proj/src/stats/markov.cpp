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

#include "finicode/markov.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "finicode/errors.hpp"
#include "finicode/kernels.hpp"
#include "finicode/rng.hpp"
#include "finicode/sampling.hpp"

namespace finicode {

void validate(const MarkovChainSpec& mc) {
  const std::size_t n = mc.size();
  if (n == 0) throw std::invalid_argument("empty transition matrix");
  if (mc.regeneration_state >= n) throw std::invalid_argument("regeneration state out of range");
  for (const auto& row : mc.P) {
    if (row.size() != n) throw std::invalid_argument("transition matrix is not square");
    double s = 0;
    for (double x : row) {
      if (!(x >= 0 && x <= 1)) throw std::invalid_argument("transition probability outside [0, 1]");
      s += x;
    }
    if (std::abs(s - 1) > 1e-12) throw std::invalid_argument("row does not sum to 1");
  }
}

MarkovChainSpec identical_rows(std::span<const double> v, std::size_t regeneration_state) {
  MarkovChainSpec mc;
  mc.P.assign(v.size(), std::vector<double>(v.begin(), v.end()));
  mc.regeneration_state = regeneration_state;
  return mc;
}

MarkovChainSpec markov_from_json(const json& j) {
  MarkovChainSpec mc;
  mc.P = j.at("matrix").get<std::vector<std::vector<double>>>();
  mc.regeneration_state = j.value("regeneration_state", std::size_t{0});
  validate(mc);
  return mc;
}

json to_json_value(const MarkovChainSpec& mc) {
  return {{"matrix", mc.P}, {"regeneration_state", mc.regeneration_state}};
}

namespace {

bool reaches_all(const MarkovChainSpec& mc, bool forward) {
  const std::size_t n = mc.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      double w = forward ? mc.P[i][j] : mc.P[j][i];
      if (w > 0 && !seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

}  // namespace

std::vector<double> stationary_distribution(const MarkovChainSpec& mc) {
  validate(mc);
  if (!reaches_all(mc, true) || !reaches_all(mc, false)) throw Reducible("transition graph is not strongly connected");
  const auto n = static_cast<Eigen::Index>(mc.size());
  Eigen::MatrixXd A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      A(i, j) = mc.P[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] - (i == j ? 1.0 : 0.0);
  A.row(n - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(n - 1) = 1;
  Eigen::VectorXd pi = A.fullPivLu().solve(b);
  std::vector<double> out(mc.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(pi(i) > 0)) throw Reducible("stationary vector is not positive");
    out[static_cast<std::size_t>(i)] = pi(i);
  }
  return out;
}

double markov_entropy(const MarkovChainSpec& mc) {
  auto pi = stationary_distribution(mc);
  double h = 0;
  for (std::size_t i = 0; i < mc.size(); ++i)
    for (double x : mc.P[i])
      if (x > 0) h -= pi[i] * x * std::log2(x);
  return h;
}

namespace {

struct Block {
  double sum = 0;
  std::uint64_t length = 0;
};

struct Chain {
  std::vector<DiscreteSampler> rows;
  std::vector<std::vector<double>> info;  // -log2 P_ij - h
};

Chain prepare(const MarkovChainSpec& mc, double h) {
  Chain c;
  for (const auto& row : mc.P) {
    c.rows.emplace_back(row);
    std::vector<double> inf;
    for (double x : row) inf.push_back(x > 0 ? -std::log2(x) - h : 0.0);
    c.info.push_back(std::move(inf));
  }
  return c;
}

Block excursion(const Chain& c, std::size_t start, std::uint64_t seed, std::uint64_t b) {
  Block blk;
  std::size_t s = start;
  do {
    std::size_t next = c.rows[s](to_unit(random_u64(seed, b, static_cast<std::int64_t>(blk.length))));
    blk.sum += c.info[s][next];
    ++blk.length;
    s = next;
  } while (s != start);
  return blk;
}

Sigma2Estimate summarise(const std::vector<Block>& blocks, double h) {
  // Ratio estimator c^2/d with A = S^2, B = L.
  const double m = static_cast<double>(blocks.size());
  double sa = 0, sb = 0;
  for (const auto& b : blocks) {
    sa += b.sum * b.sum;
    sb += static_cast<double>(b.length);
  }
  Sigma2Estimate e;
  e.blocks = blocks.size();
  e.entropy = h;
  e.mean_block_square = sa / m;
  e.mean_block_length = sb / m;
  e.value = e.mean_block_square / e.mean_block_length;
  double v = 0;
  for (const auto& b : blocks) {
    double r = b.sum * b.sum - e.value * static_cast<double>(b.length);
    v += r * r;
  }
  v /= (m - 1);
  e.se = std::sqrt(v / m) / e.mean_block_length;
  return e;
}

}  // namespace

Sigma2Estimate markov_sigma2_serial(const MarkovChainSpec& mc, std::uint64_t blocks, std::uint64_t seed) {
  if (blocks < 2) throw std::invalid_argument("need at least two blocks");
  double h = markov_entropy(mc);
  Chain c = prepare(mc, h);
  std::vector<Block> out(blocks);
  for (std::uint64_t b = 0; b < blocks; ++b) out[b] = excursion(c, mc.regeneration_state, seed, b);
  return summarise(out, h);
}

Sigma2Estimate markov_sigma2(const MarkovChainSpec& mc, std::uint64_t blocks, std::uint64_t seed, int threads) {
  if (blocks < 2) throw std::invalid_argument("need at least two blocks");
  double h = markov_entropy(mc);
  Chain c = prepare(mc, h);
  std::vector<Block> out(blocks);
  const auto n = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : worker_threads())
  for (std::int64_t b = 0; b < n; ++b)
    out[static_cast<std::size_t>(b)] = excursion(c, mc.regeneration_state, seed, static_cast<std::uint64_t>(b));
  return summarise(out, h);
}

}  // namespace finicode
