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

#ifndef FINICODE_INFO_HPP
#define FINICODE_INFO_HPP

#include <span>

#include "finicode/dyadic.hpp"
#include "finicode/polynomial.hpp"
#include "finicode/probability.hpp"

// Information statistics of dyadic probability vectors. Logarithms are base 2
// throughout, so entropy is in bits and variance in bits squared. Every
// function throws NonDyadicProbability when some p_i is not a power of 1/2.
namespace finicode {

/// sum_i p_i k_i where p_i = 2^{-k_i}.
DyadicRational entropy(const ProbabilityVector& pv);

/// sum_i p_i (k_i - h)^2.
DyadicRational informational_variance(const ProbabilityVector& pv);

/// sum_i p_i (log2 p_i)^k, i.e. sum_i p_i (-k_i)^k.
DyadicRational log_moment(const ProbabilityVector& pv, unsigned k);

/// Coefficient at degree k is the total mass of symbols with probability 2^{-k}.
DyadicPolynomial generating_function(const ProbabilityVector& pv);

/// Largest surprisal max_j(-log2 q_j).
std::int64_t max_surprisal(const ProbabilityVector& pv);

// Floating-point counterparts for arbitrary (non-dyadic) vectors.
double entropy_bits(std::span<const double> probs);
double informational_variance_bits(std::span<const double> probs);

}  // namespace finicode

#endif  // FINICODE_INFO_HPP
