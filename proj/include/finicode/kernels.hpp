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

#ifndef FINICODE_KERNELS_HPP
#define FINICODE_KERNELS_HPP

#include <vector>

#include "finicode/coder.hpp"
#include "finicode/tails.hpp"

namespace finicode {

/// Worker threads for the parallel kernels: FINICODE_THREADS if set and
/// positive, else the OpenMP default.
int worker_threads();

/// One tail trial: sample around 0 with stream = trial, double the window
/// from initial_half_width until position 0 is determined or half_width is
/// reached.
TrialOutcome run_tail_trial(const CodeSpec& code, const TailConfig& cfg, std::uint64_t trial);

/// Reference loop over all trials.
std::vector<TrialOutcome> tail_trials_serial(const CodeSpec& code, const TailConfig& cfg);

/// Same results as tail_trials_serial, computed with OpenMP.
std::vector<TrialOutcome> tail_trials_parallel(const CodeSpec& code, const TailConfig& cfg,
                                               int threads = 0);

/// tail_trials_parallel followed by aggregate_tail.
TailReport tail_experiment(const CodeSpec& code, const TailConfig& cfg, int threads = 0);

}  // namespace finicode

#endif  // FINICODE_KERNELS_HPP
