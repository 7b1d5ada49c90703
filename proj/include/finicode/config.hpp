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

#ifndef FINICODE_CONFIG_HPP
#define FINICODE_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "finicode/serialize.hpp"

namespace finicode {

inline constexpr int kConfigSchemaVersion = 1;

/// Settings shared by the command-line experiments. Missing keys keep
/// their defaults when read; unknown keys are rejected.
struct ExperimentConfig {
  std::string code = "meshalkin";  // meshalkin | phi
  int n = 1;
  int max_n = 6;
  int depth = 3;
  int max_level = 30;
  std::uint64_t trials = 100000;
  std::int64_t half_width = 16384;
  std::int64_t initial_half_width = 32;
  std::uint64_t seed = 1;
  std::string direction = "encode";  // encode | decode
  std::vector<std::int64_t> thresholds;
  std::vector<double> thetas = {0.25, 0.5, 0.75};
  double fit_lo = 1e2;
  double fit_hi = 1e4;
  double max_censoring = 0.01;
  int batches = 10;
  std::vector<std::int64_t> n_list = {100, 1000};
  std::uint64_t walk_trials = 2000;
  std::uint64_t blocks = 100000;
  std::string matrix;  // path to a Markov chain JSON file
  std::string output;  // empty: stdout
  std::string format = "json";

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

json to_json_value(const ExperimentConfig& c);
/// Throws std::invalid_argument on a schema mismatch, unknown key or bad value.
ExperimentConfig config_from_json(const json& j, ExperimentConfig base = {});
/// Value checks shared by the file reader and the command line.
void validate(const ExperimentConfig& c);

}  // namespace finicode

#endif  // FINICODE_CONFIG_HPP
