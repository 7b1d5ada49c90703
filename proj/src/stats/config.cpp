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

#include "finicode/config.hpp"

#include <set>
#include <stdexcept>

namespace finicode {

json to_json_value(const ExperimentConfig& c) {
  return {{"schema_version", kConfigSchemaVersion},
          {"code", c.code},
          {"n", c.n},
          {"max_n", c.max_n},
          {"depth", c.depth},
          {"max_level", c.max_level},
          {"trials", c.trials},
          {"half_width", c.half_width},
          {"initial_half_width", c.initial_half_width},
          {"seed", c.seed},
          {"direction", c.direction},
          {"thresholds", c.thresholds},
          {"thetas", c.thetas},
          {"fit_range", {c.fit_lo, c.fit_hi}},
          {"max_censoring", c.max_censoring},
          {"batches", c.batches},
          {"n_list", c.n_list},
          {"walk_trials", c.walk_trials},
          {"blocks", c.blocks},
          {"matrix", c.matrix},
          {"output", c.output},
          {"format", c.format}};
}

ExperimentConfig config_from_json(const json& j, ExperimentConfig c) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  if (j.value("schema_version", kConfigSchemaVersion) != kConfigSchemaVersion)
    throw std::invalid_argument("unsupported config schema_version");
  static const std::set<std::string> known = {
      "schema_version", "code",       "n",        "max_n",       "depth",  "max_level", "trials",
      "half_width",     "initial_half_width",    "seed",        "direction", "thresholds", "thetas",
      "fit_range",      "max_censoring", "batches", "n_list",   "walk_trials", "blocks", "matrix",
      "output",         "format"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw std::invalid_argument("unknown config key '" + k + "'");

  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  try {
    get("code", c.code);
    get("n", c.n);
    get("max_n", c.max_n);
    get("depth", c.depth);
    get("max_level", c.max_level);
    get("trials", c.trials);
    get("half_width", c.half_width);
    get("initial_half_width", c.initial_half_width);
    get("seed", c.seed);
    get("direction", c.direction);
    get("thresholds", c.thresholds);
    get("thetas", c.thetas);
    if (j.contains("fit_range")) {
      auto r = j.at("fit_range").get<std::vector<double>>();
      if (r.size() != 2) throw std::invalid_argument("fit_range needs two numbers");
      c.fit_lo = r[0];
      c.fit_hi = r[1];
    }
    get("max_censoring", c.max_censoring);
    get("batches", c.batches);
    get("n_list", c.n_list);
    get("walk_trials", c.walk_trials);
    get("blocks", c.blocks);
    get("matrix", c.matrix);
    get("output", c.output);
    get("format", c.format);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  validate(c);
  return c;
}

void validate(const ExperimentConfig& c) {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  need(c.code == "meshalkin" || c.code == "phi", "code must be meshalkin or phi");
  need(c.max_n >= 1, "max_n must be positive");
  need(c.n >= 1 && c.n <= c.max_n, "n must be in [1, max_n]");
  need(c.depth >= 1, "depth must be positive");
  need(c.max_level >= 1, "max_level must be positive");
  need(c.half_width >= 1 && c.initial_half_width >= 1, "half widths must be positive");
  need(c.direction == "encode" || c.direction == "decode", "direction must be encode or decode");
  need(c.fit_lo >= 1 && c.fit_hi > c.fit_lo, "fit_range must satisfy 1 <= lo < hi");
  need(c.max_censoring >= 0 && c.max_censoring <= 1, "max_censoring must be in [0, 1]");
  need(c.batches >= 2, "batches must be at least 2");
  need(c.format == "json" || c.format == "csv", "format must be json or csv");
  for (auto n : c.n_list) need(n >= 1, "n_list entries must be positive");
  for (auto t : c.thresholds) need(t >= 1, "thresholds must be positive");
  for (auto t : c.thetas) need(t > 0, "thetas must be positive");
}

}  // namespace finicode
