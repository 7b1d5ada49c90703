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

// finicode: command-line driver for the coding laboratory.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "finicode/chisq.hpp"
#include "finicode/codec_io.hpp"
#include "finicode/coder.hpp"
#include "finicode/config.hpp"
#include "finicode/errors.hpp"
#include "finicode/info.hpp"
#include "finicode/kernels.hpp"
#include "finicode/sampling.hpp"
#include "reports.hpp"

namespace fc = finicode;
using fc::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIdentity = 3;
constexpr int kExitCoverage = 4;

// Matching levels are dumped one table per level; deeper requests are cut here.
constexpr int kMaxMatchingsDepth = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags override the config file, which overrides the defaults. Only flags
// that were actually given are applied.
class Options {
 public:
  template <class T>
  CLI::Option* bind(CLI::App* app, const std::string& name, T fc::ExperimentConfig::*field,
                    const std::string& help) {
    auto* opt = app->add_option(name, flags_.*field, help);
    setters_.emplace_back(app, opt, [field](fc::ExperimentConfig& c, const fc::ExperimentConfig& f) {
      c.*field = f.*field;
    });
    return opt;
  }

  void common(CLI::App* app) {
    app->add_option("--config", config_path_, "JSON experiment config")->check(CLI::ExistingFile);
    bind(app, "-o,--output", &fc::ExperimentConfig::output, "output file (default stdout)");
    bind(app, "--format", &fc::ExperimentConfig::format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_flag("--reproducible", reproducible, "omit the generated_at timestamp");
  }

  fc::ExperimentConfig resolve(const CLI::App* app) const {
    fc::ExperimentConfig c;
    if (!config_path_.empty()) {
      std::ifstream in(config_path_);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw std::invalid_argument(config_path_ + ": " + e.what());
      }
      c = fc::config_from_json(j);
    }
    for (const auto& [owner, opt, set] : setters_)
      if (owner == app && opt->count() > 0) set(c, flags_);
    fc::validate(c);
    return c;
  }

  bool reproducible = false;

 private:
  fc::ExperimentConfig flags_;
  std::string config_path_;
  std::vector<std::tuple<const CLI::App*, CLI::Option*,
                         std::function<void(fc::ExperimentConfig&, const fc::ExperimentConfig&)>>>
      setters_;
};

std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(const fc::ExperimentConfig& cfg, bool reproducible, const std::string& command, json result) {
  json doc = {{"command", command}, {"config", fc::to_json_value(cfg)}, {"result", std::move(result)}};
  if (!reproducible) doc["generated_at"] = utc_now();
  Sink sink(cfg.output);
  sink.out() << doc.dump(2) << '\n';
}

fc::CodeSpec code_of(const fc::ExperimentConfig& c) {
  return c.code == "phi" ? fc::CodeSpec::phi(c.n, c.max_n, c.max_level) : fc::CodeSpec::meshalkin();
}

fc::TailConfig tail_config(const fc::ExperimentConfig& c) {
  fc::TailConfig t;
  t.trials = c.trials;
  t.half_width = c.half_width;
  t.initial_half_width = c.initial_half_width;
  t.seed = c.seed;
  t.direction = c.direction == "decode" ? fc::CodeDirection::Decode : fc::CodeDirection::Encode;
  t.thresholds = c.thresholds;
  t.thetas = c.thetas;
  t.fit_lo = c.fit_lo;
  t.fit_hi = c.fit_hi;
  t.max_censoring = c.max_censoring;
  t.batches = c.batches;
  return t;
}

fc::Window load_window(const std::string& path, const std::string& format) {
  std::string fmt = format;
  if (fmt.empty()) {
    auto dot = path.rfind('.');
    fmt = dot == std::string::npos ? "" : path.substr(dot + 1);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  if (fmt == "csv") return fc::read_window_csv(in);
  if (fmt == "u16" || fmt == "bin") return fc::read_window_u16(in);
  if (fmt == "json") {
    json j;
    in >> j;
    return fc::window_from_json(j);
  }
  throw std::invalid_argument("unknown window format '" + fmt + "' (csv, u16, json)");
}

// ---- subcommands ----

int cmd_vectors(const fc::ExperimentConfig& cfg, bool repro) {
  auto fam = fc::construct_family(cfg.n, cfg.max_n, cfg.max_level);
  auto rep = fc::family_invariants_report(fam, cfg.depth);
  if (cfg.format == "csv") {
    Sink sink(cfg.output);
    fc::reports::family_csv(sink.out(), fam);
  } else {
    emit_json(cfg, repro, "vectors", fc::reports::family_json(fam, rep));
  }
  if (!rep.theorem1_applies) std::cerr << "note: variances are equal\n";
  else std::cerr << "note: variances differ (" << rep.variance_p << " vs " << rep.variance_q << ")\n";
  return rep.ok() ? kExitOk : kExitIdentity;
}

int cmd_matchings(fc::ExperimentConfig cfg, bool repro, int pair_levels) {
  bool capped = false;
  if (cfg.depth > kMaxMatchingsDepth) {
    std::cerr << "warning: depth " << cfg.depth << " capped at " << kMaxMatchingsDepth << '\n';
    cfg.depth = kMaxMatchingsDepth;
    capped = true;
  }
  auto fam = fc::construct_family(cfg.n, cfg.max_n, cfg.max_level);
  auto ladder = fc::iterate_matchings(fam.r, fam.s, cfg.depth);
  auto check = fc::verify_ladder(fc::generating_function(fam.r), fc::generating_function(fam.s),
                                 fc::DyadicRational::pow2(-(2 * cfg.n - 1)), cfg.depth);

  bool reductions_ok = true;
  const auto t = fc::DyadicRational::pow2(-(2 * cfg.n - 1));
  for (const auto& m : ladder.levels) reductions_ok = reductions_ok && m.mass_reduction == t;
  if (ladder.truncated) std::cerr << "warning: element lists dropped beyond the materialization cap\n";

  if (cfg.format == "csv") {
    Sink sink(cfg.output);
    sink.out() << "level,degree,source_count,target_count,matched_count,mass_reduction\r\n";
    for (const auto& m : ladder.levels)
      for (const auto& c : m.classes)
        sink.out() << m.level << ',' << c.degree << ',' << c.source_count.get_str() << ','
                   << c.target_count.get_str() << ',' << c.matched_count.get_str() << ','
                   << m.mass_reduction << "\r\n";
  } else {
    json levels = json::array();
    for (const auto& m : ladder.levels) levels.push_back(fc::reports::matching_json(m, pair_levels));
    json res = {{"n", cfg.n},
                {"requested_depth", ladder.requested_depth},
                {"levels", std::move(levels)},
                {"expected_reduction", t.to_string()},
                {"reductions_ok", reductions_ok},
                {"exhausted", ladder.exhausted},
                {"aggregated", ladder.truncated},
                {"depth_capped", capped},
                {"verify_ladder", fc::reports::ladder_report_json(check)}};
    if (ladder.exhausted) res["stop_reason"] = ladder.stop_reason;
    emit_json(cfg, repro, "matchings", std::move(res));
  }
  return check.holds && reductions_ok ? kExitOk : kExitIdentity;
}

struct WindowSource {
  std::string input;
  std::string input_format;
  bool trace = false;
};

int cmd_transduce(const fc::ExperimentConfig& cfg, bool repro, const WindowSource& src, bool decode) {
  auto code = code_of(cfg);
  fc::Window w = src.input.empty()
                     ? fc::sample_window(decode ? code.output() : code.input(), cfg.half_width, cfg.seed)
                     : load_window(src.input, src.input_format);
  fc::CodeOptions opt{src.trace};
  auto cw = decode ? code.decode(w, opt) : code.encode(w, opt);
  if (cfg.format == "csv") {
    Sink sink(cfg.output);
    fc::write_coded_csv(sink.out(), cw);
  } else {
    json res = fc::coded_window_to_json(cw);
    res["code"] = code.name();
    emit_json(cfg, repro, decode ? "decode" : "encode", std::move(res));
  }
  if (cw.ladder_unavailable) std::cerr << "warning: some tuples needed a level past the ladder cap\n";
  return kExitOk;
}

int cmd_roundtrip(const fc::ExperimentConfig& cfg, bool repro, const WindowSource& src) {
  auto code = code_of(cfg);
  fc::Window w = src.input.empty() ? fc::sample_window(code.input(), cfg.half_width, cfg.seed)
                                   : load_window(src.input, src.input_format);
  auto rt = fc::round_trip(code, w);
  json res = {{"code", code.name()},
              {"positions", w.size()},
              {"encoded_determined", rt.encoded.determined_count()},
              {"decoded_determined", rt.decoded.determined_count()},
              {"compared", rt.compared},
              {"mismatches", rt.mismatches}};
  if (rt.mismatches > 0) res["first_mismatch"] = rt.first_mismatch;
  if (cfg.format == "csv") {
    Sink sink(cfg.output);
    sink.out() << "code,positions,compared,mismatches\r\n"
               << code.name() << ',' << w.size() << ',' << rt.compared << ',' << rt.mismatches << "\r\n";
  } else {
    emit_json(cfg, repro, "roundtrip", std::move(res));
  }
  return rt.mismatches == 0 ? kExitOk : kExitIdentity;
}

std::vector<std::int64_t> curve_points(const fc::TailReport& rep, const fc::ExperimentConfig& cfg) {
  std::vector<std::int64_t> ns;
  for (auto n : cfg.n_list)
    for (const auto& p : rep.points)
      if (p.n == n) ns.push_back(n);
  return ns;
}

int cmd_tails(fc::ExperimentConfig cfg, bool repro) {
  auto code = code_of(cfg);
  auto tcfg = tail_config(cfg);
  if (!tcfg.thresholds.empty()) {
    // Curve points must be thresholds too.
    for (auto n : cfg.n_list) tcfg.thresholds.push_back(n);
  } else {
    tcfg.thresholds = fc::log_grid(1, static_cast<double>(cfg.half_width), 10);
    for (auto n : cfg.n_list) tcfg.thresholds.push_back(n);
  }
  std::sort(tcfg.thresholds.begin(), tcfg.thresholds.end());
  tcfg.thresholds.erase(std::unique(tcfg.thresholds.begin(), tcfg.thresholds.end()), tcfg.thresholds.end());

  auto rep = fc::tail_experiment(code, tcfg);
  bool covered = true;
  if (cfg.format == "csv") {
    Sink sink(cfg.output);
    fc::reports::tail_csv(sink.out(), rep);
  } else {
    json res = fc::reports::tail_json(rep);
    res["code"] = code.name();
    const double c = fc::theorem1_constant(code.input(), code.output());
    auto ns = curve_points(rep, cfg);
    try {
      res["curve"] = fc::reports::curve_json(fc::truncated_moment_curve(rep, ns, c, cfg.max_censoring), c);
    } catch (const fc::InsufficientCoverage& e) {
      res["curve"] = {{"theorem1_constant", c}, {"error", e.what()}};
      std::cerr << "error: insufficient coverage: " << e.what() << '\n';
      covered = false;
    }
    emit_json(cfg, repro, "tails", std::move(res));
  }
  if (!rep.fit.ok) std::cerr << "warning: exponent fit unavailable (too much censoring in the fit range)\n";
  if (!rep.truncation_identity) return kExitIdentity;
  return covered ? kExitOk : kExitCoverage;
}

int cmd_walk(const fc::ExperimentConfig& cfg, bool repro) {
  auto code = code_of(cfg);
  fc::WalkConfig w;
  w.trials = cfg.walk_trials;
  w.n_list = cfg.n_list;
  w.seed = cfg.seed;
  w.tail = tail_config(cfg);
  auto rep = fc::info_walk_experiment(code, w);
  if (cfg.format == "csv") {
    Sink sink(cfg.output);
    fc::reports::walk_csv(sink.out(), rep);
  } else {
    json res = fc::reports::walk_json(rep);
    res["code"] = code.name();
    emit_json(cfg, repro, "walk", std::move(res));
  }
  return kExitOk;
}

int cmd_markov(const fc::ExperimentConfig& cfg, bool repro) {
  if (cfg.matrix.empty()) throw UsageError("markov needs --matrix");
  std::ifstream in(cfg.matrix);
  if (!in) throw std::invalid_argument("cannot open " + cfg.matrix);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(cfg.matrix + ": " + e.what());
  }
  auto mc = fc::markov_from_json(j);
  auto pi = fc::stationary_distribution(mc);
  auto est = fc::markov_sigma2(mc, cfg.blocks, cfg.seed);
  if (cfg.format == "csv") {
    Sink sink(cfg.output);
    sink.out().precision(17);
    sink.out() << "entropy,sigma2,stderr,blocks,mean_block_length\r\n"
               << est.entropy << ',' << est.value << ',' << est.se << ',' << est.blocks << ','
               << est.mean_block_length << "\r\n";
  } else {
    json res = {{"states", mc.size()},
                {"regeneration_state", mc.regeneration_state},
                {"stationary", pi},
                {"entropy", est.entropy},
                {"sigma2", est.value},
                {"stderr", est.se},
                {"blocks", est.blocks},
                {"mean_block_length", est.mean_block_length},
                {"mean_block_square", est.mean_block_square}};
    emit_json(cfg, repro, "markov", std::move(res));
  }
  return kExitOk;
}

int cmd_chisq(const fc::ExperimentConfig& cfg, bool repro, std::uint64_t samples) {
  auto code = code_of(cfg);
  fc::MeasureTestConfig m;
  m.seed = cfg.seed;
  m.min_samples = samples;
  auto rep = fc::measure_preservation_test(code, m);
  json res = {{"code", code.name()},
              {"windows", rep.windows},
              {"excluded_positions", rep.excluded_positions},
              {"unigram", fc::reports::chisq_json(rep.unigram)},
              {"bigram", fc::reports::chisq_json(rep.bigram)}};
  emit_json(cfg, repro, "chisq", std::move(res));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finicode: finitary codes between Bernoulli shifts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "finicode 1.0.0");

  Options opts;
  WindowSource src;
  int pair_levels = 0;
  std::uint64_t chisq_samples = 1'000'000;

  auto add_code = [&](CLI::App* s) {
    opts.bind(s, "--code", &fc::ExperimentConfig::code, "meshalkin or phi")
        ->check(CLI::IsMember({"meshalkin", "phi"}));
    opts.bind(s, "--n", &fc::ExperimentConfig::n, "family index for phi");
    opts.bind(s, "--max-level", &fc::ExperimentConfig::max_level, "ladder level cap");
    opts.bind(s, "--seed", &fc::ExperimentConfig::seed, "master seed");
  };
  auto add_tail = [&](CLI::App* s) {
    opts.bind(s, "--trials", &fc::ExperimentConfig::trials, "Monte Carlo trials");
    opts.bind(s, "--half-width", &fc::ExperimentConfig::half_width, "largest window half-width");
    opts.bind(s, "--initial-half-width", &fc::ExperimentConfig::initial_half_width, "first window half-width");
    opts.bind(s, "--direction", &fc::ExperimentConfig::direction, "encode or decode")
        ->check(CLI::IsMember({"encode", "decode"}));
    opts.bind(s, "--thresholds", &fc::ExperimentConfig::thresholds, "survival thresholds")->delimiter(',');
    opts.bind(s, "--thetas", &fc::ExperimentConfig::thetas, "moment exponents")->delimiter(',');
    opts.bind(s, "--fit-lo", &fc::ExperimentConfig::fit_lo, "exponent fit lower threshold");
    opts.bind(s, "--fit-hi", &fc::ExperimentConfig::fit_hi, "exponent fit upper threshold");
    opts.bind(s, "--max-censoring", &fc::ExperimentConfig::max_censoring, "censoring allowed in fits");
    opts.bind(s, "--batches", &fc::ExperimentConfig::batches, "batches for the exponent interval");
    opts.bind(s, "--n-list", &fc::ExperimentConfig::n_list, "truncation points")->delimiter(',');
  };
  auto add_window = [&](CLI::App* s) {
    s->add_option("--input", src.input, "window file (.csv, .u16, .json); sampled when absent")
        ->check(CLI::ExistingFile);
    s->add_option("--input-format", src.input_format, "override the input format")
        ->check(CLI::IsMember({"csv", "u16", "json"}));
    opts.bind(s, "--half-width", &fc::ExperimentConfig::half_width, "sampled window half-width");
  };

  auto* vectors = app.add_subcommand("vectors", "family vectors and exact invariants");
  opts.bind(vectors, "--n", &fc::ExperimentConfig::n, "family index")->required();
  opts.bind(vectors, "--depth", &fc::ExperimentConfig::depth, "ladder levels checked");
  opts.bind(vectors, "--max-n", &fc::ExperimentConfig::max_n, "largest n accepted");
  opts.common(vectors);

  auto* matchings = app.add_subcommand("matchings", "matching ladder with exact identity checks");
  opts.bind(matchings, "--n", &fc::ExperimentConfig::n, "family index")->required();
  opts.bind(matchings, "--depth", &fc::ExperimentConfig::depth, "ladder depth");
  opts.bind(matchings, "--max-n", &fc::ExperimentConfig::max_n, "largest n accepted");
  matchings->add_option("--pairs", pair_levels, "list matched pairs for levels up to this one");
  opts.common(matchings);

  auto* encode = app.add_subcommand("encode", "encode a window");
  auto* decode = app.add_subcommand("decode", "decode a window");
  auto* roundtrip = app.add_subcommand("roundtrip", "decode(encode(w)) against w");
  for (auto* s : {encode, decode, roundtrip}) {
    add_code(s);
    add_window(s);
    opts.common(s);
  }
  for (auto* s : {encode, decode}) s->add_flag("--trace", src.trace, "record tuple resolutions");

  auto* tails = app.add_subcommand("tails", "coding radius tail experiment");
  add_code(tails);
  add_tail(tails);
  opts.common(tails);

  auto* walk = app.add_subcommand("walk", "information walk diagnostics");
  add_code(walk);
  add_tail(walk);
  opts.bind(walk, "--walk-trials", &fc::ExperimentConfig::walk_trials, "walk trials per n");
  opts.common(walk);

  auto* markov = app.add_subcommand("markov", "entropy rate and asymptotic variance of a chain");
  opts.bind(markov, "--matrix", &fc::ExperimentConfig::matrix, "chain JSON file")->check(CLI::ExistingFile);
  opts.bind(markov, "--blocks", &fc::ExperimentConfig::blocks, "regeneration blocks");
  opts.bind(markov, "--seed", &fc::ExperimentConfig::seed, "master seed");
  opts.common(markov);

  auto* chisq = app.add_subcommand("chisq", "chi-square test of the output law");
  add_code(chisq);
  chisq->add_option("--samples", chisq_samples, "determined output positions");
  opts.common(chisq);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*vectors) return cmd_vectors(opts.resolve(vectors), opts.reproducible);
    if (*matchings) return cmd_matchings(opts.resolve(matchings), opts.reproducible, pair_levels);
    if (*encode) return cmd_transduce(opts.resolve(encode), opts.reproducible, src, false);
    if (*decode) return cmd_transduce(opts.resolve(decode), opts.reproducible, src, true);
    if (*roundtrip) return cmd_roundtrip(opts.resolve(roundtrip), opts.reproducible, src);
    if (*tails) return cmd_tails(opts.resolve(tails), opts.reproducible);
    if (*walk) return cmd_walk(opts.resolve(walk), opts.reproducible);
    if (*markov) return cmd_markov(opts.resolve(markov), opts.reproducible);
    if (*chisq) return cmd_chisq(opts.resolve(chisq), opts.reproducible, chisq_samples);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fc::InsufficientCoverage& e) {
    std::cerr << "error: insufficient coverage: " << e.what() << '\n';
    return kExitCoverage;
  } catch (const fc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
