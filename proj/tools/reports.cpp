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

#include "reports.hpp"

#include "finicode/info.hpp"

#include <map>
#include <ostream>

namespace finicode::reports {

namespace {

json classes_json(const ProbabilityVector& pv) {
  // Runs of equal probability in symbol order.
  json out = json::array();
  std::size_t i = 0;
  while (i < pv.size()) {
    std::size_t j = i;
    while (j + 1 < pv.size() && pv.prob(j + 1) == pv.prob(i)) ++j;
    out.push_back({{"prob", pv.prob(i).to_string()},
                   {"count", j - i + 1},
                   {"first_id", pv.symbol(i)},
                   {"last_id", pv.symbol(j)}});
    i = j + 1;
  }
  return out;
}

json poly_table(const DyadicPolynomial& p) {
  json out = json::array();
  for (const auto& [d, c] : p.coefficients()) out.push_back({{"degree", d}, {"coeff", c.to_string()}});
  return out;
}

}  // namespace

json family_json(const CodebookFamily& fam, const FamilyReport& rep) {
  json red = json::array();
  for (const auto& r : rep.reductions) red.push_back(r.to_string());
  return {{"n", fam.n},
          {"p", {{"size", fam.p.size()}, {"classes", classes_json(fam.p)}}},
          {"q", {{"size", fam.q.size()}, {"classes", classes_json(fam.q)}}},
          {"entropy", {{"p", rep.entropy_p.to_string()}, {"q", rep.entropy_q.to_string()}}},
          {"variance", {{"p", rep.variance_p.to_string()}, {"q", rep.variance_q.to_string()}}},
          {"gamma", poly_table(generating_function(fam.r))},
          {"delta", poly_table(generating_function(fam.s))},
          {"invariants",
           {{"sums_to_one", rep.sums_to_one},
            {"entropy_equal", rep.entropy_equal},
            {"variance_equal", rep.variance_equal},
            {"theorem1_applies", rep.theorem1_applies},
            {"variance_relation_ok", rep.variance_relation_ok},
            {"gamma_closed_form", rep.gamma_closed_form},
            {"delta_closed_form", rep.delta_closed_form},
            {"binomial_factorization", rep.binomial_factorization},
            {"squaring_identity", rep.squaring_identity},
            {"expected_reduction", rep.expected_reduction.to_string()},
            {"reductions", red},
            {"reductions_ok", rep.reductions_ok},
            {"ok", rep.ok()}}}};
}

void family_csv(std::ostream& out, const CodebookFamily& fam) {
  out << "vector,first_id,last_id,count,prob\r\n";
  for (const auto* v : {&fam.p, &fam.q}) {
    for (const auto& c : classes_json(*v)) {
      out << (v == &fam.p ? "p" : "q") << ',' << c["first_id"] << ',' << c["last_id"] << ',' << c["count"] << ','
          << c["prob"].get<std::string>() << "\r\n";
    }
  }
}

json matching_json(const Matching& m, int pair_levels) {
  json classes = json::array();
  for (const auto& c : m.classes)
    classes.push_back({{"degree", c.degree},
                       {"prob", DyadicRational::pow2(-c.degree).to_string()},
                       {"source_count", bigint_to_json(c.source_count)},
                       {"target_count", bigint_to_json(c.target_count)},
                       {"matched_count", bigint_to_json(c.matched_count)}});
  json j = {{"level", m.level},
            {"materialized", m.materialized()},
            {"mass_reduction", m.mass_reduction.to_string()},
            {"leftovers_normalized", m.leftovers_normalized},
            {"classes", std::move(classes)},
            {"gamma", poly_table(m.gamma)},
            {"delta", poly_table(m.delta)},
            {"upsilon", poly_table(m.upsilon)},
            {"omega", poly_table(m.omega)},
            {"lambda", poly_table(m.lambda)},
            {"xi", poly_table(m.xi)}};
  if (m.materialized()) {
    j["source_size"] = m.source->size();
    j["target_size"] = m.target->size();
    if (m.level <= pair_levels) {
      json pairs = json::array();
      const auto nc = m.source->size(), nd = m.target->size();
      for (const auto& [a, b] : m.pairs) {
        auto x = m.source->flatten(a / nc), x2 = m.source->flatten(a % nc);
        auto y = m.target->flatten(b / nd), y2 = m.target->flatten(b % nd);
        x.insert(x.end(), x2.begin(), x2.end());
        y.insert(y.end(), y2.begin(), y2.end());
        pairs.push_back({x, y});
      }
      j["pairs"] = std::move(pairs);
    }
  }
  return j;
}

json ladder_report_json(const LadderReport& rep) {
  json levels = json::array();
  for (const auto& c : rep.levels)
    levels.push_back({{"level", c.level},
                      {"difference_of_squares", c.difference_of_squares},
                      {"lambda_identity", c.lambda_identity},
                      {"xi_identity", c.xi_identity},
                      {"lambda_mass", c.lambda_mass}});
  json j = {{"holds", rep.holds}, {"levels", std::move(levels)}};
  j["first_failure"] = rep.first_failure ? json(*rep.first_failure) : json(nullptr);
  if (rep.note) j["note"] = *rep.note;
  return j;
}

json tail_json(const TailReport& rep) {
  json pts = json::array();
  for (const auto& p : rep.points)
    pts.push_back({{"n", p.n},
                   {"survival_lo", p.survival_lo},
                   {"survival_hi", p.survival_hi},
                   {"censoring", p.censoring},
                   {"trunc_moment", p.truncated},
                   {"stderr", p.truncated_se},
                   {"samples", p.samples}});
  json th = json::array();
  for (const auto& t : rep.theta_moments) th.push_back({{"theta", t.theta}, {"mean", t.mean}, {"stderr", t.se}});
  return {{"trials", rep.trials},
          {"censored", rep.censored},
          {"half_width", rep.half_width},
          {"truncation_identity", rep.truncation_identity},
          {"fitted_exponent",
           {{"ok", rep.fit.ok},
            {"slope", rep.fit.slope},
            {"ci", {rep.fit.ci_lo, rep.fit.ci_hi}},
            {"points", rep.fit.points},
            {"range", {rep.fit.range_lo, rep.fit.range_hi}}}},
          {"theta_moments", std::move(th)},
          {"points", std::move(pts)}};
}

void tail_csv(std::ostream& out, const TailReport& rep) {
  out.precision(17);
  out << "n,survival_lo,survival_hi,trunc_moment,stderr\r\n";
  for (const auto& p : rep.points)
    out << p.n << ',' << p.survival_lo << ',' << p.survival_hi << ',' << p.truncated << ',' << p.truncated_se
        << "\r\n";
}

json curve_json(const std::vector<CurvePoint>& curve, double constant) {
  json pts = json::array();
  for (const auto& c : curve)
    pts.push_back({{"n", c.n}, {"value", c.value}, {"stderr", c.se}, {"below_constant", c.below_constant}});
  return {{"theorem1_constant", constant}, {"points", std::move(pts)}};
}

json walk_json(const WalkReport& rep) {
  json pts = json::array();
  for (const auto& p : rep.points)
    pts.push_back({{"n", p.n},
                   {"used", p.used},
                   {"excluded", p.excluded},
                   {"excess", p.excess},
                   {"excess_stderr", p.excess_se},
                   {"scaled", p.scaled},
                   {"scaled_stderr", p.scaled_se},
                   {"rhs", p.rhs},
                   {"rhs_stderr", p.rhs_se},
                   {"mean_x", p.mean_x},
                   {"mean_y", p.mean_y},
                   {"lemma2_ok", p.lemma2_ok},
                   {"lemma1_ok", p.lemma1_ok}});
  return {{"lambda_q", rep.lambda_q},
          {"lemma1_bound", rep.lemma1_bound},
          {"points", std::move(pts)},
          {"tail", tail_json(rep.tail)}};
}

void walk_csv(std::ostream& out, const WalkReport& rep) {
  out.precision(17);
  out << "n,used,excluded,excess,excess_stderr,rhs,rhs_stderr,lemma2_ok\r\n";
  for (const auto& p : rep.points)
    out << p.n << ',' << p.used << ',' << p.excluded << ',' << p.excess << ',' << p.excess_se << ',' << p.rhs << ','
        << p.rhs_se << ',' << (p.lemma2_ok ? "true" : "false") << "\r\n";
}

json chisq_json(const ChiSquareResult& r) {
  return {{"statistic", r.statistic}, {"df", r.df},         {"critical", r.critical},
          {"p_value", r.p_value},     {"pass", r.pass},     {"samples", r.samples},
          {"pooled_cells", r.pooled_cells}};
}

}  // namespace finicode::reports
