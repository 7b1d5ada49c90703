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

#ifndef FINICODE_TOOLS_REPORTS_HPP
#define FINICODE_TOOLS_REPORTS_HPP

#include <iosfwd>

#include "finicode/chisq.hpp"
#include "finicode/codebook.hpp"
#include "finicode/ladder.hpp"
#include "finicode/markov.hpp"
#include "finicode/matching.hpp"
#include "finicode/serialize.hpp"
#include "finicode/tails.hpp"
#include "finicode/walk.hpp"

// JSON and CSV renderings of library results for the command line.
namespace finicode::reports {

json family_json(const CodebookFamily& fam, const FamilyReport& rep);
void family_csv(std::ostream& out, const CodebookFamily& fam);

/// Pairs are listed, flattened to base symbols, for materialised levels up
/// to `pair_levels`.
json matching_json(const Matching& m, int pair_levels);
json ladder_report_json(const LadderReport& rep);

json tail_json(const TailReport& rep);
void tail_csv(std::ostream& out, const TailReport& rep);
json curve_json(const std::vector<CurvePoint>& curve, double constant);

json walk_json(const WalkReport& rep);
void walk_csv(std::ostream& out, const WalkReport& rep);

json chisq_json(const ChiSquareResult& r);

}  // namespace finicode::reports

#endif  // FINICODE_TOOLS_REPORTS_HPP
