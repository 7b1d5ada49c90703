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

#include "finicode/gaps.hpp"

#include <stdexcept>

namespace finicode {

namespace detail {

std::vector<Segment> known_segments(const std::vector<int>& symbols) {
  std::vector<Segment> out;
  const std::size_t n = symbols.size();
  std::size_t i = 0;
  while (i < n) {
    if (symbols[i] == kUnknownSymbol) {
      ++i;
      continue;
    }
    Segment seg;
    seg.lo = i;
    while (i < n && symbols[i] != kUnknownSymbol) {
      if (symbols[i] == kMarker) {
        std::size_t s = i;
        while (i < n && symbols[i] == kMarker) ++i;
        seg.runs.emplace_back(s, i - 1);
      } else {
        ++i;
      }
    }
    seg.hi = i - 1;
    out.push_back(std::move(seg));
  }
  return out;
}

void complete_gap_ranges(const Segment& seg, std::size_t threshold,
                         std::vector<std::pair<std::size_t, std::size_t>>& out) {
  out.clear();
  const std::pair<std::size_t, std::size_t>* prev = nullptr;
  for (const auto& r : seg.runs) {
    if (r.second - r.first + 1 < threshold) continue;
    if (prev) out.emplace_back(prev->second + 1, r.first - 1);
    prev = &r;
  }
}

}  // namespace detail

GapStructure segment_gaps(const Window& w, int n, int jmax) {
  if (n < 1 || jmax < 1) throw std::invalid_argument("n and jmax must be positive");
  GapStructure gs;
  gs.n = n;
  auto segments = detail::known_segments(w.symbols);
  auto run_of = [&](const detail::Segment& seg, std::size_t k) {
    const auto& r = seg.runs[k];
    return MarkerRun{w.lo + static_cast<std::int64_t>(r.first), w.lo + static_cast<std::int64_t>(r.second),
                     r.first == seg.lo || r.second == seg.hi};
  };

  for (int j = 1; j <= jmax; ++j) {
    const std::size_t threshold = 2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(j);
    std::vector<Gap> gaps;
    for (const auto& seg : segments) {
      // j-markers of this segment, then the stretches between them.
      std::vector<std::size_t> marks;
      for (std::size_t k = 0; k < seg.runs.size(); ++k)
        if (seg.runs[k].second - seg.runs[k].first + 1 >= threshold) marks.push_back(k);

      auto emit = [&](std::size_t from, std::size_t to, std::optional<MarkerRun> l,
                      std::optional<MarkerRun> r) {
        Gap g;
        for (std::size_t i = from; i <= to && i <= seg.hi; ++i)
          if (w.symbols[i] != kMarker) g.members.push_back(w.lo + static_cast<std::int64_t>(i));
        if (g.members.empty()) return;
        g.complete = l.has_value() && r.has_value();
        g.left = l;
        g.right = r;
        gaps.push_back(std::move(g));
      };

      if (marks.empty()) {
        emit(seg.lo, seg.hi, std::nullopt, std::nullopt);
        continue;
      }
      const auto& first = seg.runs[marks.front()];
      if (first.first > seg.lo) emit(seg.lo, first.first - 1, std::nullopt, run_of(seg, marks.front()));
      for (std::size_t m = 1; m < marks.size(); ++m)
        emit(seg.runs[marks[m - 1]].second + 1, seg.runs[marks[m]].first - 1, run_of(seg, marks[m - 1]),
             run_of(seg, marks[m]));
      const auto& last = seg.runs[marks.back()];
      if (last.second < seg.hi) emit(last.second + 1, seg.hi, run_of(seg, marks.back()), std::nullopt);
    }
    gs.levels.push_back(std::move(gaps));
  }
  return gs;
}

}  // namespace finicode
