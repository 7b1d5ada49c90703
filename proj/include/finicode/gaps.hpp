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

#ifndef FINICODE_GAPS_HPP
#define FINICODE_GAPS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "finicode/window.hpp"

namespace finicode {

inline constexpr int kMarker = 0;

/// Maximal run of marker symbols, absolute positions [lo, hi]. A run that
/// touches the window edge or an unknown symbol may continue beyond it.
struct MarkerRun {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool open = false;
  std::int64_t length() const noexcept { return hi - lo + 1; }
};

/// Non-marker positions between two neighbouring j-markers.
struct Gap {
  std::vector<std::int64_t> members;
  std::optional<MarkerRun> left;
  std::optional<MarkerRun> right;
  bool complete = false;  // both flanking j-markers are visible
};

struct GapStructure {
  int n = 1;
  std::vector<std::vector<Gap>> levels;  // levels[j - 1]: the j-gaps

  const std::vector<Gap>& at(int j) const { return levels.at(static_cast<std::size_t>(j - 1)); }
};

/// j-markers are runs of at least 2nj markers (id 0). Unknown symbols act as
/// window edges.
GapStructure segment_gaps(const Window& w, int n, int jmax);

namespace detail {

/// Maximal stretch of known symbols, with its marker runs; window indices.
struct Segment {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::vector<std::pair<std::size_t, std::size_t>> runs;
};

std::vector<Segment> known_segments(const std::vector<int>& symbols);

/// [first, last] index of every complete gap for the given marker threshold.
void complete_gap_ranges(const Segment& seg, std::size_t threshold,
                         std::vector<std::pair<std::size_t, std::size_t>>& out);

}  // namespace detail

}  // namespace finicode

#endif  // FINICODE_GAPS_HPP
