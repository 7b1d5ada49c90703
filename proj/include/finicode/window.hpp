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

#ifndef FINICODE_WINDOW_HPP
#define FINICODE_WINDOW_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace finicode {

/// Placeholder for a symbol whose value is not known.
inline constexpr int kUnknownSymbol = -1;

/// Finite piece [lo, hi] of a bi-infinite sequence.
struct Window {
  std::int64_t lo = 0;
  std::vector<int> symbols;
  std::uint64_t seed = 0;  // provenance only
  std::string source;      // e.g. "p n=2"

  std::int64_t hi() const noexcept { return lo + static_cast<std::int64_t>(symbols.size()) - 1; }
  std::size_t size() const noexcept { return symbols.size(); }
  bool contains(std::int64_t pos) const noexcept { return pos >= lo && pos <= hi(); }
  int at(std::int64_t pos) const { return symbols.at(static_cast<std::size_t>(pos - lo)); }
};

/// Output position is fixed by the input inside [i - radius, i + radius].
struct PositionStatus {
  bool determined = false;
  int step = 0;
  std::int64_t radius = 0;
};

/// One tuple resolution: matching level used and the tuple's members.
struct TraceEntry {
  int step = 0;
  int level = 0;
  std::vector<std::int64_t> members;  // absolute positions, in tuple order
};

struct CodedWindow {
  Window output;  // kUnknownSymbol where censored
  std::vector<PositionStatus> status;
  /// Filled only when tracing is requested; trace_of[i] indexes `trace` or is -1.
  std::vector<TraceEntry> trace;
  std::vector<std::int32_t> trace_of;
  /// Some tuple needed a matching level past the ladder cap.
  bool ladder_unavailable = false;

  std::size_t determined_count() const;
  const PositionStatus& status_at(std::int64_t pos) const {
    return status.at(static_cast<std::size_t>(pos - output.lo));
  }
};

struct CodeOptions {
  bool trace = false;
};

}  // namespace finicode

#endif  // FINICODE_WINDOW_HPP
