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

#ifndef FINICODE_RNG_HPP
#define FINICODE_RNG_HPP

#include <array>
#include <cstdint>

namespace finicode {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
/// block() is a pure function of counter and key.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;
  static Counter block(Counter ctr, Key key);
};

/// 64 random bits addressed by (seed, stream, index). Streams separate
/// trials; index is the lattice position or step number.
std::uint64_t random_u64(std::uint64_t seed, std::uint64_t stream, std::int64_t index);

/// Uniform double in [0, 1) with 53 random bits.
inline double to_unit(std::uint64_t u) { return static_cast<double>(u >> 11) * 0x1.0p-53; }

}  // namespace finicode

#endif  // FINICODE_RNG_HPP
