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

#ifndef FINICODE_CODEC_IO_HPP
#define FINICODE_CODEC_IO_HPP

#include <cstdint>
#include <iosfwd>

#include "finicode/serialize.hpp"
#include "finicode/window.hpp"

// Window encodings:
//   CSV   symbol ids separated by commas or whitespace; "?" is an unknown
//         symbol. A single line, no header.
//   u16   little-endian uint16 per symbol; 0xFFFF is an unknown symbol.
//   JSON  {"lo", "symbols": [id or null], "seed", "source"}; the output of
//         coded_window_to_json is also accepted.
namespace finicode {

Window read_window_csv(std::istream& in, std::int64_t lo = 0);
void write_window_csv(std::ostream& out, const Window& w);

Window read_window_u16(std::istream& in, std::int64_t lo = 0);
void write_window_u16(std::ostream& out, const Window& w);

json window_to_json(const Window& w);
Window window_from_json(const json& j);

/// {"lo", "hi", "symbols", "determined", "step", "radius", "determined_count",
///  "censored_count", "ladder_unavailable", "trace"?}
json coded_window_to_json(const CodedWindow& cw);

/// RFC 4180 CSV with header position,symbol,status,step,radius.
void write_coded_csv(std::ostream& out, const CodedWindow& cw);

}  // namespace finicode

#endif  // FINICODE_CODEC_IO_HPP
