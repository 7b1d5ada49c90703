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

#include <array>
#include <string>
#include <vector>

#include "finicode/coder.hpp"
#include "finicode/errors.hpp"

namespace finicode {

namespace {

// Per input id: is it an opener, and the output for either role.
struct Table {
  std::array<bool, 6> known{};
  std::array<bool, 6> opener{};
  std::array<char, 6> moved_bit{};   // closer: bit that moves to its opener
  std::array<int, 6> closer_out{};   // closer: output id once the bit is gone
  std::array<std::array<int, 2>, 6> opener_out{};  // opener: output id given the moved bit
};

Table encoder_table() {
  const auto& A = meshalkin_alphabets();
  Table t;
  for (const auto& a : A.alpha) {
    t.known[a.id] = true;
    if (a.bits.size() == 1) {
      t.opener[a.id] = true;
      t.opener_out[a.id] = {A.beta_id(a.bits + "0"), A.beta_id(a.bits + "1")};
    } else {
      t.moved_bit[a.id] = a.bits.back();
      t.closer_out[a.id] = A.beta_id(a.bits.substr(0, a.bits.size() - 1));
    }
  }
  return t;
}

Table decoder_table() {
  const auto& A = meshalkin_alphabets();
  Table t;
  for (const auto& b : A.beta) {
    t.known[b.id] = true;
    if (b.bits.front() == '0') {
      // Former 1-bit symbol; its bottom bit came from the closer.
      t.opener[b.id] = true;
      t.moved_bit[b.id] = b.bits.back();
      t.closer_out[b.id] = A.alpha_id(b.bits.substr(0, 1));
    } else {
      t.opener_out[b.id] = {A.alpha_id(b.bits + "0"), A.alpha_id(b.bits + "1")};
    }
  }
  return t;
}

CodedWindow run(const Window& w, const Table& t, bool decode, int max_id, const CodeOptions& opt) {
  const std::size_t n = w.size();
  CodedWindow out;
  out.output.lo = w.lo;
  out.output.seed = w.seed;
  out.output.source = w.source;
  out.output.symbols.assign(n, kUnknownSymbol);
  out.status.assign(n, {});
  if (opt.trace) out.trace_of.assign(n, -1);

  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i) {
    int x = w.symbols[i];
    if (x == kUnknownSymbol) {
      stack.clear();
      continue;
    }
    if (x < 1 || x > max_id || !t.known[x])
      throw InvalidSymbol("symbol " + std::to_string(x) + " at position " +
                          std::to_string(w.lo + static_cast<std::int64_t>(i)));
    if (t.opener[x]) {
      stack.push_back(i);
      continue;
    }
    if (stack.empty()) continue;
    std::size_t o = stack.back();
    stack.pop_back();
    int y = w.symbols[o];
    std::int64_t d = static_cast<std::int64_t>(i - o);
    if (!decode) {
      out.output.symbols[o] = t.opener_out[y][t.moved_bit[x] - '0'];
      out.output.symbols[i] = t.closer_out[x];
    } else {
      // The opener gives its bottom bit back to the closer.
      out.output.symbols[o] = t.closer_out[y];
      out.output.symbols[i] = t.opener_out[x][t.moved_bit[y] - '0'];
    }
    out.status[o] = {true, static_cast<int>(d), d};
    out.status[i] = {true, static_cast<int>(d), d};
    if (opt.trace) {
      out.trace_of[o] = out.trace_of[i] = static_cast<std::int32_t>(out.trace.size());
      out.trace.push_back({static_cast<int>(d), 1, {w.lo + static_cast<std::int64_t>(o),
                                                    w.lo + static_cast<std::int64_t>(i)}});
    }
  }
  return out;
}

}  // namespace

CodedWindow meshalkin_encode(const Window& w, const CodeOptions& opt) {
  static const Table t = encoder_table();
  return run(w, t, false, 5, opt);
}

CodedWindow meshalkin_decode(const Window& w, const CodeOptions& opt) {
  static const Table t = decoder_table();
  return run(w, t, true, 4, opt);
}

}  // namespace finicode
