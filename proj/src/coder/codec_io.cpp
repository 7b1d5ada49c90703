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

#include "finicode/codec_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace finicode {

Window read_window_csv(std::istream& in, std::int64_t lo) {
  Window w;
  w.lo = lo;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (tok == "?") {
      w.symbols.push_back(kUnknownSymbol);
    } else {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument("bad symbol '" + tok + "'");
      w.symbols.push_back(v);
    }
    tok.clear();
  };
  char c;
  while (in.get(c)) {
    if (c == ',' || c == ' ' || c == '\n' || c == '\r' || c == '\t')
      flush();
    else
      tok.push_back(c);
  }
  flush();
  return w;
}

void write_window_csv(std::ostream& out, const Window& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    if (w.symbols[i] == kUnknownSymbol)
      out << '?';
    else
      out << w.symbols[i];
  }
  out << '\n';
}

Window read_window_u16(std::istream& in, std::int64_t lo) {
  Window w;
  w.lo = lo;
  unsigned char b[2];
  while (in.read(reinterpret_cast<char*>(b), 2)) {
    unsigned v = b[0] | (static_cast<unsigned>(b[1]) << 8);
    w.symbols.push_back(v == 0xFFFF ? kUnknownSymbol : static_cast<int>(v));
  }
  if (in.gcount() == 1) throw std::invalid_argument("u16 input has an odd number of bytes");
  return w;
}

void write_window_u16(std::ostream& out, const Window& w) {
  for (int s : w.symbols) {
    if (s != kUnknownSymbol && (s < 0 || s >= 0xFFFF)) throw std::out_of_range("symbol does not fit in u16");
    unsigned v = s == kUnknownSymbol ? 0xFFFFu : static_cast<unsigned>(s);
    char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>(v >> 8)};
    out.write(b, 2);
  }
}

namespace {

json symbols_json(const std::vector<int>& s) {
  json a = json::array();
  for (int x : s) a.push_back(x == kUnknownSymbol ? json(nullptr) : json(x));
  return a;
}

}  // namespace

json window_to_json(const Window& w) {
  return {{"lo", w.lo}, {"symbols", symbols_json(w.symbols)}, {"seed", w.seed}, {"source", w.source}};
}

Window window_from_json(const json& j) {
  Window w;
  w.lo = j.value("lo", std::int64_t{0});
  for (const auto& x : j.at("symbols")) w.symbols.push_back(x.is_null() ? kUnknownSymbol : x.get<int>());
  w.seed = j.value("seed", std::uint64_t{0});
  w.source = j.value("source", std::string{});
  return w;
}

json coded_window_to_json(const CodedWindow& cw) {
  json det = json::array(), step = json::array(), radius = json::array();
  for (const auto& s : cw.status) {
    det.push_back(s.determined);
    step.push_back(s.determined ? json(s.step) : json(nullptr));
    radius.push_back(s.determined ? json(s.radius) : json(nullptr));
  }
  std::size_t d = cw.determined_count();
  json j = {{"lo", cw.output.lo},
            {"hi", cw.output.hi()},
            {"seed", cw.output.seed},
            {"source", cw.output.source},
            {"symbols", symbols_json(cw.output.symbols)},
            {"determined", std::move(det)},
            {"step", std::move(step)},
            {"radius", std::move(radius)},
            {"determined_count", d},
            {"censored_count", cw.status.size() - d},
            {"ladder_unavailable", cw.ladder_unavailable}};
  if (!cw.trace.empty()) {
    json t = json::array();
    for (const auto& e : cw.trace) t.push_back({{"step", e.step}, {"level", e.level}, {"members", e.members}});
    j["trace"] = std::move(t);
  }
  return j;
}

void write_coded_csv(std::ostream& out, const CodedWindow& cw) {
  out << "position,symbol,status,step,radius\r\n";
  for (std::size_t i = 0; i < cw.status.size(); ++i) {
    const auto& s = cw.status[i];
    out << cw.output.lo + static_cast<std::int64_t>(i) << ',';
    if (cw.output.symbols[i] == kUnknownSymbol)
      out << '?';
    else
      out << cw.output.symbols[i];
    if (s.determined)
      out << ",determined," << s.step << ',' << s.radius << "\r\n";
    else
      out << ",censored,,\r\n";
  }
}

}  // namespace finicode
