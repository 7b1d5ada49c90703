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

#include <algorithm>
#include <string>
#include <vector>

#include "finicode/coder.hpp"
#include "finicode/errors.hpp"
#include "finicode/gaps.hpp"

namespace finicode {

namespace {

using Element = ImplicitLadder::Element;

struct Node {
  int rank = 0;
  std::size_t leftmost = 0;
  std::int32_t a = -1;  // children, or -1 for a single position
  std::int32_t b = -1;
  Element value;        // element of C_{rank+1} (D_{rank+1} when decoding)
};

class Engine {
 public:
  Engine(const CodebookFamily& fam, Side side, const Window& w, const CodeOptions& opt)
      : ladder_(*fam.ladder), side_(side), w_(w), opt_(opt), n_(fam.n) {}

  CodedWindow run() {
    const std::size_t size = w_.size();
    out_.output.lo = w_.lo;
    out_.output.seed = w_.seed;
    out_.output.source = w_.source;
    out_.output.symbols.assign(size, kUnknownSymbol);
    out_.status.assign(size, {});
    if (opt_.trace) out_.trace_of.assign(size, -1);

    for (std::size_t i = 0; i < size; ++i) {
      if (w_.symbols[i] == kMarker) {
        out_.output.symbols[i] = kMarker;
        out_.status[i] = {true, 0, 0};
      }
    }
    for (const auto& seg : detail::known_segments(w_.symbols)) process_segment(seg);
    return std::move(out_);
  }

 private:
  void process_segment(const detail::Segment& seg) {
    nodes_.clear();
    std::vector<std::int32_t> live;
    for (std::size_t i = seg.lo; i <= seg.hi; ++i) {
      int x = w_.symbols[i];
      if (x == kMarker) continue;
      live.push_back(static_cast<std::int32_t>(nodes_.size()));
      nodes_.push_back({0, i, -1, -1, ladder_.base_element(side_, x)});
    }

    std::vector<std::pair<std::size_t, std::size_t>> gaps;
    std::vector<std::int32_t> next, in_gap;
    for (int j = 1; !live.empty(); ++j) {
      const std::size_t threshold = 2 * static_cast<std::size_t>(n_) * static_cast<std::size_t>(j);
      detail::complete_gap_ranges(seg, threshold, gaps);
      if (gaps.empty()) break;
      next.clear();
      std::size_t li = 0;
      for (const auto& [gf, gl] : gaps) {
        while (li < live.size() && nodes_[live[li]].leftmost < gf) next.push_back(live[li++]);
        in_gap.clear();
        while (li < live.size() && nodes_[live[li]].leftmost <= gl) in_gap.push_back(live[li++]);
        if (!in_gap.empty()) process_gap(in_gap, gf - threshold, gl + threshold, j);
        next.insert(next.end(), in_gap.begin(), in_gap.end());
      }
      next.insert(next.end(), live.begin() + static_cast<std::ptrdiff_t>(li), live.end());
      live.swap(next);
    }
  }

  // Pairs tuples rank by rank inside one complete gap; `cur` keeps the
  // survivors in left-to-right order.
  void process_gap(std::vector<std::int32_t>& cur, std::size_t span_lo, std::size_t span_hi, int step) {
    std::vector<std::int32_t> next;
    for (int k = 1; cur.size() >= 2; ++k) {
      int max_rank = 0;
      for (auto id : cur) max_rank = std::max(max_rank, nodes_[id].rank);
      if (max_rank < k - 1) break;
      if (!ladder_.level(k)) {
        // Only a problem if some pair would actually be formed.
        auto c = std::count_if(cur.begin(), cur.end(), [&](auto id) { return nodes_[id].rank == k - 1; });
        if (c >= 2) {
          out_.ladder_unavailable = true;
          return;
        }
        continue;
      }
      next.clear();
      std::ptrdiff_t pending = -1;
      for (auto id : cur) {
        if (nodes_[id].rank != k - 1) {
          next.push_back(id);
          continue;
        }
        if (pending < 0) {
          pending = static_cast<std::ptrdiff_t>(next.size());
          next.push_back(id);
          continue;
        }
        std::int32_t a = next[static_cast<std::size_t>(pending)];
        auto res = ladder_.apply(side_, k, nodes_[a].value, nodes_[id].value);
        if (res.matched) {
          emit(a, id, res.first, res.second, k, span_lo, span_hi, step);
          next[static_cast<std::size_t>(pending)] = -1;
        } else {
          next[static_cast<std::size_t>(pending)] = static_cast<std::int32_t>(nodes_.size());
          nodes_.push_back({k, nodes_[a].leftmost, a, id, std::move(res.merged)});
        }
        pending = -1;
      }
      cur.clear();
      for (auto id : next)
        if (id >= 0) cur.push_back(id);
    }
  }

  void members(std::int32_t id, std::vector<std::size_t>& out) const {
    const Node& nd = nodes_[id];
    if (nd.a < 0) {
      out.push_back(nd.leftmost);
      return;
    }
    members(nd.a, out);
    members(nd.b, out);
  }

  void emit(std::int32_t a, std::int32_t b, const Element& x, const Element& y, int k,
            std::size_t span_lo, std::size_t span_hi, int step) {
    pos_.clear();
    members(a, pos_);
    members(b, pos_);
    sym_.clear();
    ladder_.flatten(other(side_), k, x, sym_);
    ladder_.flatten(other(side_), k, y, sym_);
    std::int32_t tr = -1;
    if (opt_.trace) {
      tr = static_cast<std::int32_t>(out_.trace.size());
      TraceEntry e{step, k, {}};
      for (auto p : pos_) e.members.push_back(w_.lo + static_cast<std::int64_t>(p));
      out_.trace.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < pos_.size(); ++i) {
      std::size_t p = pos_[i];
      out_.output.symbols[p] = sym_[i];
      auto r = static_cast<std::int64_t>(std::max(p - span_lo, span_hi - p));
      out_.status[p] = {true, step, r};
      if (opt_.trace) out_.trace_of[p] = tr;
    }
  }

  const ImplicitLadder& ladder_;
  Side side_;
  const Window& w_;
  const CodeOptions& opt_;
  int n_;
  CodedWindow out_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> pos_;
  std::vector<int> sym_;
};

void check_family(const CodebookFamily& fam) {
  if (!fam.ladder) throw std::invalid_argument("family has no ladder");
}

}  // namespace

CodedWindow phi_encode(const CodebookFamily& fam, const Window& w, const CodeOptions& opt) {
  check_family(fam);
  return Engine(fam, Side::Source, w, opt).run();
}

CodedWindow phi_decode(const CodebookFamily& fam, const Window& w, const CodeOptions& opt) {
  check_family(fam);
  return Engine(fam, Side::Target, w, opt).run();
}

}  // namespace finicode
