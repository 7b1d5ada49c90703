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

#include "finicode/implicit_ladder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "finicode/errors.hpp"

namespace finicode {

std::int32_t ClassSet::find(std::int64_t degree) const {
  auto it = std::lower_bound(degrees.begin(), degrees.end(), degree);
  if (it == degrees.end() || *it != degree) return -1;
  return static_cast<std::int32_t>(it - degrees.begin());
}

BigInt ClassSet::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

DyadicPolynomial ClassSet::generating_function() const {
  DyadicPolynomial g;
  for (std::size_t c = 0; c < size(); ++c)
    g.add_term(degrees[c], DyadicRational(counts[c], 0).mul_pow2(-degrees[c]));
  return g;
}

namespace {

void add_blocks(const ClassSet& cs, bool source, std::map<std::int64_t, ProductClass>& out) {
  for (std::size_t c1 = 0; c1 < cs.size(); ++c1) {
    for (std::size_t c2 = 0; c2 < cs.size(); ++c2) {
      std::int64_t d = cs.degrees[c1] + cs.degrees[c2];
      ProductClass& pc = out[d];
      pc.degree = d;
      BigInt& count = source ? pc.source_count : pc.target_count;
      ProductBlock b{static_cast<std::int32_t>(c1), static_cast<std::int32_t>(c2), count,
                     cs.counts[c1] * cs.counts[c2]};
      count += b.size;
      (source ? pc.source_blocks : pc.target_blocks).push_back(std::move(b));
    }
  }
}

std::pair<ImplicitLadder::Element, ImplicitLadder::Element> unrank(
    const std::vector<ProductBlock>& blocks, const ClassSet& cs, const BigInt& rank) {
  for (const auto& b : blocks) {
    if (rank < b.offset + b.size) {
      BigInt rem = rank - b.offset;
      ImplicitLadder::Element x{b.first, 0}, y{b.second, 0};
      mpz_fdiv_qr(x.index.get_mpz_t(), y.index.get_mpz_t(), rem.get_mpz_t(),
                  cs.counts[b.second].get_mpz_t());
      return {std::move(x), std::move(y)};
    }
  }
  throw std::out_of_range("rank outside product class");
}

}  // namespace

LadderLevel LadderLevel::build(int level, ClassSet source, ClassSet target) {
  LadderLevel L;
  L.level = level;
  std::map<std::int64_t, ProductClass> byDegree;
  add_blocks(source, true, byDegree);
  add_blocks(target, false, byDegree);
  L.source = std::move(source);
  L.target = std::move(target);

  DyadicRational massG, massH;
  for (auto& [d, pc] : byDegree) {
    pc.matched = std::min(pc.source_count, pc.target_count);
    massG += DyadicRational(pc.source_count - pc.matched, 0).mul_pow2(-d);
    massH += DyadicRational(pc.target_count - pc.matched, 0).mul_pow2(-d);
    L.product_of_degree[d] = static_cast<std::int32_t>(L.products.size());
    L.products.push_back(std::move(pc));
  }
  if (massG != massH) throw std::logic_error("leftover masses differ; inputs are not both normalised");
  L.mass_reduction = massG;
  if (massG.is_zero()) return L;
  auto lg = massG.exact_log2();
  if (!lg) return L;
  L.shift = -*lg;

  for (std::size_t i = 0; i < L.products.size(); ++i) {
    ProductClass& pc = L.products[i];
    BigInt g = pc.source_count - pc.matched;
    BigInt h = pc.target_count - pc.matched;
    if (g > 0) {
      pc.next_source_class = static_cast<std::int32_t>(L.next_source.size());
      L.next_source.degrees.push_back(pc.degree - *L.shift);
      L.next_source.counts.push_back(g);
      L.product_of_next_source.push_back(static_cast<std::int32_t>(i));
    }
    if (h > 0) {
      pc.next_target_class = static_cast<std::int32_t>(L.next_target.size());
      L.next_target.degrees.push_back(pc.degree - *L.shift);
      L.next_target.counts.push_back(h);
      L.product_of_next_target.push_back(static_cast<std::int32_t>(i));
    }
  }
  return L;
}

namespace {

ClassSet classes_of(const ProbabilityVector& pv, std::vector<std::int32_t>& cls,
                    std::vector<std::size_t>& first) {
  ClassSet cs;
  auto bits = pv.surprisal_bits();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (cs.degrees.empty() || cs.degrees.back() != bits[i]) {
      if (!cs.degrees.empty() && bits[i] < cs.degrees.back())
        throw std::invalid_argument("implicit ladder needs probabilities in non-increasing order");
      cs.degrees.push_back(bits[i]);
      cs.counts.emplace_back(0);
      first.push_back(i);
    }
    cs.counts.back() += 1;
    cls.push_back(static_cast<std::int32_t>(cs.size() - 1));
  }
  return cs;
}

}  // namespace

ImplicitLadder::ImplicitLadder(const ProbabilityVector& r, const ProbabilityVector& s, int max_level)
    : r_(r), s_(s), max_level_(max_level) {
  if (max_level < 1) throw std::invalid_argument("max_level must be positive");
  ClassSet cr = classes_of(r_, rb_.cls, rb_.first);
  ClassSet cs = classes_of(s_, sb_.cls, sb_.first);
  for (std::size_t i = 0; i < r_.size(); ++i) rb_.pos[r_.symbol(i)] = i;
  for (std::size_t i = 0; i < s_.size(); ++i) sb_.pos[s_.symbol(i)] = i;
  levels_.resize(static_cast<std::size_t>(max_level));
  levels_[0] = std::make_unique<LadderLevel>(LadderLevel::build(1, std::move(cr), std::move(cs)));
  built_.store(1, std::memory_order_release);
}

const LadderLevel* ImplicitLadder::level(int k) const {
  if (k < 1 || k > max_level_) return nullptr;
  int n = built_.load(std::memory_order_acquire);
  if (k <= n) return levels_[k - 1].get();
  std::lock_guard<std::mutex> lock(build_mutex_);
  n = built_.load(std::memory_order_relaxed);
  while (n < k) {
    const LadderLevel& prev = *levels_[n - 1];
    if (!prev.shift) return nullptr;
    levels_[n] = std::make_unique<LadderLevel>(
        LadderLevel::build(n + 1, prev.next_source, prev.next_target));
    built_.store(++n, std::memory_order_release);
  }
  return levels_[k - 1].get();
}

ImplicitLadder::Element ImplicitLadder::base_element(Side side, int symbol) const {
  const Base& b = base_index(side);
  auto it = b.pos.find(symbol);
  if (it == b.pos.end()) throw InvalidSymbol("symbol " + std::to_string(symbol) + " not in alphabet");
  std::int32_t c = b.cls[it->second];
  return Element{c, BigInt(static_cast<unsigned long>(it->second - b.first[c]))};
}

int ImplicitLadder::base_symbol(Side side, const Element& e) const {
  const Base& b = base_index(side);
  return base(side).symbol(b.first.at(e.cls) + e.index.get_ui());
}

ImplicitLadder::Outcome ImplicitLadder::apply(Side side, int k, const Element& a,
                                              const Element& b) const {
  const LadderLevel* L = level(k);
  if (!L) throw LadderUnavailable("matching level " + std::to_string(k) + " unavailable");
  bool src = side == Side::Source;
  const ClassSet& cs = src ? L->source : L->target;
  const ProductClass& pc = L->products[L->product_of_degree.at(cs.degrees[a.cls] + cs.degrees[b.cls])];
  const auto& blocks = src ? pc.source_blocks : pc.target_blocks;
  auto blk = std::find_if(blocks.begin(), blocks.end(),
                          [&](const ProductBlock& x) { return x.first == a.cls; });
  BigInt rank = blk->offset + a.index * cs.counts[b.cls] + b.index;

  Outcome out;
  if (rank < pc.matched) {
    out.matched = true;
    auto [x, y] = unrank(src ? pc.target_blocks : pc.source_blocks, src ? L->target : L->source, rank);
    out.first = std::move(x);
    out.second = std::move(y);
  } else {
    out.merged = Element{src ? pc.next_source_class : pc.next_target_class, rank - pc.matched};
  }
  return out;
}

std::pair<ImplicitLadder::Element, ImplicitLadder::Element> ImplicitLadder::split(
    Side side, int k, const Element& e) const {
  const LadderLevel* L = level(k);
  if (!L) throw LadderUnavailable("matching level " + std::to_string(k) + " unavailable");
  bool src = side == Side::Source;
  const auto& idx = src ? L->product_of_next_source : L->product_of_next_target;
  const ProductClass& pc = L->products[idx.at(e.cls)];
  return unrank(src ? pc.source_blocks : pc.target_blocks, src ? L->source : L->target,
                e.index + pc.matched);
}

void ImplicitLadder::flatten(Side side, int k, const Element& e, std::vector<int>& out) const {
  if (k == 1) {
    out.push_back(base_symbol(side, e));
    return;
  }
  auto [a, b] = split(side, k - 1, e);
  flatten(side, k - 1, a, out);
  flatten(side, k - 1, b, out);
}

}  // namespace finicode
