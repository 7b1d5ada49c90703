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

#include "finicode/matching.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "finicode/implicit_ladder.hpp"

namespace finicode {

std::shared_ptr<const TupleAlphabet> TupleAlphabet::from_vector(const ProbabilityVector& pv) {
  auto a = std::make_shared<TupleAlphabet>();
  a->exponents = pv.surprisal_bits();
  a->elements.reserve(pv.size());
  for (int s : pv.symbols()) a->elements.emplace_back(s, -1);
  return a;
}

DyadicRational TupleAlphabet::total_mass() const {
  DyadicRational m;
  for (auto e : exponents) m += DyadicRational::pow2(-e);
  return m;
}

std::vector<int> TupleAlphabet::flatten(std::size_t i) const {
  if (rank == 0) return {static_cast<int>(elements.at(i).first)};
  auto out = parent->flatten(static_cast<std::size_t>(elements.at(i).first));
  auto rhs = parent->flatten(static_cast<std::size_t>(elements.at(i).second));
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

ProbabilityVector TupleAlphabet::as_probability_vector() const {
  std::vector<DyadicRational> probs;
  probs.reserve(size());
  for (auto e : exponents) probs.push_back(DyadicRational::pow2(-e));
  return ProbabilityVector::dense(std::move(probs));
}

std::optional<std::uint64_t> Matching::image(std::uint64_t source_product) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), source_product,
                             [](const auto& p, std::uint64_t v) { return p.first < v; });
  if (it == pairs.end() || it->first != source_product) return std::nullopt;
  return it->second;
}

namespace {

DyadicPolynomial gf(const TupleAlphabet& a) {
  DyadicPolynomial g;
  for (auto e : a.exponents) g.add_term(e, DyadicRational::pow2(-e));
  return g;
}

std::map<std::int64_t, std::vector<std::uint64_t>> product_classes(const TupleAlphabet& a) {
  std::map<std::int64_t, std::vector<std::uint64_t>> out;
  const std::uint64_t n = a.size();
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) out[a.exponents[x] + a.exponents[y]].push_back(x * n + y);
  return out;
}

void fill_polynomials(Matching& m, DyadicPolynomial gamma, DyadicPolynomial delta) {
  m.gamma = std::move(gamma);
  m.delta = std::move(delta);
  m.upsilon = m.gamma.square();
  m.omega = m.delta.square();
  m.lambda = {};
  m.xi = {};
  for (const auto& row : m.classes) {
    auto w = DyadicRational::pow2(-row.degree);
    m.lambda.add_term(row.degree, DyadicRational(row.source_count - row.matched_count, 0) * w);
    m.xi.add_term(row.degree, DyadicRational(row.target_count - row.matched_count, 0) * w);
  }
}

Matching from_level(const LadderLevel& L) {
  Matching m;
  m.level = L.level;
  m.mass_reduction = L.mass_reduction;
  m.leftovers_normalized = L.shift.has_value();
  for (const auto& pc : L.products)
    m.classes.push_back({pc.degree, pc.source_count, pc.target_count, pc.matched});
  fill_polynomials(m, L.source.generating_function(), L.target.generating_function());
  return m;
}

ClassSet class_set(const TupleAlphabet& a) {
  std::map<std::int64_t, BigInt> counts;
  for (auto e : a.exponents) counts[e] += 1;
  ClassSet cs;
  for (auto& [d, c] : counts) {
    cs.degrees.push_back(d);
    cs.counts.push_back(c);
  }
  return cs;
}

}  // namespace

Matching build_mompm(std::shared_ptr<const TupleAlphabet> source,
                     std::shared_ptr<const TupleAlphabet> target, std::uint64_t cap) {
  const std::uint64_t nc = source->size(), nd = target->size();
  if (nc * nc > cap || nd * nd > cap)
    throw std::length_error("product alphabet exceeds the materialisation cap");

  auto sc = product_classes(*source);
  auto tc = product_classes(*target);
  std::map<std::int64_t, std::pair<const std::vector<std::uint64_t>*, const std::vector<std::uint64_t>*>>
      joined;
  static const std::vector<std::uint64_t> kEmpty;
  for (const auto& [d, v] : sc) joined[d] = {&v, &kEmpty};
  for (const auto& [d, v] : tc) {
    auto [it, fresh] = joined.try_emplace(d, &kEmpty, &v);
    if (!fresh) it->second.second = &v;
  }

  Matching m;
  m.level = source->rank + 1;
  m.source = source;
  m.target = target;

  auto g = std::make_shared<TupleAlphabet>();
  auto h = std::make_shared<TupleAlphabet>();
  g->rank = h->rank = source->rank + 1;
  g->parent = source;
  h->parent = target;
  std::vector<std::int64_t> g_deg, h_deg;

  for (const auto& [d, lists] : joined) {
    const auto& xs = *lists.first;
    const auto& ys = *lists.second;
    std::size_t k = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < k; ++i) m.pairs.emplace_back(xs[i], ys[i]);
    for (std::size_t i = k; i < xs.size(); ++i) {
      g->elements.emplace_back(xs[i] / nc, xs[i] % nc);
      g_deg.push_back(d);
    }
    for (std::size_t i = k; i < ys.size(); ++i) {
      h->elements.emplace_back(ys[i] / nd, ys[i] % nd);
      h_deg.push_back(d);
    }
    m.classes.push_back({d, BigInt(static_cast<unsigned long>(xs.size())),
                         BigInt(static_cast<unsigned long>(ys.size())),
                         BigInt(static_cast<unsigned long>(k))});
    m.mass_reduction += DyadicRational(static_cast<long>(xs.size() - k)).mul_pow2(-d);
  }
  std::sort(m.pairs.begin(), m.pairs.end());

  std::int64_t shift = 0;
  if (auto lg = m.mass_reduction.exact_log2(); lg && !m.mass_reduction.is_zero()) {
    shift = -*lg;
    m.leftovers_normalized = true;
  }
  for (auto d : g_deg) g->exponents.push_back(d - shift);
  for (auto d : h_deg) h->exponents.push_back(d - shift);
  m.leftover_source = std::move(g);
  m.leftover_target = std::move(h);
  fill_polynomials(m, gf(*source), gf(*target));
  return m;
}

LadderResult iterate_matchings(const ProbabilityVector& r, const ProbabilityVector& s, int depth,
                               std::uint64_t cap) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  LadderResult res;
  res.requested_depth = depth;
  auto c = TupleAlphabet::from_vector(r);
  auto d = TupleAlphabet::from_vector(s);
  std::optional<LadderLevel> agg;

  for (int i = 1; i <= depth; ++i) {
    bool fits = c && c->size() * c->size() <= cap && d->size() * d->size() <= cap;
    if (fits) {
      res.levels.push_back(build_mompm(c, d, cap));
    } else {
      if (c) {
        agg = LadderLevel::build(i, class_set(*c), class_set(*d));
        c.reset();
        d.reset();
      } else {
        agg = LadderLevel::build(i, agg->next_source, agg->next_target);
      }
      res.truncated = true;
      res.levels.push_back(from_level(*agg));
    }
    const Matching& m = res.levels.back();
    if (m.mass_reduction.is_zero()) {
      if (i < depth) {
        res.exhausted = true;
        res.stop_reason = "leftovers empty after level " + std::to_string(i);
      }
      break;
    }
    if (!m.leftovers_normalized) {
      if (i < depth) {
        res.exhausted = true;
        res.stop_reason = "leftover mass " + m.mass_reduction.to_string() + " at level " +
                          std::to_string(i) + " is not a power of two";
      }
      break;
    }
    if (c) {
      c = m.leftover_source;
      d = m.leftover_target;
    }
  }
  return res;
}

}  // namespace finicode
