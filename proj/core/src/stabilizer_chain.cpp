// Copyright 2026 The revgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "revgate/stabilizer_chain.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>

#include "factorization_table.hpp"
#include "revgate/error.hpp"

namespace revgate {

struct StabilizerChain::LazyTable {
  std::once_flag once;
  std::unique_ptr<FactorizationTable> table;
};

Permutation evaluate(const GenWord& word, const std::vector<Permutation>& gens, std::size_t degree) {
  std::vector<Permutation::Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Permutation::Point>(i);
  std::vector<Permutation> inverses(gens.size());
  for (const GenLetter& l : word) {
    if (l.index >= gens.size()) throw Error("generator word refers to unknown generator");
    const Permutation* g = &gens[l.index];
    if (l.inverse) {
      if (inverses[l.index].degree() == 0) inverses[l.index] = gens[l.index].inverse();
      g = &inverses[l.index];
    }
    for (auto& p : img) p = (*g)[p];
  }
  return Permutation::from_images_unchecked(std::move(img));
}

StabilizerChain::StabilizerChain(std::size_t degree, std::vector<Permutation> generators, ChainOptions options)
    : degree_(degree), generators_(std::move(generators)), lazy_(std::make_unique<LazyTable>()) {
  if (degree_ > kMaxChainDegree) {
    throw ResourceError("chain degree " + std::to_string(degree_) + " exceeds the cap of " +
                        std::to_string(kMaxChainDegree));
  }
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw Error("generator degree does not match chain degree");
  }
  levels_.resize(degree_ > 0 ? degree_ - 1 : 0);

  std::set<Permutation> seen;
  for (const auto& g : generators_) {
    if (g.is_identity() || !seen.insert(g).second) continue;
    add_strong_generator(g, 0, g.first_moved_point());
  }
  if (reached(options.order_bound)) return;
  random_phase(options);
  if (reached(options.order_bound)) return;
  deterministic_phase(options.order_bound);
}

StabilizerChain::~StabilizerChain() = default;
StabilizerChain::StabilizerChain(StabilizerChain&&) noexcept = default;
StabilizerChain& StabilizerChain::operator=(StabilizerChain&&) noexcept = default;

bool StabilizerChain::in_orbit(std::size_t level, Permutation::Point p) const {
  const Level& lv = levels_[level];
  if (lv.label.empty()) return p == level;
  return lv.label[p] != -1;
}

void StabilizerChain::add_strong_generator(Permutation g, std::size_t first_level, std::size_t last_level) {
  const auto index = static_cast<std::uint32_t>(strong_.size());
  strong_inverse_.push_back(g.inverse());
  strong_.push_back(std::move(g));
  last_level = std::min(last_level, levels_.size() - 1);
  for (std::size_t l = first_level; l <= last_level; ++l) {
    Level& lv = levels_[l];
    if (lv.label.empty()) {
      lv.label.assign(degree_, -1);
      lv.label[l] = -2;
      lv.orbit = {static_cast<Permutation::Point>(l)};
    }
    const auto pos = static_cast<std::uint32_t>(lv.gens.size());
    lv.gens.push_back(index);
    for (std::uint32_t i = 0; i < lv.orbit.size(); ++i) lv.pending.emplace_back(i, pos);
    extend_orbit(l);
  }
}

void StabilizerChain::extend_orbit(std::size_t level) {
  Level& lv = levels_[level];
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    const auto p = lv.orbit[i];
    for (std::uint32_t s : lv.gens) {
      const auto image = strong_[s][p];
      if (lv.label[image] != -1) continue;
      lv.label[image] = static_cast<std::int32_t>(s);
      const auto idx = static_cast<std::uint32_t>(lv.orbit.size());
      lv.orbit.push_back(image);
      for (std::uint32_t j = 0; j < lv.gens.size(); ++j) lv.pending.emplace_back(idx, j);
    }
  }
}

std::size_t StabilizerChain::sift(std::vector<Permutation::Point>& g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const auto b = static_cast<Permutation::Point>(l);
    auto p = g[b];
    if (p == b) continue;
    const Level& lv = levels_[l];
    if (lv.label.empty() || lv.label[p] == -1) return l;
    while (p != b) {
      const auto& inv = strong_inverse_[static_cast<std::size_t>(lv.label[p])];
      for (auto& x : g) x = inv[x];
      p = g[b];
    }
  }
  return levels_.size();
}

Permutation StabilizerChain::transversal(std::size_t level, Permutation::Point point) const {
  if (level >= levels_.size() || !in_orbit(level, point)) throw Error("point not in basic orbit");
  const Level& lv = levels_[level];
  std::vector<std::uint32_t> path;
  for (auto p = point; p != level;) {
    const auto s = static_cast<std::uint32_t>(lv.label[p]);
    path.push_back(s);
    p = strong_inverse_[s][p];
  }
  std::vector<Permutation::Point> img(degree_);
  for (std::size_t i = 0; i < degree_; ++i) img[i] = static_cast<Permutation::Point>(i);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    for (auto& x : img) x = strong_[*it][x];
  }
  return Permutation::from_images_unchecked(std::move(img));
}

void StabilizerChain::random_phase(const ChainOptions& options) {
  if (strong_.empty()) return;
  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<Permutation::Point>> pool;
  for (const auto& s : strong_) pool.emplace_back(s.images().begin(), s.images().end());
  while (pool.size() < 10) pool.push_back(pool[pool.size() % strong_.size()]);
  std::vector<Permutation::Point> acc(degree_);
  for (std::size_t i = 0; i < degree_; ++i) acc[i] = static_cast<Permutation::Point>(i);

  std::vector<Permutation::Point> tmp(degree_);
  auto step = [&] {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    // pool[i] <- pool[i] * pool[j]; acc <- acc * pool[i]
    for (std::size_t x = 0; x < degree_; ++x) tmp[x] = pool[j][pool[i][x]];
    pool[i].swap(tmp);
    for (auto& x : acc) x = pool[i][x];
  };
  for (int i = 0; i < 50; ++i) step();

  constexpr int kPatience = 40;
  int misses = 0;
  std::vector<Permutation::Point> g;
  while (misses < kPatience) {
    step();
    g = acc;
    const std::size_t dropped = sift(g, 0);
    if (dropped == levels_.size()) {
      ++misses;
      continue;
    }
    misses = 0;
    add_strong_generator(Permutation::from_images_unchecked(g), 1, dropped);
    if (reached(options.order_bound)) return;
  }
}

void StabilizerChain::deterministic_phase(const std::optional<BigInt>& bound) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  std::vector<Permutation::Point> h(degree_);
  while (i >= 0) {
    Level& lv = levels_[static_cast<std::size_t>(i)];
    if (lv.pending.empty()) {
      --i;
      continue;
    }
    const auto [pi, gi] = lv.pending.front();
    lv.pending.pop_front();
    const auto b = static_cast<Permutation::Point>(i);
    const auto p = lv.orbit[pi];
    const std::uint32_t s = lv.gens[gi];
    const auto ps = strong_[s][p];
    if (p == b && ps == b) continue;  // s itself lies in the next level
    if (lv.label[ps] == static_cast<std::int32_t>(s) && strong_inverse_[s][ps] == p) continue;  // tree edge

    const Permutation u = transversal(static_cast<std::size_t>(i), p);
    for (std::size_t x = 0; x < degree_; ++x) h[x] = strong_[s][u[static_cast<Permutation::Point>(x)]];
    const std::size_t dropped = sift(h, static_cast<std::size_t>(i));
    if (dropped == levels_.size()) continue;
    add_strong_generator(Permutation::from_images_unchecked(h), static_cast<std::size_t>(i) + 1, dropped);
    if (reached(bound)) return;
    i = static_cast<std::ptrdiff_t>(dropped);
  }
}

bool StabilizerChain::reached(const std::optional<BigInt>& bound) const { return bound && order() >= *bound; }

std::vector<Permutation::Point> StabilizerChain::base() const {
  std::vector<Permutation::Point> out;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    if (levels_[l].orbit.size() > 1) out.push_back(static_cast<Permutation::Point>(l));
  }
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) {
    if (lv.orbit.size() > 1) out.push_back(lv.orbit.size());
  }
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt r = 1;
  for (const auto& lv : levels_) {
    if (lv.orbit.size() > 1) r *= lv.orbit.size();
  }
  return r;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw Error("degree mismatch in membership test");
  std::vector<Permutation::Point> h(g.images().begin(), g.images().end());
  return sift(h, 0) == levels_.size();
}

const FactorizationTable& StabilizerChain::table() const {
  std::call_once(lazy_->once, [this] { lazy_->table = std::make_unique<FactorizationTable>(*this); });
  return *lazy_->table;
}

GenWord StabilizerChain::factorize(const Permutation& g) const {
  if (!contains(g)) throw Error("element is not in the group; cannot factorize");
  GenWord word = table().factorize(g);
  if (evaluate(word, generators_, degree_) != g) throw Error("internal error: factorization does not re-evaluate");
  return word;
}

StabilizerChain build_chain(unsigned q, unsigned n, const std::vector<GatePerm>& gens, ChainOptions options) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) {
    if (g.q() != q || g.arity() != n) throw Error("all generators must share alphabet and arity");
    perms.push_back(g.perm());
  }
  return StabilizerChain(table_size(q, n), std::move(perms), std::move(options));
}

StabilizerChain build_chain(const std::vector<GatePerm>& gens, ChainOptions options) {
  if (gens.empty()) return StabilizerChain(1, {}, std::move(options));
  return build_chain(gens.front().q(), gens.front().arity(), gens, std::move(options));
}

BigInt group_order(const StabilizerChain& chain) { return chain.order(); }

bool contains(const StabilizerChain& chain, const GatePerm& g) { return chain.contains(g.perm()); }

GenWord factorize(const StabilizerChain& chain, const GatePerm& g) { return chain.factorize(g.perm()); }

}  // namespace revgate
