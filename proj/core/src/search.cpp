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

#include "revgate/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string_view>
#include <thread>

#include "revgate/error.hpp"

namespace revgate {

namespace {

using Clock = std::chrono::steady_clock;
using Index = std::uint32_t;

// Distinct permutation tables, one byte per point, with BFS bookkeeping.
class StateStore {
 public:
  StateStore(std::size_t degree, std::size_t budget) : degree_(degree), budget_(budget), slots_(1024, 0) {}

  Index size() const { return static_cast<Index>(parent_.size()); }
  const std::uint8_t* state(Index i) const { return arena_.data() + std::size_t{i} * degree_; }
  Index parent(Index i) const { return parent_[i]; }
  std::uint16_t via(Index i) const { return via_[i]; }
  std::uint8_t depth(Index i) const { return depth_[i]; }

  std::size_t bytes() const {
    return arena_.capacity() + parent_.capacity() * sizeof(Index) + via_.capacity() * 2 + depth_.capacity() +
           slots_.size() * sizeof(Index);
  }

  std::optional<Index> find(const std::uint8_t* s) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t pos = hash(s) & mask;; pos = (pos + 1) & mask) {
      const Index slot = slots_[pos];
      if (slot == 0) return std::nullopt;
      if (std::memcmp(state(slot - 1), s, degree_) == 0) return slot - 1;
    }
  }

  // Returns the index of s and whether it was new.
  std::pair<Index, bool> insert(const std::uint8_t* s, Index parent, std::uint16_t via, std::uint8_t depth) {
    if ((std::size_t{size()} + 1) * 2 > slots_.size()) grow();
    const std::size_t mask = slots_.size() - 1;
    std::size_t pos = hash(s) & mask;
    for (;; pos = (pos + 1) & mask) {
      const Index slot = slots_[pos];
      if (slot == 0) break;
      if (std::memcmp(state(slot - 1), s, degree_) == 0) return {slot - 1, false};
    }
    if ((std::size_t{size()} + 1) * (degree_ + 2 * sizeof(Index) + sizeof(Index) + 3) > budget_) {
      throw ResourceError("search exceeded its memory budget of " + std::to_string(budget_) + " bytes after " +
                          std::to_string(size()) + " states");
    }
    const Index index = size();
    arena_.insert(arena_.end(), s, s + degree_);
    parent_.push_back(parent);
    via_.push_back(via);
    depth_.push_back(depth);
    slots_[pos] = index + 1;
    return {index, true};
  }

  std::vector<std::size_t> word(Index i) const {
    std::vector<std::size_t> w;
    while (i != 0) {
      w.push_back(via_[i]);
      i = parent_[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

 private:
  std::size_t hash(const std::uint8_t* s) const {
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(s), degree_));
  }

  void grow() {
    std::vector<Index> bigger(slots_.size() * 2, 0);
    const std::size_t mask = bigger.size() - 1;
    for (Index i = 0; i < size(); ++i) {
      std::size_t pos = hash(state(i)) & mask;
      while (bigger[pos] != 0) pos = (pos + 1) & mask;
      bigger[pos] = i + 1;
    }
    slots_.swap(bigger);
  }

  std::size_t degree_;
  std::size_t budget_;
  std::vector<std::uint8_t> arena_;
  std::vector<Index> parent_;
  std::vector<std::uint16_t> via_;
  std::vector<std::uint8_t> depth_;
  std::vector<Index> slots_;
};

// Instance tables and their inverses as bytes.
struct ByteTables {
  std::size_t degree = 0;
  std::vector<std::uint8_t> forward;
  std::vector<std::uint8_t> backward;
  std::vector<std::int32_t> inverse;  // index of the inverse instance, or -1

  explicit ByteTables(const InstanceSet& set) : degree(set.degree()) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      const auto t = set[i].perm.table();
      const auto inv = set[i].perm.inverse();
      for (std::size_t x = 0; x < degree; ++x) forward.push_back(static_cast<std::uint8_t>(t[x]));
      for (std::size_t x = 0; x < degree; ++x) backward.push_back(static_cast<std::uint8_t>(inv[static_cast<Code>(x)]));
      const auto j = set.inverse_of(i);
      inverse.push_back(j ? static_cast<std::int32_t>(*j) : -1);
    }
  }

  const std::uint8_t* fwd(std::size_t i) const { return forward.data() + i * degree; }
  const std::uint8_t* bwd(std::size_t i) const { return backward.data() + i * degree; }
};

// out[x] = g[s[x]]: s first, then g.
inline void step(const std::uint8_t* s, const std::uint8_t* g, std::uint8_t* out, std::size_t degree) {
  for (std::size_t x = 0; x < degree; ++x) out[x] = g[s[x]];
}

void check_search_inputs(const GatePerm& target, const InstanceSet& set, unsigned max_depth) {
  if (set.degree() > kMaxSearchDegree) {
    throw ResourceError("search degree " + std::to_string(set.degree()) + " exceeds " +
                        std::to_string(kMaxSearchDegree));
  }
  if (set.size() > 65535) throw ResourceError("too many search instances");
  if (max_depth > 255) throw Error("search depth above 255");
  if (target.q() != set.q() || target.arity() != set.arity()) {
    throw Error("target does not match the instance set's alphabet and arity");
  }
}

std::vector<std::uint8_t> bytes_of(const GatePerm& g) {
  std::vector<std::uint8_t> out;
  for (Code c : g.table()) out.push_back(static_cast<std::uint8_t>(c));
  return out;
}

SearchResult finish(SearchResult r, const GatePerm& target, const InstanceSet& set, Clock::time_point start) {
  if (r.found()) {
    r.circuit = set.to_circuit(r.word);
    if (to_perm(*r.circuit) != target) throw std::logic_error("search returned a circuit that does not realize the target");
  }
  r.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

// Breadth-first ball of the given radius. When `target` is set the search
// stops at its first discovery, whose index is returned.
std::optional<Index> grow_ball(StateStore& store, const ByteTables& tables, std::size_t count, unsigned radius,
                               bool prune, const std::uint8_t* target, SearchStats& stats) {
  std::vector<std::uint8_t> id(tables.degree);
  for (std::size_t x = 0; x < id.size(); ++x) id[x] = static_cast<std::uint8_t>(x);
  store.insert(id.data(), 0, 0, 0);
  if (target && std::memcmp(target, id.data(), id.size()) == 0) return 0;
  std::vector<std::uint8_t> next(tables.degree);
  Index begin = 0;
  Index end = 1;
  for (unsigned depth = 1; depth <= radius && begin < end; ++depth) {
    for (Index idx = begin; idx < end; ++idx) {
      const int skip = (prune && idx != 0) ? tables.inverse[store.via(idx)] : -1;
      for (std::size_t i = 0; i < count; ++i) {
        if (static_cast<int>(i) == skip) continue;
        step(store.state(idx), tables.fwd(i), next.data(), tables.degree);
        ++stats.nodes;
        const auto [at, inserted] = store.insert(next.data(), idx, static_cast<std::uint16_t>(i),
                                                 static_cast<std::uint8_t>(depth));
        if (inserted && target && std::memcmp(target, next.data(), next.size()) == 0) return at;
      }
    }
    begin = end;
    end = store.size();
  }
  return std::nullopt;
}

struct Candidate {
  unsigned length = 0;
  std::vector<std::size_t> word;

  bool better_than(const Candidate& o) const { return std::tie(length, word) < std::tie(o.length, o.word); }
};

// Exact-depth backward search from the target, over first steps first, first+stride, ...
class BackwardSearch {
 public:
  BackwardSearch(const StateStore& ball, const ByteTables& tables, std::size_t count, bool prune)
      : ball_(ball), tables_(tables), count_(count), prune_(prune) {}

  std::optional<Candidate> run(const std::vector<std::uint8_t>& target, unsigned depth, std::size_t first,
                               std::size_t stride, std::uint64_t& nodes) {
    depth_ = depth;
    best_.reset();
    nodes_ = 0;
    buffers_.assign((depth + 1) * tables_.degree, 0);
    std::copy(target.begin(), target.end(), buffers_.begin());
    path_.assign(depth, 0);
    for (std::size_t i = first; i < count_; i += stride) descend(0, i);
    nodes += nodes_;
    return best_;
  }

 private:
  void descend(unsigned level, std::size_t i) {
    const std::size_t d = tables_.degree;
    std::uint8_t* next = buffers_.data() + (level + 1) * d;
    step(buffers_.data() + level * d, tables_.bwd(i), next, d);
    ++nodes_;
    path_[level] = i;
    if (level + 1 == depth_) {
      if (const auto hit = ball_.find(next)) record(*hit);
      return;
    }
    const int skip = prune_ ? tables_.inverse[i] : -1;
    for (std::size_t k = 0; k < count_; ++k) {
      if (static_cast<int>(k) != skip) descend(level + 1, k);
    }
  }

  void record(Index hit) {
    Candidate c;
    c.word = ball_.word(hit);
    c.word.insert(c.word.end(), path_.rbegin(), path_.rend());
    c.length = static_cast<unsigned>(c.word.size());
    if (!best_ || c.better_than(*best_)) best_ = std::move(c);
  }

  const StateStore& ball_;
  const ByteTables& tables_;
  std::size_t count_;
  bool prune_;
  unsigned depth_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint8_t> buffers_;
  std::vector<std::size_t> path_;
  std::optional<Candidate> best_;
};

}  // namespace

InstanceSet::InstanceSet(std::vector<GateDef> bases, unsigned n) : n_(n), bases_(std::move(bases)) {
  if (bases_.empty()) throw Error("instance set needs at least one base gate");
  q_ = bases_.front().q();
  degree_ = table_size(q_, n);
  std::map<GatePerm, std::size_t> seen;
  for (std::size_t b = 0; b < bases_.size(); ++b) {
    const auto& base = bases_[b];
    if (base.q() != q_) throw Error("instance set bases must share the alphabet");
    if (base.arity() > n) throw Error("base gate '" + base.name() + "' is wider than " + std::to_string(n) + " wires");
    const unsigned a = base.arity();
    std::vector<unsigned> wires(a);
    std::vector<bool> used(n, false);
    // injective wire tuples in lexicographic order
    auto visit = [&](auto&& self, unsigned pos) -> void {
      if (pos == a) {
        GatePerm perm = extend(base.perm(), n, wires);
        if (seen.emplace(perm, instances_.size()).second) instances_.push_back({b, wires, std::move(perm)});
        return;
      }
      for (unsigned w = 0; w < n; ++w) {
        if (used[w]) continue;
        used[w] = true;
        wires[pos] = w;
        self(self, pos + 1);
        used[w] = false;
      }
    };
    visit(visit, 0);
  }
  for (const auto& inst : instances_) {
    const auto it = seen.find(inst.perm.inverse());
    inverse_.push_back(it == seen.end() ? std::nullopt : std::optional<std::size_t>(it->second));
  }
}

Circuit InstanceSet::to_circuit(const std::vector<std::size_t>& word) const {
  Circuit c(q_, n_);
  for (const auto& b : bases_) c.add_gate(b);
  for (std::size_t i : word) {
    if (i >= instances_.size()) throw Error("instance index out of range");
    c.apply(instances_[i].base, instances_[i].wires);
  }
  return c;
}

InstanceSet enumerate_instances(const GateDef& base, unsigned n) { return InstanceSet({base}, n); }

SearchResult bfs_min(const GatePerm& target, const InstanceSet& set, unsigned max_depth, const SearchOptions& options) {
  const auto start = Clock::now();
  check_search_inputs(target, set, max_depth);
  const ByteTables tables(set);
  StateStore store(set.degree(), options.memory_budget);
  const auto goal = bytes_of(target);
  SearchResult r;
  const auto hit = grow_ball(store, tables, set.size(), max_depth, options.prune_inverse, goal.data(), r.stats);
  r.stats.stored_states = store.size();
  r.stats.stored_bytes = store.bytes();
  if (hit) {
    r.status = SearchResult::Status::Found;
    r.word = store.word(*hit);
    r.depth = static_cast<unsigned>(r.word.size());
  } else {
    r.status = SearchResult::Status::Exhausted;
    r.depth = max_depth;
  }
  return finish(std::move(r), target, set, start);
}

SearchResult mitm_min(const GatePerm& target, const InstanceSet& set, unsigned max_depth, const SearchOptions& options) {
  const auto start = Clock::now();
  check_search_inputs(target, set, max_depth);
  const ByteTables tables(set);
  const unsigned forward = max_depth / 2;
  const unsigned backward = max_depth - forward;
  StateStore ball(set.degree(), options.memory_budget);
  SearchResult r;
  grow_ball(ball, tables, set.size(), forward, options.prune_inverse, nullptr, r.stats);
  r.stats.stored_states = ball.size();
  r.stats.stored_bytes = ball.bytes();
  const auto goal = bytes_of(target);

  std::optional<Candidate> best;
  if (const auto hit = ball.find(goal.data())) {
    best = Candidate{ball.depth(*hit), ball.word(*hit)};
  }
  const unsigned workers = std::max(1U, options.workers);
  for (unsigned j = 1; j <= backward && !best; ++j) {
    std::vector<std::optional<Candidate>> found(workers);
    std::vector<std::uint64_t> nodes(workers, 0);
    auto work = [&](unsigned w) {
      BackwardSearch search(ball, tables, set.size(), options.prune_inverse);
      found[w] = search.run(goal, j, w, workers, nodes[w]);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    for (unsigned w = 0; w < workers; ++w) {
      r.stats.nodes += nodes[w];
      if (found[w] && (!best || found[w]->better_than(*best))) best = found[w];
    }
  }
  if (best) {
    r.status = SearchResult::Status::Found;
    r.word = best->word;
    r.depth = best->length;
  } else {
    r.status = SearchResult::Status::Exhausted;
    r.depth = max_depth;
  }
  return finish(std::move(r), target, set, start);
}

bool certify_lower_bound(const GatePerm& target, const InstanceSet& set, unsigned d, const SearchOptions& options) {
  return !mitm_min(target, set, d, options).found();
}

}  // namespace revgate
