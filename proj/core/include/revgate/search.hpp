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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "revgate/circuit.hpp"
#include "revgate/gate_perm.hpp"

namespace revgate {

/// Search states are stored one byte per point.
inline constexpr std::size_t kMaxSearchDegree = 256;

/// One placement of a base gate: perm == extend(base.perm(), n, wires).
struct SearchInstance {
  std::size_t base = 0;
  std::vector<unsigned> wires;
  GatePerm perm;
};

/// All distinct placements of one or more base gates on n wires.
class InstanceSet {
 public:
  /// Placements are enumerated base by base, wire tuples in lexicographic
  /// order; a placement whose table was already seen is dropped.
  InstanceSet(std::vector<GateDef> bases, unsigned n);

  unsigned q() const { return q_; }
  unsigned arity() const { return n_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return instances_.size(); }
  const SearchInstance& operator[](std::size_t i) const { return instances_[i]; }
  const std::vector<SearchInstance>& instances() const { return instances_; }
  const std::vector<GateDef>& bases() const { return bases_; }

  /// Index of the instance equal to the inverse of instance i, if it is in the set.
  std::optional<std::size_t> inverse_of(std::size_t i) const { return inverse_[i]; }

  /// The circuit applying the listed instances in order.
  Circuit to_circuit(const std::vector<std::size_t>& word) const;

 private:
  unsigned q_ = 2;
  unsigned n_ = 0;
  std::size_t degree_ = 0;
  std::vector<GateDef> bases_;
  std::vector<SearchInstance> instances_;
  std::vector<std::optional<std::size_t>> inverse_;
};

InstanceSet enumerate_instances(const GateDef& base, unsigned n);

struct SearchOptions {
  /// Upper bound on stored search states, in bytes. Exceeding it throws ResourceError.
  std::size_t memory_budget = std::size_t{2} << 30;
  /// Threads for the backward phase of mitm_min; results do not depend on it.
  unsigned workers = 1;
  /// Skip an instance right after its own inverse. Never changes minimal lengths.
  bool prune_inverse = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;           ///< states generated (forward and backward)
  std::uint64_t stored_states = 0;   ///< distinct states kept in memory
  std::size_t stored_bytes = 0;
  double seconds = 0;
};

struct SearchResult {
  enum class Status { Found, Exhausted };

  Status status = Status::Exhausted;
  /// Length of the circuit when Found; the exhausted depth otherwise.
  unsigned depth = 0;
  /// Instance indices of the circuit, in application order.
  std::vector<std::size_t> word;
  std::optional<Circuit> circuit;
  SearchStats stats;

  bool found() const { return status == Status::Found; }
};

/// Layered breadth-first search from the identity. Returns the
/// lexicographically least word among the shortest ones (by instance index),
/// or Exhausted(max_depth).
SearchResult bfs_min(const GatePerm& target, const InstanceSet& set, unsigned max_depth,
                     const SearchOptions& options = {});

/// Meet in the middle: a stored forward ball of radius floor(d/2) joined
/// with backward depth-first search from the target up to ceil(d/2). Same
/// minimal length as bfs_min; among minimal candidates it returns the
/// lexicographically least it meets.
SearchResult mitm_min(const GatePerm& target, const InstanceSet& set, unsigned max_depth,
                      const SearchOptions& options = {});

/// True iff no circuit of length <= d over the set realizes target.
bool certify_lower_bound(const GatePerm& target, const InstanceSet& set, unsigned d, const SearchOptions& options = {});

}  // namespace revgate
