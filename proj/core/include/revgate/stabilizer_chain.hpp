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

#include <cstdint>
#include <deque>
#include <utility>
#include <memory>
#include <optional>
#include <vector>

#include "revgate/bigint.hpp"
#include "revgate/gate_perm.hpp"
#include "revgate/permutation.hpp"

namespace revgate {

/// Chains are only built for degrees up to this bound.
inline constexpr std::size_t kMaxChainDegree = 4096;

/// One letter of a word over a generator list: generator `index`, or its inverse.
struct GenLetter {
  std::uint32_t index = 0;
  bool inverse = false;

  friend bool operator==(const GenLetter&, const GenLetter&) = default;
  friend auto operator<=>(const GenLetter&, const GenLetter&) = default;
};

using GenWord = std::vector<GenLetter>;

/// Evaluates a generator word left to right (first letter applies first).
Permutation evaluate(const GenWord& word, const std::vector<Permutation>& gens, std::size_t degree);

struct ChainOptions {
  /// Known upper bound on the group order (e.g. the order of a class the
  /// generators are known to lie in). Construction stops as soon as the
  /// chain reaches it, which proves the chain complete.
  std::optional<BigInt> order_bound;
  /// Seed for the randomized first phase; fixed so that chains are reproducible.
  std::uint64_t seed = 0x5eed5eedULL;
};

class FactorizationTable;

/// Base and strong generating set for a permutation group, with Schreier
/// trees for the basic orbits.
///
/// The base is 0, 1, ..., degree-2 in ascending order; levels whose basic
/// orbit is trivial cost nothing. Construction runs a seeded
/// random Schreier-Sims phase followed by a deterministic Schreier
/// generator check, so the result does not depend on anything but the
/// inputs and the seed.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::vector<Permutation> generators, ChainOptions options = {});
  ~StabilizerChain();
  StabilizerChain(StabilizerChain&&) noexcept;
  StabilizerChain& operator=(StabilizerChain&&) noexcept;

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<Permutation::Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;
  std::size_t levels() const { return levels_.size(); }

  BigInt order() const;

  bool contains(const Permutation& g) const;

  /// A word over generators() whose left-to-right product is g; throws
  /// Error when g is not in the group. Words are short but not minimal.
  GenWord factorize(const Permutation& g) const;

  /// Transversal element of level `level` mapping its base point to `point`.
  Permutation transversal(std::size_t level, Permutation::Point point) const;

 private:
  // Level i stabilizes base points 0..i-1; its base point is i. Levels whose
  // generator list is empty have the trivial orbit and no label storage.
  struct Level {
    std::vector<std::uint32_t> gens;  // indices into strong_
    std::vector<Permutation::Point> orbit;
    std::vector<std::int32_t> label;  // -1: not in orbit, -2: root, else strong generator index
    std::deque<std::pair<std::uint32_t, std::uint32_t>> pending;  // (orbit index, position in gens)
  };

  bool in_orbit(std::size_t level, Permutation::Point p) const;
  void add_strong_generator(Permutation g, std::size_t first_level, std::size_t last_level);
  void extend_orbit(std::size_t level);
  // Sifts g from `from_level`; returns the level where it dropped out
  // (levels() when it sifted through every level).
  std::size_t sift(std::vector<Permutation::Point>& g, std::size_t from_level) const;
  void random_phase(const ChainOptions& options);
  void deterministic_phase(const std::optional<BigInt>& bound);
  bool reached(const std::optional<BigInt>& bound) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inverse_;
  std::vector<Level> levels_;

  struct LazyTable;
  const FactorizationTable& table() const;

  mutable std::unique_ptr<LazyTable> lazy_;

  friend class FactorizationTable;
};

/// Chain for a list of gates sharing (q, n); an empty list gives the trivial group.
StabilizerChain build_chain(const std::vector<GatePerm>& gens, ChainOptions options = {});
StabilizerChain build_chain(unsigned q, unsigned n, const std::vector<GatePerm>& gens, ChainOptions options = {});

BigInt group_order(const StabilizerChain& chain);
bool contains(const StabilizerChain& chain, const GatePerm& g);
GenWord factorize(const StabilizerChain& chain, const GatePerm& g);

}  // namespace revgate
