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

#include <string>
#include <vector>

#include "revgate/gate_perm.hpp"

namespace revgate {

/// A permutation alpha of the wire indices {0..n-1}; images[i] = alpha(i).
class WirePermSpec {
 public:
  WirePermSpec() = default;
  explicit WirePermSpec(std::vector<unsigned> images);

  static WirePermSpec identity(unsigned n);

  /// Disjoint cycles over 0-based wires; each cycle maps c[i] -> c[i+1].
  static WirePermSpec from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles);

  unsigned arity() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned i) const { return images_[i]; }
  const std::vector<unsigned>& images() const { return images_; }
  WirePermSpec inverse() const;

  /// alpha * beta in left-to-right order: alpha first, then beta.
  friend WirePermSpec compose_lr(const WirePermSpec& alpha, const WirePermSpec& beta);

  friend bool operator==(const WirePermSpec&, const WirePermSpec&) = default;

 private:
  std::vector<unsigned> images_;
};

/// A control word w (length k) together with a base gate p of arity l.
struct ControlledSpec {
  Word control;
  GatePerm base;
};

/// pi_alpha: output position alpha(i) receives input symbol x_i, i.e. output
/// position i holds x_{alpha^-1(i)}.
GatePerm wire_perm(const WirePermSpec& spec, unsigned q);

/// x -> then(first(x)).
GatePerm compose_lr(const GatePerm& first, const GatePerm& then);

GatePerm inverse(const GatePerm& f);

/// f on the first arity(f) wires, g on the remaining arity(g) wires.
GatePerm parallel(const GatePerm& f, const GatePerm& g);

/// f applied to the listed wires of A^n (positions[i] receives f's wire i),
/// identity elsewhere.
GatePerm extend(const GatePerm& f, unsigned n, const std::vector<unsigned>& positions);

/// Every placement extend(g, n, wires) of every gate (arity <= n), without
/// duplicate tables, ordered by gate then by wire tuple (lexicographic).
std::vector<GatePerm> extensions(const std::vector<GatePerm>& gates, unsigned n);

/// Generalized composition f o_k g of arity n+m-k: g reads f's first k
/// outputs followed by the fresh inputs x_{n+1}..x_{n+m-k}; g's outputs come
/// first, then f's remaining outputs.
GatePerm gencomp(const GatePerm& f, const GatePerm& g, unsigned k);

/// pi_alpha, then f, then pi_alpha^-1.
GatePerm rewire(const GatePerm& f, const WirePermSpec& alpha);

/// C_w[p]: applies p to the last l symbols exactly when the first k equal w.
GatePerm controlled(const ControlledSpec& spec);

/// The gate families whose controlled versions are control-universal.
enum class Family {
  P1,    ///< symbol swaps (a b)
  P2,    ///< word swaps (ab ba)
  P3,    ///< 3-cycles (ab ac db), a != d, b != c
  P4,    ///< word rotations (abc bca cab)
  P2K,   ///< P2 plus the power swaps (a^k b^k), for Mod_k
};

Family parse_family(const std::string& name);
std::string to_string(Family family);

/// The deduplicated base gates of a family, in code order. `k` is used only by P2K.
std::vector<GatePerm> family_bases(Family family, unsigned q, unsigned k = 0);

/// One rewired controlled gate: `perm` equals C_control[base] placed on
/// `wires` (wires[i] carries the controlled gate's wire i).
struct ControlledInstance {
  Word control;
  GatePerm base;
  std::vector<unsigned> wires;
  GatePerm perm;
};

/// All rewirings of C_w[p], p in the family and |w| = n - arity(p), without
/// duplicate tables. Ordered by (control word code, base table, wire
/// assignment); the first occurrence of a table is kept.
std::vector<ControlledInstance> controlled_instances(Family family, unsigned q, unsigned n, unsigned k = 0);

/// The tables of controlled_instances().
std::vector<GatePerm> controlled_instance_perms(Family family, unsigned q, unsigned n, unsigned k = 0);

}  // namespace revgate
