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
#include <optional>
#include <string>
#include <vector>

#include "revgate/bigint.hpp"
#include "revgate/gate_perm.hpp"
#include "revgate/generation.hpp"

namespace revgate {

/// One parity per weight class of A^n, in weight_classes() order.
class ParitySequence {
 public:
  ParitySequence() = default;
  explicit ParitySequence(std::vector<Parity> bits) : bits_(std::move(bits)) {}

  std::size_t size() const { return bits_.size(); }
  Parity operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<Parity>& bits() const { return bits_; }
  bool all_even() const;

  /// "e"/"o" per class, e.g. "eoee".
  std::string to_string() const;

  friend ParitySequence operator^(const ParitySequence& a, const ParitySequence& b);
  friend bool operator==(const ParitySequence&, const ParitySequence&) = default;
  friend auto operator<=>(const ParitySequence&, const ParitySequence&) = default;

 private:
  std::vector<Parity> bits_;
};

/// Parity of f restricted to each weight class; throws Error unless f is conservative.
ParitySequence parity_sequence(const GatePerm& f);

/// The subgroup of (Z_2)^W spanned by parity sequences of generators applied on n wires.
class ParitySpan {
 public:
  ParitySpan(std::size_t length, std::vector<ParitySequence> generators);

  std::size_t rank() const { return basis_.size(); }
  BigInt size() const;
  bool contains(const ParitySequence& s) const;

  /// All members, in ascending order. Throws ResourceError above rank 20.
  std::vector<ParitySequence> elements() const;

  const std::vector<ParitySequence>& basis() const { return basis_; }

 private:
  ParitySequence reduce(ParitySequence s) const;

  std::size_t length_;
  std::vector<ParitySequence> basis_;  // echelon form, distinct pivots
  std::vector<std::size_t> pivots_;
};

/// Span of the parity sequences of f (+) id for each generator f (arity <= n).
/// Rewiring does not change a parity sequence, so one placement per
/// generator represents all of its extensions.
ParitySpan parity_span(unsigned q, const std::vector<GatePerm>& gens, unsigned n);

/// A word swap inside one binary weight class (i ones, n-i zeros) whose
/// parity sequence lies outside the span of the generators, trying
/// i = 1, 2, ... in order; nullopt when every candidate is spanned.
std::optional<GatePerm> find_unreachable_conservative(unsigned q, const std::vector<GatePerm>& gens, unsigned n);

/// The swap of the two smallest words with i ones and n-i zeros.
GatePerm binary_class_swap(unsigned q, unsigned n, unsigned ones);

struct ConservedQuantityCheck {
  bool compatible = true;  ///< u ~ v implies ua ~ va
  bool permutable = true;  ///< u ~ v implies pi(u) ~ pi(v)
  std::string detail;      ///< first counterexample, if any

  bool valid() const { return compatible && permutable; }
};

/// Exhaustive check of both conditions over all words of length <= n_max.
ConservedQuantityCheck check_conserved_quantity(const Classifier& classifier, unsigned q, unsigned n_max);

Classifier weight_classifier();
/// Exact number of zeros together with the number of ones modulo k.
Classifier zeros_and_ones_mod_k_classifier(unsigned k);
Classifier first_symbol_classifier();

}  // namespace revgate
