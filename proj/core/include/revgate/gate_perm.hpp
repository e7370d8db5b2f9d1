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

#include "revgate/permutation.hpp"
#include "revgate/word.hpp"

namespace revgate {

/// A bijection of A^n (an n-ary reversible gate) as a table over word codes.
class GatePerm {
 public:
  GatePerm() = default;

  /// Throws Error unless `table` is a bijection of {0..q^n-1} and n >= 1.
  GatePerm(unsigned q, unsigned n, std::vector<Code> table);
  GatePerm(unsigned q, unsigned n, Permutation perm);

  static GatePerm identity(unsigned q, unsigned n);

  /// The word cycle w[0] -> w[1] -> ... -> w[0]; two words give a word swap.
  static GatePerm word_cycle(const std::vector<Word>& words);

  /// Symbol permutation on one wire: sigma[a] is the image of symbol a.
  static GatePerm symbol_perm(unsigned q, const std::vector<Symbol>& sigma);

  unsigned q() const { return q_; }
  unsigned arity() const { return n_; }
  std::size_t size() const { return perm_.degree(); }
  const Permutation& perm() const { return perm_; }
  std::span<const Code> table() const { return perm_.images(); }
  Code operator[](Code c) const { return perm_[c]; }

  Word apply(const Word& w) const;
  GatePerm inverse() const;
  bool is_identity() const { return perm_.is_identity(); }

  friend bool operator==(const GatePerm&, const GatePerm&) = default;
  friend auto operator<=>(const GatePerm&, const GatePerm&) = default;

 private:
  unsigned q_ = 2;
  unsigned n_ = 0;
  Permutation perm_;
};

Parity perm_parity(const GatePerm& f);

/// A partition of A^n into classes. Classes are numbered 0..count()-1 and
/// each class lists its members in ascending code order.
class ComponentPartition {
 public:
  ComponentPartition() = default;

  /// `labels[c]` is an arbitrary class id for word code c; classes are
  /// renumbered in order of their smallest member.
  static ComponentPartition from_labels(unsigned q, unsigned n, const std::vector<std::uint32_t>& labels);

  unsigned q() const { return q_; }
  unsigned arity() const { return n_; }
  std::size_t count() const { return classes_.size(); }
  std::uint32_t class_of(Code c) const { return class_of_[c]; }
  const std::vector<Code>& members(std::size_t i) const { return classes_[i]; }
  const std::vector<std::vector<Code>>& classes() const { return classes_; }
  std::vector<std::size_t> sizes() const;

  /// Canonical representative (smallest member) of the class containing c.
  Code representative(Code c) const { return classes_[class_of_[c]].front(); }

  friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;

 private:
  unsigned q_ = 2;
  unsigned n_ = 0;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<Code>> classes_;
};

/// Weight classes of A^n, ordered by smallest member code (equivalently,
/// by weight vector in descending lexicographic order).
ComponentPartition weight_classes(unsigned q, unsigned n);

bool is_conservative(const GatePerm& f);

/// Conservative and even on every weight class.
bool is_alt_conservative(const GatePerm& f);

/// Weight preserved coordinatewise modulo k. Throws Error when k < 1.
bool is_mod_k_conservative(const GatePerm& f, unsigned k);

/// First input word whose weight f changes, if any.
std::optional<Word> conservation_witness(const GatePerm& f);

}  // namespace revgate
