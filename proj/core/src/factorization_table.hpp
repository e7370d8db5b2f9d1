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

#include <vector>

#include "revgate/stabilizer_chain.hpp"

namespace revgate {

/// Transversal tables holding short generator words, filled with the
/// Minkwitz procedure: short and random words are sifted through the chain,
/// and each table slot keeps the shortest word seen that maps the level's
/// base point to the slot's point.
class FactorizationTable {
 public:
  explicit FactorizationTable(const StabilizerChain& chain);

  /// Word for a member g; the caller checks membership first.
  GenWord factorize(const Permutation& g) const;

  std::size_t max_entry_length() const;

 private:
  struct Entry {
    bool set = false;
    std::vector<Permutation::Point> perm;
    GenWord word;
  };

  struct Element {
    std::vector<Permutation::Point> perm;
    GenWord word;
  };

  Element letter_element(const GenLetter& l) const;
  Element product(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  GenLetter invert(const GenLetter& l) const;
  void reduce(GenWord& w) const;
  void store_inverse(std::size_t slot, const Element& t);
  void sift(Element t, std::size_t from_slot, std::size_t limit);
  void improve(std::size_t limit);
  bool full() const;

  const StabilizerChain& chain_;
  std::size_t degree_;
  std::vector<GenLetter> letters_;
  std::vector<GenLetter> forward_inverse_;  // inverse letter of (index, false), by generator index
  std::vector<Permutation> gen_perms_;
  std::vector<Permutation> gen_inverses_;
  std::vector<std::size_t> levels_;  // chain levels with non-trivial orbits
  std::vector<std::vector<Entry>> table_;
};

}  // namespace revgate
