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

#include "factorization_table.hpp"

#include <algorithm>
#include <random>

#include "revgate/error.hpp"

namespace revgate {

namespace {

constexpr std::size_t kInitialLimit = 64;
constexpr std::size_t kWordsPerRound = 4000;
constexpr std::size_t kMaxWords = 4'000'000;

}  // namespace

FactorizationTable::FactorizationTable(const StabilizerChain& chain) : chain_(chain), degree_(chain.degree()) {
  const auto& gens = chain.generators();
  std::vector<Permutation> distinct;
  for (std::uint32_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_identity() || std::find(distinct.begin(), distinct.end(), gens[i]) != distinct.end()) continue;
    distinct.push_back(gens[i]);
    letters_.push_back({i, false});
  }
  gen_perms_ = gens;
  for (const auto& g : gens) gen_inverses_.push_back(g.inverse());

  forward_inverse_.resize(gens.size());
  // Inverse letters: prefer a generator equal to the inverse over an inverted letter.
  const std::size_t forward = letters_.size();
  for (std::size_t li = 0; li < forward; ++li) {
    const auto idx = letters_[li].index;
    const Permutation& inv = gen_inverses_[idx];
    GenLetter inverse_letter{idx, true};
    if (gens[idx].is_involution()) {
      inverse_letter = {idx, false};
    } else {
      for (std::size_t lj = 0; lj < forward; ++lj) {
        if (gens[letters_[lj].index] == inv) {
          inverse_letter = letters_[lj];
          break;
        }
      }
      if (inverse_letter.inverse) letters_.push_back(inverse_letter);
    }
    forward_inverse_[idx] = inverse_letter;
  }

  const auto base = chain.base();
  for (auto b : base) {
    levels_.push_back(b);
    std::vector<Entry> row(degree_);
    row[b].set = true;
    row[b].perm.resize(degree_);
    for (std::size_t i = 0; i < degree_; ++i) row[b].perm[i] = static_cast<Permutation::Point>(i);
    table_.push_back(std::move(row));
  }
  if (levels_.empty()) return;

  std::mt19937_64 rng(0xfac7051eULL);
  std::uniform_int_distribution<std::size_t> pick(0, letters_.size() - 1);
  std::size_t limit = kInitialLimit;
  std::size_t words = 0;

  // Short words first: all letters and all products of two letters.
  for (const auto& a : letters_) {
    sift(letter_element(a), 0, limit);
    for (const auto& b : letters_) {
      if (letters_.size() > 64) break;
      sift(product(letter_element(a), letter_element(b)), 0, limit);
    }
  }

  std::size_t filled_at = 0;
  while (true) {
    for (std::size_t r = 0; r < kWordsPerRound; ++r, ++words) {
      std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(2, limit / 4));
      Element t = letter_element(letters_[pick(rng)]);
      const std::size_t len = length(rng);
      for (std::size_t k = 1; k < len; ++k) t = product(t, letter_element(letters_[pick(rng)]));
      sift(std::move(t), 0, limit);
    }
    improve(limit);
    if (full()) {
      // A few extra rounds shorten the entries further.
      if (filled_at == 0) filled_at = words;
      if (words >= 2 * filled_at || words >= filled_at + 4 * kWordsPerRound) break;
      continue;
    }
    if (words >= kMaxWords) throw ResourceError("factorization tables did not fill within the word budget");
    limit *= 2;
  }
}

FactorizationTable::Element FactorizationTable::letter_element(const GenLetter& l) const {
  const Permutation& p = l.inverse ? gen_inverses_[l.index] : gen_perms_[l.index];
  return {std::vector<Permutation::Point>(p.images().begin(), p.images().end()), GenWord{l}};
}

GenLetter FactorizationTable::invert(const GenLetter& l) const {
  return l.inverse ? GenLetter{l.index, false} : forward_inverse_[l.index];
}

void FactorizationTable::reduce(GenWord& w) const {
  // Free reduction: cancel adjacent letter/inverse pairs.
  GenWord out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && invert(out.back()) == l) {
      out.pop_back();
      continue;
    }
    out.push_back(l);
  }
  w = std::move(out);
}

FactorizationTable::Element FactorizationTable::product(const Element& a, const Element& b) const {
  Element r;
  r.perm.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r.perm[i] = b.perm[a.perm[i]];
  r.word = a.word;
  r.word.insert(r.word.end(), b.word.begin(), b.word.end());
  reduce(r.word);
  return r;
}

FactorizationTable::Element FactorizationTable::inverse(const Element& a) const {
  Element r;
  r.perm.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) r.perm[a.perm[i]] = static_cast<Permutation::Point>(i);
  r.word.reserve(a.word.size());
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) r.word.push_back(invert(*it));
  return r;
}

void FactorizationTable::store_inverse(std::size_t slot, const Element& t) {
  const auto b = levels_[slot];
  Element inv = inverse(t);
  Entry& e = table_[slot][inv.perm[b]];
  if (!e.set || inv.word.size() < e.word.size()) {
    e.set = true;
    e.perm = std::move(inv.perm);
    e.word = std::move(inv.word);
  }
}

void FactorizationTable::sift(Element t, std::size_t from_slot, std::size_t limit) {
  for (std::size_t slot = from_slot; slot < levels_.size(); ++slot) {
    const auto b = levels_[slot];
    const auto p = t.perm[b];
    if (p == b) continue;
    Entry& e = table_[slot][p];
    if (!e.set) {
      store_inverse(slot, t);
      e.set = true;
      e.perm = std::move(t.perm);
      e.word = std::move(t.word);
      return;
    }
    if (t.word.size() < e.word.size()) {
      store_inverse(slot, t);
      std::swap(e.perm, t.perm);
      std::swap(e.word, t.word);
    }
    t = product(t, inverse({e.perm, e.word}));
    if (t.word.size() > limit) return;
  }
}

void FactorizationTable::improve(std::size_t limit) {
  for (std::size_t slot = 0; slot < levels_.size(); ++slot) {
    std::vector<Element> entries;
    for (const auto& e : table_[slot]) {
      if (e.set && !e.word.empty() && e.word.size() <= limit / 2) entries.push_back({e.perm, e.word});
    }
    for (const auto& x : entries) {
      for (const auto& y : entries) sift(product(x, y), slot, limit);
    }
  }
}

bool FactorizationTable::full() const {
  const auto& sizes = chain_.orbit_sizes();
  for (std::size_t slot = 0; slot < levels_.size(); ++slot) {
    std::size_t count = 0;
    for (const auto& e : table_[slot]) count += e.set ? 1 : 0;
    if (count < sizes[slot]) return false;
  }
  return true;
}

std::size_t FactorizationTable::max_entry_length() const {
  std::size_t m = 0;
  for (const auto& row : table_) {
    for (const auto& e : row) m = std::max(m, e.word.size());
  }
  return m;
}

GenWord FactorizationTable::factorize(const Permutation& g) const {
  Element t{std::vector<Permutation::Point>(g.images().begin(), g.images().end()), {}};
  std::vector<const Entry*> used;
  for (std::size_t slot = 0; slot < levels_.size(); ++slot) {
    const auto p = t.perm[levels_[slot]];
    const Entry& e = table_[slot][p];
    if (!e.set) throw Error("internal error: factorization table has a gap");
    used.push_back(&e);
    Element inv = inverse({e.perm, {}});
    t.perm = product(t, inv).perm;
  }
  GenWord word;
  for (auto it = used.rbegin(); it != used.rend(); ++it) word.insert(word.end(), (*it)->word.begin(), (*it)->word.end());
  reduce(word);
  return word;
}

}  // namespace revgate
