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

#include "revgate/gate_perm.hpp"

#include <algorithm>
#include <map>
#include <span>

#include "revgate/error.hpp"

namespace revgate {

namespace {

void check_table_length(unsigned q, unsigned n, std::size_t length) {
  if (n < 1) throw Error("gates must have arity at least 1");
  if (table_size(q, n) != length) {
    throw Error("table has " + std::to_string(length) + " entries, expected " + std::to_string(q) + "^" +
                std::to_string(n));
  }
}

// Weight vectors of every word of A^n, row c holding the counts of word c.
class WeightTable {
 public:
  WeightTable(unsigned q, unsigned n) : q_(q), counts_(table_size(q, n) * q, 0) {
    const auto size = counts_.size() / q;
    for (Code c = 0; c < size; ++c) {
      Code x = c;
      for (unsigned i = 0; i < n; ++i) {
        ++counts_[std::size_t{c} * q + x % q];
        x /= q;
      }
    }
  }

  std::span<const std::uint32_t> operator[](Code c) const { return {counts_.data() + std::size_t{c} * q_, q_}; }

  std::size_t size() const { return counts_.size() / q_; }

 private:
  unsigned q_;
  std::vector<std::uint32_t> counts_;
};

bool same(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

GatePerm::GatePerm(unsigned q, unsigned n, std::vector<Code> table) : q_(q), n_(n) {
  check_table_length(q, n, table.size());
  perm_ = Permutation(std::move(table));
}

GatePerm::GatePerm(unsigned q, unsigned n, Permutation perm) : q_(q), n_(n), perm_(std::move(perm)) {
  check_table_length(q, n, perm_.degree());
}

GatePerm GatePerm::identity(unsigned q, unsigned n) {
  return GatePerm(q, n, Permutation::identity(table_size(q, n)));
}

GatePerm GatePerm::word_cycle(const std::vector<Word>& words) {
  if (words.empty()) throw Error("word cycle needs at least one word");
  const unsigned q = words.front().q();
  const auto n = static_cast<unsigned>(words.front().size());
  std::vector<Permutation::Point> cycle;
  for (const Word& w : words) {
    if (w.q() != q || w.size() != n) throw Error("word cycle members must share alphabet and length");
    cycle.push_back(word_encode(w));
  }
  return GatePerm(q, n, Permutation::from_cycles(table_size(q, n), {cycle}));
}

GatePerm GatePerm::symbol_perm(unsigned q, const std::vector<Symbol>& sigma) {
  return GatePerm(q, 1, std::vector<Code>(sigma.begin(), sigma.end()));
}

Word GatePerm::apply(const Word& w) const {
  if (w.q() != q_ || w.size() != n_) throw Error("word does not match gate alphabet/arity");
  return word_decode(perm_[word_encode(w)], n_, q_);
}

GatePerm GatePerm::inverse() const { return GatePerm(q_, n_, perm_.inverse()); }

Parity perm_parity(const GatePerm& f) { return f.perm().parity(); }

ComponentPartition ComponentPartition::from_labels(unsigned q, unsigned n, const std::vector<std::uint32_t>& labels) {
  ComponentPartition p;
  p.q_ = q;
  p.n_ = n;
  p.class_of_.assign(labels.size(), 0);
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (Code c = 0; c < labels.size(); ++c) {
    auto [it, inserted] = renumber.try_emplace(labels[c], static_cast<std::uint32_t>(p.classes_.size()));
    if (inserted) p.classes_.emplace_back();
    p.class_of_[c] = it->second;
    p.classes_[it->second].push_back(c);
  }
  return p;
}

std::vector<std::size_t> ComponentPartition::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : classes_) out.push_back(c.size());
  return out;
}

ComponentPartition weight_classes(unsigned q, unsigned n) {
  const WeightTable weights(q, n);
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  std::vector<std::uint32_t> labels(weights.size());
  for (Code c = 0; c < weights.size(); ++c) {
    auto row = weights[c];
    auto [it, _] = ids.try_emplace(std::vector<std::uint32_t>(row.begin(), row.end()),
                                   static_cast<std::uint32_t>(ids.size()));
    labels[c] = it->second;
  }
  return ComponentPartition::from_labels(q, n, labels);
}

std::optional<Word> conservation_witness(const GatePerm& f) {
  const WeightTable weights(f.q(), f.arity());
  for (Code c = 0; c < f.size(); ++c) {
    if (!same(weights[c], weights[f[c]])) return word_decode(c, f.arity(), f.q());
  }
  return std::nullopt;
}

bool is_conservative(const GatePerm& f) { return !conservation_witness(f).has_value(); }

bool is_alt_conservative(const GatePerm& f) {
  if (!is_conservative(f)) return false;
  // Parity of the restriction to a class: the restriction's cycles are
  // exactly f's cycles inside that class.
  const auto classes = weight_classes(f.q(), f.arity());
  std::vector<std::size_t> transpositions(classes.count(), 0);
  for (const auto& cycle : f.perm().cycles()) transpositions[classes.class_of(cycle.front())] += cycle.size() - 1;
  for (std::size_t t : transpositions) {
    if (t % 2) return false;
  }
  return true;
}

bool is_mod_k_conservative(const GatePerm& f, unsigned k) {
  if (k < 1) throw Error("modulus k must be at least 1");
  const WeightTable weights(f.q(), f.arity());
  for (Code c = 0; c < f.size(); ++c) {
    auto a = weights[c];
    auto b = weights[f[c]];
    for (unsigned s = 0; s < f.q(); ++s) {
      if (a[s] % k != b[s] % k) return false;
    }
  }
  return true;
}

}  // namespace revgate
