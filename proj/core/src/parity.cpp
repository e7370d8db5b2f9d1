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

#include "revgate/parity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "revgate/algebra.hpp"
#include "revgate/error.hpp"

namespace revgate {

bool ParitySequence::all_even() const {
  for (Parity p : bits_) {
    if (p == Parity::Odd) return false;
  }
  return true;
}

std::string ParitySequence::to_string() const {
  std::string s;
  for (Parity p : bits_) s += p == Parity::Odd ? 'o' : 'e';
  return s;
}

ParitySequence operator^(const ParitySequence& a, const ParitySequence& b) {
  if (a.size() != b.size()) throw Error("parity sequences of different length");
  std::vector<Parity> bits(a.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = a[i] ^ b[i];
  return ParitySequence(std::move(bits));
}

ParitySequence parity_sequence(const GatePerm& f) {
  if (auto w = conservation_witness(f)) {
    throw Error("parity sequence needs a conservative gate; weight of " + w->to_string() + " changes");
  }
  const auto classes = weight_classes(f.q(), f.arity());
  std::vector<Parity> bits(classes.count(), Parity::Even);
  std::vector<bool> seen(f.size(), false);
  for (Code start = 0; start < f.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (Code c = start; !seen[c]; c = f[c]) {
      seen[c] = true;
      ++length;
    }
    if (length % 2 == 0) bits[classes.class_of(start)] = bits[classes.class_of(start)] ^ Parity::Odd;
  }
  return ParitySequence(std::move(bits));
}

ParitySpan::ParitySpan(std::size_t length, std::vector<ParitySequence> generators) : length_(length) {
  for (auto& g : generators) {
    if (g.size() != length_) throw Error("parity sequence length does not match span");
    ParitySequence r = reduce(std::move(g));
    std::size_t pivot = 0;
    while (pivot < length_ && r[pivot] == Parity::Even) ++pivot;
    if (pivot == length_) continue;
    for (auto& b : basis_) {
      if (b[pivot] == Parity::Odd) b = b ^ r;
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(pivot);
  }
}

ParitySequence ParitySpan::reduce(ParitySequence s) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (s[pivots_[i]] == Parity::Odd) s = s ^ basis_[i];
  }
  return s;
}

BigInt ParitySpan::size() const { return BigInt(1) << rank(); }

bool ParitySpan::contains(const ParitySequence& s) const {
  if (s.size() != length_) return false;
  return reduce(s).all_even();
}

std::vector<ParitySequence> ParitySpan::elements() const {
  if (rank() > 20) throw ResourceError("parity span of rank " + std::to_string(rank()) + " is too large to list");
  std::vector<ParitySequence> out;
  const std::size_t count = std::size_t{1} << rank();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    ParitySequence s(std::vector<Parity>(length_, Parity::Even));
    for (std::size_t i = 0; i < rank(); ++i) {
      if ((mask >> i) & 1U) s = s ^ basis_[i];
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParitySpan parity_span(unsigned q, const std::vector<GatePerm>& gens, unsigned n) {
  const std::size_t length = weight_classes(q, n).count();
  std::vector<ParitySequence> seqs;
  for (const auto& g : gens) {
    if (g.q() != q) throw Error("generator alphabet does not match");
    if (g.arity() > n) throw Error("generator arity exceeds n");
    std::vector<unsigned> positions(g.arity());
    std::iota(positions.begin(), positions.end(), 0U);
    seqs.push_back(parity_sequence(extend(g, n, positions)));
  }
  return ParitySpan(length, std::move(seqs));
}

GatePerm binary_class_swap(unsigned q, unsigned n, unsigned ones) {
  if (ones > n) throw Error("class with more ones than wires");
  std::vector<Word> pair;
  const auto size = table_size(q, n);
  for (Code c = 0; c < size && pair.size() < 2; ++c) {
    const Word w = word_decode(c, n, q);
    const auto wt = weight(w);
    if (wt[0] + wt[1] == n && wt[1] == ones) pair.push_back(w);
  }
  if (pair.size() < 2) throw Error("binary weight class has fewer than two words");
  return GatePerm::word_cycle(pair);
}

std::optional<GatePerm> find_unreachable_conservative(unsigned q, const std::vector<GatePerm>& gens, unsigned n) {
  const auto span = parity_span(q, gens, n);
  for (unsigned i = 1; i + 1 <= n; ++i) {
    GatePerm f = binary_class_swap(q, n, i);
    if (!span.contains(parity_sequence(f))) return f;
  }
  return std::nullopt;
}

namespace {

using LabelId = std::uint32_t;

std::vector<LabelId> label_ids(const Classifier& classifier, unsigned q, unsigned n) {
  std::map<ClassLabel, LabelId> ids;
  const auto size = table_size(q, n);
  std::vector<LabelId> out(size);
  for (Code c = 0; c < size; ++c) {
    out[c] = ids.emplace(classifier(word_decode(c, n, q)), static_cast<LabelId>(ids.size())).first->second;
  }
  return out;
}

// True when from[c] -> to[image(c)] is a well-defined function on labels.
template <class Image>
bool respects(const std::vector<LabelId>& from, const std::vector<LabelId>& to, Image image, Code* bad) {
  std::map<LabelId, LabelId> seen;
  for (Code c = 0; c < from.size(); ++c) {
    auto [it, inserted] = seen.emplace(from[c], to[image(c)]);
    if (!inserted && it->second != to[image(c)]) {
      *bad = c;
      return false;
    }
  }
  return true;
}

}  // namespace

ConservedQuantityCheck check_conserved_quantity(const Classifier& classifier, unsigned q, unsigned n_max) {
  check_alphabet(q);
  ConservedQuantityCheck out;
  std::vector<LabelId> prev;
  for (unsigned n = 1; n <= n_max; ++n) {
    auto labels = label_ids(classifier, q, n);
    Code bad = 0;
    if (out.compatible && !prev.empty()) {
      for (Symbol a = 0; a < q && out.compatible; ++a) {
        if (!respects(prev, labels, [&](Code c) { return c * q + a; }, &bad)) {
          out.compatible = false;
          out.detail = "appending " + std::to_string(a) + " to " + word_decode(bad, n - 1, q).to_string() +
                       " separates equivalent words";
        }
      }
    }
    for (unsigned i = 0; i + 1 < n && out.permutable; ++i) {
      const Code lo = static_cast<Code>(table_size(q, n - 2 - i));
      auto swap = [&](Code c) {
        const Code x = (c / lo) % q;
        const Code y = (c / (lo * q)) % q;
        return c + (y - x) * lo + (x - y) * lo * q;
      };
      if (!respects(labels, labels, swap, &bad)) {
        out.permutable = false;
        out.detail = "swapping wires " + std::to_string(i) + "," + std::to_string(i + 1) + " of " +
                     word_decode(bad, n, q).to_string() + " separates equivalent words";
      }
    }
    prev = std::move(labels);
  }
  return out;
}

Classifier weight_classifier() {
  return [](const Word& w) {
    const auto wt = weight(w);
    return ClassLabel(wt.counts().begin(), wt.counts().end());
  };
}

Classifier zeros_and_ones_mod_k_classifier(unsigned k) {
  if (k < 1) throw Error("classifier needs k >= 1");
  return [k](const Word& w) {
    const auto wt = weight(w);
    return ClassLabel{wt[0], wt.counts().size() > 1 ? wt[1] % k : 0};
  };
}

Classifier first_symbol_classifier() {
  return [](const Word& w) { return ClassLabel{w.empty() ? -1 : static_cast<std::int64_t>(w[0])}; };
}

}  // namespace revgate
