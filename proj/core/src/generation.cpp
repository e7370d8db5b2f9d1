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

#include "revgate/generation.hpp"

#include <map>

#include "revgate/error.hpp"

namespace revgate {

namespace {

// Parity of f restricted to each class of a partition f preserves.
bool even_on_every_class(const GatePerm& f, const ComponentPartition& classes, std::size_t* odd_class) {
  std::vector<std::uint8_t> parity(classes.count(), 0);
  std::vector<bool> seen(f.size(), false);
  for (Code start = 0; start < f.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (Code c = start; !seen[c]; c = f[c]) {
      seen[c] = true;
      ++length;
    }
    parity[classes.class_of(start)] ^= static_cast<std::uint8_t>((length - 1) & 1U);
  }
  for (std::size_t i = 0; i < parity.size(); ++i) {
    if (parity[i] != 0) {
      if (odd_class != nullptr) *odd_class = i;
      return false;
    }
  }
  return true;
}

std::optional<std::string> partition_violation(const GatePerm& f, const ComponentPartition& classes) {
  for (Code c = 0; c < f.size(); ++c) {
    if (classes.class_of(c) != classes.class_of(f[c])) {
      return "maps " + word_decode(c, f.arity(), f.q()).to_string() + " to " +
             word_decode(f[c], f.arity(), f.q()).to_string() + " in another class";
    }
  }
  return std::nullopt;
}

BigInt product_of_factorials(const ComponentPartition& classes, bool halved) {
  BigInt order = 1;
  for (std::size_t size : classes.sizes()) {
    BigInt f = factorial(static_cast<unsigned>(size));
    if (halved && size >= 2) f /= 2;
    order *= f;
  }
  return order;
}

}  // namespace

TargetClass TargetClass::mod_k(unsigned k) {
  if (k < 1) throw Error("mod k class needs k >= 1");
  return {Kind::ModK, k, {}, "mod" + std::to_string(k)};
}

TargetClass TargetClass::conserved(std::string name, Classifier classifier) {
  if (!classifier) throw Error("conserved class needs a classifier");
  return {Kind::Conserved, 0, std::move(classifier), std::move(name)};
}

TargetClass parse_target_class(const std::string& name, unsigned k) {
  if (name == "full") return TargetClass::full();
  if (name == "alt") return TargetClass::alt();
  if (name == "cons") return TargetClass::conservative();
  if (name == "altcons") return TargetClass::alt_conservative();
  if (name == "modk") return TargetClass::mod_k(k);
  throw Error("unknown target class '" + name + "' (expected full, alt, cons, altcons or modk)");
}

ComponentPartition class_partition(const TargetClass& t, unsigned q, unsigned n) {
  const auto size = table_size(q, n);
  switch (t.kind) {
    case TargetClass::Kind::Full:
    case TargetClass::Kind::Alt:
      return ComponentPartition::from_labels(q, n, std::vector<std::uint32_t>(size, 0));
    case TargetClass::Kind::Conservative:
    case TargetClass::Kind::AltConservative:
      return weight_classes(q, n);
    case TargetClass::Kind::ModK:
    case TargetClass::Kind::Conserved: {
      std::map<ClassLabel, std::uint32_t> ids;
      std::vector<std::uint32_t> labels(size);
      for (Code c = 0; c < size; ++c) {
        const Word w = word_decode(c, n, q);
        ClassLabel label;
        if (t.kind == TargetClass::Kind::ModK) {
          const auto wt = weight(w);
          for (auto count : wt.counts()) label.push_back(count % t.k);
        } else {
          label = t.classifier(w);
        }
        labels[c] = ids.emplace(std::move(label), static_cast<std::uint32_t>(ids.size())).first->second;
      }
      return ComponentPartition::from_labels(q, n, labels);
    }
  }
  throw Error("unknown target class kind");
}

BigInt target_order(const TargetClass& t, unsigned q, unsigned n) {
  const auto classes = class_partition(t, q, n);
  const bool halved = t.kind == TargetClass::Kind::Alt || t.kind == TargetClass::Kind::AltConservative;
  return product_of_factorials(classes, halved);
}

std::optional<std::string> class_violation(const GatePerm& f, const TargetClass& t) {
  switch (t.kind) {
    case TargetClass::Kind::Full:
      return std::nullopt;
    case TargetClass::Kind::Alt:
      if (perm_parity(f) == Parity::Odd) return std::string("odd permutation of A^n");
      return std::nullopt;
    case TargetClass::Kind::Conservative:
    case TargetClass::Kind::AltConservative: {
      if (auto w = conservation_witness(f)) return "changes the weight of " + w->to_string();
      if (t.kind == TargetClass::Kind::Conservative) return std::nullopt;
      const auto classes = weight_classes(f.q(), f.arity());
      std::size_t odd = 0;
      if (!even_on_every_class(f, classes, &odd)) {
        return "odd on the weight class of " + word_decode(classes.members(odd).front(), f.arity(), f.q()).to_string();
      }
      return std::nullopt;
    }
    case TargetClass::Kind::ModK:
    case TargetClass::Kind::Conserved:
      return partition_violation(f, class_partition(t, f.q(), f.arity()));
  }
  return std::nullopt;
}

GenerationReport check_generation(unsigned q, unsigned n, const std::vector<GatePerm>& gens, const TargetClass& t) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].q() != q || gens[i].arity() != n) {
      throw Error("generator " + std::to_string(i) + " is not a gate on " + std::to_string(n) + " wires over q=" +
                  std::to_string(q));
    }
    if (auto why = class_violation(gens[i], t)) {
      throw ClassMembershipError("generator " + std::to_string(i) + " is outside class " + t.name + ": " + *why);
    }
  }
  GenerationReport report;
  report.target = target_order(t, q, n);
  ChainOptions options;
  options.order_bound = report.target;
  report.order = build_chain(q, n, gens, options).order();
  report.generates = report.order == report.target;
  return report;
}

bool generates(const std::vector<GatePerm>& gens, const TargetClass& t) {
  if (gens.empty()) throw Error("generates() needs at least one generator");
  return check_generation(gens.front().q(), gens.front().arity(), gens, t).generates;
}

}  // namespace revgate
