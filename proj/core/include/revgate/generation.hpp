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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "revgate/bigint.hpp"
#include "revgate/gate_perm.hpp"
#include "revgate/stabilizer_chain.hpp"

namespace revgate {

/// Opaque class label produced by a classifier.
using ClassLabel = std::vector<std::int64_t>;
using Classifier = std::function<ClassLabel(const Word&)>;

/// A family of gates to generate: all of Sym(A^n), Alt(A^n), the
/// conservative gates, those even on every weight class, the gates
/// conservative modulo k, or the gates preserving a user classifier.
struct TargetClass {
  enum class Kind { Full, Alt, Conservative, AltConservative, ModK, Conserved };

  Kind kind = Kind::Full;
  unsigned k = 0;
  Classifier classifier;
  std::string name;

  static TargetClass full() { return {Kind::Full, 0, {}, "full"}; }
  static TargetClass alt() { return {Kind::Alt, 0, {}, "alt"}; }
  static TargetClass conservative() { return {Kind::Conservative, 0, {}, "cons"}; }
  static TargetClass alt_conservative() { return {Kind::AltConservative, 0, {}, "altcons"}; }
  static TargetClass mod_k(unsigned k);
  static TargetClass conserved(std::string name, Classifier classifier);
};

/// Parses full|alt|cons|altcons|modk (modk uses `k`).
TargetClass parse_target_class(const std::string& name, unsigned k = 0);

/// The partition of A^n that the class preserves (weight classes, weight
/// mod k, classifier classes); the single class A^n for Full and Alt.
ComponentPartition class_partition(const TargetClass& t, unsigned q, unsigned n);

/// Order of the class intersected with Sym(A^n).
BigInt target_order(const TargetClass& t, unsigned q, unsigned n);

/// Why f is outside the class (with a witness word where one exists), or
/// nullopt when f belongs to it.
std::optional<std::string> class_violation(const GatePerm& f, const TargetClass& t);

inline bool in_class(const GatePerm& f, const TargetClass& t) { return !class_violation(f, t).has_value(); }

struct GenerationReport {
  bool generates = false;
  BigInt order;
  BigInt target;
};

/// Checks every generator against the class (throws ClassMembershipError
/// naming the first offender), then compares the order of the generated
/// group with target_order.
GenerationReport check_generation(unsigned q, unsigned n, const std::vector<GatePerm>& gens, const TargetClass& t);

bool generates(const std::vector<GatePerm>& gens, const TargetClass& t);

}  // namespace revgate
