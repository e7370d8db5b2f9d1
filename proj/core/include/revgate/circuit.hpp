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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revgate/algebra.hpp"
#include "revgate/gate_perm.hpp"

namespace revgate {

/// A named gate: an explicit table, a controlled permutation C_w[p], or a
/// wire permutation. `perm()` is the gate it realizes.
class GateDef {
 public:
  enum class Kind { Table, Controlled, WirePerm };

  static GateDef table(std::string name, GatePerm perm);
  static GateDef controlled(std::string name, Word control, GatePerm base);
  static GateDef wire_perm(std::string name, unsigned q, WirePermSpec spec);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  unsigned q() const { return perm_.q(); }
  unsigned arity() const { return perm_.arity(); }
  const GatePerm& perm() const { return perm_; }

  /// Control word and base gate; only for Kind::Controlled.
  const Word& control() const { return control_; }
  const GatePerm& base() const { return base_; }
  /// Only for Kind::WirePerm.
  const WirePermSpec& wires() const { return wires_; }

  /// Same kind, inverted base / table / wire permutation.
  GateDef inverse(std::string name) const;
  GateDef renamed(std::string name) const;

  friend bool operator==(const GateDef&, const GateDef&) = default;

 private:
  GateDef() = default;

  std::string name_;
  Kind kind_ = Kind::Table;
  Word control_;
  GatePerm base_;
  WirePermSpec wires_;
  GatePerm perm_;
};

/// One application of a gate; wires[i] carries the gate's wire i.
struct GateInstance {
  std::size_t gate = 0;  ///< index into Circuit::gates()
  std::vector<unsigned> wires;

  friend bool operator==(const GateInstance&, const GateInstance&) = default;
};

/// Gates applied in order (the first instance acts first) on n wires over A, |A| = q.
class Circuit {
 public:
  Circuit(unsigned q, unsigned n);

  unsigned q() const { return q_; }
  unsigned arity() const { return n_; }
  std::size_t size() const { return instances_.size(); }
  bool empty() const { return instances_.empty(); }
  const std::vector<GateDef>& gates() const { return gates_; }
  const std::vector<GateInstance>& instances() const { return instances_; }
  const GateDef& gate_of(const GateInstance& inst) const { return gates_[inst.gate]; }

  /// Adds a definition and returns its index. An identical definition is
  /// reused; a different one under an existing name throws Error.
  std::size_t add_gate(GateDef def);
  std::optional<std::size_t> find_gate(std::string_view name) const;

  void apply(std::size_t gate, std::vector<unsigned> wires);
  void apply(std::string_view name, std::vector<unsigned> wires);

  /// Appends every instance of `other`, adding its definitions (renaming on clashes).
  void append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  unsigned q_;
  unsigned n_;
  std::vector<GateDef> gates_;
  std::vector<GateInstance> instances_;
};

Word simulate(const Circuit& c, const Word& w);

/// The gate of the whole circuit, from one extended table per instance.
GatePerm to_perm(const Circuit& c);

/// Reversed instance order with every gate inverted. Involutions keep their definition.
Circuit invert(const Circuit& c);

Circuit concat(const Circuit& a, const Circuit& b);

/// Canonical text form (`revgate v1` format).
std::string serialize(const Circuit& c);

/// Parses `revgate v1` text; throws ParseError with the offending line.
Circuit parse_circuit(std::string_view text);

Circuit load_circuit(const std::filesystem::path& path);
void save_circuit(const Circuit& c, const std::filesystem::path& path);

}  // namespace revgate
