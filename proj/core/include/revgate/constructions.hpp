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
#include <string_view>
#include <vector>

#include "revgate/algebra.hpp"
#include "revgate/circuit.hpp"
#include "revgate/generation.hpp"

namespace revgate {

/// Three words x, y, z to cycle and two helper words s, t; all five distinct,
/// of one length over one alphabet.
struct ThreeCycleSpec {
  Word x, y, z, s, t;

  /// Throws Error unless the five words are distinct and of equal shape.
  void validate() const;
  unsigned q() const { return x.q(); }
  unsigned n() const { return static_cast<unsigned>(x.size()); }
};

/// Prefixes every gate's control word with u, on new wires 0..|u|-1; the
/// old wires move up by |u|. Throws Error on a gate that is not controlled.
Circuit lift_control(const Circuit& circ, const Word& u);

/// C_ab[(x y z)] on 2+n wires (a on wire 0, b on wire 1, data after) as
/// g g, g = C_a*[(s t x)] C_a*[(x s y)] C_*b[(s t y)] C_*b[(y s z)].
Circuit eight_gate_controlled_3cycle(const ThreeCycleSpec& spec, Symbol a, Symbol b);

/// C_w[(x y z)], |w| = m, from 8^(m-1) one-controlled 3-word-cycles.
/// Controls on wires 0..m-1, data after.
Circuit expand_controls_3cycle(unsigned m, const ThreeCycleSpec& spec, const Word& w);

/// C_ab[(xs xt ys)] on 4 wires (a, b, then the two data symbols) from four
/// 2-controlled symbol swaps. Needs x != y and s != t.
Circuit p3cycle_from_controlled_swaps(unsigned q, Symbol a, Symbol b, Symbol x, Symbol s, Symbol t, Symbol y);

/// The three-wire rotation R: (x_1, x_2, x_3) -> (x_2, x_3, x_1), q = 2.
GatePerm rotation_gate();

/// The 0-controlled rotation C_0[R] on 4 wires as a named gate.
GateDef controlled_rotation_def();

/// C_w[R] with controls on the first |w| wires, q = 2.
GatePerm controlled_rotation(const Word& w);

/// C_00[R] from nine 0-controlled rotations (5 wires).
Circuit rotation00_circuit();
/// C_01[R] from eight 0-controlled rotations (5 wires).
Circuit rotation01_circuit();

/// The word cycles (0001 0010 0100) and (0011 0110 0101) on 4 wires.
std::vector<GatePerm> word_cycle_targets();
/// Six 0-controlled rotations each, in word_cycle_targets() order.
std::vector<Circuit> word_cycle_circuits();

/// f(a,b,c,d) = (a,c,d,b) if a = 0, else unchanged.
GatePerm fredkin_rotation();

/// fredkin_rotation() followed by every non-identity gate of {0,1}^3 that
/// is conservative and even on each weight class.
std::vector<GatePerm> fredkin_universality_generators();

/// A circuit over controlled_instances(basis, q, n) realizing target.
/// Throws ClassMembershipError when target is outside t and Error when the
/// instances do not generate t at this arity.
Circuit synthesize(const GatePerm& target, const TargetClass& t, Family basis, unsigned k = 0);

/// Circuits shipped with the library, by name.
std::vector<std::string> frozen_circuit_names();
Circuit frozen_circuit(std::string_view name);

}  // namespace revgate
