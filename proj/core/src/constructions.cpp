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

#include "revgate/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

#include "frozen_circuits.hpp"
#include "revgate/error.hpp"
#include "revgate/stabilizer_chain.hpp"

namespace revgate {

namespace {

struct Step {
  std::vector<unsigned> control_wires;
  std::vector<Symbol> control;
  std::array<Word, 3> cycle;
};

void expand(std::vector<unsigned> wires, std::vector<Symbol> control, const std::array<Word, 3>& cycle,
            const std::array<Word, 2>& helpers, std::vector<Step>& out) {
  if (control.size() == 1) {
    out.push_back({std::move(wires), std::move(control), cycle});
    return;
  }
  const auto& [x, y, z] = cycle;
  const auto& [s, t] = helpers;
  auto with = [&](std::size_t keep) {
    std::vector<unsigned> w(wires.begin(), wires.end() - 2);
    std::vector<Symbol> c(control.begin(), control.end() - 2);
    w.push_back(wires[wires.size() - 2 + keep]);
    c.push_back(control[control.size() - 2 + keep]);
    return std::make_pair(w, c);
  };
  const auto [wa, ca] = with(0);
  const auto [wb, cb] = with(1);
  for (int round = 0; round < 2; ++round) {
    expand(wa, ca, {s, t, x}, {y, z}, out);
    expand(wa, ca, {x, s, y}, {t, z}, out);
    expand(wb, cb, {s, t, y}, {x, z}, out);
    expand(wb, cb, {y, s, z}, {t, x}, out);
  }
}

std::string cycle_gate_name(const Step& step) {
  std::string name = "c" + Word(step.cycle[0].q(), step.control).to_string();
  for (const auto& w : step.cycle) name += "_" + w.to_string();
  return name;
}

Circuit circuit_of(const std::vector<Step>& steps, unsigned q, unsigned controls, unsigned data) {
  Circuit c(q, controls + data);
  for (const auto& step : steps) {
    const GatePerm base = GatePerm::word_cycle({step.cycle[0], step.cycle[1], step.cycle[2]});
    const auto gate = c.add_gate(GateDef::controlled(cycle_gate_name(step), Word(q, step.control), base));
    std::vector<unsigned> wires = step.control_wires;
    for (unsigned i = 0; i < data; ++i) wires.push_back(controls + i);
    c.apply(gate, wires);
  }
  return c;
}

void require(const Circuit& c, const GatePerm& expected, const char* what) {
  if (to_perm(c) != expected) throw std::logic_error(std::string(what) + " does not realize its target");
}

std::size_t order_of(const Permutation& p) {
  std::size_t order = 1;
  for (const auto& cycle : p.cycles()) order = std::lcm(order, cycle.size());
  return order;
}

}  // namespace

void ThreeCycleSpec::validate() const {
  const std::array<const Word*, 5> words{&x, &y, &z, &s, &t};
  for (const Word* w : words) {
    if (w->q() != x.q() || w->size() != x.size()) throw Error("three-cycle words must share alphabet and length");
  }
  if (x.empty()) throw Error("three-cycle words must be non-empty");
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (*words[i] == *words[j]) throw Error("x, y, z, s, t must be five distinct words");
    }
  }
}

Circuit lift_control(const Circuit& circ, const Word& u) {
  if (u.q() != circ.q()) throw Error("prefix alphabet does not match the circuit");
  const auto k = static_cast<unsigned>(u.size());
  if (k == 0) return circ;
  Circuit out(circ.q(), circ.arity() + k);
  for (const auto& g : circ.gates()) {
    if (g.kind() != GateDef::Kind::Controlled) {
      throw Error("gate '" + g.name() + "' has no control structure and cannot be lifted");
    }
    out.add_gate(GateDef::controlled(g.name(), u.concat(g.control()), g.base()));
  }
  for (const auto& inst : circ.instances()) {
    std::vector<unsigned> wires(k);
    std::iota(wires.begin(), wires.end(), 0U);
    for (unsigned w : inst.wires) wires.push_back(w + k);
    out.apply(inst.gate, wires);
  }
  return out;
}

Circuit eight_gate_controlled_3cycle(const ThreeCycleSpec& spec, Symbol a, Symbol b) {
  return expand_controls_3cycle(2, spec, Word(spec.q(), {a, b}));
}

Circuit expand_controls_3cycle(unsigned m, const ThreeCycleSpec& spec, const Word& w) {
  spec.validate();
  if (m < 1 || w.size() != m) throw Error("control word must have length m >= 1");
  if (w.q() != spec.q()) throw Error("control word alphabet does not match");
  std::vector<unsigned> wires(m);
  std::iota(wires.begin(), wires.end(), 0U);
  std::vector<Step> steps;
  expand(wires, w.symbols(), {spec.x, spec.y, spec.z}, {spec.s, spec.t}, steps);
  return circuit_of(steps, spec.q(), m, spec.n());
}

Circuit p3cycle_from_controlled_swaps(unsigned q, Symbol a, Symbol b, Symbol x, Symbol s, Symbol t, Symbol y) {
  check_alphabet(q);
  for (Symbol v : {a, b, x, s, t, y}) {
    if (v >= q) throw Error("symbol out of range");
  }
  if (x == y || s == t) throw Error("the cycle (xs xt ys) needs x != y and s != t");
  Circuit c(q, 4);
  const auto tau = c.add_gate(GateDef::controlled("tau", Word(q, {b, s}), GatePerm::word_cycle({Word(q, {x}), Word(q, {y})})));
  const auto sigma =
      c.add_gate(GateDef::controlled("sigma", Word(q, {a, x}), GatePerm::word_cycle({Word(q, {s}), Word(q, {t})})));
  for (int round = 0; round < 2; ++round) {
    c.apply(tau, {1, 3, 2});
    c.apply(sigma, {0, 2, 3});
  }
  return c;
}

GatePerm rotation_gate() { return wire_perm(WirePermSpec({2, 0, 1}), 2); }

GateDef controlled_rotation_def() { return GateDef::controlled("rho", Word::parse(2, "0"), rotation_gate()); }

GatePerm controlled_rotation(const Word& w) { return controlled({w, rotation_gate()}); }

std::vector<std::string> frozen_circuit_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::kFrozenCircuits) {
    if (!name.empty()) names.emplace_back(name);
  }
  return names;
}

Circuit frozen_circuit(std::string_view name) {
  for (const auto& [n, text] : detail::kFrozenCircuits) {
    if (!n.empty() && n == name) return parse_circuit(text);
  }
  throw Error("no frozen circuit named '" + std::string(name) + "'");
}

Circuit rotation00_circuit() {
  Circuit c = frozen_circuit("rotation00");
  require(c, controlled_rotation(Word::parse(2, "00")), "rotation00");
  return c;
}

Circuit rotation01_circuit() {
  Circuit c = frozen_circuit("rotation01");
  require(c, controlled_rotation(Word::parse(2, "01")), "rotation01");
  return c;
}

std::vector<GatePerm> word_cycle_targets() {
  auto w = [](const char* s) { return Word::parse(2, s); };
  return {GatePerm::word_cycle({w("0001"), w("0010"), w("0100")}),
          GatePerm::word_cycle({w("0011"), w("0110"), w("0101")})};
}

std::vector<Circuit> word_cycle_circuits() {
  const auto targets = word_cycle_targets();
  std::vector<Circuit> out{frozen_circuit("wordcycle0001"), frozen_circuit("wordcycle0011")};
  for (std::size_t i = 0; i < out.size(); ++i) require(out[i], targets[i], "word cycle circuit");
  return out;
}

GatePerm fredkin_rotation() { return controlled_rotation(Word::parse(2, "0")); }

std::vector<GatePerm> fredkin_universality_generators() {
  std::vector<GatePerm> out{fredkin_rotation()};
  const auto classes = weight_classes(2, 3);
  // every product of even permutations of the weight classes
  std::vector<std::vector<std::vector<Code>>> choices;
  for (const auto& members : classes.classes()) {
    std::vector<std::vector<Code>> even;
    auto images = members;
    do {
      std::vector<Code> t(8);
      std::iota(t.begin(), t.end(), 0U);
      for (std::size_t i = 0; i < members.size(); ++i) t[members[i]] = images[i];
      if (Permutation(t).parity() == Parity::Even) even.push_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    choices.push_back(std::move(even));
  }
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<Code> t(8);
    for (std::size_t c = 0; c < choices.size(); ++c) {
      const auto& members = classes.members(c);
      for (std::size_t i = 0; i < members.size(); ++i) t[members[i]] = choices[c][pick[c]][i];
    }
    GatePerm g(2, 3, t);
    if (!g.is_identity()) out.push_back(std::move(g));
    std::size_t c = 0;
    while (c < pick.size() && ++pick[c] == choices[c].size()) pick[c++] = 0;
    if (c == pick.size()) break;
  }
  return out;
}

Circuit synthesize(const GatePerm& target, const TargetClass& t, Family basis, unsigned k) {
  if (auto why = class_violation(target, t)) {
    throw ClassMembershipError("target is outside class " + t.name + ": " + *why);
  }
  const unsigned q = target.q();
  const unsigned n = target.arity();
  const auto instances = controlled_instances(basis, q, n, k);
  std::vector<GatePerm> gens;
  for (const auto& inst : instances) gens.push_back(inst.perm);
  const auto report = check_generation(q, n, gens, t);
  if (!report.generates) {
    throw Error("the " + to_string(basis) + " instances on " + std::to_string(n) + " wires generate a group of order " +
                revgate::to_string(report.order) + ", not class " + t.name);
  }
  ChainOptions options;
  options.order_bound = report.target;
  const auto chain = build_chain(q, n, gens, options);
  const auto word = chain.factorize(target.perm());

  Circuit c(q, n);
  const auto bases = family_bases(basis, q, k);
  std::map<std::pair<Word, GatePerm>, std::size_t> gate_index;
  auto gate_for = [&](const ControlledInstance& inst) {
    const auto key = std::make_pair(inst.control, inst.base);
    if (auto it = gate_index.find(key); it != gate_index.end()) return it->second;
    const auto b = static_cast<std::size_t>(std::find(bases.begin(), bases.end(), inst.base) - bases.begin());
    const std::string name = "c" + inst.control.to_string() + "_" + to_string(basis) + "_" + std::to_string(b);
    const auto index = c.add_gate(GateDef::controlled(name, inst.control, inst.base));
    gate_index.emplace(key, index);
    return index;
  };
  for (const auto& letter : word) {
    const auto& inst = instances[letter.index];
    // an inverse letter is the instance applied order-1 times
    const std::size_t repeats = letter.inverse ? order_of(inst.perm.perm()) - 1 : 1;
    for (std::size_t r = 0; r < repeats; ++r) c.apply(gate_for(inst), inst.wires);
  }
  require(c, target, "synthesized circuit");
  return c;
}

}  // namespace revgate
