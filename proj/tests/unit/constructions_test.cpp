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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "revgate/constructions.hpp"
#include "revgate/error.hpp"
#include "revgate/generation.hpp"
#include "revgate/parity.hpp"
#include "revgate/search.hpp"
#include "revgate/stabilizer_chain.hpp"

using namespace revgate;
using namespace revgate::testing;

namespace {

ThreeCycleSpec random_spec(std::mt19937_64& rng, unsigned q, unsigned n) {
  std::vector<Code> codes(table_size(q, n));
  std::iota(codes.begin(), codes.end(), 0U);
  std::shuffle(codes.begin(), codes.end(), rng);
  auto w = [&](int i) { return word_decode(codes[i], n, q); };
  return {w(0), w(1), w(2), w(3), w(4)};
}

GatePerm cycle_of(const ThreeCycleSpec& s) { return GatePerm::word_cycle({s.x, s.y, s.z}); }

}  // namespace

TEST(LiftControl, Examples) {
  std::mt19937_64 rng(60);
  const auto spec = random_spec(rng, 2, 3);
  const auto fig1 = eight_gate_controlled_3cycle(spec, 0, 1);
  EXPECT_EQ(lift_control(fig1, Word(2, {})), fig1);
  const auto lifted = lift_control(fig1, Word::parse(2, "0"));
  EXPECT_EQ(lifted.size(), fig1.size());
  EXPECT_EQ(to_perm(lifted), controlled({Word::parse(2, "001"), cycle_of(spec)}));
  Circuit plain(2, 3);
  plain.add_gate(GateDef::table("f", fredkin()));
  EXPECT_THROW(lift_control(plain, Word::parse(2, "1")), Error);
}

TEST(LiftControl, CommutesWithSimulation) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const auto spec = random_spec(rng, 2, 3);
    const Word ab(2, {static_cast<Symbol>(rng() % 2), static_cast<Symbol>(rng() % 2)});
    const auto circ = eight_gate_controlled_3cycle(spec, ab[0], ab[1]);
    const Word u(2, {static_cast<Symbol>(rng() % 2), static_cast<Symbol>(rng() % 2)});
    const auto lifted = lift_control(circ, u);
    for (Code c = 0; c < table_size(2, 7); ++c) {
      const Word in = word_decode(c, 7, 2);
      const Word prefix(2, {in[0], in[1]});
      const Word rest(2, {in[2], in[3], in[4], in[5], in[6]});
      const Word out = simulate(lifted, in);
      EXPECT_EQ(out, prefix == u ? u.concat(simulate(circ, rest)) : in);
    }
  }
}

TEST(EightGate, Examples) {
  auto w = [](const char* s) { return Word::parse(2, s); };
  const ThreeCycleSpec spec{w("000"), w("001"), w("010"), w("011"), w("100")};
  const auto c = eight_gate_controlled_3cycle(spec, 0, 0);
  EXPECT_EQ(c.size(), 8U);
  EXPECT_EQ(to_perm(c), controlled({w("00"), cycle_of(spec)}));
  for (const auto& g : c.gates()) EXPECT_EQ(g.control().size(), 1U);
  EXPECT_THROW(eight_gate_controlled_3cycle({w("0"), w("1"), w("0"), w("1"), w("0")}, 0, 0), Error);
  // the two halves of g are involutions on the controlled slice
  const auto p1 = compose_lr(GatePerm::word_cycle({spec.s, spec.t, spec.x}), GatePerm::word_cycle({spec.x, spec.s, spec.y}));
  const auto p2 = compose_lr(GatePerm::word_cycle({spec.s, spec.t, spec.y}), GatePerm::word_cycle({spec.y, spec.s, spec.z}));
  EXPECT_TRUE(compose_lr(p1, p1).is_identity());
  EXPECT_TRUE(compose_lr(p2, p2).is_identity());
  EXPECT_EQ(compose_lr(compose_lr(p1, p2), compose_lr(p1, p2)), cycle_of(spec));
}

TEST(EightGate, ExhaustiveSmallAlphabets) {
  std::mt19937_64 rng(62);
  for (unsigned q = 2; q <= 3; ++q) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto spec = random_spec(rng, q, q == 2 ? 3 : 2);
      for (Symbol a = 0; a < q; ++a) {
        for (Symbol b = 0; b < q; ++b) {
          const auto c = eight_gate_controlled_3cycle(spec, a, b);
          EXPECT_EQ(to_perm(c), controlled({Word(q, {a, b}), cycle_of(spec)}));
        }
      }
    }
  }
}

TEST(ExpandControls, Counts) {
  std::mt19937_64 rng(63);
  const auto spec = random_spec(rng, 2, 3);
  const auto one = expand_controls_3cycle(1, spec, Word::parse(2, "1"));
  EXPECT_EQ(one.size(), 1U);
  EXPECT_EQ(to_perm(one), controlled({Word::parse(2, "1"), cycle_of(spec)}));
  EXPECT_EQ(expand_controls_3cycle(2, spec, Word::parse(2, "10")).size(), 8U);
  const auto three = expand_controls_3cycle(3, spec, Word::parse(2, "101"));
  EXPECT_EQ(three.size(), 64U);
  EXPECT_EQ(to_perm(three), controlled({Word::parse(2, "101"), cycle_of(spec)}));
  for (const auto& g : three.gates()) EXPECT_EQ(g.control().size(), 1U);
  EXPECT_THROW(expand_controls_3cycle(2, spec, Word::parse(2, "1")), Error);
}

TEST(ExpandControls, FourControls) {
  std::mt19937_64 rng(64);
  const auto spec = random_spec(rng, 2, 3);
  const auto c = expand_controls_3cycle(4, spec, Word::parse(2, "0110"));
  EXPECT_EQ(c.size(), 512U);
  EXPECT_EQ(to_perm(c), controlled({Word::parse(2, "0110"), cycle_of(spec)}));
}

TEST(ControlledSwaps3Cycle, BinaryExample) {
  const auto c = p3cycle_from_controlled_swaps(2, 1, 1, 0, 0, 1, 1);
  EXPECT_EQ(c.size(), 4U);
  const auto cycle = GatePerm::word_cycle({Word::parse(2, "00"), Word::parse(2, "01"), Word::parse(2, "10")});
  EXPECT_EQ(to_perm(c), controlled({Word::parse(2, "11"), cycle}));
  EXPECT_THROW(p3cycle_from_controlled_swaps(2, 1, 1, 0, 0, 0, 1), Error);
  EXPECT_THROW(p3cycle_from_controlled_swaps(2, 1, 1, 0, 0, 1, 0), Error);
}

TEST(ControlledSwaps3Cycle, AllBinaryAndTernaryChoices) {
  for (unsigned q = 2; q <= 3; ++q) {
    for (Symbol a = 0; a < q; ++a)
      for (Symbol b = 0; b < q; ++b)
        for (Symbol x = 0; x < q; ++x)
          for (Symbol y = 0; y < q; ++y)
            for (Symbol s = 0; s < q; ++s)
              for (Symbol t = 0; t < q; ++t) {
                if (x == y || s == t) continue;
                const auto c = p3cycle_from_controlled_swaps(q, a, b, x, s, t, y);
                const auto cycle = GatePerm::word_cycle({Word(q, {x, s}), Word(q, {x, t}), Word(q, {y, s})});
                EXPECT_EQ(to_perm(c), controlled({Word(q, {a, b}), cycle}));
              }
  }
}

TEST(Rotations, Frozen) {
  const auto r00 = rotation00_circuit();
  EXPECT_EQ(r00.size(), 9U);
  EXPECT_EQ(to_perm(r00), controlled_rotation(Word::parse(2, "00")));
  const auto r01 = rotation01_circuit();
  EXPECT_EQ(r01.size(), 8U);
  EXPECT_EQ(to_perm(r01), controlled_rotation(Word::parse(2, "01")));
  const auto cycles = word_cycle_circuits();
  const auto targets = word_cycle_targets();
  ASSERT_EQ(cycles.size(), 2U);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(cycles[i].size(), 6U);
    EXPECT_EQ(to_perm(cycles[i]), targets[i]);
  }
}

TEST(Rotations, OrientationMatchesFredkinRotation) {
  const auto f = fredkin_rotation();
  for (Code c = 0; c < 16; ++c) {
    const Word x = word_decode(c, 4, 2);
    const Word expected = x[0] == 0 ? Word(2, {x[0], x[2], x[3], x[1]}) : x;
    EXPECT_EQ(f.apply(x), expected);
  }
}

TEST(Rotations, OtherOrientationFailsNineGateSequence) {
  // the same nine placements with R inverted do not give C_00 of either rotation
  const auto c = rotation00_circuit();
  Circuit flipped(2, 5);
  flipped.add_gate(GateDef::controlled("rho", Word::parse(2, "0"), rotation_gate().inverse()));
  for (const auto& inst : c.instances()) flipped.apply(0, inst.wires);
  const auto p = to_perm(flipped);
  EXPECT_NE(p, controlled({Word::parse(2, "00"), rotation_gate()}));
  EXPECT_NE(p, controlled({Word::parse(2, "00"), rotation_gate().inverse()}));
}

TEST(FredkinGenerators, Shape) {
  const auto gens = fredkin_universality_generators();
  ASSERT_EQ(gens.size(), 9U);
  for (std::size_t i = 1; i < gens.size(); ++i) {
    EXPECT_TRUE(is_alt_conservative(gens[i]));
    EXPECT_EQ(gens[i].arity(), 3U);
  }
  EXPECT_TRUE(generates(extensions(gens, 4), TargetClass::alt_conservative()));
}

TEST(FredkinGenerators, RotationFromControlledSwaps) {
  const InstanceSet swaps({GateDef::controlled("s0", Word::parse(2, "0"), swap_gate()),
                           GateDef::controlled("s1", Word::parse(2, "1"), swap_gate())},
                          4);
  const auto r = bfs_min(fredkin_rotation(), swaps, 4);
  ASSERT_TRUE(r.found());
  EXPECT_LE(r.depth, 4U);
}

TEST(Synthesize, Examples) {
  EXPECT_TRUE(synthesize(GatePerm::identity(2, 3), TargetClass::alt(), Family::P3).empty());
  std::mt19937_64 rng(65);
  const auto even = random_even_gate(rng, 2, 4);
  EXPECT_EQ(to_perm(synthesize(even, TargetClass::alt(), Family::P3)), even);
  const auto any = random_gate(rng, 3, 2);
  EXPECT_EQ(to_perm(synthesize(any, TargetClass::full(), Family::P1)), any);
  EXPECT_THROW(synthesize(any, TargetClass::conservative(), Family::P2), ClassMembershipError);
  EXPECT_THROW(synthesize(GatePerm::identity(3, 3), TargetClass::alt_conservative(), Family::P4), Error);
}

TEST(Synthesize, HundredRandomTargets) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    GatePerm target;
    Circuit c(2, 1);
    switch (trial % 4) {
      case 0:
        target = random_gate(rng, 2, 3);
        c = synthesize(target, TargetClass::full(), Family::P1);
        break;
      case 1:
        target = random_conservative_gate(rng, 2, 4);
        c = synthesize(target, TargetClass::conservative(), Family::P2);
        break;
      case 2:
        target = random_even_gate(rng, 2, 3);
        c = synthesize(target, TargetClass::alt(), Family::P3);
        break;
      default: {
        target = random_conservative_gate(rng, 2, 4);
        const auto s = parity_sequence(target);
        // make it even on every class
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (s[i] == Parity::Odd) target = compose_lr(target, binary_class_swap(2, 4, static_cast<unsigned>(i)));
        }
        c = synthesize(target, TargetClass::alt_conservative(), Family::P4);
      }
    }
    EXPECT_EQ(to_perm(c), target);
  }
}
