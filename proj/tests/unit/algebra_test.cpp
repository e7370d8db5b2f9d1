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
#include <set>

#include "oracles.hpp"
#include "revgate/algebra.hpp"
#include "revgate/error.hpp"

using namespace revgate;
using namespace revgate::testing;

namespace {

Code code(unsigned q, const char* w) { return word_encode(Word::parse(q, w)); }

std::vector<WirePermSpec> all_wire_perms(unsigned n) {
  std::vector<unsigned> a(n);
  std::iota(a.begin(), a.end(), 0U);
  std::vector<WirePermSpec> out;
  do {
    out.emplace_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

}  // namespace

TEST(WirePerm, Identity) { EXPECT_EQ(wire_perm(WirePermSpec::identity(3), 3), GatePerm::identity(3, 3)); }

TEST(WirePerm, SwapOnTwoWires) {
  const auto f = wire_perm(WirePermSpec({1, 0}), 2);
  EXPECT_EQ(f[code(2, "01")], code(2, "10"));
  EXPECT_EQ(f[code(2, "10")], code(2, "01"));
  EXPECT_EQ(f[code(2, "00")], code(2, "00"));
  EXPECT_EQ(f[code(2, "11")], code(2, "11"));
}

TEST(WirePerm, ThreeCycleMovesSymbolsByInverseIndex) {
  const auto alpha = WirePermSpec::from_cycles(3, {{0, 1, 2}});
  const auto f = wire_perm(alpha, 2);
  for (Code c = 0; c < 8; ++c) {
    const Word x = word_decode(c, 3, 2);
    // abc -> cab
    const Word expected(2, {x[2], x[0], x[1]});
    EXPECT_EQ(f.apply(x), expected);
    // definitional rule: output position i holds x_{alpha^-1(i)}
    const auto inv = alpha.inverse();
    for (unsigned i = 0; i < 3; ++i) EXPECT_EQ(f.apply(x)[i], x[inv(i)]);
  }
}

TEST(WirePerm, Homomorphism) {
  for (const auto& a : all_wire_perms(3)) {
    for (const auto& b : all_wire_perms(3)) {
      EXPECT_EQ(wire_perm(compose_lr(a, b), 2), compose_lr(wire_perm(a, 2), wire_perm(b, 2)));
    }
  }
}

TEST(Compose, Examples) {
  std::mt19937_64 rng(4);
  const GatePerm f = random_gate(rng, 3, 2);
  EXPECT_TRUE(compose_lr(f, inverse(f)).is_identity());
  EXPECT_EQ(compose_lr(GatePerm::identity(3, 2), f), f);
  const auto s1 = GatePerm::word_cycle({Word::parse(2, "00"), Word::parse(2, "01")});
  const auto s2 = GatePerm::word_cycle({Word::parse(2, "01"), Word::parse(2, "10")});
  EXPECT_EQ(compose_lr(s1, s2)[code(2, "00")], code(2, "10"));
  EXPECT_THROW(compose_lr(f, GatePerm::identity(2, 2)), Error);
  EXPECT_THROW(compose_lr(f, GatePerm::identity(3, 1)), Error);
}

TEST(Parallel, Examples) {
  EXPECT_EQ(parallel(GatePerm::identity(2, 1), GatePerm::identity(2, 1)), GatePerm::identity(2, 2));
  const auto f = parallel(negation(), GatePerm::identity(2, 1));
  EXPECT_EQ(f[code(2, "00")], code(2, "10"));
  EXPECT_EQ(f[code(2, "10")], code(2, "00"));
  EXPECT_EQ(f[code(2, "01")], code(2, "11"));
  EXPECT_EQ(f[code(2, "11")], code(2, "01"));
  EXPECT_EQ(perm_parity(parallel(negation(), GatePerm::identity(2, 1))), Parity::Even);
  EXPECT_THROW(parallel(negation(), GatePerm::identity(3, 1)), Error);
}

TEST(Parallel, OddGateWithBorrowedBitIsEven) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    GatePerm f = random_gate(rng, 2, 1 + rng() % 3);
    if (perm_parity(f) == Parity::Even) continue;
    EXPECT_EQ(perm_parity(parallel(f, GatePerm::identity(2, 1))), Parity::Even);
  }
}

TEST(Parallel, Associative) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_gate(rng, 2, 1 + rng() % 2);
    const auto g = random_gate(rng, 2, 1 + rng() % 2);
    const auto h = random_gate(rng, 2, 1 + rng() % 2);
    EXPECT_EQ(parallel(parallel(f, g), h), parallel(f, parallel(g, h)));
  }
}

TEST(Extend, Examples) {
  std::mt19937_64 rng(7);
  const auto f = random_gate(rng, 3, 2);
  EXPECT_EQ(extend(f, 2, {0, 1}), f);
  const auto neg2 = extend(negation(), 2, {1});
  for (Code c = 0; c < 4; ++c) EXPECT_EQ(neg2[c], c ^ 1U);
  const auto fr = extend(fredkin(), 4, {1, 2, 3});
  for (Code c = 0; c < 16; ++c) {
    const Word x = word_decode(c, 4, 2);
    Word expected = x;
    if (x[1] == 1) expected = Word(2, {x[0], x[1], x[3], x[2]});
    EXPECT_EQ(fr.apply(x), expected);
  }
  EXPECT_THROW(extend(negation(), 2, {1, 1}), Error);
  EXPECT_THROW(extend(negation(), 2, {2}), Error);
}

TEST(Extend, FixesOtherWires) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_gate(rng, 2, 2);
    std::vector<unsigned> wires{0, 1, 2, 3};
    std::shuffle(wires.begin(), wires.end(), rng);
    wires.resize(2);
    const auto g = extend(f, 4, wires);
    for (Code c = 0; c < 16; ++c) {
      const Word x = word_decode(c, 4, 2);
      const Word y = g.apply(x);
      for (unsigned i = 0; i < 4; ++i) {
        if (i != wires[0] && i != wires[1]) EXPECT_EQ(x[i], y[i]);
      }
      const Word in(2, {x[wires[0]], x[wires[1]]});
      const Word out = f.apply(in);
      EXPECT_EQ(y[wires[0]], out[0]);
      EXPECT_EQ(y[wires[1]], out[1]);
    }
  }
}

TEST(Extend, EqualsRewiredParallel) {
  std::mt19937_64 rng(9);
  const auto f = random_gate(rng, 2, 2);
  // f on wires (2, 0) of 3: alpha maps f's wires 0,1 to 2,0 and the idle wire 2 to 1
  const auto direct = extend(f, 3, {2, 0});
  const auto alpha = WirePermSpec({2, 0, 1});
  EXPECT_EQ(direct, rewire(parallel(f, GatePerm::identity(2, 1)), alpha.inverse()));
}

TEST(GenComp, FullOverlapIsComposition) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_gate(rng, 2, 3);
    const auto g = random_gate(rng, 2, 3);
    EXPECT_EQ(gencomp(f, g, 3), compose_lr(f, g));
  }
  EXPECT_EQ(gencomp(GatePerm::identity(2, 1), GatePerm::identity(2, 1), 1), GatePerm::identity(2, 1));
}

TEST(GenComp, ZeroOverlapIsRewiredParallel) {
  std::mt19937_64 rng(11);
  const auto f = random_gate(rng, 2, 2);
  const auto g = random_gate(rng, 2, 1);
  // inputs x1 x2 y, outputs g(y) f(x1 x2)
  const auto moved = wire_perm(WirePermSpec({1, 2, 0}), 2);
  EXPECT_EQ(gencomp(f, g, 0), compose_lr(parallel(f, g), moved));
}

TEST(GenComp, PartialOverlap) {
  std::mt19937_64 rng(12);
  const auto f = random_gate(rng, 2, 2);
  const auto g = random_gate(rng, 2, 2);
  const auto h = gencomp(f, g, 1);
  ASSERT_EQ(h.arity(), 3U);
  for (Code c = 0; c < 8; ++c) {
    const Word x = word_decode(c, 3, 2);
    const Word fx = f.apply(Word(2, {x[0], x[1]}));
    const Word gx = g.apply(Word(2, {fx[0], x[2]}));
    EXPECT_EQ(h.apply(x), Word(2, {gx[0], gx[1], fx[1]}));
  }
  EXPECT_THROW(gencomp(f, g, 3), Error);
}

TEST(Rewire, Properties) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_conservative_gate(rng, 2, 3);
    EXPECT_EQ(rewire(f, WirePermSpec::identity(3)), f);
    for (const auto& a : all_wire_perms(3)) {
      const auto r = rewire(f, a);
      EXPECT_EQ(rewire(r, a.inverse()), f);
      EXPECT_EQ(perm_parity(r), perm_parity(f));
      EXPECT_TRUE(is_conservative(r));
    }
  }
  EXPECT_THROW(rewire(fredkin(), WirePermSpec::identity(2)), Error);
}

TEST(Rewire, ConjugationDirection) {
  // rewire(f, alpha) acts on wire alpha^-1(i) the way f acts on wire i
  const auto f = extend(negation(), 3, {0});
  const auto alpha = WirePermSpec::from_cycles(3, {{0, 2, 1}});
  EXPECT_EQ(rewire(f, alpha), extend(negation(), 3, {1}));
}

TEST(Controlled, Examples) {
  const auto t = controlled({Word::parse(2, "11"), negation()});
  for (Code c = 0; c < 8; ++c) EXPECT_EQ(t[c], c >= 6 ? c ^ 1U : c);
  const auto fr = controlled({Word::parse(2, "1"), swap_gate()});
  EXPECT_EQ(fr[code(2, "101")], code(2, "110"));
  EXPECT_EQ(fr[code(2, "001")], code(2, "001"));
  std::mt19937_64 rng(14);
  const auto p = random_gate(rng, 3, 2);
  EXPECT_EQ(controlled({Word(3, {}), p}), p);
}

TEST(Controlled, SlicesExhaustive) {
  std::mt19937_64 rng(15);
  for (unsigned q = 2; q <= 3; ++q) {
    for (unsigned k = 0; k <= 3; ++k) {
      for (unsigned l = 1; k + l <= 5 && table_size(q, k + l) <= 729; ++l) {
        const auto p = random_gate(rng, q, l);
        Word w = word_decode(static_cast<Code>(rng() % table_size(q, k)), k, q);
        const auto g = controlled({w, p});
        for (Code c = 0; c < g.size(); ++c) {
          const Word x = word_decode(c, k + l, q);
          const Word u(q, {x.symbols().begin(), x.symbols().begin() + k});
          const Word v(q, {x.symbols().begin() + k, x.symbols().end()});
          EXPECT_EQ(g.apply(x), u == w ? u.concat(p.apply(v)) : x);
        }
      }
    }
  }
}

TEST(Family, Parse) {
  EXPECT_EQ(parse_family("P3"), Family::P3);
  EXPECT_EQ(to_string(Family::P4), "P4");
  EXPECT_THROW(parse_family("P9"), Error);
}

TEST(Family, Bases) {
  EXPECT_EQ(family_bases(Family::P1, 2).size(), 1U);
  EXPECT_EQ(family_bases(Family::P1, 3).size(), 3U);
  // (ab ba) with a != b
  EXPECT_EQ(family_bases(Family::P2, 3).size(), 3U);
  const auto p4 = family_bases(Family::P4, 2);
  ASSERT_EQ(p4.size(), 2U);
  for (const auto& g : p4) {
    EXPECT_EQ(g.perm().cycles().size(), 1U);
    EXPECT_EQ(g.perm().cycles().front().size(), 3U);
  }
  for (const auto& g : family_bases(Family::P3, 3)) {
    EXPECT_EQ(g.perm().cycles().size(), 1U);
    EXPECT_EQ(g.perm().cycles().front().size(), 3U);
  }
}

TEST(ControlledInstances, Examples) {
  const auto p1 = controlled_instance_perms(Family::P1, 2, 1);
  ASSERT_EQ(p1.size(), 1U);
  EXPECT_EQ(p1.front(), negation());

  const auto p2 = controlled_instance_perms(Family::P2, 2, 3);
  EXPECT_NE(std::find(p2.begin(), p2.end(), fredkin()), p2.end());

  const auto p4 = controlled_instance_perms(Family::P4, 2, 3);
  const auto r1 = GatePerm::word_cycle({Word::parse(2, "001"), Word::parse(2, "010"), Word::parse(2, "100")});
  const auto r2 = GatePerm::word_cycle({Word::parse(2, "011"), Word::parse(2, "110"), Word::parse(2, "101")});
  EXPECT_NE(std::find(p4.begin(), p4.end(), r1), p4.end());
  EXPECT_NE(std::find(p4.begin(), p4.end(), r2), p4.end());
  for (const auto& g : p4) EXPECT_TRUE(is_conservative(g));

  EXPECT_THROW(controlled_instances(Family::P4, 2, 2), Error);
}

TEST(ControlledInstances, DistinctAndConsistent) {
  const auto inst = controlled_instances(Family::P3, 2, 4);
  std::set<GatePerm> seen;
  for (const auto& i : inst) {
    EXPECT_TRUE(seen.insert(i.perm).second);
    EXPECT_EQ(i.perm, extend(controlled({i.control, i.base}), 4, i.wires));
  }
}
