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
#include "revgate/error.hpp"
#include "revgate/gate_perm.hpp"

using namespace revgate;
using namespace revgate::testing;

namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Word, EncodeExamples) {
  EXPECT_EQ(word_encode(Word::parse(2, "00")), 0U);
  EXPECT_EQ(word_encode(Word::parse(2, "10")), 2U);
  EXPECT_EQ(word_encode(Word::parse(3, "012")), 5U);
}

TEST(Word, EncodeMatchesPositionalSum) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned q = 2 + rng() % 6;
    const unsigned n = rng() % 7;
    std::vector<Symbol> s(n);
    for (auto& x : s) x = rng() % q;
    std::uint64_t expected = 0;
    for (unsigned i = 0; i < n; ++i) {
      std::uint64_t p = 1;
      for (unsigned j = i + 1; j < n; ++j) p *= q;
      expected += s[i] * p;
    }
    EXPECT_EQ(word_encode(Word(q, s)), expected);
  }
}

TEST(Word, DecodeExamples) {
  EXPECT_EQ(word_decode(0, 2, 2), Word::parse(2, "00"));
  EXPECT_EQ(word_decode(2, 2, 2), Word::parse(2, "10"));
  EXPECT_EQ(word_decode(5, 3, 3), Word::parse(3, "012"));
  EXPECT_THROW(word_decode(9, 2, 3), Error);
}

TEST(Word, RoundTrip) {
  for (unsigned q = 2; q <= 4; ++q) {
    for (unsigned n = 0; n <= 4; ++n) {
      for (Code c = 0; c < table_size(q, n); ++c) {
        const Word w = word_decode(c, n, q);
        EXPECT_EQ(word_encode(w), c);
        EXPECT_EQ(Word::parse(q, w.to_string()), w);
      }
    }
  }
}

TEST(Word, ParseAndPrint) {
  EXPECT_EQ(Word::parse(12, "11.3.0").symbols(), (std::vector<Symbol>{11, 3, 0}));
  EXPECT_EQ(Word::parse(12, "11.3.0").to_string(), "11.3.0");
  EXPECT_TRUE(Word::parse(2, "-").empty());
  EXPECT_EQ(Word(2, {}).to_string(), "-");
  EXPECT_THROW(Word::parse(2, "012"), Error);
  EXPECT_THROW(Word(1, {}), Error);
}

TEST(Word, TableCap) { EXPECT_THROW(table_size(2, 25), ResourceError); }

TEST(Parity, Examples) {
  EXPECT_EQ(perm_parity(GatePerm::identity(2, 3)), Parity::Even);
  EXPECT_EQ(perm_parity(GatePerm::word_cycle({Word::parse(3, "01"), Word::parse(3, "22")})), Parity::Odd);
  EXPECT_EQ(perm_parity(wire_perm(WirePermSpec({1, 0}), 3)), Parity::Odd);
}

TEST(Parity, Homomorphism) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned q = 2 + rng() % 2;
    const unsigned n = 1 + rng() % 3;
    GatePerm f = random_gate(rng, q, n);
    GatePerm g = random_gate(rng, q, n);
    EXPECT_EQ(perm_parity(compose_lr(f, g)), perm_parity(f) ^ perm_parity(g));
  }
}

TEST(Parity, WireSwapFormula) {
  for (unsigned q = 2; q <= 5; ++q) {
    for (unsigned n = 2; n <= 4; ++n) {
      std::vector<unsigned> alpha(n);
      std::iota(alpha.begin(), alpha.end(), 0U);
      std::swap(alpha[0], alpha[1]);
      std::uint64_t count = q * (q - 1) / 2;
      for (unsigned i = 2; i < n; ++i) count *= q;
      EXPECT_EQ(perm_parity(wire_perm(WirePermSpec(alpha), q)), count % 2 ? Parity::Odd : Parity::Even)
          << "q=" << q << " n=" << n;
    }
  }
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(Word::parse(2, "0101")).counts(), (std::vector<std::uint32_t>{2, 2}));
  EXPECT_EQ(weight(Word::parse(3, "000")).counts(), (std::vector<std::uint32_t>{3, 0, 0}));
  EXPECT_EQ(weight(Word(2, {})).counts(), (std::vector<std::uint32_t>{0, 0}));
}

TEST(WeightClasses, Examples) {
  const auto c22 = weight_classes(2, 2);
  ASSERT_EQ(c22.count(), 3U);
  EXPECT_EQ(c22.members(0), (std::vector<Code>{0}));
  EXPECT_EQ(c22.members(1), (std::vector<Code>{1, 2}));
  EXPECT_EQ(c22.members(2), (std::vector<Code>{3}));
  EXPECT_EQ(weight_classes(2, 4).sizes(), (std::vector<std::size_t>{1, 4, 6, 4, 1}));
  auto s32 = weight_classes(3, 2).sizes();
  std::sort(s32.begin(), s32.end());
  EXPECT_EQ(s32, (std::vector<std::size_t>{1, 1, 1, 2, 2, 2}));
}

TEST(WeightClasses, StarsAndBars) {
  for (unsigned q = 2; q <= 3; ++q) {
    for (unsigned n = 0; n <= 5; ++n) {
      if (n == 0) continue;
      const auto classes = weight_classes(q, n);
      EXPECT_EQ(classes.count(), binomial(n + q - 1, q - 1));
      for (const auto& members : classes.classes()) {
        const auto w = weight(word_decode(members.front(), n, q));
        std::uint64_t multinomial = 1;
        unsigned used = 0;
        for (auto c : w.counts()) {
          multinomial *= binomial(used + c, c);
          used += c;
        }
        EXPECT_EQ(members.size(), multinomial);
        for (Code m : members) EXPECT_EQ(weight(word_decode(m, n, q)), w);
      }
    }
  }
}

TEST(WeightClasses, OrderedBySmallestMember) {
  const auto classes = weight_classes(3, 3);
  for (std::size_t i = 1; i < classes.count(); ++i) {
    EXPECT_LT(classes.members(i - 1).front(), classes.members(i).front());
  }
}

TEST(Conservative, Examples) {
  EXPECT_TRUE(is_conservative(GatePerm::identity(3, 2)));
  EXPECT_TRUE(is_conservative(fredkin()));
  EXPECT_FALSE(is_conservative(negation()));
  EXPECT_EQ(conservation_witness(negation()), Word::parse(2, "0"));
}

TEST(Conservative, AltExamples) {
  EXPECT_TRUE(is_alt_conservative(GatePerm::identity(2, 3)));
  EXPECT_FALSE(is_alt_conservative(GatePerm::word_cycle({Word::parse(2, "01"), Word::parse(2, "10")})));
  EXPECT_TRUE(is_alt_conservative(
      GatePerm::word_cycle({Word::parse(2, "001"), Word::parse(2, "010"), Word::parse(2, "100")})));
}

TEST(Conservative, ModKExamples) {
  EXPECT_TRUE(is_mod_k_conservative(fredkin(), 3));
  EXPECT_TRUE(is_mod_k_conservative(GatePerm::word_cycle({Word::parse(2, "00"), Word::parse(2, "11")}), 2));
  EXPECT_FALSE(is_mod_k_conservative(GatePerm::word_cycle({Word::parse(2, "00"), Word::parse(2, "01")}), 2));
  EXPECT_THROW(is_mod_k_conservative(fredkin(), 0), Error);
}

TEST(Conservative, ClosedUnderCompositionAndInverse) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned q = 2 + rng() % 2;
    const unsigned n = 1 + rng() % 4;
    GatePerm f = random_conservative_gate(rng, q, n);
    GatePerm g = random_conservative_gate(rng, q, n);
    EXPECT_TRUE(is_conservative(f));
    EXPECT_TRUE(is_conservative(compose_lr(f, g)));
    EXPECT_TRUE(is_conservative(f.inverse()));
  }
}

TEST(GatePerm, RejectsNonBijection) {
  EXPECT_THROW(GatePerm(2, 1, std::vector<Code>{0, 0}), Error);
  EXPECT_THROW(GatePerm(2, 2, std::vector<Code>{0, 1}), Error);
  EXPECT_THROW(GatePerm(2, 0, std::vector<Code>{0}), Error);
}

TEST(Permutation, CyclesAndInverse) {
  const auto p = Permutation::from_cycles(6, {{4, 1, 3}, {0, 5}});
  EXPECT_EQ(p.cycles(), (std::vector<std::vector<Permutation::Point>>{{0, 5}, {1, 3, 4}}));
  EXPECT_TRUE(compose_lr(p, p.inverse()).is_identity());
  EXPECT_EQ(p.parity(), Parity::Odd);
  EXPECT_EQ(p.first_moved_point(), 0U);
  EXPECT_THROW(Permutation({0, 0}), Error);
}
