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

#include "revgate/error.hpp"
#include "revgate/hypergraphs.hpp"

using namespace revgate;

namespace {

SmallHypergraph path(unsigned n) {
  std::vector<std::vector<unsigned>> edges;
  for (unsigned i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return SmallHypergraph(n, edges);
}

bool hamming_one(const Word& a, const Word& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d == 1;
}

}  // namespace

TEST(Components, Examples) {
  EXPECT_EQ(components(GraphKind::G1, 2, 3).count(), 1U);
  EXPECT_EQ(components(GraphKind::G2, 2, 4).count(), 5U);
  const auto g3 = components(GraphKind::G3, 2, 1);
  EXPECT_EQ(g3.count(), 2U);
  const auto g4 = components(GraphKind::G4, 3, 3);
  EXPECT_EQ(g4.count(), weight_classes(3, 3).count() + 1);
  EXPECT_NE(g4.class_of(word_encode(Word::parse(3, "012"))), g4.class_of(word_encode(Word::parse(3, "021"))));
  EXPECT_EQ(g4.class_of(word_encode(Word::parse(3, "012"))), g4.class_of(word_encode(Word::parse(3, "120"))));
}

TEST(Components, G2IsWeightClasses) {
  for (unsigned q = 2; q <= 3; ++q)
    for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(components(GraphKind::G2, q, n), weight_classes(q, n));
}

TEST(Components, G3ConnectedFromTwoWires) {
  for (unsigned q = 2; q <= 3; ++q)
    for (unsigned n = 2; n <= 5; ++n) EXPECT_EQ(components(GraphKind::G3, q, n).count(), 1U);
}

TEST(Components, G4IsWeightClassesAboveAlphabetSize) {
  for (unsigned q = 2; q <= 3; ++q)
    for (unsigned n = q + 1; n <= 6; ++n) EXPECT_EQ(components(GraphKind::G4, q, n), weight_classes(q, n));
}

TEST(Components, EdgesMatchTheirPatterns) {
  for (unsigned q = 2; q <= 3; ++q) {
    const unsigned n = 4;
    for_each_edge(GraphKind::G1, q, n, [&](std::span<const Code> e) {
      ASSERT_EQ(e.size(), 2U);
      EXPECT_TRUE(hamming_one(word_decode(e[0], n, q), word_decode(e[1], n, q)));
    });
    for_each_edge(GraphKind::G2, q, n, [&](std::span<const Code> e) {
      const Word a = word_decode(e[0], n, q), b = word_decode(e[1], n, q);
      int found = 0;
      for (unsigned i = 0; i + 1 < n; ++i) {
        Word s = a;
        auto sym = s.symbols();
        std::swap(sym[i], sym[i + 1]);
        found += Word(q, sym) == b && a[i] != a[i + 1];
      }
      EXPECT_EQ(found, 1);
    });
    for_each_edge(GraphKind::G3, q, n, [&](std::span<const Code> e) {
      ASSERT_EQ(e.size(), 3U);
      const Word x = word_decode(e[0], n, q), y = word_decode(e[1], n, q), z = word_decode(e[2], n, q);
      // x = uabv, y = uacv, z = udbv
      bool ok = false;
      for (unsigned i = 0; i + 1 < n; ++i) {
        bool same_uv = true;
        for (unsigned j = 0; j < n; ++j) {
          if (j == i || j == i + 1) continue;
          same_uv = same_uv && x[j] == y[j] && x[j] == z[j];
        }
        ok = ok || (same_uv && y[i] == x[i] && y[i + 1] != x[i + 1] && z[i + 1] == x[i + 1] && z[i] != x[i]);
      }
      EXPECT_TRUE(ok);
    });
    for_each_edge(GraphKind::G4, q, n, [&](std::span<const Code> e) {
      ASSERT_EQ(e.size(), 3U);
      const Word x = word_decode(e[0], n, q);
      bool ok = false;
      for (unsigned k = 0; k + 2 < n; ++k) {
        const Word r1 = rotate_consecutive(x, k);
        const Word r2 = rotate_consecutive(r1, k);
        const Word y = word_decode(e[1], n, q), z = word_decode(e[2], n, q);
        ok = ok || ((r1 == y && r2 == z) || (r1 == z && r2 == y));
      }
      EXPECT_TRUE(ok);
    });
  }
}

TEST(SwapGroup, Examples) {
  EXPECT_EQ(swap_group(path(4)).order, 24);
  EXPECT_EQ(swap_group(SmallHypergraph(4, {{0, 1}, {2, 3}})).order, 4);
  EXPECT_EQ(swap_group(SmallHypergraph(3, {})).order, 1);
  EXPECT_TRUE(swap_group_check(path(4)));
  EXPECT_THROW(SmallHypergraph(13, {}), ResourceError);
  EXPECT_THROW(swap_group(SmallHypergraph(3, {{0, 1, 2}})), Error);
}

TEST(CyclingGroup, Examples) {
  EXPECT_EQ(cycling_group(SmallHypergraph(4, {{0, 1, 2}, {1, 2, 3}})).order, 12);
  EXPECT_EQ(cycling_group(SmallHypergraph(5, {{0, 1, 2}, {2, 3, 4}})).order, 60);
  EXPECT_EQ(cycling_group(SmallHypergraph(3, {{0, 1, 2}})).order, 3);
  EXPECT_TRUE(cycling_group_check(SmallHypergraph(5, {{0, 1, 2}, {2, 3, 4}})));
}

TEST(EdgeGroups, RandomHypergraphs) {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned v = 2 + rng() % 9;
    std::vector<std::vector<unsigned>> edges;
    const unsigned m = rng() % 7;
    for (unsigned i = 0; i < m; ++i) {
      unsigned a = rng() % v, b = rng() % v;
      if (a != b) edges.push_back({a, b});
    }
    EXPECT_TRUE(swap_group_check(SmallHypergraph(v, edges)));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned v = 3 + rng() % 8;
    std::vector<std::vector<unsigned>> edges;
    const unsigned m = rng() % 5;
    for (unsigned i = 0; i < m; ++i) {
      unsigned a = rng() % v, b = rng() % v, c = rng() % v;
      if (a != b && b != c && a != c) edges.push_back({a, b, c});
    }
    EXPECT_TRUE(cycling_group_check(SmallHypergraph(v, edges)));
  }
}

TEST(Route, Examples) {
  EXPECT_EQ(consecutive_3cycle_parity_route(Word::parse(2, "011"), Word::parse(2, "011")),
            std::vector<unsigned>{});
  const auto r = consecutive_3cycle_parity_route(Word::parse(2, "001"), Word::parse(2, "100"));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->size(), 1U);
  EXPECT_FALSE(consecutive_3cycle_parity_route(Word::parse(3, "012"), Word::parse(3, "021")).has_value());
  EXPECT_THROW(consecutive_3cycle_parity_route(Word::parse(2, "001"), Word::parse(2, "011")), Error);
}

TEST(Route, ReachesWholeClassAboveAlphabetSize) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned q = 2 + rng() % 2;
    const unsigned n = q + 1 + rng() % 2;
    std::vector<Symbol> s(n);
    for (auto& x : s) x = rng() % q;
    Word u(q, s);
    std::shuffle(s.begin(), s.end(), rng);
    Word v(q, s);
    const auto route = consecutive_3cycle_parity_route(u, v);
    ASSERT_TRUE(route.has_value());
    Word w = u;
    for (unsigned k : *route) w = rotate_consecutive(w, k);
    EXPECT_EQ(w, v);
  }
}
