// Copyright 2026 The hgpos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "hgpos/core_model.hpp"

#include <gtest/gtest.h>

#include "support/games.hpp"

namespace hgpos {
namespace {

using testing::relay_game;
using testing::make_game;
using CF = CharacteristicFunction;

TEST(Coalition, SortsAndRejectsDuplicates) {
  const Coalition c{3, 1, 2};
  EXPECT_EQ(c.to_string(), "{1,2,3}");
  EXPECT_TRUE(c.contains(PlayerId{2}));
  EXPECT_FALSE(c.contains(PlayerId{4}));
  EXPECT_TRUE((Coalition{1, 3}).is_subset_of(c));
  EXPECT_THROW((Coalition{1, 1}), InvalidInput);
}

TEST(Hypergraph, RelayStructure) {
  const auto g = relay_game();
  EXPECT_EQ(g.graph().link_count(), 4u);
  EXPECT_EQ(g.players().size(), 6u);
  EXPECT_EQ(eta(g.graph()), 6u);
}

TEST(Hypergraph, EmptyLinkSetIsValid) {
  const Hypergraph h(PlayerSet(player_ids({1, 2, 3})), {});
  EXPECT_EQ(h.link_count(), 0u);
  EXPECT_EQ(h.all_links(), Mask{0});
}

TEST(Hypergraph, RejectsBadLinks) {
  const PlayerSet n(player_ids({1, 2, 3}));
  EXPECT_THROW(Hypergraph(n, {Coalition{1}}), InvalidInput);
  EXPECT_THROW(Hypergraph(n, {Coalition{1, 7}}), InvalidInput);
  EXPECT_THROW(Hypergraph(n, {Coalition{1, 2}, Coalition{2, 1}}), InvalidInput);
}

TEST(Hypergraph, LinksAreOrderedLexicographically) {
  const Hypergraph h(PlayerSet(player_ids({1, 2, 3, 4})),
                     {Coalition{2, 3}, Coalition{1, 4}, Coalition{1, 2, 3}});
  ASSERT_EQ(h.link_count(), 3u);
  EXPECT_EQ(h.hyperlinks()[0], (Coalition{1, 2, 3}));
  EXPECT_EQ(h.hyperlinks()[1], (Coalition{1, 4}));
  EXPECT_EQ(h.hyperlinks()[2], (Coalition{2, 3}));
  EXPECT_EQ(h.index_of(Coalition{2, 3}), 2u);
}

TEST(Hypergraph, IncidentHyperlinks) {
  const auto g = relay_game();
  const auto at4 = incident_hyperlinks(g.graph(), PlayerId{4});
  ASSERT_EQ(at4.size(), 2u);
  EXPECT_EQ(at4[0], (Coalition{1, 4}));
  EXPECT_EQ(at4[1], (Coalition{4, 5, 6}));
  const auto at1 = incident_hyperlinks(g.graph(), PlayerId{1});
  ASSERT_EQ(at1.size(), 1u);
  EXPECT_EQ(at1[0], (Coalition{1, 4}));
  EXPECT_EQ(degree(g.graph(), PlayerId{5}), 2u);
}

TEST(Hypergraph, Eta) {
  const PlayerSet n(player_ids({1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(eta(Hypergraph(n, {Coalition{1, 2}, Coalition{3, 4}})), 2u);
  EXPECT_EQ(eta(Hypergraph(n, {Coalition{1, 2}, Coalition{3, 4, 5},
                               Coalition{1, 2, 3, 6}})),
            12u);
  EXPECT_THROW(eta(Hypergraph(n, {})), InvalidInput);
}

TEST(Hypergraph, UniformityAndPartial) {
  const auto g = relay_game();
  EXPECT_FALSE(g.graph().is_uniform(2));
  const Hypergraph first_three = g.graph().partial(0b0111);
  EXPECT_TRUE(first_three.is_uniform(2));
  EXPECT_EQ(g.graph().without(3).link_count(), 3u);
}

TEST(CharacteristicFunction, UnanimityWorths) {
  const auto g = relay_game();
  EXPECT_EQ(g.v()(Coalition{1, 2, 3}), Rational(1));
  EXPECT_EQ(g.v()(Coalition{1, 2, 3, 4}), Rational(1));
  EXPECT_EQ(g.v()(Coalition{1, 2}), Rational(0));
  EXPECT_EQ(g.v()(Coalition{}), Rational(0));
}

TEST(CharacteristicFunction, WeightedEqualsSumOfTerms) {
  const PlayerSet n(player_ids({1, 2, 3, 4}));
  const auto v = CF::weighted_unanimity(
      n, {{Coalition{1, 2}, Rational(3, 2)}, {Coalition{2, 3, 4}, Rational(-1, 3)}});
  EXPECT_EQ(v(Coalition{1, 2}), Rational(3, 2));
  EXPECT_EQ(v(Coalition{2, 3, 4}), Rational(-1, 3));
  EXPECT_EQ(v(Coalition{1, 2, 3, 4}), Rational(3, 2) - Rational(1, 3));
  EXPECT_EQ(v(Coalition{1, 3}), Rational(0));
}

TEST(CharacteristicFunction, RejectsNonZeroNormalized) {
  const PlayerSet n(player_ids({1, 2, 3}));
  EXPECT_THROW(CF::table(n, {{Coalition{1}, Rational(1)}}), InvalidInput);
  EXPECT_THROW(CF::unanimity(n, Coalition{2}), InvalidInput);
  EXPECT_THROW(CF::weighted_unanimity(n, {{Coalition{3}, Rational(2)}}),
               InvalidInput);
  EXPECT_THROW(CF::table(n, {{Coalition{1, 9}, Rational(1)}}), InvalidInput);
}

TEST(CharacteristicFunction, TableDefaultsToZero) {
  const PlayerSet n(player_ids({1, 2, 3}));
  const auto v = CF::table(n, {{Coalition{1, 2}, Rational(5, 7)}});
  EXPECT_EQ(v(Coalition{1, 2}), Rational(5, 7));
  EXPECT_EQ(v(Coalition{1, 2, 3}), Rational(0));
  EXPECT_EQ(v.worth_of_mask(0b011), Rational(5, 7));
}

TEST(HypergraphGame, RequiresMatchingPlayers) {
  const PlayerSet a(player_ids({1, 2}));
  const PlayerSet b(player_ids({1, 2, 3}));
  EXPECT_THROW(HypergraphGame(CF::unanimity(a, Coalition{1, 2}),
                              Hypergraph(b, {Coalition{1, 2}})),
               InvalidInput);
}

TEST(Allocation, AccessAndTotal) {
  const auto g = relay_game();
  const auto a = testing::allocation(
      g, {Rational(1, 8), Rational(1, 8), Rational(1, 8), Rational(5, 24),
          Rational(5, 24), Rational(5, 24)});
  EXPECT_EQ(a[PlayerId{4}], Rational(5, 24));
  EXPECT_EQ(a.total(), Rational(1));
  EXPECT_EQ(to_string(a),
            "(1: 1/8, 2: 1/8, 3: 1/8, 4: 5/24, 5: 5/24, 6: 5/24)");
  EXPECT_THROW(a[PlayerId{9}], InvalidInput);
}

TEST(Allocation, SinglePlayerGame) {
  const auto g = make_game({1}, {}, CF::Table{});
  EXPECT_EQ(g.players().size(), 1u);
}

}  // namespace
}  // namespace hgpos
