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


#include "hgpos/comm_values.hpp"

#include <gtest/gtest.h>

#include "hgpos/connectivity.hpp"
#include "support/games.hpp"
#include "support/oracles.hpp"

namespace hgpos {
namespace {

using CF = CharacteristicFunction;
using testing::oracle::to_std;

TEST(PositionValue, Relay) {
  const auto g = testing::relay_game();
  EXPECT_EQ(position_value(g),
            testing::allocation(g, {Rational(1, 8), Rational(1, 8),
                                    Rational(1, 8), Rational(5, 24),
                                    Rational(5, 24), Rational(5, 24)}));
}

TEST(MyersonValue, RelayIsEqualSplit) {
  const auto g = testing::relay_game();
  const Rational sixth(1, 6);
  EXPECT_EQ(myerson_value(g),
            testing::allocation(g, {sixth, sixth, sixth, sixth, sixth, sixth}));
}

TEST(CommunicationValues, SingleLink) {
  const auto g = testing::single_link_game();
  const Rational half(1, 2);
  EXPECT_EQ(position_value(g), testing::allocation(g, {half, half}));
  EXPECT_EQ(myerson_value(g), testing::allocation(g, {half, half}));
  EXPECT_EQ(shapley_value(g), testing::allocation(g, {half, half}));
}

TEST(CommunicationValues, EmptyHypergraphPaysNothing) {
  const auto g = testing::make_game({1, 2, 3}, {},
                                    CF::Unanimity{Coalition{1, 2, 3}});
  EXPECT_EQ(position_value(g), Allocation::zeros(g.players()));
  EXPECT_EQ(myerson_value(g), Allocation::zeros(g.players()));
  EXPECT_EQ(shapley_value(g).total(), Rational(1));
}

TEST(CommunicationValues, PathWithEndpointUnanimity) {
  const auto g = testing::make_game({1, 2, 3}, {{1, 2}, {2, 3}},
                                    CF::Unanimity{Coalition{1, 3}});
  EXPECT_EQ(position_value(g),
            testing::allocation(g, {Rational(1, 4), Rational(1, 2),
                                    Rational(1, 4)}));
}

TEST(CommunicationValues, PointAndLinkWorths) {
  const auto g = testing::relay_game();
  // {1,2,3} has no internal links.
  EXPECT_EQ(point_worth(g, 0b000111), Rational(0));
  EXPECT_EQ(point_worth(g, 0b111111), Rational(1));
  EXPECT_EQ(hyperlink_worth(g, 0b1111), Rational(1));
  EXPECT_EQ(hyperlink_worth(g, 0b0111), Rational(0));
}

TEST(CommunicationValues, MatchDefinitionsOnRandomGames) {
  for (const auto& g : testing::random_corpus(31, 120)) {
    EXPECT_EQ(to_std(myerson_value(g).payoff()), testing::oracle::myerson(g));
    EXPECT_EQ(to_std(position_value(g).payoff()), testing::oracle::position(g));
  }
}

TEST(CommunicationValues, ComponentEfficiency) {
  for (const auto& g : testing::random_corpus(32, 120)) {
    const Allocation pi = position_value(g);
    const Allocation mu = myerson_value(g);
    for (const Coalition& c : components(g.graph())) {
      Rational pi_sum = 0;
      Rational mu_sum = 0;
      for (PlayerId i : c.members()) {
        pi_sum += pi[i];
        mu_sum += mu[i];
      }
      EXPECT_EQ(pi_sum, g.v()(c));
      EXPECT_EQ(mu_sum, g.v()(c));
    }
  }
}

TEST(CommunicationValues, GraphCaseAgreesWithDefinition) {
  testing::CorpusOptions opt;
  opt.uniform_size = 2;
  opt.max_links = 5;
  for (const auto& g : testing::random_corpus(33, 80, opt)) {
    EXPECT_EQ(to_std(position_value(g).payoff()), testing::oracle::position(g));
  }
}

}  // namespace
}  // namespace hgpos
