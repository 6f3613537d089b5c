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


#include "hgpos/expansion.hpp"

#include <bit>

#include <gtest/gtest.h>

#include "hgpos/comm_values.hpp"
#include "support/games.hpp"
#include "support/oracles.hpp"

namespace hgpos {
namespace {

using testing::oracle::to_std;

std::vector<HypergraphGame> small_expansions(std::uint64_t seed,
                                             std::size_t count,
                                             std::uint64_t limit) {
  std::vector<HypergraphGame> out;
  for (auto& g : testing::random_corpus(seed, count)) {
    if (g.graph().link_count() == 0) continue;
    if (eta(g.graph()) * g.graph().link_count() <= limit) out.push_back(g);
  }
  return out;
}

TEST(ExpandedUniverse, RelayLayout) {
  const auto g = testing::relay_game();
  const ExpandedUniverse u(g.graph(), 1);
  EXPECT_EQ(u.eta(), 6u);
  EXPECT_EQ(u.rho(), 6u);
  EXPECT_EQ(u.size(), 24u);
  EXPECT_EQ(u.sub_block(PlayerId{1}, 0).size(), 3u);
  EXPECT_EQ(u.sub_block(PlayerId{4}, 3).size(), 2u);
  EXPECT_EQ(u.group(PlayerId{4}).size(), 5u);
  EXPECT_EQ(u.group(PlayerId{2}).size(), 3u);
  for (std::size_t e = 0; e < 4; ++e) EXPECT_EQ(u.block(e).size(), 6u);
  EXPECT_EQ(ExpandedUniverse(g.graph(), 2).size(), 48u);
  EXPECT_EQ(to_string(u.players()[0]), "(1,e1,1)");
  EXPECT_EQ(u.index_of(ExpandedPlayer{PlayerId{1}, 0, 2}), 1u);
  EXPECT_THROW(u.group(PlayerId{7}), InvalidInput);
  EXPECT_THROW(u.index_of(ExpandedPlayer{PlayerId{1}, 1, 1}), InvalidInput);
  EXPECT_THROW(ExpandedUniverse(g.graph(), 0), InvalidInput);
}

TEST(ExpandedUniverse, IsolatedPlayerHasEmptyGroup) {
  const auto g = testing::make_game(
      {1, 2, 3}, {{1, 2}},
      CharacteristicFunction::Unanimity{Coalition{1, 2}});
  const ExpandedUniverse u(g.graph(), 1);
  EXPECT_TRUE(u.group(PlayerId{3}).empty());
}

TEST(UniformExpansion, WorthCountsOnlyCompleteBlocks) {
  const auto exp = build_uniform(testing::relay_game(), 1);
  std::vector<std::size_t> all(exp.size());
  for (std::size_t l = 0; l < all.size(); ++l) all[l] = l;
  EXPECT_EQ(expanded_worth(exp, all), Rational(1));
  all.pop_back();
  EXPECT_EQ(expanded_worth(exp, all), Rational(0));
  EXPECT_EQ(exp.completed_links(all), Mask{0b0111});
  const std::vector<std::size_t> bad{99};
  EXPECT_THROW(exp.completed_links(bad), InvalidInput);
}

TEST(Blockwise, RelayEveryExpandedPlayerGetsOneOver24) {
  const auto exp = build_uniform(testing::relay_game(), 1);
  const Vector sh = shapley_blockwise(exp);
  ASSERT_EQ(sh.size(), 24);
  for (Eigen::Index l = 0; l < sh.size(); ++l) EXPECT_EQ(sh(l), Rational(1, 24));
}

TEST(Blockwise, RelayGroupedAtK1AndK2) {
  const auto g = testing::relay_game();
  const Allocation expected = position_value(g);
  EXPECT_EQ(grouped_position(build_uniform(g, 1)), expected);
  EXPECT_EQ(grouped_position(build_uniform(g, 2)), expected);
}

TEST(Blockwise, MatchesSubsetEnumeration) {
  for (const auto& g : small_expansions(41, 150, 12)) {
    const auto exp = build_uniform(g, 1);
    EXPECT_EQ(shapley_blockwise(exp), shapley_by_subsets(as_tu_game(exp)));
  }
}

TEST(Blockwise, SubBlockSumsMatchHyperlinkShares) {
  for (const auto& g : testing::random_corpus(42, 80)) {
    if (g.graph().link_count() == 0) continue;
    const auto exp = build_uniform(g, 1);
    const Vector sh = shapley_blockwise(exp);
    const Vector links = hyperlink_shapley(g);
    for (std::size_t e = 0; e < g.graph().link_count(); ++e) {
      const Hyperlink& link = g.graph().hyperlinks()[e];
      for (PlayerId i : link.members()) {
        Rational sum = 0;
        for (std::size_t l : exp.universe().sub_block(i, e)) {
          sum += sh(static_cast<Eigen::Index>(l));
        }
        EXPECT_EQ(sum, links(static_cast<Eigen::Index>(e)) /
                           Rational(static_cast<long>(link.size())));
      }
    }
  }
}

TEST(Blockwise, WithoutMatchesSubsetEnumeration) {
  for (const auto& g : small_expansions(43, 120, 10)) {
    const auto exp = build_uniform(g, 1);
    const TUGame full = as_tu_game(exp);
    const std::size_t n = exp.size();
    for (std::size_t removed = 0; removed < n; ++removed) {
      const Mask low = (Mask{1} << removed) - 1;
      const TUGame reduced{n - 1, [&full, low](Mask s) {
                             return full.worth((s & low) | ((s & ~low) << 1));
                           }};
      const Vector expected = shapley_by_subsets(reduced);
      const Vector got = shapley_blockwise_without(exp, removed);
      EXPECT_EQ(got(static_cast<Eigen::Index>(removed)), Rational(0));
      for (std::size_t l = 0; l + 1 < n; ++l) {
        const std::size_t original = l < removed ? l : l + 1;
        EXPECT_EQ(got(static_cast<Eigen::Index>(original)),
                  expected(static_cast<Eigen::Index>(l)));
      }
    }
  }
}

TEST(Blockwise, StateCapIsEnforced) {
  Caps caps;
  caps.expansion_states = 100;
  EXPECT_THROW(shapley_blockwise(build_uniform(testing::relay_game(), 1), caps),
               CapExceeded);
}

TEST(HAF, RelayCounts) {
  const HAFGame haf = build_haf(testing::relay_game());
  EXPECT_EQ(haf.size(), 24u);
  EXPECT_EQ(haf.original_link_count(), 4u);
  EXPECT_EQ(haf.hyperlinks().size(), 43u);
  std::size_t pairwise = 0;
  for (const auto& link : haf.hyperlinks()) pairwise += link.size() == 2;
  EXPECT_EQ(pairwise, 39u);
}

TEST(HAF, WorthUsesOriginalPlayers) {
  const HAFGame haf = build_haf(testing::relay_game());
  const auto u = haf.agents();
  // One agent of each of players 1, 2, 3 with no internal links.
  const std::vector<std::size_t> spread{u.group(PlayerId{1})[0],
                                        u.group(PlayerId{2})[0],
                                        u.group(PlayerId{3})[0]};
  EXPECT_EQ(haf.worth(spread), Rational(1));
  Mask k = 0;
  for (std::size_t a : spread) k |= Mask{1} << a;
  EXPECT_EQ(haf.restricted_worth(k), Rational(0));
}

TEST(HAF, AgentFormMyersonMatchesBlockwise) {
  for (const auto& g : small_expansions(44, 200, 12)) {
    const Vector expected = shapley_blockwise(build_uniform(g, 1));
    EXPECT_EQ(corollary_payoffs(g), expected);
  }
}

TEST(HAF, SymmetryReductionMatchesBruteForce) {
  for (const auto& g : small_expansions(45, 150, 10)) {
    EXPECT_EQ(corollary_payoffs(g, {}, true), corollary_payoffs(g, {}, false));
  }
}

}  // namespace
}  // namespace hgpos
