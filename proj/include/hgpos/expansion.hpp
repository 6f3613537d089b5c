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

// Expanded games built from a hypergraph game.
//
// The uniform hyperlink game replaces every membership i in e by rho/|e|
// copies (i, e, 1..rho/|e|), where rho = k * lcm{|e|}. A coalition of copies is
// worth v^N of the hyperlinks whose copy block U(e) it contains entirely.
//
// The hyperlink agent form uses the same agents (k = 1) but keeps a hypergraph
// on them: one hyperlink per original hyperlink plus every pair of agents of
// the same original player. Its worth is v of the original players touched.
//
// Expanded players are referred to by their position in universe(), which is
// sorted by (origin, hyperlink, copy).

#ifndef HGPOS_EXPANSION_HPP_
#define HGPOS_EXPANSION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hgpos/core_model.hpp"
#include "hgpos/tu_values.hpp"

namespace hgpos {

/// (i, e, copy) with e given by its position in the hyperlink list.
struct ExpandedPlayer {
  PlayerId origin;
  std::size_t link = 0;
  std::uint64_t copy = 1;

  auto operator<=>(const ExpandedPlayer&) const = default;
};

std::string to_string(const ExpandedPlayer& l);

/// Shared index structure of U(H)^k and of the agent set of the HAF.
class ExpandedUniverse {
 public:
  /// Throws InvalidInput for an empty hypergraph or k < 1.
  ExpandedUniverse(const Hypergraph& h, std::uint64_t k);

  std::uint64_t k() const { return k_; }
  std::uint64_t eta() const { return eta_; }
  /// rho(k) = k * eta, the size of every block U(e).
  std::uint64_t rho() const { return k_ * eta_; }

  std::span<const ExpandedPlayer> players() const { return players_; }
  std::size_t size() const { return players_.size(); }
  std::size_t link_count() const { return blocks_.size(); }

  /// U(e), positions of the copies belonging to hyperlink `link`.
  std::span<const std::size_t> block(std::size_t link) const;
  /// U(i); empty for isolated players.
  std::span<const std::size_t> group(PlayerId i) const;
  /// U(i, e); empty unless i is in e.
  std::span<const std::size_t> sub_block(PlayerId i, std::size_t link) const;

  /// Throws InvalidInput if `l` is not an expanded player.
  std::size_t index_of(const ExpandedPlayer& l) const;

 private:
  std::uint64_t k_ = 1;
  std::uint64_t eta_ = 1;
  std::vector<ExpandedPlayer> players_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::map<PlayerId, std::vector<std::size_t>> groups_;
  std::map<std::pair<PlayerId, std::size_t>, std::vector<std::size_t>>
      sub_blocks_;
};

/// (U(H)^k, w^k). k = 1 is the plain uniform hyperlink game.
class UniformExpansion {
 public:
  UniformExpansion(HypergraphGame game, std::uint64_t k);

  const HypergraphGame& game() const { return game_; }
  const ExpandedUniverse& universe() const { return universe_; }
  std::uint64_t k() const { return universe_.k(); }
  std::uint64_t rho() const { return universe_.rho(); }
  std::size_t size() const { return universe_.size(); }

  /// H[S] as a mask over hyperlink positions. Throws InvalidInput on a
  /// position outside the universe.
  Mask completed_links(std::span<const std::size_t> s) const;

 private:
  HypergraphGame game_;
  ExpandedUniverse universe_;
};

UniformExpansion build_uniform(const HypergraphGame& game, std::uint64_t k = 1);

/// w(S) = v^N(H[S]).
Rational expanded_worth(const UniformExpansion& exp,
                        std::span<const std::size_t> s);

/// The expanded game as a plain TU-game over universe positions. Throws
/// CapExceeded beyond 64 expanded players.
TUGame as_tu_game(const UniformExpansion& exp);

/// Exact Shapley payoffs of (U(H)^k, w^k), aligned with the universe.
///
/// Coalitions are grouped by their block count vector (how many copies of
/// each U(e) they contain). The worth only depends on which blocks are
/// complete, and each count vector stands for a product of binomial
/// coefficients worth of coalitions, so the sum over 2^|U| coalitions turns
/// into a sum over (rho+1)^|H| states. Only the symmetry of copies inside a
/// block is used. Throws CapExceeded above caps.expansion_states states.
Vector shapley_blockwise(const UniformExpansion& exp, const Caps& caps = {});

/// Same, for the subgame of w on U minus the player at position `removed`.
/// The entry for `removed` is 0.
Vector shapley_blockwise_without(const UniformExpansion& exp,
                                 std::size_t removed, const Caps& caps = {});

/// Sum of the expanded payoffs over each group U(i); isolated players get 0.
Allocation grouped_position(const UniformExpansion& exp, const Caps& caps = {});

/// Group sums of an arbitrary payoff vector over the universe.
Allocation group_sums(const UniformExpansion& exp, const Vector& payoff);

/// Hyperlink agent form (agents, hyperlinks, worth).
class HAFGame {
 public:
  explicit HAFGame(HypergraphGame game);

  const HypergraphGame& game() const { return game_; }
  const ExpandedUniverse& agents() const { return agents_; }
  std::size_t size() const { return agents_.size(); }

  /// One hyperlink per original hyperlink (same order), then the pairwise
  /// links inside each agent group, ordered by player and then
  /// lexicographically.
  std::span<const std::vector<std::size_t>> hyperlinks() const {
    return hyperlinks_;
  }
  std::size_t original_link_count() const { return game_.graph().link_count(); }

  /// v(N(K)), where N(K) are the original players with an agent in K.
  Rational worth(std::span<const std::size_t> k) const;

  /// Worth of the hypergraph-restricted game: the sum of worth(C) over the
  /// components C of K under the hyperlinks contained in K. Requires at most
  /// 64 agents (throws CapExceeded).
  Rational restricted_worth(Mask k) const;

  TUGame point_game() const;

 private:
  HypergraphGame game_;
  ExpandedUniverse agents_;
  std::vector<std::vector<std::size_t>> hyperlinks_;
  std::vector<Mask> hyperlink_masks_;
  std::vector<PlayerId> agent_origin_;
};

HAFGame build_haf(const HypergraphGame& game);

/// Myerson value of the hyperlink agent form, aligned with the agents.
/// With `symmetry_reduction` the agents of one sub-block N(i, h) are treated
/// as interchangeable and states are sub-block count vectors; otherwise the
/// point game is enumerated over all 2^|agents| coalitions.
Vector corollary_payoffs(const HypergraphGame& game, const Caps& caps = {},
                         bool symmetry_reduction = true);

}  // namespace hgpos

#endif  // HGPOS_EXPANSION_HPP_
