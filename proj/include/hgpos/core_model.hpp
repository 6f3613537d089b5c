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

// Exact TU-game and hypergraph data model.
//
// Players are identified by small non-negative integers and kept in ascending
// order. Every container below also exposes a bitmask view relative to that
// order (bit k <-> k-th smallest player), which is what the enumeration
// engines work on. Games are therefore limited to 64 players and 64
// hyperlinks; the Shapley caps are far below that anyway.

#ifndef HGPOS_CORE_MODEL_HPP_
#define HGPOS_CORE_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "hgpos/rational.hpp"

namespace hgpos {

using Mask = std::uint64_t;
inline constexpr std::size_t kMaxPlayers = 64;
inline constexpr std::size_t kMaxHyperlinks = 64;

struct PlayerId {
  std::uint32_t value = 0;

  auto operator<=>(const PlayerId&) const = default;
};

std::vector<PlayerId> player_ids(std::initializer_list<std::uint32_t> ids);

/// A set of players in canonical (ascending, duplicate free) form.
class Coalition {
 public:
  Coalition() = default;
  /// Sorts `members`; throws InvalidInput on a repeated player.
  explicit Coalition(std::vector<PlayerId> members);
  Coalition(std::initializer_list<std::uint32_t> ids);

  std::span<const PlayerId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(PlayerId i) const;
  bool is_subset_of(const Coalition& other) const;

  std::string to_string() const;

  auto operator<=>(const Coalition&) const = default;

 private:
  std::vector<PlayerId> members_;
};

/// Hyperlinks are coalitions with at least two members; the size rule is
/// enforced by Hypergraph.
using Hyperlink = Coalition;

/// Ordered player set with mask conversion.
class PlayerSet {
 public:
  PlayerSet() = default;
  /// Sorts; throws InvalidInput on duplicates or more than kMaxPlayers ids.
  explicit PlayerSet(std::vector<PlayerId> players);

  std::span<const PlayerId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  Mask all() const;

  bool contains(PlayerId i) const;
  /// Position of `i`; throws InvalidInput for unknown players.
  std::size_t index_of(PlayerId i) const;
  Mask mask_of(const Coalition& s) const;
  Coalition coalition_of(Mask m) const;

  bool operator==(const PlayerSet&) const = default;

 private:
  std::vector<PlayerId> ids_;
};

/// (N, H): players plus a set of hyperlinks in lexicographic order.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Validates and canonicalizes. Throws InvalidInput on a hyperlink with
  /// fewer than two members, a member outside `players`, or a duplicate.
  Hypergraph(PlayerSet players, std::vector<Hyperlink> hyperlinks);

  const PlayerSet& players() const { return players_; }
  std::span<const Hyperlink> hyperlinks() const { return hyperlinks_; }
  /// Hyperlink masks over player positions, aligned with hyperlinks().
  std::span<const Mask> link_masks() const { return link_masks_; }
  std::size_t link_count() const { return hyperlinks_.size(); }
  Mask all_links() const;

  /// Position of `e` in hyperlinks(); throws InvalidInput if absent.
  std::size_t index_of(const Hyperlink& e) const;

  /// The partial hypergraph (N, H') keeping the hyperlinks selected by
  /// `links` (a mask over hyperlink positions).
  Hypergraph partial(Mask links) const;
  Hypergraph without(std::size_t link) const;

  bool is_uniform(std::size_t r) const;

 private:
  PlayerSet players_;
  std::vector<Hyperlink> hyperlinks_;
  std::vector<Mask> link_masks_;
};

Hypergraph make_hypergraph(std::vector<PlayerId> players,
                           const std::vector<std::vector<PlayerId>>& raw);

/// H_i, the hyperlinks containing i.
std::vector<Hyperlink> incident_hyperlinks(const Hypergraph& h, PlayerId i);
/// H_i as a mask over hyperlink positions.
Mask incident_link_mask(const Hypergraph& h, PlayerId i);
std::size_t degree(const Hypergraph& h, PlayerId i);

/// Least common multiple of the hyperlink sizes. Throws InvalidInput on an
/// empty hypergraph.
std::uint64_t eta(const Hypergraph& h);

/// Zero-normalized characteristic function over a fixed player set.
class CharacteristicFunction {
 public:
  /// Exact coalition map; unlisted coalitions are worth 0.
  struct Table {
    std::map<Coalition, Rational> entries;
  };
  /// u_T.
  struct Unanimity {
    Coalition carrier;
  };
  /// Sum of coeff * u_T.
  struct WeightedUnanimity {
    std::vector<std::pair<Coalition, Rational>> terms;
  };
  using Variant = std::variant<Table, Unanimity, WeightedUnanimity>;

  static CharacteristicFunction table(PlayerSet players,
                                      std::map<Coalition, Rational> entries);
  static CharacteristicFunction unanimity(PlayerSet players, Coalition carrier);
  static CharacteristicFunction weighted_unanimity(
      PlayerSet players, std::vector<std::pair<Coalition, Rational>> terms);

  const PlayerSet& players() const { return players_; }
  const Variant& variant() const { return variant_; }

  /// v(S). Throws InvalidInput if S has a member outside the player set.
  Rational operator()(const Coalition& s) const;
  /// v(S) for S given as a mask over player positions.
  Rational worth_of_mask(Mask s) const;

 private:
  CharacteristicFunction(PlayerSet players, Variant variant);

  PlayerSet players_;
  Variant variant_;
  // Mask views of the variant, used on the hot path.
  std::unordered_map<Mask, Rational> table_masks_;
  std::vector<std::pair<Mask, Rational>> terms_masks_;
};

Rational worth(const CharacteristicFunction& v, const Coalition& s);

/// (N, v, H).
class HypergraphGame {
 public:
  /// Throws InvalidInput unless v and h share the same player set.
  HypergraphGame(CharacteristicFunction v, Hypergraph h);

  const PlayerSet& players() const { return graph_.players(); }
  const CharacteristicFunction& v() const { return v_; }
  const Hypergraph& graph() const { return graph_; }

  /// (N, v, H') for H' selected by a mask over hyperlink positions.
  HypergraphGame with_links(Mask links) const;
  HypergraphGame without_link(std::size_t link) const;

 private:
  CharacteristicFunction v_;
  Hypergraph graph_;
};

/// Payoff vector over the declared players, aligned with PlayerSet order.
class Allocation {
 public:
  Allocation() = default;
  Allocation(PlayerSet players, Vector payoff);

  static Allocation zeros(PlayerSet players);

  const PlayerSet& players() const { return players_; }
  const Vector& payoff() const { return payoff_; }
  Vector& payoff() { return payoff_; }

  const Rational& operator[](PlayerId i) const;
  Rational total() const;

  bool operator==(const Allocation& other) const;

 private:
  PlayerSet players_;
  Vector payoff_;
};

std::string to_string(const Allocation& a);

}  // namespace hgpos

#endif  // HGPOS_CORE_MODEL_HPP_
