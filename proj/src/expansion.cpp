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

#include <algorithm>
#include <bit>
#include <limits>
#include <tuple>

#include "hgpos/comm_values.hpp"
#include "hgpos/connectivity.hpp"

namespace hgpos {
namespace {

const std::vector<std::size_t> kNoMembers;

/// Product of (size + 1) over `sizes`; throws CapExceeded above `cap`.
std::uint64_t count_states(std::span<const std::uint64_t> sizes,
                           std::uint64_t cap) {
  std::uint64_t states = 1;
  for (std::uint64_t s : sizes) {
    if (states > cap / (s + 1)) {
      throw CapExceeded("state space exceeds the cap of " +
                        std::to_string(cap) + " count vectors");
    }
    states *= s + 1;
  }
  if (states > cap) {
    throw CapExceeded("state space exceeds the cap of " + std::to_string(cap) +
                      " count vectors");
  }
  return states;
}

/// Per-member Shapley payoff of each block of a block-structured game.
///
/// Block b has sizes[b] interchangeable members. A block counts as complete
/// once `rho` of its members are present (blocks with fewer members never
/// complete), and the worth of a coalition is complete_worth(set of complete
/// blocks). For a member l of block b and a state c (members present per
/// block, l excluded), there are C(sizes[b]-1, c_b) * prod C(sizes[f], c_f)
/// coalitions, each with the Shapley weight of size |c|. Counts are collected
/// per (b, complete set before, |c|) and weighted at the end.
Vector block_member_values(std::span<const std::uint64_t> sizes,
                           std::uint64_t rho,
                           const std::vector<Rational>& complete_worth,
                           std::uint64_t state_cap) {
  const std::size_t blocks = sizes.size();
  count_states(sizes, state_cap);
  std::uint64_t n = 0;
  for (std::uint64_t s : sizes) n += s;

  std::vector<std::vector<Integer>> rows(blocks), rows_minus_one(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    rows[b] = binomial_row(sizes[b]);
    rows_minus_one[b] = binomial_row(sizes[b] == 0 ? 0 : sizes[b] - 1);
  }

  // (block, complete mask before joining, coalition size) -> coalition count
  std::map<std::tuple<std::size_t, Mask, std::uint64_t>, Integer> counts;

  std::vector<std::uint64_t> c(blocks, 0);
  std::uint64_t total = 0;
  Mask complete = 0;
  while (true) {
    for (std::size_t b = 0; b < blocks; ++b) {
      // Joining changes the worth only when it completes block b.
      if (c[b] + 1 != rho || c[b] >= sizes[b]) continue;
      Integer ways = rows_minus_one[b][c[b]];
      for (std::size_t f = 0; f < blocks; ++f) {
        if (f != b) ways *= rows[f][c[f]];
      }
      counts[{b, complete, total}] += ways;
    }
    // Odometer step.
    std::size_t b = 0;
    for (; b < blocks; ++b) {
      if (c[b] < sizes[b]) {
        ++c[b];
        ++total;
        if (c[b] == rho) complete |= Mask{1} << b;
        break;
      }
      total -= c[b];
      c[b] = 0;
      complete &= ~(Mask{1} << b);
    }
    if (b == blocks) break;
  }

  const Vector weights = shapley_weights<Rational>(n);
  Vector values = Vector::Zero(static_cast<Eigen::Index>(blocks));
  for (const auto& [key, ways] : counts) {
    const auto& [b, before, size] = key;
    const Rational marginal =
        complete_worth[before | (Mask{1} << b)] - complete_worth[before];
    if (marginal == 0) continue;
    values(static_cast<Eigen::Index>(b)) +=
        Rational(ways) * weights(static_cast<Eigen::Index>(size)) * marginal;
  }
  return values;
}

std::vector<Rational> all_hyperlink_worths(const HypergraphGame& game) {
  const std::size_t m = game.graph().link_count();
  if (m > 24) {
    throw CapExceeded("too many hyperlinks for the block enumeration");
  }
  std::vector<Rational> out(std::size_t{1} << m);
  for (Mask links = 0; links < out.size(); ++links) {
    out[links] = hyperlink_worth(game, links);
  }
  return out;
}

Vector spread_over_blocks(const ExpandedUniverse& u, const Vector& per_block,
                          std::size_t skip = std::numeric_limits<std::size_t>::max()) {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(u.size()));
  for (std::size_t e = 0; e < u.link_count(); ++e) {
    for (std::size_t l : u.block(e)) {
      if (l != skip) {
        out(static_cast<Eigen::Index>(l)) = per_block(static_cast<Eigen::Index>(e));
      }
    }
  }
  return out;
}

}  // namespace

std::string to_string(const ExpandedPlayer& l) {
  return "(" + std::to_string(l.origin.value) + ",e" +
         std::to_string(l.link + 1) + "," + std::to_string(l.copy) + ")";
}

// ExpandedUniverse

ExpandedUniverse::ExpandedUniverse(const Hypergraph& h, std::uint64_t k)
    : k_(k), eta_(hgpos::eta(h)) {
  if (k < 1) throw InvalidInput("augmentation factor k must be at least 1");
  blocks_.resize(h.link_count());
  for (PlayerId i : h.players().ids()) {
    const Mask incident = incident_link_mask(h, i);
    auto& group = groups_[i];
    for (Mask rest = incident; rest != 0; rest &= rest - 1) {
      const auto e = static_cast<std::size_t>(std::countr_zero(rest));
      const std::uint64_t copies = rho() / h.hyperlinks()[e].size();
      auto& sub = sub_blocks_[{i, e}];
      for (std::uint64_t t = 1; t <= copies; ++t) {
        const std::size_t pos = players_.size();
        players_.push_back(ExpandedPlayer{i, e, t});
        group.push_back(pos);
        sub.push_back(pos);
        blocks_[e].push_back(pos);
      }
    }
  }
}

std::span<const std::size_t> ExpandedUniverse::block(std::size_t link) const {
  return blocks_.at(link);
}

std::span<const std::size_t> ExpandedUniverse::group(PlayerId i) const {
  const auto it = groups_.find(i);
  if (it == groups_.end()) {
    throw InvalidInput("unknown player " + std::to_string(i.value));
  }
  return it->second;
}

std::span<const std::size_t> ExpandedUniverse::sub_block(
    PlayerId i, std::size_t link) const {
  const auto it = sub_blocks_.find({i, link});
  return it == sub_blocks_.end() ? std::span<const std::size_t>(kNoMembers)
                                 : std::span<const std::size_t>(it->second);
}

std::size_t ExpandedUniverse::index_of(const ExpandedPlayer& l) const {
  const auto it = std::lower_bound(players_.begin(), players_.end(), l);
  if (it == players_.end() || *it != l) {
    throw InvalidInput(to_string(l) + " is not an expanded player");
  }
  return static_cast<std::size_t>(it - players_.begin());
}

// UniformExpansion

UniformExpansion::UniformExpansion(HypergraphGame game, std::uint64_t k)
    : game_(std::move(game)), universe_(game_.graph(), k) {}

Mask UniformExpansion::completed_links(std::span<const std::size_t> s) const {
  std::vector<std::uint64_t> counts(universe_.link_count(), 0);
  std::vector<bool> seen(universe_.size(), false);
  for (std::size_t l : s) {
    if (l >= universe_.size()) {
      throw InvalidInput("expanded player " + std::to_string(l) +
                         " is outside the universe");
    }
    if (seen[l]) continue;
    seen[l] = true;
    ++counts[universe_.players()[l].link];
  }
  Mask out = 0;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] == rho()) out |= Mask{1} << e;
  }
  return out;
}

UniformExpansion build_uniform(const HypergraphGame& game, std::uint64_t k) {
  return UniformExpansion(game, k);
}

Rational expanded_worth(const UniformExpansion& exp,
                        std::span<const std::size_t> s) {
  return hyperlink_worth(exp.game(), exp.completed_links(s));
}

TUGame as_tu_game(const UniformExpansion& exp) {
  require_within_cap(exp.size(), kMaxPlayers, "expanded players");
  std::vector<Mask> block_masks;
  for (std::size_t e = 0; e < exp.universe().link_count(); ++e) {
    Mask m = 0;
    for (std::size_t l : exp.universe().block(e)) m |= Mask{1} << l;
    block_masks.push_back(m);
  }
  return TUGame{exp.size(), [&exp, block_masks](Mask s) {
                  Mask done = 0;
                  for (std::size_t e = 0; e < block_masks.size(); ++e) {
                    if ((block_masks[e] & s) == block_masks[e]) {
                      done |= Mask{1} << e;
                    }
                  }
                  return hyperlink_worth(exp.game(), done);
                }};
}

Vector shapley_blockwise(const UniformExpansion& exp, const Caps& caps) {
  const std::vector<std::uint64_t> sizes(exp.universe().link_count(),
                                         exp.rho());
  const Vector per_block = block_member_values(
      sizes, exp.rho(), all_hyperlink_worths(exp.game()), caps.expansion_states);
  return spread_over_blocks(exp.universe(), per_block);
}

Vector shapley_blockwise_without(const UniformExpansion& exp,
                                 std::size_t removed, const Caps& caps) {
  if (removed >= exp.size()) {
    throw InvalidInput("expanded player " + std::to_string(removed) +
                       " is outside the universe");
  }
  std::vector<std::uint64_t> sizes(exp.universe().link_count(), exp.rho());
  --sizes[exp.universe().players()[removed].link];
  const Vector per_block = block_member_values(
      sizes, exp.rho(), all_hyperlink_worths(exp.game()), caps.expansion_states);
  return spread_over_blocks(exp.universe(), per_block, removed);
}

Allocation group_sums(const UniformExpansion& exp, const Vector& payoff) {
  const PlayerSet& players = exp.game().players();
  Allocation out = Allocation::zeros(players);
  for (std::size_t k = 0; k < players.size(); ++k) {
    Rational sum = 0;
    for (std::size_t l : exp.universe().group(players.ids()[k])) {
      sum += payoff(static_cast<Eigen::Index>(l));
    }
    out.payoff()(static_cast<Eigen::Index>(k)) = sum;
  }
  return out;
}

Allocation grouped_position(const UniformExpansion& exp, const Caps& caps) {
  return group_sums(exp, shapley_blockwise(exp, caps));
}

// HAFGame

HAFGame::HAFGame(HypergraphGame game)
    : game_(std::move(game)), agents_(game_.graph(), 1) {
  for (std::size_t e = 0; e < agents_.link_count(); ++e) {
    const auto block = agents_.block(e);
    hyperlinks_.emplace_back(block.begin(), block.end());
  }
  for (PlayerId i : game_.players().ids()) {
    const auto group = agents_.group(i);
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        hyperlinks_.push_back({group[a], group[b]});
      }
    }
  }
  for (const ExpandedPlayer& l : agents_.players()) {
    agent_origin_.push_back(l.origin);
  }
  if (agents_.size() <= kMaxPlayers) {
    for (const auto& link : hyperlinks_) {
      Mask m = 0;
      for (std::size_t a : link) m |= Mask{1} << a;
      hyperlink_masks_.push_back(m);
    }
  }
}

Rational HAFGame::worth(std::span<const std::size_t> k) const {
  const PlayerSet& players = game_.players();
  Mask touched = 0;
  for (std::size_t a : k) {
    if (a >= agent_origin_.size()) {
      throw InvalidInput("agent " + std::to_string(a) + " is out of range");
    }
    touched |= Mask{1} << players.index_of(agent_origin_[a]);
  }
  return game_.v().worth_of_mask(touched);
}

Rational HAFGame::restricted_worth(Mask k) const {
  require_within_cap(agents_.size(), kMaxPlayers, "agents");
  Rational total = 0;
  std::vector<std::size_t> members;
  for (Mask block : component_masks(k, hyperlink_masks_)) {
    members.clear();
    for (Mask rest = block; rest != 0; rest &= rest - 1) {
      members.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    total += worth(members);
  }
  return total;
}

TUGame HAFGame::point_game() const {
  require_within_cap(agents_.size(), kMaxPlayers, "agents");
  return TUGame{agents_.size(), [this](Mask k) { return restricted_worth(k); }};
}

HAFGame build_haf(const HypergraphGame& game) { return HAFGame(game); }

Vector corollary_payoffs(const HypergraphGame& game, const Caps& caps,
                         bool symmetry_reduction) {
  const HAFGame haf(game);
  if (!symmetry_reduction) {
    return shapley_by_subsets(haf.point_game(), caps);
  }
  require_within_cap(haf.size(), kMaxPlayers, "agents");

  // Sub-blocks N(i, h) are contiguous runs of the agent order.
  struct SubBlock {
    std::size_t first;
    std::uint64_t size;
  };
  std::vector<SubBlock> subs;
  const auto agents = haf.agents().players();
  for (std::size_t a = 0; a < agents.size(); ++a) {
    if (a == 0 || agents[a].origin != agents[a - 1].origin ||
        agents[a].link != agents[a - 1].link) {
      subs.push_back({a, 0});
    }
    ++subs.back().size;
  }
  std::vector<std::uint64_t> sizes;
  for (const auto& s : subs) sizes.push_back(s.size);
  const std::uint64_t states = count_states(sizes, caps.expansion_states);

  // Mixed radix: state index = sum c_b * stride_b.
  std::vector<std::uint64_t> stride(subs.size());
  std::uint64_t acc = 1;
  for (std::size_t b = 0; b < subs.size(); ++b) {
    stride[b] = acc;
    acc *= sizes[b] + 1;
  }

  // Worth of the representative coalition (first c_b agents of each
  // sub-block) for every state.
  std::vector<Rational> worth(states);
  std::vector<std::uint64_t> c(subs.size(), 0);
  for (std::uint64_t idx = 0; idx < states; ++idx) {
    std::uint64_t rest = idx;
    Mask k = 0;
    for (std::size_t b = 0; b < subs.size(); ++b) {
      c[b] = rest % (sizes[b] + 1);
      rest /= sizes[b] + 1;
      for (std::uint64_t t = 0; t < c[b]; ++t) k |= Mask{1} << (subs[b].first + t);
    }
    worth[idx] = haf.restricted_worth(k);
  }

  std::vector<std::vector<Integer>> rows, rows_minus_one;
  for (std::uint64_t s : sizes) {
    rows.push_back(binomial_row(s));
    rows_minus_one.push_back(binomial_row(s - 1));
  }
  std::uint64_t n = 0;
  for (std::uint64_t s : sizes) n += s;
  const Vector weights = shapley_weights<Rational>(n);

  Vector per_sub = Vector::Zero(static_cast<Eigen::Index>(subs.size()));
  for (std::uint64_t idx = 0; idx < states; ++idx) {
    std::uint64_t rest = idx;
    std::uint64_t total = 0;
    for (std::size_t b = 0; b < subs.size(); ++b) {
      c[b] = rest % (sizes[b] + 1);
      rest /= sizes[b] + 1;
      total += c[b];
    }
    for (std::size_t b = 0; b < subs.size(); ++b) {
      if (c[b] == sizes[b]) continue;
      const Rational marginal = worth[idx + stride[b]] - worth[idx];
      if (marginal == 0) continue;
      Integer ways = rows_minus_one[b][c[b]];
      for (std::size_t f = 0; f < subs.size(); ++f) {
        if (f != b) ways *= rows[f][c[f]];
      }
      per_sub(static_cast<Eigen::Index>(b)) +=
          Rational(ways) * weights(static_cast<Eigen::Index>(total)) * marginal;
    }
  }

  Vector out(static_cast<Eigen::Index>(agents.size()));
  for (std::size_t b = 0; b < subs.size(); ++b) {
    for (std::uint64_t t = 0; t < subs[b].size; ++t) {
      out(static_cast<Eigen::Index>(subs[b].first + t)) =
          per_sub(static_cast<Eigen::Index>(b));
    }
  }
  return out;
}

}  // namespace hgpos
