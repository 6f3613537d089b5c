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

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace hgpos {
namespace {

std::string player_name(PlayerId i) { return std::to_string(i.value); }

}  // namespace

std::vector<PlayerId> player_ids(std::initializer_list<std::uint32_t> ids) {
  std::vector<PlayerId> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(PlayerId{id});
  return out;
}

// Coalition

Coalition::Coalition(std::vector<PlayerId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  const auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw InvalidInput("player " + player_name(*dup) +
                       " listed twice in a coalition");
  }
}

Coalition::Coalition(std::initializer_list<std::uint32_t> ids)
    : Coalition(player_ids(ids)) {}

bool Coalition::contains(PlayerId i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool Coalition::is_subset_of(const Coalition& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::string Coalition::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k) out += ",";
    out += player_name(members_[k]);
  }
  return out + "}";
}

// PlayerSet

PlayerSet::PlayerSet(std::vector<PlayerId> players) : ids_(std::move(players)) {
  std::sort(ids_.begin(), ids_.end());
  const auto dup = std::adjacent_find(ids_.begin(), ids_.end());
  if (dup != ids_.end()) {
    throw InvalidInput("duplicate player " + player_name(*dup));
  }
  if (ids_.size() > kMaxPlayers) {
    throw InvalidInput("at most " + std::to_string(kMaxPlayers) +
                       " players are supported");
  }
}

Mask PlayerSet::all() const {
  return ids_.size() == 64 ? ~Mask{0} : (Mask{1} << ids_.size()) - 1;
}

bool PlayerSet::contains(PlayerId i) const {
  return std::binary_search(ids_.begin(), ids_.end(), i);
}

std::size_t PlayerSet::index_of(PlayerId i) const {
  const auto it = std::lower_bound(ids_.begin(), ids_.end(), i);
  if (it == ids_.end() || *it != i) {
    throw InvalidInput("unknown player " + player_name(i));
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

Mask PlayerSet::mask_of(const Coalition& s) const {
  Mask m = 0;
  for (PlayerId i : s.members()) m |= Mask{1} << index_of(i);
  return m;
}

Coalition PlayerSet::coalition_of(Mask m) const {
  std::vector<PlayerId> members;
  for (; m != 0; m &= m - 1) members.push_back(ids_.at(std::countr_zero(m)));
  return Coalition(std::move(members));
}

// Hypergraph

Hypergraph::Hypergraph(PlayerSet players, std::vector<Hyperlink> hyperlinks)
    : players_(std::move(players)), hyperlinks_(std::move(hyperlinks)) {
  for (std::size_t k = 0; k < hyperlinks_.size(); ++k) {
    const Hyperlink& e = hyperlinks_[k];
    if (e.size() < 2) {
      throw InvalidInput("hyperlink " + e.to_string() +
                         " has fewer than two members");
    }
    for (PlayerId i : e.members()) {
      if (!players_.contains(i)) {
        throw InvalidInput("hyperlink " + e.to_string() +
                           " contains unknown player " + player_name(i));
      }
    }
  }
  std::sort(hyperlinks_.begin(), hyperlinks_.end());
  const auto dup = std::adjacent_find(hyperlinks_.begin(), hyperlinks_.end());
  if (dup != hyperlinks_.end()) {
    throw InvalidInput("duplicate hyperlink " + dup->to_string());
  }
  if (hyperlinks_.size() > kMaxHyperlinks) {
    throw InvalidInput("at most " + std::to_string(kMaxHyperlinks) +
                       " hyperlinks are supported");
  }
  link_masks_.reserve(hyperlinks_.size());
  for (const Hyperlink& e : hyperlinks_) {
    link_masks_.push_back(players_.mask_of(e));
  }
}

Mask Hypergraph::all_links() const {
  return hyperlinks_.size() == 64 ? ~Mask{0}
                                  : (Mask{1} << hyperlinks_.size()) - 1;
}

std::size_t Hypergraph::index_of(const Hyperlink& e) const {
  const auto it = std::lower_bound(hyperlinks_.begin(), hyperlinks_.end(), e);
  if (it == hyperlinks_.end() || *it != e) {
    throw InvalidInput(e.to_string() + " is not a hyperlink");
  }
  return static_cast<std::size_t>(it - hyperlinks_.begin());
}

Hypergraph Hypergraph::partial(Mask links) const {
  std::vector<Hyperlink> kept;
  for (std::size_t k = 0; k < hyperlinks_.size(); ++k) {
    if (links >> k & 1) kept.push_back(hyperlinks_[k]);
  }
  return Hypergraph(players_, std::move(kept));
}

Hypergraph Hypergraph::without(std::size_t link) const {
  return partial(all_links() & ~(Mask{1} << link));
}

bool Hypergraph::is_uniform(std::size_t r) const {
  return std::all_of(hyperlinks_.begin(), hyperlinks_.end(),
                     [r](const Hyperlink& e) { return e.size() == r; });
}

Hypergraph make_hypergraph(std::vector<PlayerId> players,
                           const std::vector<std::vector<PlayerId>>& raw) {
  std::vector<Hyperlink> links;
  links.reserve(raw.size());
  for (const auto& members : raw) links.emplace_back(members);
  return Hypergraph(PlayerSet(std::move(players)), std::move(links));
}

std::vector<Hyperlink> incident_hyperlinks(const Hypergraph& h, PlayerId i) {
  std::vector<Hyperlink> out;
  for (Mask m = incident_link_mask(h, i); m != 0; m &= m - 1) {
    out.push_back(h.hyperlinks()[std::countr_zero(m)]);
  }
  return out;
}

Mask incident_link_mask(const Hypergraph& h, PlayerId i) {
  const Mask bit = Mask{1} << h.players().index_of(i);
  Mask out = 0;
  for (std::size_t k = 0; k < h.link_count(); ++k) {
    if (h.link_masks()[k] & bit) out |= Mask{1} << k;
  }
  return out;
}

std::size_t degree(const Hypergraph& h, PlayerId i) {
  return static_cast<std::size_t>(std::popcount(incident_link_mask(h, i)));
}

std::uint64_t eta(const Hypergraph& h) {
  if (h.link_count() == 0) {
    throw InvalidInput("eta is undefined for an empty hypergraph");
  }
  std::uint64_t l = 1;
  for (const Hyperlink& e : h.hyperlinks()) l = std::lcm(l, e.size());
  return l;
}

// CharacteristicFunction

CharacteristicFunction::CharacteristicFunction(PlayerSet players,
                                               Variant variant)
    : players_(std::move(players)), variant_(std::move(variant)) {
  if (const auto* t = std::get_if<Table>(&variant_)) {
    for (const auto& [s, value] : t->entries) {
      if (value != 0) table_masks_.emplace(players_.mask_of(s), value);
    }
  } else if (const auto* u = std::get_if<Unanimity>(&variant_)) {
    terms_masks_.emplace_back(players_.mask_of(u->carrier), Rational(1));
  } else {
    const auto& terms = std::get<WeightedUnanimity>(variant_).terms;
    for (const auto& [s, coeff] : terms) {
      const Mask m = players_.mask_of(s);
      for (const auto& [seen, c] : terms_masks_) {
        if (seen == m) {
          throw InvalidInput("unanimity term " + s.to_string() +
                             " listed twice");
        }
      }
      terms_masks_.emplace_back(m, coeff);
    }
  }
  if (worth_of_mask(0) != 0) {
    throw InvalidInput("the empty coalition must be worth 0");
  }
  for (std::size_t k = 0; k < players_.size(); ++k) {
    if (worth_of_mask(Mask{1} << k) != 0) {
      throw InvalidInput("game is not zero-normalized: v({" +
                         player_name(players_.ids()[k]) + "}) != 0");
    }
  }
}

CharacteristicFunction CharacteristicFunction::table(
    PlayerSet players, std::map<Coalition, Rational> entries) {
  return CharacteristicFunction(std::move(players), Table{std::move(entries)});
}

CharacteristicFunction CharacteristicFunction::unanimity(PlayerSet players,
                                                         Coalition carrier) {
  return CharacteristicFunction(std::move(players),
                                Unanimity{std::move(carrier)});
}

CharacteristicFunction CharacteristicFunction::weighted_unanimity(
    PlayerSet players, std::vector<std::pair<Coalition, Rational>> terms) {
  return CharacteristicFunction(std::move(players),
                                WeightedUnanimity{std::move(terms)});
}

Rational CharacteristicFunction::operator()(const Coalition& s) const {
  return worth_of_mask(players_.mask_of(s));
}

Rational CharacteristicFunction::worth_of_mask(Mask s) const {
  if (std::holds_alternative<Table>(variant_)) {
    const auto it = table_masks_.find(s);
    return it == table_masks_.end() ? Rational(0) : it->second;
  }
  Rational total = 0;
  for (const auto& [t, coeff] : terms_masks_) {
    if ((t & s) == t) total += coeff;
  }
  return total;
}

Rational worth(const CharacteristicFunction& v, const Coalition& s) {
  return v(s);
}

// HypergraphGame

HypergraphGame::HypergraphGame(CharacteristicFunction v, Hypergraph h)
    : v_(std::move(v)), graph_(std::move(h)) {
  if (!(v_.players() == graph_.players())) {
    throw InvalidInput(
        "characteristic function and hypergraph have different players");
  }
}

HypergraphGame HypergraphGame::with_links(Mask links) const {
  return HypergraphGame(v_, graph_.partial(links));
}

HypergraphGame HypergraphGame::without_link(std::size_t link) const {
  return HypergraphGame(v_, graph_.without(link));
}

// Allocation

Allocation::Allocation(PlayerSet players, Vector payoff)
    : players_(std::move(players)), payoff_(std::move(payoff)) {
  if (static_cast<std::size_t>(payoff_.size()) != players_.size()) {
    throw InvalidInput("allocation size does not match the player set");
  }
}

Allocation Allocation::zeros(PlayerSet players) {
  const auto n = static_cast<Eigen::Index>(players.size());
  return Allocation(std::move(players), Vector::Zero(n));
}

const Rational& Allocation::operator[](PlayerId i) const {
  return payoff_(static_cast<Eigen::Index>(players_.index_of(i)));
}

Rational Allocation::total() const {
  Rational sum = 0;
  for (Eigen::Index k = 0; k < payoff_.size(); ++k) sum += payoff_(k);
  return sum;
}

bool Allocation::operator==(const Allocation& other) const {
  return players_ == other.players_ && payoff_.size() == other.payoff_.size() &&
         payoff_ == other.payoff_;
}

std::string to_string(const Allocation& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < a.players().size(); ++k) {
    if (k) os << ", ";
    os << player_name(a.players().ids()[k]) << ": "
       << format_rational(a.payoff()(static_cast<Eigen::Index>(k)));
  }
  os << ")";
  return os.str();
}

}  // namespace hgpos
