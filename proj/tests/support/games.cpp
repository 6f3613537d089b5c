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

#include "support/games.hpp"

#include <algorithm>
#include <set>

#include "hgpos/connectivity.hpp"

namespace hgpos::testing {

HypergraphGame make_game(std::initializer_list<std::uint32_t> players,
                         std::vector<std::vector<std::uint32_t>> links,
                         CharacteristicFunction::Variant v) {
  PlayerSet set(player_ids(players));
  std::vector<std::vector<PlayerId>> raw;
  for (const auto& link : links) {
    std::vector<PlayerId> ids;
    for (auto i : link) ids.push_back(PlayerId{i});
    raw.push_back(std::move(ids));
  }
  Hypergraph h = make_hypergraph(player_ids(players), raw);
  if (auto* t = std::get_if<CharacteristicFunction::Table>(&v)) {
    return HypergraphGame(CharacteristicFunction::table(set, t->entries), h);
  }
  if (auto* u = std::get_if<CharacteristicFunction::Unanimity>(&v)) {
    return HypergraphGame(CharacteristicFunction::unanimity(set, u->carrier), h);
  }
  return HypergraphGame(
      CharacteristicFunction::weighted_unanimity(
          set, std::get<CharacteristicFunction::WeightedUnanimity>(v).terms),
      h);
}

HypergraphGame relay_game() {
  return make_game({1, 2, 3, 4, 5, 6}, {{1, 4}, {2, 5}, {3, 6}, {4, 5, 6}},
                   CharacteristicFunction::Unanimity{Coalition{1, 2, 3}});
}

HypergraphGame single_link_game() {
  return make_game({1, 2}, {{1, 2}},
                   CharacteristicFunction::Unanimity{Coalition{1, 2}});
}

Allocation allocation(const HypergraphGame& game,
                      std::initializer_list<Rational> payoffs) {
  Vector v(static_cast<Eigen::Index>(payoffs.size()));
  Eigen::Index k = 0;
  for (const Rational& x : payoffs) v(k++) = x;
  return Allocation(game.players(), v);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 12);
  std::uniform_int_distribution<long> den(1, 6);
  return Rational(num(rng), den(rng));
}

HypergraphGame random_game(std::mt19937_64& rng, const CorpusOptions& opt) {
  std::uniform_int_distribution<std::size_t> n_dist(opt.min_players,
                                                    opt.max_players);
  const std::size_t n = n_dist(rng);
  std::vector<PlayerId> ids;
  for (std::size_t k = 1; k <= n; ++k) ids.push_back(PlayerId{static_cast<std::uint32_t>(k)});

  // Candidate hyperlinks: all subsets of allowed size.
  std::vector<Mask> candidates;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const auto size = static_cast<std::size_t>(std::popcount(m));
    const bool ok = opt.uniform_size ? size == opt.uniform_size
                                     : size >= 2 && size <= opt.max_link_size;
    if (ok) candidates.push_back(m);
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::uniform_int_distribution<std::size_t> m_dist(
      std::min(opt.min_links, candidates.size()),
      std::min(opt.max_links, candidates.size()));
  candidates.resize(m_dist(rng));

  std::vector<std::vector<PlayerId>> raw;
  for (Mask m : candidates) {
    std::vector<PlayerId> link;
    for (std::size_t k = 0; k < n; ++k) {
      if (m >> k & 1) link.push_back(ids[k]);
    }
    raw.push_back(std::move(link));
  }
  Hypergraph h = make_hypergraph(ids, raw);

  std::bernoulli_distribution zero(0.2);
  std::map<Coalition, Rational> table;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) < 2) continue;
    if (component_masks(s, h.link_masks()).size() != 1) continue;
    if (zero(rng)) continue;
    table.emplace(h.players().coalition_of(s), random_rational(rng));
  }
  PlayerSet set(ids);
  return HypergraphGame(CharacteristicFunction::table(set, std::move(table)), h);
}

std::vector<HypergraphGame> random_corpus(std::uint64_t seed, std::size_t count,
                                          const CorpusOptions& opt) {
  std::mt19937_64 rng(seed);
  std::vector<HypergraphGame> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_game(rng, opt));
  return out;
}

Vector random_worth_table(std::mt19937_64& rng, std::size_t n) {
  Vector t(static_cast<Eigen::Index>(Mask{1} << n));
  t(0) = 0;
  for (Eigen::Index s = 1; s < t.size(); ++s) t(s) = random_rational(rng);
  return t;
}

TUGame table_game(const Vector& table, std::size_t n) {
  return TUGame{n, [table](Mask s) { return table(static_cast<Eigen::Index>(s)); }};
}

}  // namespace hgpos::testing
