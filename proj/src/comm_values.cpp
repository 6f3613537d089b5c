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

#include <bit>

#include "hgpos/connectivity.hpp"

namespace hgpos {

Rational point_worth(const HypergraphGame& game, Mask s) {
  Rational total = 0;
  for (Mask block : component_masks(s, game.graph().link_masks())) {
    total += game.v().worth_of_mask(block);
  }
  return total;
}

Rational hyperlink_worth(const HypergraphGame& game, Mask links) {
  const auto all = game.graph().link_masks();
  std::vector<Mask> kept;
  for (Mask rest = links; rest != 0; rest &= rest - 1) {
    kept.push_back(all[std::countr_zero(rest)]);
  }
  Rational total = 0;
  for (Mask block : component_masks(game.players().all(), kept)) {
    total += game.v().worth_of_mask(block);
  }
  return total;
}

TUGame point_game(const HypergraphGame& game) {
  return TUGame{game.players().size(),
                [&game](Mask s) { return point_worth(game, s); }};
}

TUGame hyperlink_game(const HypergraphGame& game) {
  return TUGame{game.graph().link_count(),
                [&game](Mask links) { return hyperlink_worth(game, links); }};
}

Vector hyperlink_shapley(const HypergraphGame& game, const Caps& caps) {
  return shapley_by_subsets(hyperlink_game(game), caps);
}

Allocation myerson_value(const HypergraphGame& game, const Caps& caps) {
  return Allocation(game.players(), shapley_by_subsets(point_game(game), caps));
}

Allocation position_value(const HypergraphGame& game, const Caps& caps) {
  const Hypergraph& h = game.graph();
  Allocation out = Allocation::zeros(game.players());
  if (h.link_count() == 0) return out;
  const Vector link_values = hyperlink_shapley(game, caps);
  for (std::size_t k = 0; k < h.link_count(); ++k) {
    const auto idx = static_cast<Eigen::Index>(k);
    const Rational share =
        link_values(idx) / Rational(static_cast<long>(h.hyperlinks()[k].size()));
    for (Mask m = h.link_masks()[k]; m != 0; m &= m - 1) {
      out.payoff()(std::countr_zero(m)) += share;
    }
  }
  return out;
}

Allocation shapley_value(const HypergraphGame& game, const Caps& caps) {
  const CharacteristicFunction& v = game.v();
  const TUGame tu{game.players().size(),
                  [&v](Mask s) { return v.worth_of_mask(s); }};
  return Allocation(game.players(), shapley_by_subsets(tu, caps));
}

}  // namespace hgpos
