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

#ifndef HGPOS_COMM_VALUES_HPP_
#define HGPOS_COMM_VALUES_HPP_

#include "hgpos/core_model.hpp"
#include "hgpos/tu_values.hpp"

namespace hgpos {

/// v^H(S) = sum of v(T) over T in S/H(S). `s` is a mask over player positions.
Rational point_worth(const HypergraphGame& game, Mask s);

/// v^N(H') = sum of v(T) over T in N/H'. `links` is a mask over hyperlink
/// positions.
Rational hyperlink_worth(const HypergraphGame& game, Mask links);

/// (N, v^H) as a TU-game over player positions.
TUGame point_game(const HypergraphGame& game);

/// (H, v^N) as a TU-game over hyperlink positions.
TUGame hyperlink_game(const HypergraphGame& game);

/// Sh(H, v^N), aligned with game.graph().hyperlinks().
Vector hyperlink_shapley(const HypergraphGame& game, const Caps& caps = {});

/// Shapley value of the point game.
Allocation myerson_value(const HypergraphGame& game, const Caps& caps = {});

/// pi_i = sum over e in H_i of Sh_e(H, v^N) / |e|. Isolated players get 0.
Allocation position_value(const HypergraphGame& game, const Caps& caps = {});

/// Plain Shapley value of (N, v), ignoring the hypergraph.
Allocation shapley_value(const HypergraphGame& game, const Caps& caps = {});

}  // namespace hgpos

#endif  // HGPOS_COMM_VALUES_HPP_
