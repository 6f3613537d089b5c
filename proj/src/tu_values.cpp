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

#include "hgpos/tu_values.hpp"

namespace hgpos {

void require_within_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(n) +
                      " exceeds the cap of " + std::to_string(cap));
  }
}

Vector worth_table(const TUGame& game, std::size_t cap) {
  require_within_cap(game.size, std::min<std::size_t>(cap, 62),
                     "coalition enumeration");
  const Mask count = Mask{1} << game.size;
  Vector table(static_cast<Eigen::Index>(count));
  table(0) = 0;
  for (Mask s = 1; s < count; ++s) {
    table(static_cast<Eigen::Index>(s)) = game.worth(s);
  }
  return table;
}

Vector shapley_by_permutations(const TUGame& game, const Caps& caps) {
  require_within_cap(game.size, caps.permutation_players,
                     "permutation enumeration");
  return shapley_from_table_by_permutations(
      worth_table(game, caps.permutation_players), game.size);
}

Vector shapley_by_subsets(const TUGame& game, const Caps& caps) {
  return shapley_from_table(worth_table(game, caps.subset_players), game.size);
}

Vector harsanyi_dividends(const TUGame& game, const Caps& caps) {
  return moebius_transform(worth_table(game, caps.dividend_players),
                           game.size);
}

Vector shapley_by_dividends(const TUGame& game, const Caps& caps) {
  return shapley_from_dividends(harsanyi_dividends(game, caps), game.size);
}

}  // namespace hgpos
