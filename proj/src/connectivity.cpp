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

#include "hgpos/connectivity.hpp"

#include <array>
#include <bit>
#include <numeric>

namespace hgpos {
namespace {

class UnionFind {
 public:
  UnionFind() { std::iota(parent_.begin(), parent_.end(), std::uint8_t{0}); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    // Keep the smaller index as root so block order is stable.
    if (a < b) parent_[b] = static_cast<std::uint8_t>(a);
    else if (b < a) parent_[a] = static_cast<std::uint8_t>(b);
  }

 private:
  std::array<std::uint8_t, 64> parent_{};
};

Partition to_partition(const PlayerSet& players,
                       const std::vector<Mask>& blocks) {
  Partition out;
  out.reserve(blocks.size());
  for (Mask b : blocks) out.push_back(players.coalition_of(b));
  return out;
}

}  // namespace

std::vector<Mask> component_masks(Mask ground, std::span<const Mask> links) {
  UnionFind uf;
  for (Mask e : links) {
    if (e == 0 || (e & ~ground) != 0) continue;
    const int first = std::countr_zero(e);
    for (Mask rest = e & (e - 1); rest != 0; rest &= rest - 1) {
      uf.unite(first, std::countr_zero(rest));
    }
  }
  std::array<Mask, 64> by_root{};
  std::vector<int> roots;
  for (Mask rest = ground; rest != 0; rest &= rest - 1) {
    const int x = std::countr_zero(rest);
    const int r = uf.find(x);
    if (by_root[r] == 0) roots.push_back(r);
    by_root[r] |= Mask{1} << x;
  }
  std::vector<Mask> out;
  out.reserve(roots.size());
  // Roots are the least member of their block and appear in increasing order.
  for (int r : roots) out.push_back(by_root[r]);
  return out;
}

Partition components(const Hypergraph& h) {
  return to_partition(h.players(),
                      component_masks(h.players().all(), h.link_masks()));
}

Partition components(const Hypergraph& h, const Coalition& s) {
  return to_partition(h.players(),
                      component_masks(h.players().mask_of(s), h.link_masks()));
}

Hypergraph induced_subhypergraph(const Coalition& s, const Hypergraph& h) {
  const Mask ground = h.players().mask_of(s);
  std::vector<Hyperlink> kept;
  for (std::size_t k = 0; k < h.link_count(); ++k) {
    if ((h.link_masks()[k] & ~ground) == 0) kept.push_back(h.hyperlinks()[k]);
  }
  return Hypergraph(PlayerSet(std::vector<PlayerId>(s.members().begin(),
                                                    s.members().end())),
                    std::move(kept));
}

Partition partial_components(const Hypergraph& h,
                             const std::vector<Hyperlink>& sub_links) {
  Mask selected = 0;
  for (const Hyperlink& e : sub_links) selected |= Mask{1} << h.index_of(e);
  return components(h.partial(selected));
}

}  // namespace hgpos
