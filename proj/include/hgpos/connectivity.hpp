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

#ifndef HGPOS_CONNECTIVITY_HPP_
#define HGPOS_CONNECTIVITY_HPP_

#include <span>
#include <vector>

#include "hgpos/core_model.hpp"

namespace hgpos {

/// Blocks ordered by their least member.
using Partition = std::vector<Coalition>;

/// Components of `ground` using only the links contained in `ground`
/// (i.e. S/H(S)). Bits are positions in some ordered ground set of at most
/// 64 elements. Blocks are returned ordered by lowest bit; an empty ground
/// gives an empty result.
std::vector<Mask> component_masks(Mask ground, std::span<const Mask> links);

/// N/H.
Partition components(const Hypergraph& h);
/// S/H(S).
Partition components(const Hypergraph& h, const Coalition& s);

/// (S, H(S)).
Hypergraph induced_subhypergraph(const Coalition& s, const Hypergraph& h);

/// N/H' for H' a subset of H. Throws InvalidInput if some member of
/// `sub_links` is not a hyperlink of `h`.
Partition partial_components(const Hypergraph& h,
                             const std::vector<Hyperlink>& sub_links);

}  // namespace hgpos

#endif  // HGPOS_CONNECTIVITY_HPP_
