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

// Axiom checkers for allocation rules, the dividend form of the position
// value, the copy-deletion identity on the uniform hyperlink game and the
// solver that rebuilds an allocation from component efficiency plus partial
// balanced conference contributions.

#ifndef HGPOS_AXIOMS_HPP_
#define HGPOS_AXIOMS_HPP_

#include <cstddef>
#include <functional>
#include <vector>

#include "hgpos/core_model.hpp"
#include "hgpos/expansion.hpp"
#include "hgpos/tu_values.hpp"

namespace hgpos {

using AllocationRule = std::function<Allocation(const HypergraphGame&)>;

AllocationRule position_rule(const Caps& caps = {});
AllocationRule myerson_rule(const Caps& caps = {});
AllocationRule shapley_rule(const Caps& caps = {});
/// v(N)/|N| to everybody. Violates component efficiency on split games.
AllocationRule equal_split_rule();

struct ComponentResidual {
  Coalition component;
  Rational payoff_sum;
  Rational worth;
  Rational residual;  // payoff_sum - worth
};

struct EfficiencyReport {
  std::vector<ComponentResidual> components;
  bool passed() const;
};

/// Sides of a mutual-contribution axiom for the ordered pair (i, j):
///   left  = sum over e in H_j of weight(e) * [f_i(H) - f_i(H \ e)]
///   right = sum over e in H_i of weight(e) * [f_j(H) - f_j(H \ e)]
struct PairResidual {
  PlayerId i;
  PlayerId j;
  Rational left;
  Rational right;
  Rational residual;  // left - right
};

/// Every ordered pair (i, j), diagonal included, row-major in player order.
struct ContributionReport {
  std::vector<PairResidual> pairs;
  bool passed() const;
  const PairResidual& at(PlayerId i, PlayerId j) const;
};

EfficiencyReport check_component_efficiency(const AllocationRule& rule,
                                            const HypergraphGame& game);

/// Graph games only; throws InvalidInput unless H is 2-uniform.
ContributionReport check_balanced_link_contributions(
    const AllocationRule& rule, const HypergraphGame& game);

/// Unit weights.
ContributionReport check_balanced_conference_contributions(
    const AllocationRule& rule, const HypergraphGame& game);

/// Weights 1/|e|.
ContributionReport check_partial_balanced_conference_contributions(
    const AllocationRule& rule, const HypergraphGame& game);

/// pi_i = sum over K in U(H) of lambda_K(w) |K cap U(i)| / |K|. Limited by
/// caps.dividend_players on |U(H)|.
Allocation position_by_dividends(const HypergraphGame& game,
                                 const Caps& caps = {});

struct Lemma1Report {
  /// pi(N, v, H \ e).
  Allocation deleted_link;
  /// Group sums of Sh on U(H) minus the removed copy.
  Allocation deleted_copy;
  bool passed() const { return deleted_link == deleted_copy; }
};

/// Compares pi(N, v, H \ e) with the group sums of the Shapley value of w
/// restricted to U(H) minus `removed`. Throws InvalidInput unless `removed`
/// belongs to U(e) for e = hyperlinks()[link].
Lemma1Report check_lemma1(const HypergraphGame& game, std::size_t link,
                          const ExpandedPlayer& removed,
                          const Caps& caps = {});

/// The unique allocation satisfying component efficiency and partial balanced
/// conference contributions, computed by induction over hyperlink subsets.
/// Each component C of size at least two with reference player p (least id)
/// yields the exact system
///   d_q f_p - d_p f_q = sum_{e in H_q} f_p(H'\e)/|e| - sum_{e in H_p} f_q(H'\e)/|e|
///   sum_{i in C} f_i  = v(C)
/// with d_i = sum_{e in H_i} 1/|e|. Throws CapExceeded above
/// caps.recursion_links hyperlinks.
Allocation value_from_axioms(const HypergraphGame& game, const Caps& caps = {});

}  // namespace hgpos

#endif  // HGPOS_AXIOMS_HPP_
