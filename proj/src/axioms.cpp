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

#include "hgpos/axioms.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include <Eigen/LU>

#include "hgpos/comm_values.hpp"
#include "hgpos/connectivity.hpp"

namespace hgpos {
namespace {

Rational inverse_size(const Hyperlink& e) {
  return Rational(1, static_cast<long>(e.size()));
}

ContributionReport contribution_report(
    const AllocationRule& rule, const HypergraphGame& game,
    const std::function<Rational(const Hyperlink&)>& weight) {
  const Hypergraph& h = game.graph();
  const PlayerSet& players = game.players();
  const std::size_t n = players.size();

  const Allocation full = rule(game);
  // delta[e](i) = f_i(H) - f_i(H \ e)
  std::vector<Vector> delta;
  delta.reserve(h.link_count());
  for (std::size_t e = 0; e < h.link_count(); ++e) {
    delta.push_back(full.payoff() - rule(game.without_link(e)).payoff());
  }

  std::vector<Mask> incident(n);
  for (std::size_t k = 0; k < n; ++k) {
    incident[k] = incident_link_mask(h, players.ids()[k]);
  }
  auto side = [&](std::size_t receiver, std::size_t breaker) {
    Rational sum = 0;
    for (Mask m = incident[breaker]; m != 0; m &= m - 1) {
      const auto e = static_cast<std::size_t>(std::countr_zero(m));
      sum += weight(h.hyperlinks()[e]) *
             delta[e](static_cast<Eigen::Index>(receiver));
    }
    return sum;
  };

  ContributionReport report;
  report.pairs.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PairResidual r{players.ids()[i], players.ids()[j], side(i, j),
                     side(j, i), 0};
      r.residual = r.left - r.right;
      report.pairs.push_back(std::move(r));
    }
  }
  return report;
}

class AxiomSolver {
 public:
  explicit AxiomSolver(const HypergraphGame& game) : game_(game) {}

  const Vector& solve(Mask links) {
    if (auto it = memo_.find(links); it != memo_.end()) return it->second;

    const Hypergraph& h = game_.graph();
    const std::size_t n = game_.players().size();
    Vector f = Vector::Zero(static_cast<Eigen::Index>(n));
    std::vector<Mask> active;
    for (Mask m = links; m != 0; m &= m - 1) {
      active.push_back(h.link_masks()[std::countr_zero(m)]);
    }
    for (Mask block : component_masks(game_.players().all(), active)) {
      std::vector<std::size_t> members;
      for (Mask m = block; m != 0; m &= m - 1) {
        members.push_back(static_cast<std::size_t>(std::countr_zero(m)));
      }
      const Rational block_worth = game_.v().worth_of_mask(block);
      if (members.size() == 1) {
        f(static_cast<Eigen::Index>(members[0])) = block_worth;
        continue;
      }
      const Vector x = solve_component(links, block, members, block_worth);
      for (std::size_t r = 0; r < members.size(); ++r) {
        f(static_cast<Eigen::Index>(members[r])) =
            x(static_cast<Eigen::Index>(r));
      }
    }
    return memo_.emplace(links, std::move(f)).first->second;
  }

 private:
  // Links of `links` containing player position `i`.
  Mask incident(Mask links, std::size_t i) const {
    Mask out = 0;
    for (Mask m = links; m != 0; m &= m - 1) {
      const int e = std::countr_zero(m);
      if (game_.graph().link_masks()[e] >> i & 1) out |= Mask{1} << e;
    }
    return out;
  }

  Rational weighted_degree(Mask incident_links) const {
    Rational d = 0;
    for (Mask m = incident_links; m != 0; m &= m - 1) {
      d += inverse_size(game_.graph().hyperlinks()[std::countr_zero(m)]);
    }
    return d;
  }

  // sum over e in `incident_links` of f_target(links \ e) / |e|
  Rational deleted_sum(Mask links, Mask incident_links, std::size_t target) {
    Rational sum = 0;
    for (Mask m = incident_links; m != 0; m &= m - 1) {
      const int e = std::countr_zero(m);
      const Vector& g = solve(links & ~(Mask{1} << e));
      sum += inverse_size(game_.graph().hyperlinks()[e]) *
             g(static_cast<Eigen::Index>(target));
    }
    return sum;
  }

  Vector solve_component(Mask links, Mask block,
                         const std::vector<std::size_t>& members,
                         const Rational& block_worth) {
    const auto c = static_cast<Eigen::Index>(members.size());
    const std::size_t p = members[0];
    const Mask incident_p = incident(links, p);
    const Rational d_p = weighted_degree(incident_p);

    Matrix a = Matrix::Zero(c, c);
    Vector b(c);
    a.row(0).setConstant(Rational(1));
    b(0) = block_worth;
    for (Eigen::Index r = 1; r < c; ++r) {
      const std::size_t q = members[static_cast<std::size_t>(r)];
      const Mask incident_q = incident(links, q);
      a(r, 0) = weighted_degree(incident_q);
      a(r, r) = -d_p;
      b(r) = deleted_sum(links, incident_q, p) -
             deleted_sum(links, incident_p, q);
    }
    const Eigen::FullPivLU<Matrix> lu(a);
    if (!lu.isInvertible()) {
      throw SingularSystem("axiom system is singular for component " +
                           game_.players().coalition_of(block).to_string());
    }
    return lu.solve(b);
  }

  const HypergraphGame& game_;
  std::unordered_map<Mask, Vector> memo_;
};

}  // namespace

AllocationRule position_rule(const Caps& caps) {
  return [caps](const HypergraphGame& g) { return position_value(g, caps); };
}

AllocationRule myerson_rule(const Caps& caps) {
  return [caps](const HypergraphGame& g) { return myerson_value(g, caps); };
}

AllocationRule shapley_rule(const Caps& caps) {
  return [caps](const HypergraphGame& g) { return shapley_value(g, caps); };
}

AllocationRule equal_split_rule() {
  return [](const HypergraphGame& g) {
    const auto n = static_cast<Eigen::Index>(g.players().size());
    const Rational share =
        g.v().worth_of_mask(g.players().all()) / Rational(static_cast<long>(n));
    return Allocation(g.players(), Vector::Constant(n, share));
  };
}

bool EfficiencyReport::passed() const {
  return std::all_of(components.begin(), components.end(),
                     [](const ComponentResidual& c) { return c.residual == 0; });
}

bool ContributionReport::passed() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const PairResidual& p) { return p.residual == 0; });
}

const PairResidual& ContributionReport::at(PlayerId i, PlayerId j) const {
  for (const auto& p : pairs) {
    if (p.i == i && p.j == j) return p;
  }
  throw InvalidInput("no residual for pair (" + std::to_string(i.value) + "," +
                     std::to_string(j.value) + ")");
}

EfficiencyReport check_component_efficiency(const AllocationRule& rule,
                                            const HypergraphGame& game) {
  const Allocation f = rule(game);
  EfficiencyReport report;
  for (const Coalition& t : components(game.graph())) {
    ComponentResidual r{t, 0, game.v()(t), 0};
    for (PlayerId i : t.members()) r.payoff_sum += f[i];
    r.residual = r.payoff_sum - r.worth;
    report.components.push_back(std::move(r));
  }
  return report;
}

ContributionReport check_balanced_link_contributions(
    const AllocationRule& rule, const HypergraphGame& game) {
  if (!game.graph().is_uniform(2)) {
    throw InvalidInput("balanced link contributions needs a graph (2-uniform)");
  }
  return contribution_report(rule, game,
                             [](const Hyperlink&) { return Rational(1); });
}

ContributionReport check_balanced_conference_contributions(
    const AllocationRule& rule, const HypergraphGame& game) {
  return contribution_report(rule, game,
                             [](const Hyperlink&) { return Rational(1); });
}

ContributionReport check_partial_balanced_conference_contributions(
    const AllocationRule& rule, const HypergraphGame& game) {
  return contribution_report(rule, game, inverse_size);
}

Allocation position_by_dividends(const HypergraphGame& game,
                                 const Caps& caps) {
  const PlayerSet& players = game.players();
  Allocation out = Allocation::zeros(players);
  if (game.graph().link_count() == 0) return out;

  const UniformExpansion exp = build_uniform(game, 1);
  require_within_cap(exp.size(), caps.dividend_players, "expanded players");
  const Vector dividends = harsanyi_dividends(as_tu_game(exp), caps);

  std::vector<Mask> groups;
  for (PlayerId i : players.ids()) {
    Mask m = 0;
    for (std::size_t l : exp.universe().group(i)) m |= Mask{1} << l;
    groups.push_back(m);
  }
  for (Eigen::Index k = 1; k < dividends.size(); ++k) {
    const Rational& lambda = dividends(k);
    if (lambda == 0) continue;
    const auto coalition = static_cast<Mask>(k);
    const Rational per_member =
        lambda / Rational(static_cast<long>(std::popcount(coalition)));
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const int inside = std::popcount(coalition & groups[i]);
      if (inside) {
        out.payoff()(static_cast<Eigen::Index>(i)) +=
            per_member * Rational(inside);
      }
    }
  }
  return out;
}

Lemma1Report check_lemma1(const HypergraphGame& game, std::size_t link,
                          const ExpandedPlayer& removed, const Caps& caps) {
  if (link >= game.graph().link_count()) {
    throw InvalidInput("hyperlink index " + std::to_string(link) +
                       " is out of range");
  }
  if (removed.link != link) {
    throw InvalidInput(to_string(removed) + " is not in U(e" +
                       std::to_string(link + 1) + ")");
  }
  const UniformExpansion exp = build_uniform(game, 1);
  const std::size_t index = exp.universe().index_of(removed);
  Lemma1Report report;
  report.deleted_link = position_value(game.without_link(link), caps);
  report.deleted_copy =
      group_sums(exp, shapley_blockwise_without(exp, index, caps));
  return report;
}

Allocation value_from_axioms(const HypergraphGame& game, const Caps& caps) {
  require_within_cap(game.graph().link_count(), caps.recursion_links,
                     "hyperlinks for the axiom recursion");
  AxiomSolver solver(game);
  return Allocation(game.players(), solver.solve(game.graph().all_links()));
}

}  // namespace hgpos
