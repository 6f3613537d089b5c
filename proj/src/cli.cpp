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

#include "hgpos/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgpos/axioms.hpp"
#include "hgpos/comm_values.hpp"
#include "hgpos/connectivity.hpp"
#include "hgpos/expansion.hpp"

namespace hgpos {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Document parsing

class DocumentReader {
 public:
  std::vector<std::string> diagnostics;

  void fail(const std::string& field, const std::string& message) {
    diagnostics.push_back(field + ": " + message);
  }

  std::optional<PlayerId> player_id(const json& node, const std::string& field) {
    if (!node.is_number_integer() || node.get<long long>() < 0 ||
        node.get<long long>() > std::numeric_limits<std::uint32_t>::max()) {
      fail(field, "player ids must be non-negative integers");
      return std::nullopt;
    }
    return PlayerId{static_cast<std::uint32_t>(node.get<long long>())};
  }

  std::optional<Rational> rational(const json& node, const std::string& field) {
    if (node.is_number_integer()) {
      return Rational(Integer(node.dump()));
    }
    if (node.is_string()) {
      try {
        return parse_rational(node.get<std::string>());
      } catch (const InvalidInput& e) {
        fail(field, e.what());
        return std::nullopt;
      }
    }
    fail(field, "malformed rational " + node.dump() +
                    " (use an integer or a \"p/q\" string)");
    return std::nullopt;
  }

  // Members of a coalition-like list. Unknown players are reported against
  // `known` when given.
  std::optional<std::vector<PlayerId>> id_list(const json& node,
                                               const std::string& field,
                                               const std::set<PlayerId>* known) {
    if (!node.is_array()) {
      fail(field, "expected a list of player ids");
      return std::nullopt;
    }
    std::vector<PlayerId> out;
    bool ok = true;
    std::set<PlayerId> seen;
    for (std::size_t k = 0; k < node.size(); ++k) {
      const std::string sub = field + "[" + std::to_string(k) + "]";
      const auto id = player_id(node[k], sub);
      if (!id) {
        ok = false;
        continue;
      }
      if (!seen.insert(*id).second) {
        fail(sub, "player " + std::to_string(id->value) + " listed twice");
        ok = false;
        continue;
      }
      if (known && !known->contains(*id)) {
        fail(sub, "unknown player " + std::to_string(id->value));
        ok = false;
        continue;
      }
      out.push_back(*id);
    }
    if (!ok) return std::nullopt;
    return out;
  }
};

}  // namespace

ParseError::ParseError(std::vector<std::string> diagnostics)
    : InvalidInput(diagnostics.empty() ? std::string("invalid game document")
                                       : diagnostics.front()),
      diagnostics_(std::move(diagnostics)) {}

HypergraphGame parse_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError({std::string("syntax error: ") + e.what()});
  }
  DocumentReader reader;
  if (!doc.is_object()) {
    throw ParseError({"document: expected a JSON object"});
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "players" && key != "hyperlinks" && key != "characteristic") {
      reader.fail(key, "unknown field");
    }
  }

  // players
  std::set<PlayerId> known;
  std::vector<PlayerId> players;
  if (!doc.contains("players")) {
    reader.fail("players", "missing");
  } else if (auto ids = reader.id_list(doc["players"], "players", nullptr)) {
    players = *ids;
    known.insert(players.begin(), players.end());
    if (players.empty()) reader.fail("players", "at least one player is needed");
  }

  // hyperlinks
  std::vector<std::vector<PlayerId>> raw_links;
  if (doc.contains("hyperlinks")) {
    const json& links = doc["hyperlinks"];
    if (!links.is_array()) {
      reader.fail("hyperlinks", "expected a list of hyperlinks");
    } else {
      std::set<std::vector<PlayerId>> seen;
      for (std::size_t k = 0; k < links.size(); ++k) {
        const std::string field = "hyperlinks[" + std::to_string(k) + "]";
        if (links[k].is_array() && links[k].size() < 2) {
          reader.fail(field, links[k].empty() ? "empty hyperlink"
                                              : "singleton hyperlink");
        }
        auto ids = reader.id_list(links[k], field, &known);
        if (!ids) continue;
        if (ids->size() < 2) continue;
        std::vector<PlayerId> sorted = *ids;
        std::sort(sorted.begin(), sorted.end());
        if (!seen.insert(sorted).second) {
          reader.fail(field, "duplicate hyperlink");
          continue;
        }
        raw_links.push_back(std::move(*ids));
      }
    }
  } else {
    reader.fail("hyperlinks", "missing (use [] for no hyperlinks)");
  }

  // characteristic
  enum class Kind { kNone, kTable, kUnanimity, kWeighted } kind = Kind::kNone;
  std::map<Coalition, Rational> table;
  std::optional<Coalition> carrier;
  std::vector<std::pair<Coalition, Rational>> terms;
  if (!doc.contains("characteristic")) {
    reader.fail("characteristic", "missing");
  } else if (const json& ch = doc["characteristic"];
             !ch.is_object() || ch.size() != 1) {
    reader.fail("characteristic",
                "expected exactly one of table, unanimity, weighted_unanimity");
  } else if (ch.contains("unanimity")) {
    kind = Kind::kUnanimity;
    if (auto ids = reader.id_list(ch["unanimity"], "characteristic.unanimity",
                                  &known)) {
      carrier = Coalition(*ids);
    }
  } else if (ch.contains("table") || ch.contains("weighted_unanimity")) {
    const bool is_table = ch.contains("table");
    kind = is_table ? Kind::kTable : Kind::kWeighted;
    const std::string base =
        std::string("characteristic.") + (is_table ? "table" : "weighted_unanimity");
    const char* value_key = is_table ? "worth" : "coeff";
    const json& entries = ch[is_table ? "table" : "weighted_unanimity"];
    if (!entries.is_array()) {
      reader.fail(base, "expected a list of entries");
    } else {
      for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string field = base + "[" + std::to_string(k) + "]";
        const json& entry = entries[k];
        if (!entry.is_object() || !entry.contains("coalition") ||
            !entry.contains(value_key) || entry.size() != 2) {
          reader.fail(field, std::string("expected {\"coalition\": [...], \"") +
                                 value_key + "\": ...}");
          continue;
        }
        auto ids = reader.id_list(entry["coalition"], field + ".coalition", &known);
        auto value = reader.rational(entry[value_key], field + "." + value_key);
        if (!ids || !value) continue;
        Coalition s(*ids);
        const bool duplicate =
            is_table ? table.contains(s)
                     : std::any_of(terms.begin(), terms.end(),
                                   [&](const auto& t) { return t.first == s; });
        if (duplicate) {
          reader.fail(field, "coalition " + s.to_string() + " listed twice");
          continue;
        }
        if (is_table) table.emplace(std::move(s), std::move(*value));
        else terms.emplace_back(std::move(s), std::move(*value));
      }
    }
  } else {
    reader.fail("characteristic",
                "expected one of table, unanimity, weighted_unanimity");
  }

  if (!reader.diagnostics.empty()) throw ParseError(reader.diagnostics);

  try {
    PlayerSet set(players);
    std::optional<CharacteristicFunction> v;
    switch (kind) {
      case Kind::kTable:
        v = CharacteristicFunction::table(set, std::move(table));
        break;
      case Kind::kUnanimity:
        v = CharacteristicFunction::unanimity(set, *carrier);
        break;
      case Kind::kWeighted:
        v = CharacteristicFunction::weighted_unanimity(set, std::move(terms));
        break;
      case Kind::kNone:
        throw ParseError({"characteristic: missing"});
    }
    return HypergraphGame(std::move(*v),
                          make_hypergraph(std::move(players), raw_links));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError({std::string("characteristic: ") + e.what()});
  }
}

namespace {

json id_array(const Coalition& s) {
  json out = json::array();
  for (PlayerId i : s.members()) out.push_back(i.value);
  return out;
}

}  // namespace

std::string serialize_game(const HypergraphGame& game) {
  json doc;
  doc["players"] = json::array();
  for (PlayerId i : game.players().ids()) doc["players"].push_back(i.value);
  doc["hyperlinks"] = json::array();
  for (const Hyperlink& e : game.graph().hyperlinks()) {
    doc["hyperlinks"].push_back(id_array(e));
  }
  json ch = json::object();
  std::visit(
      [&ch](const auto& variant) {
        using T = std::decay_t<decltype(variant)>;
        if constexpr (std::is_same_v<T, CharacteristicFunction::Table>) {
          json entries = json::array();
          for (const auto& [s, worth] : variant.entries) {
            entries.push_back(
                {{"coalition", id_array(s)}, {"worth", format_rational(worth)}});
          }
          ch["table"] = std::move(entries);
        } else if constexpr (std::is_same_v<T, CharacteristicFunction::Unanimity>) {
          ch["unanimity"] = id_array(variant.carrier);
        } else {
          json entries = json::array();
          for (const auto& [s, coeff] : variant.terms) {
            entries.push_back(
                {{"coalition", id_array(s)}, {"coeff", format_rational(coeff)}});
          }
          ch["weighted_unanimity"] = std::move(entries);
        }
      },
      game.v().variant());
  doc["characteristic"] = std::move(ch);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Command dispatch

namespace {

struct Options {
  std::string input;
  std::string format = "table";
  bool decimal = false;
  std::string rule = "position";
  std::string axiom;
  std::string theorem;
  std::uint64_t k = 1;
  bool payoffs = false;
  bool no_symmetry = false;
  Caps caps;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  buffer << in.rdbuf();
  return buffer.str();
}

AllocationRule rule_by_name(const std::string& name, const Caps& caps) {
  if (name == "position") return position_rule(caps);
  if (name == "myerson") return myerson_rule(caps);
  if (name == "shapley") return shapley_rule(caps);
  throw InvalidInput("unknown rule " + name);
}

std::string player_key(PlayerId i) { return std::to_string(i.value); }

json allocation_json(const Allocation& a, bool decimal) {
  json payoffs = json::object();
  json approx = json::object();
  for (std::size_t k = 0; k < a.players().size(); ++k) {
    const Rational& x = a.payoff()(static_cast<Eigen::Index>(k));
    payoffs[player_key(a.players().ids()[k])] = format_rational(x);
    approx[player_key(a.players().ids()[k])] = x.convert_to<double>();
  }
  json out = {{"payoffs", payoffs}, {"total", format_rational(a.total())}};
  if (decimal) out["decimal_approx"] = approx;
  return out;
}

void print_allocation(std::ostream& out, const Allocation& a, bool decimal) {
  for (std::size_t k = 0; k < a.players().size(); ++k) {
    const Rational& x = a.payoff()(static_cast<Eigen::Index>(k));
    out << player_key(a.players().ids()[k]) << ": " << format_rational(x);
    if (decimal) out << "  (~" << format_decimal(x) << ", approximate)";
    out << "\n";
  }
  out << "total: " << format_rational(a.total()) << "\n";
}

void emit(std::ostream& out, const Options& opt, const json& doc,
          const std::string& table) {
  if (opt.format == "json") out << doc.dump(2) << "\n";
  else out << table;
}

int cmd_value(const HypergraphGame& game, const Options& opt,
              std::ostream& out) {
  const Allocation a = rule_by_name(opt.rule, opt.caps)(game);
  std::ostringstream table;
  table << "rule: " << opt.rule << "\n";
  print_allocation(table, a, opt.decimal);
  json doc = {{"command", "value"}, {"rule", opt.rule},
              {"allocation", allocation_json(a, opt.decimal)}};
  emit(out, opt, doc, table.str());
  return kExitOk;
}

std::string member_list(const UniformExpansion& exp,
                        std::span<const std::size_t> members) {
  std::string s;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const ExpandedPlayer& l = exp.universe().players()[members[k]];
    if (k) {
      const ExpandedPlayer& prev = exp.universe().players()[members[k - 1]];
      s += (prev.origin != l.origin || prev.link != l.link) ? "; " : ", ";
    }
    s += to_string(l);
  }
  return s;
}

int cmd_expand(const HypergraphGame& game, const Options& opt,
               std::ostream& out) {
  const UniformExpansion exp = build_uniform(game, opt.k);
  const ExpandedUniverse& u = exp.universe();
  std::optional<Vector> payoffs;
  if (opt.payoffs) payoffs = shapley_blockwise(exp, opt.caps);

  std::ostringstream table;
  table << "k: " << exp.k() << "\neta: " << u.eta() << "\nrho: " << exp.rho()
        << "\nsize: " << exp.size() << "\nblocks:\n";
  json doc = {{"command", "expand"}, {"k", exp.k()}, {"eta", u.eta()},
              {"rho", exp.rho()}, {"size", exp.size()}};
  json blocks = json::array();
  for (std::size_t e = 0; e < u.link_count(); ++e) {
    const Hyperlink& link = game.graph().hyperlinks()[e];
    table << "  e" << e + 1 << " = " << link.to_string() << ": "
          << member_list(exp, u.block(e)) << "\n";
    json members = json::array();
    for (std::size_t l : u.block(e)) members.push_back(to_string(u.players()[l]));
    blocks.push_back({{"hyperlink", id_array(link)},
                      {"name", "e" + std::to_string(e + 1)},
                      {"members", members}});
  }
  table << "groups:\n";
  json groups = json::array();
  for (PlayerId i : game.players().ids()) {
    table << "  U(" << i.value << "): " << member_list(exp, u.group(i)) << "\n";
    json members = json::array();
    for (std::size_t l : u.group(i)) members.push_back(to_string(u.players()[l]));
    groups.push_back({{"player", i.value}, {"members", members}});
  }
  doc["blocks"] = blocks;
  doc["groups"] = groups;
  if (payoffs) {
    table << "shapley:\n";
    json sh = json::object();
    for (std::size_t l = 0; l < u.size(); ++l) {
      const Rational& x = (*payoffs)(static_cast<Eigen::Index>(l));
      table << "  " << to_string(u.players()[l]) << ": " << format_rational(x)
            << "\n";
      sh[to_string(u.players()[l])] = format_rational(x);
    }
    doc["shapley"] = sh;
  }
  emit(out, opt, doc, table.str());
  return kExitOk;
}

int cmd_check(const HypergraphGame& game, const Options& opt,
              std::ostream& out) {
  const AllocationRule rule = rule_by_name(opt.rule, opt.caps);
  std::ostringstream table;
  json doc = {{"command", "check"}, {"axiom", opt.axiom}, {"rule", opt.rule}};
  bool passed = false;
  if (opt.axiom == "component-efficiency") {
    const EfficiencyReport report = check_component_efficiency(rule, game);
    json rows = json::array();
    for (const auto& c : report.components) {
      table << c.component.to_string() << ": payoff " << format_rational(c.payoff_sum)
            << ", worth " << format_rational(c.worth) << ", residual "
            << format_rational(c.residual) << "\n";
      rows.push_back({{"component", id_array(c.component)},
                      {"payoff_sum", format_rational(c.payoff_sum)},
                      {"worth", format_rational(c.worth)},
                      {"residual", format_rational(c.residual)}});
    }
    doc["components"] = rows;
    passed = report.passed();
  } else {
    ContributionReport report;
    if (opt.axiom == "balanced-link") {
      report = check_balanced_link_contributions(rule, game);
    } else if (opt.axiom == "balanced-conference") {
      report = check_balanced_conference_contributions(rule, game);
    } else if (opt.axiom == "partial-balanced") {
      report = check_partial_balanced_conference_contributions(rule, game);
    } else {
      throw InvalidInput("unknown axiom " + opt.axiom);
    }
    json rows = json::array();
    for (const auto& p : report.pairs) {
      rows.push_back({{"i", p.i.value}, {"j", p.j.value},
                      {"left", format_rational(p.left)},
                      {"right", format_rational(p.right)},
                      {"residual", format_rational(p.residual)}});
      if (p.i < p.j) {
        table << "(" << p.i.value << "," << p.j.value << "): left "
              << format_rational(p.left) << ", right " << format_rational(p.right)
              << ", residual " << format_rational(p.residual) << "\n";
      }
    }
    doc["pairs"] = rows;
    passed = report.passed();
  }
  table << (passed ? "PASS" : "FAIL") << "\n";
  doc["passed"] = passed;
  emit(out, opt, doc, table.str());
  return passed ? kExitOk : kExitFail;
}

int cmd_verify(const HypergraphGame& game, const Options& opt,
               std::ostream& out) {
  std::ostringstream table;
  json doc = {{"command", "verify"}, {"theorem", opt.theorem}};
  json checks = json::array();
  bool passed = true;

  auto compare = [&](const std::string& name, const Allocation& lhs,
                     const Allocation& rhs) {
    const bool ok = lhs == rhs;
    passed = passed && ok;
    table << name << ": " << (ok ? "PASS" : "FAIL") << "\n  lhs " << to_string(lhs)
          << "\n  rhs " << to_string(rhs) << "\n";
    checks.push_back({{"name", name}, {"passed", ok},
                      {"lhs", allocation_json(lhs, false)},
                      {"rhs", allocation_json(rhs, false)}});
  };

  if (opt.theorem == "1" || opt.theorem == "2") {
    const Allocation pi = position_value(game, opt.caps);
    std::vector<std::uint64_t> ks = {1};
    if (opt.theorem == "2") {
      ks.clear();
      for (std::uint64_t k = 1; k <= std::max<std::uint64_t>(opt.k, 2); ++k) {
        ks.push_back(k);
      }
    }
    if (game.graph().link_count() == 0) {
      compare("position value vs zero allocation", pi,
              Allocation::zeros(game.players()));
    } else {
      for (std::uint64_t k : ks) {
        compare("position value vs grouped expansion k=" + std::to_string(k), pi,
                grouped_position(build_uniform(game, k), opt.caps));
      }
    }
  } else if (opt.theorem == "corollary1") {
    const UniformExpansion exp = build_uniform(game, 1);
    const Vector blockwise = shapley_blockwise(exp, opt.caps);
    const Vector haf = corollary_payoffs(game, opt.caps, !opt.no_symmetry);
    json rows = json::array();
    for (std::size_t l = 0; l < exp.size(); ++l) {
      const auto idx = static_cast<Eigen::Index>(l);
      const bool ok = blockwise(idx) == haf(idx);
      passed = passed && ok;
      table << to_string(exp.universe().players()[l]) << ": uniform "
            << format_rational(blockwise(idx)) << ", agent form "
            << format_rational(haf(idx)) << (ok ? "" : "  MISMATCH") << "\n";
      rows.push_back({{"player", to_string(exp.universe().players()[l])},
                      {"uniform", format_rational(blockwise(idx))},
                      {"agent_form", format_rational(haf(idx))}, {"passed", ok}});
    }
    checks = rows;
  } else if (opt.theorem == "lemma1") {
    const UniformExpansion exp = build_uniform(game, 1);
    for (std::size_t e = 0; e < exp.universe().link_count(); ++e) {
      for (std::size_t l : exp.universe().block(e)) {
        const ExpandedPlayer& removed = exp.universe().players()[l];
        const Lemma1Report r = check_lemma1(game, e, removed, opt.caps);
        compare("e" + std::to_string(e + 1) + " without " + to_string(removed),
                r.deleted_link, r.deleted_copy);
      }
    }
  } else {
    throw InvalidInput("unknown theorem " + opt.theorem);
  }
  table << (passed ? "PASS" : "FAIL") << "\n";
  doc["checks"] = checks;
  doc["passed"] = passed;
  emit(out, opt, doc, table.str());
  return passed ? kExitOk : kExitFail;
}

int cmd_solve(const HypergraphGame& game, const Options& opt,
              std::ostream& out) {
  const Allocation a = value_from_axioms(game, opt.caps);
  std::ostringstream table;
  table << "rule: axioms\n";
  print_allocation(table, a, opt.decimal);
  json doc = {{"command", "solve-axioms"},
              {"allocation", allocation_json(a, opt.decimal)}};
  emit(out, opt, doc, table.str());
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Myerson and position values for hypergraph games", "hgpos"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_flag("--decimal", opt.decimal,
               "Also print approximate decimal values");
  app.add_option("--cap-permutation", opt.caps.permutation_players,
                 "Max players for permutation enumeration")
      ->capture_default_str();
  app.add_option("--cap-subset", opt.caps.subset_players,
                 "Max ground set size for subset enumeration")
      ->capture_default_str();
  app.add_option("--cap-dividend", opt.caps.dividend_players,
                 "Max ground set size for dividend computations")
      ->capture_default_str();
  app.add_option("--cap-states", opt.caps.expansion_states,
                 "Max count vectors in expanded games")
      ->capture_default_str();
  app.add_option("--cap-recursion", opt.caps.recursion_links,
                 "Max hyperlinks for the axiom solver")
      ->capture_default_str();

  auto add_input = [&opt](CLI::App* sub) {
    sub->add_option("input", opt.input, "Game file (JSON), - for stdin")
        ->required();
    sub->fallthrough();
  };

  auto* value = app.add_subcommand("value", "Compute an allocation");
  value->add_option("--rule", opt.rule, "position, myerson or shapley")
      ->check(CLI::IsMember({"position", "myerson", "shapley"}))
      ->capture_default_str();
  add_input(value);

  auto* expand = app.add_subcommand("expand", "List the uniform hyperlink game");
  expand->add_option("--k", opt.k, "Augmentation factor")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  expand->add_flag("--payoffs", opt.payoffs,
                   "Include Shapley payoffs of the expanded players");
  add_input(expand);

  auto* check = app.add_subcommand("check", "Audit an axiom for a rule");
  check->add_option("--axiom", opt.axiom)
      ->required()
      ->check(CLI::IsMember({"component-efficiency", "balanced-link",
                             "balanced-conference", "partial-balanced"}));
  check->add_option("--rule", opt.rule, "position, myerson or shapley")
      ->check(CLI::IsMember({"position", "myerson", "shapley"}))
      ->capture_default_str();
  add_input(check);

  auto* verify = app.add_subcommand("verify", "Check a characterization");
  verify->add_option("--theorem", opt.theorem)
      ->required()
      ->check(CLI::IsMember({"1", "2", "corollary1", "lemma1"}));
  verify->add_option("--k", opt.k,
                     "Largest augmentation factor tried by --theorem 2")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--no-symmetry", opt.no_symmetry,
                   "Enumerate all agent coalitions for --theorem corollary1");
  add_input(verify);

  auto* solve = app.add_subcommand(
      "solve-axioms", "Rebuild the allocation from the axioms");
  add_input(solve);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const HypergraphGame game = parse_game(read_input(opt.input));
    if (value->parsed()) return cmd_value(game, opt, out);
    if (expand->parsed()) return cmd_expand(game, opt, out);
    if (check->parsed()) return cmd_check(game, opt, out);
    if (verify->parsed()) return cmd_verify(game, opt, out);
    return cmd_solve(game, opt, out);
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics()) err << "error: " << d << "\n";
    return kExitInputError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace hgpos
