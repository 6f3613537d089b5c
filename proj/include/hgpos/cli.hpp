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

// Game documents and the command-line front end.
//
// A game document is JSON:
//
//   {
//     "players": [1, 2, 3, 4, 5, 6],
//     "hyperlinks": [[1, 4], [2, 5], [3, 6], [4, 5, 6]],
//     "characteristic": { "unanimity": [1, 2, 3] }
//   }
//
// "characteristic" holds exactly one of
//   "table":              [{"coalition": [1, 2], "worth": "3/2"}, ...]
//   "unanimity":          [1, 2, 3]
//   "weighted_unanimity": [{"coalition": [1, 2], "coeff": "2"}, ...]
// Rationals are strings "p/q" or JSON integers; floating point numbers are
// rejected.

#ifndef HGPOS_CLI_HPP_
#define HGPOS_CLI_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgpos/core_model.hpp"

namespace hgpos {

/// All problems found in a document, in field order. what() is the first.
class ParseError : public InvalidInput {
 public:
  explicit ParseError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

HypergraphGame parse_game(std::string_view text);

/// Canonical document: players ascending, hyperlinks lexicographic, table
/// entries by coalition.
std::string serialize_game(const HypergraphGame& game);

enum ExitCode : int {
  kExitOk = 0,
  kExitFail = 1,
  kExitInputError = 2,
  kExitCapExceeded = 3,
};

/// Runs one command. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace hgpos

#endif  // HGPOS_CLI_HPP_
