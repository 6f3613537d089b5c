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

#include "hgpos/rational.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace hgpos {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidInput("malformed rational \"" + std::string(text) + "\"");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) {
    throw InvalidInput("malformed rational \"" + std::string(text) +
                       "\": zero denominator");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

std::string format_rational(const Rational& q) {
  const Integer& den = boost::multiprecision::denominator(q);
  std::string out = boost::multiprecision::numerator(q).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

std::string format_decimal(const Rational& q, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << q.convert_to<double>();
  return os.str();
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer factorial(std::uint64_t n) {
  Integer r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<Integer> binomial_row(std::uint64_t n) {
  std::vector<Integer> row(n + 1);
  row[0] = 1;
  for (std::uint64_t k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

}  // namespace hgpos
