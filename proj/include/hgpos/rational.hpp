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

#ifndef HGPOS_RATIONAL_HPP_
#define HGPOS_RATIONAL_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace hgpos {

/// Arbitrary precision integer. Expression templates are disabled so the type
/// behaves as a plain value inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Exact rational, always stored in lowest terms with a positive denominator.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<Rational>;
using Matrix = MatrixX<Rational>;

// Error hierarchy shared by every module.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (bad hyperlink, unknown player...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured enumeration cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when an exact linear system turns out singular. Never expected.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// Parses "p", "-p", "p/q" or "-p/q" with q > 0. Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise; always reduced.
std::string format_rational(const Rational& q);

/// Approximate decimal rendering, display only.
std::string format_decimal(const Rational& q, int digits = 6);

Integer binomial(std::uint64_t n, std::uint64_t k);
Integer factorial(std::uint64_t n);

/// Row n of Pascal's triangle, C(n, 0..n).
std::vector<Integer> binomial_row(std::uint64_t n);

}  // namespace hgpos

#endif  // HGPOS_RATIONAL_HPP_
