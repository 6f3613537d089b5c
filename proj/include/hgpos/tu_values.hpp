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

// Shapley value and Harsanyi dividends for finite TU-games.
//
// A game is a ground set {0, ..., n-1} plus a worth function on bitmasks. The
// ground set can be players, hyperlinks or expanded players. All three
// Shapley routes first materialize the worth table (one entry per coalition,
// indexed by mask) and then work on that dense vector, so the table kernels
// below are plain templates over the scalar type.

#ifndef HGPOS_TU_VALUES_HPP_
#define HGPOS_TU_VALUES_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hgpos/core_model.hpp"

namespace hgpos {

/// Enumeration limits. All of them are runtime configuration.
struct Caps {
  std::size_t permutation_players = 8;  // n! route
  std::size_t subset_players = 24;      // 2^n routes
  std::size_t dividend_players = 20;    // Moebius transform
  std::uint64_t expansion_states = 10'000'000;  // block count vectors
  std::size_t recursion_links = 16;     // value_from_axioms, 2^|H| memo
};

struct TUGame {
  std::size_t size = 0;
  std::function<Rational(Mask)> worth;
};

/// Throws CapExceeded when `n > cap`.
void require_within_cap(std::size_t n, std::size_t cap, const char* what);

/// All 2^n worths, indexed by coalition mask.
Vector worth_table(const TUGame& game, std::size_t cap);

Vector shapley_by_permutations(const TUGame& game, const Caps& caps = {});
Vector shapley_by_subsets(const TUGame& game, const Caps& caps = {});
/// lambda_T for every mask T; entry 0 is 0.
Vector harsanyi_dividends(const TUGame& game, const Caps& caps = {});
Vector shapley_by_dividends(const TUGame& game, const Caps& caps = {});

// Table kernels.

/// |S|!(n-|S|-1)!/n! for |S| = 0..n-1.
template <typename Scalar>
VectorX<Scalar> shapley_weights(std::size_t n) {
  VectorX<Scalar> w(static_cast<Eigen::Index>(n));
  if (n == 0) return w;
  w(0) = Scalar(1) / Scalar(static_cast<long>(n));
  for (std::size_t s = 1; s < n; ++s) {
    w(static_cast<Eigen::Index>(s)) = w(static_cast<Eigen::Index>(s - 1)) *
                                      Scalar(static_cast<long>(s)) /
                                      Scalar(static_cast<long>(n - s));
  }
  return w;
}

template <typename Scalar>
VectorX<Scalar> shapley_from_table(const VectorX<Scalar>& worth,
                                   std::size_t n) {
  const VectorX<Scalar> weights = shapley_weights<Scalar>(n);
  VectorX<Scalar> value = VectorX<Scalar>::Zero(static_cast<Eigen::Index>(n));
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Mask s = 0; s < full; ++s) {
    const Scalar& w = weights(std::popcount(s));
    for (std::size_t i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      if (s & bit) continue;
      const Scalar marginal = worth(static_cast<Eigen::Index>(s | bit)) -
                              worth(static_cast<Eigen::Index>(s));
      if (marginal != Scalar(0)) value(static_cast<Eigen::Index>(i)) += w * marginal;
    }
  }
  return value;
}

template <typename Scalar>
VectorX<Scalar> shapley_from_table_by_permutations(const VectorX<Scalar>& worth,
                                                   std::size_t n) {
  VectorX<Scalar> value = VectorX<Scalar>::Zero(static_cast<Eigen::Index>(n));
  if (n == 0) return value;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  long count = 0;
  do {
    Mask before = 0;
    for (std::size_t i : order) {
      const Mask after = before | (Mask{1} << i);
      value(static_cast<Eigen::Index>(i)) +=
          worth(static_cast<Eigen::Index>(after)) -
          worth(static_cast<Eigen::Index>(before));
      before = after;
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return value / Scalar(count);
}

/// In-place subset-sum inversion: lambda_T = sum_{S in T} (-1)^{|T|-|S|} v(S).
template <typename Scalar>
VectorX<Scalar> moebius_transform(VectorX<Scalar> worth, std::size_t n) {
  const auto size = static_cast<Mask>(worth.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask t = 0; t < size; ++t) {
      if (t & bit) {
        worth(static_cast<Eigen::Index>(t)) -=
            worth(static_cast<Eigen::Index>(t ^ bit));
      }
    }
  }
  return worth;
}

template <typename Scalar>
VectorX<Scalar> shapley_from_dividends(const VectorX<Scalar>& dividends,
                                       std::size_t n) {
  VectorX<Scalar> value = VectorX<Scalar>::Zero(static_cast<Eigen::Index>(n));
  const auto size = static_cast<Mask>(dividends.size());
  for (Mask t = 1; t < size; ++t) {
    const Scalar& d = dividends(static_cast<Eigen::Index>(t));
    if (d == Scalar(0)) continue;
    const Scalar share = d / Scalar(static_cast<long>(std::popcount(t)));
    for (Mask rest = t; rest != 0; rest &= rest - 1) {
      value(std::countr_zero(rest)) += share;
    }
  }
  return value;
}

}  // namespace hgpos

#endif  // HGPOS_TU_VALUES_HPP_
