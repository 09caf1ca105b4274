#pragma once

#include <cstddef>
#include <span>

#include "sympl/rational.hpp"

namespace sympl {

/// lambda written as base + r(-1, ..., -1) with base_n = n.
struct EhwProfile {
  RationalVector base;
  std::size_t p = 0;  ///< #{i | base_i = n}
  std::size_t q = 0;  ///< #{i | base_i = n + 1}
  Rational r;

  friend bool operator==(const EhwProfile&, const EhwProfile&) = default;
};

EhwProfile ehw_normalize(std::span<const Rational> lambda);

/// (p + q + 1) / 2 for a k-dominant base with bottom entry n.
Rational first_reduction_point(std::span<const Rational> base);

/// Bound of the second unitarity condition, read as p + q/2. Isolated here
/// so the alternative reading (p + q)/2 is a one-line change.
Rational second_unitarity_bound(std::size_t p, std::size_t q);

/// L(lambda) is unitary iff r <= (p+q+1)/2, or lambda is half-integral and
/// r <= second_unitarity_bound(p, q).
bool is_unitary_highest_weight(std::span<const Rational> lambda);

}  // namespace sympl
