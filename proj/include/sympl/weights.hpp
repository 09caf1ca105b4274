#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sympl/rational.hpp"

namespace sympl {

/// A weight at every real place: d rows of n exact scalars, row v being
/// (lambda_{1,v}, ..., lambda_{n,v}).
///
/// Construction enforces membership in the weight lattice: entries are
/// half-integers (denominator 1 or 2) and successive differences within a
/// row are integers. Instances are immutable.
class Weight {
 public:
  explicit Weight(std::vector<RationalVector> rows);

  /// Single-place convenience constructor.
  static Weight single(RationalVector row);

  /// Text format: rows separated by ';', entries by ','; e.g. "5,3;5,4".
  static Weight parse(std::string_view text);

  std::size_t places() const { return places_; }
  std::size_t rank() const { return rank_; }

  const Rational& at(std::size_t place, std::size_t index) const {
    return entries_[place * rank_ + index];
  }
  std::span<const Rational> row(std::size_t place) const {
    return {entries_.data() + place * rank_, rank_};
  }
  /// lambda_{n,v}
  const Rational& bottom(std::size_t place) const { return at(place, rank_ - 1); }

  std::vector<RationalVector> rows() const;
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::size_t places_ = 0;
  std::size_t rank_ = 0;
  RationalVector entries_;
};

/// Validates one row against the lattice conditions (throws on violation).
void check_weight_row(std::span<const Rational> row);

/// Half the sum of the positive roots: (-1, -2, ..., -n).
RationalVector rho(std::size_t n);

bool is_k_dominant(std::span<const Rational> row);
bool is_k_dominant(const Weight& weight);

bool is_integral(std::span<const Rational> row);
bool is_integral(const Weight& weight);

/// (-1)^{lambda_n}; requires an integral weight whose bottom entry agrees
/// across places.
int parity_class(const Weight& weight);

/// True iff lambda_{n,v} is the same for every place v.
bool bottom_constant_across_places(const Weight& weight);

enum class VanishingVerdict {
  NearlyHolomorphicSpaceVanishes,
  HolomorphicZeroOrConstant,
  NoConclusion,
};

std::string_view to_string(VanishingVerdict verdict);

/// Vanishing criteria for modular forms of weight lambda: the nearly
/// holomorphic space is zero when n > 1, lambda != 0 and some bottom entry
/// is 0; a holomorphic form is zero or constant when some bottom entry is
/// non-positive.
VanishingVerdict holomorphy_vanishing(const Weight& weight);

}  // namespace sympl
