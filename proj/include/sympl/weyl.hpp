#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sympl/rational.hpp"
#include "sympl/weights.hpp"

namespace sympl {

inline constexpr std::size_t kDefaultOrbitCap = 8;

/// Rank cap for orbit enumeration: SYMPL_ORBIT_CAP when set to a positive
/// integer, kDefaultOrbitCap otherwise.
std::size_t orbit_cap_from_env();

/// Element of the Weyl group of type C_n, a signed permutation.
///
/// Acts on coordinates by result_i = signs_i * x_{perm^{-1}(i)}: the entry
/// at position j moves to position perm(j), then position i is multiplied
/// by signs_i. Positions are 0-based.
class WeylElement {
 public:
  WeylElement(std::vector<std::size_t> perm, std::vector<int> signs);

  static WeylElement identity(std::size_t n);
  static WeylElement transposition(std::size_t n, std::size_t a, std::size_t b);
  static WeylElement sign_flip(std::size_t n, std::size_t position);

  std::size_t rank() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  WeylElement inverse() const;
  bool is_identity() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
};

/// w1 after w2: act(compose(w1, w2), x) == act(w1, act(w2, x)).
WeylElement compose(const WeylElement& w1, const WeylElement& w2);

RationalVector act(const WeylElement& w, std::span<const Rational> x);

/// w . lambda = w(lambda + rho) - rho
RationalVector dot_act(const WeylElement& w, std::span<const Rational> lambda);

/// All 2^n n! elements, ordered by permutation (lexicographic) and then by
/// the bitmask of flipped positions.
std::vector<WeylElement> enumerate_weyl(std::size_t n, std::size_t cap = kDefaultOrbitCap);

/// Canonical encoding of an infinitesimal character: per place the absolute
/// values of lambda_v + rho sorted in weakly decreasing order.
struct InfChar {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<RationalVector> canonical;

  friend bool operator==(const InfChar&, const InfChar&) = default;
};

RationalVector infchar_canonical_row(std::span<const Rational> lambda);
InfChar infchar_canonical(const Weight& lambda);
bool infchar_equal(const Weight& lambda, const Weight& mu);

bool is_regular(const Weight& lambda);

/// k-dominant weights sharing the infinitesimal character of lambda, for a
/// single place, in decreasing lexicographic order.
std::vector<RationalVector> dominant_orbit_row(std::span<const Rational> lambda,
                                               std::size_t cap = kDefaultOrbitCap);

/// Cartesian product over places of dominant_orbit_row.
std::vector<Weight> dominant_orbit_elements(const Weight& lambda, std::size_t cap = kDefaultOrbitCap);

/// Some dominant representative has all bottom entries > 2n - i + 1.
bool is_sufficiently_regular(const Weight& lambda, std::size_t i, std::size_t cap = kDefaultOrbitCap);

/// For k-dominant integral lambda with lambda_{n,v} > 2n: every dominant
/// orbit element is lambda itself or has a negative bottom entry.
bool orbit_dichotomy_check(const Weight& lambda, std::size_t cap = kDefaultOrbitCap);

}  // namespace sympl
