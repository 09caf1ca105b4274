#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympl/poly.hpp"
#include "sympl/rational.hpp"

namespace sympl {

/// Quotient scale * prod(numerator factors) / prod(denominator factors).
///
/// Factors are kept unexpanded and sorted; a factor occurring on both sides
/// is cancelled. No gcd computation is attempted, so two equal functions
/// may have different factor lists; operator== decides equality by
/// cross-multiplication instead.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const LaurentPoly& numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(std::vector<LaurentPoly> numerator_factors, std::vector<LaurentPoly> denominator_factors,
                   Rational scale = 1);

  static RationalFunction one() { return {}; }

  const Rational& scale() const { return scale_; }
  const std::vector<LaurentPoly>& numerator_factors() const { return num_; }
  const std::vector<LaurentPoly>& denominator_factors() const { return den_; }

  /// Expanded numerator (including the scale) and denominator.
  LaurentPoly numerator() const;
  LaurentPoly denominator() const;

  RationalFunction inverse() const;
  RationalFunction invert_symbol(std::string_view name) const;

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Structural comparison of the stored factor lists.
  bool same_factors(const RationalFunction& other) const;

  /// e.g. "(1 - Q^-2*T*X)/(1 - T*X)"
  std::string to_string() const;

 private:
  void normalize();
  Rational scale_ = 1;
  std::vector<LaurentPoly> num_;
  std::vector<LaurentPoly> den_;
};

/// Equality of two products of factors, after cancelling common factors
/// and expanding what is left.
bool products_equal(std::vector<LaurentPoly> lhs, std::vector<LaurentPoly> rhs);

/// Unramified local data of pi_v twisted by mu_v. A parameter or the
/// character left as nullopt is symbolic (generator b<k> resp. X).
struct SatakeDatum {
  std::vector<std::optional<Rational>> params;  ///< q^{alpha_k}
  std::optional<int> character;                 ///< mu_v(uniformizer), +1 or -1

  static SatakeDatum symbolic(std::size_t m);

  std::size_t m() const { return params.size(); }
  /// b_k as a Laurent polynomial (k is 1-based), symbolic or numeric.
  LaurentPoly param(std::size_t k) const;
  LaurentPoly param_inverse(std::size_t k) const;
  /// X^power for the twisting character.
  LaurentPoly character_power(unsigned power) const;

  friend bool operator==(const SatakeDatum&, const SatakeDatum&) = default;
};

/// 1 / (1 - X^twist * Q^{-2c} * T^twist): L(s + c, mu) for twist 1 and
/// L(2s + c, mu^2) for twist 2, with Q = q^{1/2} and T = q^{-s}.
RationalFunction abelian_L(const Rational& shift, unsigned twist, const SatakeDatum& satake = {});

/// L(s + shift, pi, mu) = L(s + shift, mu) * prod_k L(s + shift -/+ alpha_k, mu).
RationalFunction standard_L(const Rational& shift, const SatakeDatum& satake);

/// prod_{l=1}^{i} L(s + shift + l - (i+1)/2, pi, mu)
///   * prod_{1 <= p < q <= i} L(2(s + shift) - i - 1 + p + q, mu^2)
RationalFunction xi(std::size_t i, const SatakeDatum& satake, const Rational& shift = 0);

/// Gindikin-Karpelevich value xi_j(s + (i-j)/2) / xi_j(s + 1 + (i-j)/2).
RationalFunction gk_value(std::size_t i, std::size_t j, const SatakeDatum& satake);

/// Exact value at a point; PoleAtPoint when the denominator vanishes.
Rational evaluate(const RationalFunction& f, const std::map<std::string, Rational>& assignment);

}  // namespace sympl
