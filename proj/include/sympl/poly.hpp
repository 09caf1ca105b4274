#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sympl/rational.hpp"

namespace sympl {

/// Generator order used for canonical storage and rendering: Q, T, b1, b2,
/// ..., X, then every other name lexicographically.
bool symbol_less(std::string_view a, std::string_view b);

/// Monomial in named generators with integer (possibly negative) exponents.
/// Stored sparsely: sorted by symbol_less, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial symbol(std::string name, int exponent = 1);

  const std::vector<std::pair<std::string, int>>& powers() const { return powers_; }
  int exponent(std::string_view name) const;
  bool is_one() const { return powers_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(int k) const;
  /// Replaces name by name^{-1}.
  Monomial invert_symbol(std::string_view name) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  void normalize();
  std::vector<std::pair<std::string, int>> powers_;
};

/// Sparse Laurent polynomial over the rationals. Canonical: no zero
/// coefficients, terms keyed by Monomial, so equality is structural.
class LaurentPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Monomial& m, const Rational& coefficient = 1);

  static LaurentPoly symbol(std::string name, int exponent = 1) { return {Monomial::symbol(std::move(name), exponent)}; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }

  /// Union of symbols appearing with a nonzero exponent, in symbol order.
  std::vector<std::string> generators() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

  LaurentPoly pow(unsigned k) const;
  LaurentPoly invert_symbol(std::string_view name) const;
  /// Substitutes numeric values for some generators.
  LaurentPoly substitute(const std::map<std::string, Rational>& values) const;

  /// Exact value; throws MissingAssignment for an unassigned generator and
  /// PoleAtPoint for a negative power of a generator assigned 0.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  /// Terms in monomial order, factors in symbol order, e.g. "1 - Q^-2*T*X".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Parses expressions built from rationals, generator names, + - * ^ and
/// parentheses, e.g. "(x_1_1_1 - 1)*(x_1_1_1 - 2)" or "1 - X*Q^-2*T".
/// Negative exponents and division are allowed for single-term divisors only.
LaurentPoly parse_poly(std::string_view text);

}  // namespace sympl
