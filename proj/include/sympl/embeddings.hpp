#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sympl/rational.hpp"

namespace sympl {

/// A character sgn^parity |.|^exponent of R^x.
struct CharacterDatum {
  int parity = 0;
  Rational exponent;

  CharacterDatum() = default;
  CharacterDatum(int parity_, Rational exponent_);

  std::string to_string() const;
  friend bool operator==(const CharacterDatum&, const CharacterDatum&) = default;
};

/// Data of Ind_{P_{i,n}}(mu |.|^s  [x]  L(inner_weight)).
struct InductionDatum {
  std::size_t n = 0;
  std::size_t i = 0;
  CharacterDatum character;
  RationalVector inner_weight;

  friend bool operator==(const InductionDatum&, const InductionDatum&) = default;
};

/// Principal series containing the highest weight vector of weight lambda:
/// position k (1-based) carries (lambda_{n+1-k} mod 2, lambda_{n+1-k} - (n+1-k)).
std::vector<CharacterDatum> principal_series_datum(std::span<const Rational> lambda);

/// Klingen parabolic P_{i,n}: requires lambda_n = ... = lambda_{n-i+1} and
/// returns character sgn^{lambda_n} |.|^{lambda_n - n + (i-1)/2} with inner
/// weight (lambda_1, ..., lambda_{n-i}).
InductionDatum klingen_embedding_datum(std::span<const Rational> lambda, std::size_t i);

/// The converse direction: the unique weight whose highest weight vector
/// lives in the given induction, or nullopt when none does.
std::optional<RationalVector> klingen_embedding_inverse(std::size_t n, std::size_t i, const CharacterDatum& mu,
                                                        std::span<const Rational> inner_weight);

/// Siegel degenerate principal series: lambda scalar, mu = sgn^{lambda_n},
/// s = lambda_n - (n+1)/2.
CharacterDatum siegel_degenerate_datum(std::span<const Rational> lambda);

/// Klingen Eisenstein series converge absolutely iff s > n - (j-1)/2.
bool klingen_convergence(const Rational& s, std::size_t n, std::size_t j);

/// Degenerate Eisenstein series on GL_n converge absolutely iff s - t > n/2.
bool gl_degenerate_convergence(const Rational& s, const Rational& t, std::size_t n);

}  // namespace sympl
