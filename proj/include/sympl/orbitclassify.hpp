#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sympl/rational.hpp"
#include "sympl/weights.hpp"
#include "sympl/weyl.hpp"

namespace sympl {

/// Harish-Chandra parameter rho(n) + (inner_1, ..., inner_{n-i}, s, ..., s).
RationalVector hc_parameter(std::span<const Rational> inner, const Rational& s, std::size_t n, std::size_t i);

/// Induction levels X = {0, ..., upper} grouped by infinitesimal character,
/// together with the distinguished subset
/// Y = {s in X : s <= n - (i-1)/2} u {s in X : s >= 2n - i + 2}.
struct OrbitClassification {
  std::size_t n = 0;
  std::size_t i = 0;
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;
  std::vector<std::vector<std::int64_t>> classes;  ///< each sorted, ordered by least element
  bool bijective = false;                          ///< each class meets Y exactly once

  friend bool operator==(const OrbitClassification&, const OrbitClassification&) = default;
};

/// Requires i < n; X runs up to inner_{n-i}.
OrbitClassification classify_levels(std::span<const Rational> inner, std::size_t n, std::size_t i);

/// Same classification with an explicit upper end of X; the only way to
/// classify the Siegel case i = n, where inner is empty.
OrbitClassification classify_levels_up_to(std::span<const Rational> inner, std::size_t n, std::size_t i,
                                          std::int64_t upper);

/// s and 2n - i + 1 - s give the same infinitesimal character.
bool duality_check(std::span<const Rational> inner, std::size_t n, std::size_t i, const Rational& s);

/// Dominant orbit elements omega of lambda with omega_{n,v} = ... =
/// omega_{n-i+1,v} at each place and omega_{n,v} independent of v. An empty
/// result certifies that no nearly holomorphic form with this infinitesimal
/// character has cuspidal support along Q_{i,n}.
std::vector<Weight> theorem_main_necessary(const Weight& lambda, std::size_t i, std::size_t cap = kDefaultOrbitCap);

enum class Conclusion { IsotypicDescription, VanishesWrongParity, HypothesesFail };
std::string_view to_string(Conclusion c);

struct HypothesisCheck {
  std::string name;
  bool passed = false;

  friend bool operator==(const HypothesisCheck&, const HypothesisCheck&) = default;
};

/// Structured description of the Q_{i,n}-isotypic part of the space of
/// nearly holomorphic forms with infinitesimal character chi_lambda.
struct DecompositionReport {
  explicit DecompositionReport(Weight lambda) : weight(std::move(lambda)) {}

  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t i = 0;
  Weight weight;
  std::vector<HypothesisCheck> hypotheses;
  std::optional<int> parity_class;
  std::optional<Rational> exponent;  ///< lambda_n - n + (i-1)/2
  std::vector<RationalVector> inner_weights;
  std::optional<int> character_sign;  ///< archimedean sign of mu, when supplied
  std::vector<std::string> assumptions;
  Conclusion conclusion = Conclusion::HypothesesFail;

  bool all_passed() const;
  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

/// Never throws on failed hypotheses; they are recorded in the report.
/// When character_sign is given and differs from the parity class the
/// conclusion is VanishesWrongParity.
DecompositionReport decomposition_report(const Weight& lambda, std::size_t i,
                                         std::optional<int> character_sign = std::nullopt,
                                         std::size_t cap = kDefaultOrbitCap);

bool is_squarefree(std::uint64_t value);

enum class SurjectivityTag { SurjectiveByTheorem, NotCovered };
std::string_view to_string(SurjectivityTag tag);

struct SurjectivityVerdict {
  SurjectivityTag tag = SurjectivityTag::NotCovered;
  std::vector<std::string> failed_conditions;

  friend bool operator==(const SurjectivityVerdict&, const SurjectivityVerdict&) = default;
};

/// Hypotheses under which the global Siegel operator on level Gamma_0(N) is
/// surjective.
SurjectivityVerdict siegel_surjectivity_check(const Weight& lambda, std::uint64_t level);

/// Same check with the level given as a list of primes; square-free iff the
/// primes are pairwise distinct.
SurjectivityVerdict siegel_surjectivity_check(const Weight& lambda, std::span<const std::uint64_t> level_primes);

}  // namespace sympl
