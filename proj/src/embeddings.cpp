#include "sympl/embeddings.hpp"

#include "sympl/error.hpp"
#include "sympl/weights.hpp"

namespace sympl {
namespace {

void require_dominant_integral(std::span<const Rational> lambda) {
  check_weight_row(lambda);
  if (!is_integral(lambda)) throw Error(Errc::NonIntegral, to_string(lambda) + " is not integral");
  if (!is_k_dominant(lambda)) throw Error(Errc::NotDominant, to_string(lambda) + " is not k-dominant");
}

Rational half(long numerator) { return fraction(numerator, 2); }

}  // namespace

CharacterDatum::CharacterDatum(int parity_, Rational exponent_) : parity(parity_), exponent(std::move(exponent_)) {
  if (parity != 0 && parity != 1) throw Error(Errc::InvalidArgument, "character parity must be 0 or 1");
  exponent.canonicalize();
}

std::string CharacterDatum::to_string() const {
  return "sgn^" + std::to_string(parity) + "|.|^" + sympl::to_string(exponent);
}

std::vector<CharacterDatum> principal_series_datum(std::span<const Rational> lambda) {
  require_dominant_integral(lambda);
  const std::size_t n = lambda.size();
  std::vector<CharacterDatum> out;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t idx = n + 1 - k;  // 1-based
    const Rational& entry = lambda[idx - 1];
    out.emplace_back(parity(entry), entry - static_cast<long>(idx));
  }
  return out;
}

InductionDatum klingen_embedding_datum(std::span<const Rational> lambda, std::size_t i) {
  require_dominant_integral(lambda);
  const std::size_t n = lambda.size();
  if (i < 1 || i > n) throw Error(Errc::IndexOutOfRange, "parabolic index must lie in [1, n]");
  for (std::size_t k = n - i; k < n; ++k) {
    if (lambda[k] != lambda[n - 1]) {
      throw Error(Errc::TailNotConstant, "last " + std::to_string(i) + " entries of " + to_string(lambda) + " differ");
    }
  }
  const Rational& bottom = lambda[n - 1];
  Rational exponent = bottom - static_cast<long>(n) + half(static_cast<long>(i) - 1);
  return InductionDatum{n, i, CharacterDatum(parity(bottom), exponent),
                        RationalVector(lambda.begin(), lambda.begin() + static_cast<std::ptrdiff_t>(n - i))};
}

std::optional<RationalVector> klingen_embedding_inverse(std::size_t n, std::size_t i, const CharacterDatum& mu,
                                                        std::span<const Rational> inner_weight) {
  if (i < 1 || i > n) throw Error(Errc::IndexOutOfRange, "parabolic index must lie in [1, n]");
  if (inner_weight.size() != n - i) throw Error(Errc::LengthMismatch, "inner weight must have length n - i");
  if (!inner_weight.empty()) {
    check_weight_row(inner_weight);
    if (!is_k_dominant(inner_weight)) throw Error(Errc::NotDominant, to_string(inner_weight) + " is not k-dominant");
  }
  Rational t = mu.exponent + static_cast<long>(n) - half(static_cast<long>(i) - 1);
  if (!is_integer(t) || parity(t) != mu.parity) return std::nullopt;
  RationalVector lambda(inner_weight.begin(), inner_weight.end());
  lambda.resize(n, t);
  if (!is_integral(lambda) || !is_k_dominant(lambda)) return std::nullopt;
  return lambda;
}

CharacterDatum siegel_degenerate_datum(std::span<const Rational> lambda) {
  require_dominant_integral(lambda);
  const std::size_t n = lambda.size();
  for (const auto& x : lambda) {
    if (x != lambda[0]) throw Error(Errc::NotScalarWeight, to_string(lambda) + " is not a scalar weight");
  }
  const Rational& bottom = lambda[n - 1];
  return CharacterDatum(parity(bottom), bottom - half(static_cast<long>(n) + 1));
}

bool klingen_convergence(const Rational& s, std::size_t n, std::size_t j) {
  if (j < 1 || j > n) throw Error(Errc::IndexOutOfRange, "index j must lie in [1, n]");
  return s > static_cast<long>(n) - half(static_cast<long>(j) - 1);
}

bool gl_degenerate_convergence(const Rational& s, const Rational& t, std::size_t n) {
  return s - t > half(static_cast<long>(n));
}

}  // namespace sympl
