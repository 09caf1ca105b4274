#include "sympl/orbitclassify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sympl/error.hpp"

namespace sympl {
namespace {

void check_index(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw Error(Errc::IndexOutOfRange, "parabolic index must lie in [1, n]");
}

void check_inner(std::span<const Rational> inner, std::size_t n, std::size_t i) {
  if (inner.size() != n - i) {
    throw Error(Errc::LengthMismatch, "inner weight must have length n - i = " + std::to_string(n - i));
  }
  if (inner.empty()) return;
  if (!is_integral(inner) || !is_k_dominant(inner)) {
    throw Error(Errc::NotDominant, "inner weight " + to_string(inner) + " must be k-dominant and integral");
  }
  if (inner.back() < 0) throw Error(Errc::NotDominant, "inner weight bottom entry must be non-negative");
}

bool in_y(std::int64_t s, std::size_t n, std::size_t i) {
  const auto two_n = static_cast<std::int64_t>(2 * n);
  const auto ii = static_cast<std::int64_t>(i);
  // s <= n - (i-1)/2  <=>  2s <= 2n - i + 1
  return 2 * s <= two_n - ii + 1 || s >= two_n - ii + 2;
}

bool tail_constant(std::span<const Rational> row, std::size_t i) {
  const std::size_t n = row.size();
  for (std::size_t k = n - i; k < n; ++k) {
    if (row[k] != row[n - 1]) return false;
  }
  return true;
}

}  // namespace

RationalVector hc_parameter(std::span<const Rational> inner, const Rational& s, std::size_t n, std::size_t i) {
  check_index(n, i);
  if (inner.size() != n - i) throw Error(Errc::LengthMismatch, "inner weight must have length n - i");
  RationalVector out = rho(n);
  for (std::size_t k = 0; k < n; ++k) out[k] += k < inner.size() ? inner[k] : s;
  return out;
}

OrbitClassification classify_levels_up_to(std::span<const Rational> inner, std::size_t n, std::size_t i,
                                          std::int64_t upper) {
  check_index(n, i);
  check_inner(inner, n, i);
  if (upper < 0) throw Error(Errc::InvalidArgument, "upper end of the level range must be non-negative");

  OrbitClassification out;
  out.n = n;
  out.i = i;
  // hc_parameter is rho + weight, so its canonical form is the sorted
  // absolute values of the parameter itself.
  std::map<RationalVector, std::vector<std::int64_t>> by_character;
  for (std::int64_t s = 0; s <= upper; ++s) {
    out.x.push_back(s);
    if (in_y(s, n, i)) out.y.push_back(s);
    auto key = hc_parameter(inner, Rational(static_cast<long>(s)), n, i);
    for (auto& e : key) e = abs(e);
    std::sort(key.begin(), key.end(), std::greater<>());
    by_character[key].push_back(s);
  }
  for (auto& [key, members] : by_character) out.classes.push_back(std::move(members));
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  const std::set<std::int64_t> y(out.y.begin(), out.y.end());
  out.bijective = std::all_of(out.classes.begin(), out.classes.end(), [&](const auto& cls) {
    return std::count_if(cls.begin(), cls.end(), [&](std::int64_t s) { return y.count(s) > 0; }) == 1;
  });
  return out;
}

OrbitClassification classify_levels(std::span<const Rational> inner, std::size_t n, std::size_t i) {
  check_index(n, i);
  if (i >= n) {
    throw Error(Errc::IndexOutOfRange, "levels are bounded by inner_{n-i}, which needs i < n; "
                                       "use classify_levels_up_to for i = n");
  }
  check_inner(inner, n, i);
  return classify_levels_up_to(inner, n, i, to_int64(inner.back()));
}

bool duality_check(std::span<const Rational> inner, std::size_t n, std::size_t i, const Rational& s) {
  check_index(n, i);
  check_inner(inner, n, i);
  const Rational dual = static_cast<long>(2 * n - i + 1) - s;
  auto a = hc_parameter(inner, s, n, i);
  auto b = hc_parameter(inner, dual, n, i);
  for (auto* v : {&a, &b}) {
    for (auto& e : *v) e = abs(e);
    std::sort(v->begin(), v->end(), std::greater<>());
  }
  return a == b;
}

std::vector<Weight> theorem_main_necessary(const Weight& lambda, std::size_t i, std::size_t cap) {
  check_index(lambda.rank(), i);
  if (!is_integral(lambda)) throw Error(Errc::NonIntegral, "weight " + lambda.to_string() + " is not integral");
  std::vector<Weight> out;
  for (auto& omega : dominant_orbit_elements(lambda, cap)) {
    bool ok = bottom_constant_across_places(omega);
    for (std::size_t v = 0; ok && v < omega.places(); ++v) ok = tail_constant(omega.row(v), i);
    if (ok) out.push_back(std::move(omega));
  }
  return out;
}

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::IsotypicDescription: return "IsotypicDescription";
    case Conclusion::VanishesWrongParity: return "VanishesWrongParity";
    case Conclusion::HypothesesFail: return "HypothesesFail";
  }
  return "";
}

bool DecompositionReport::all_passed() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const HypothesisCheck& h) { return h.passed; });
}

DecompositionReport decomposition_report(const Weight& lambda, std::size_t i, std::optional<int> character_sign,
                                         std::size_t cap) {
  const std::size_t n = lambda.rank();
  check_index(n, i);
  if (character_sign && *character_sign != 1 && *character_sign != -1) {
    throw Error(Errc::InvalidArgument, "character sign must be +1 or -1");
  }

  DecompositionReport report(lambda);
  report.n = n;
  report.d = lambda.places();
  report.i = i;
  report.character_sign = character_sign;

  const bool dominant_integral = is_integral(lambda) && is_k_dominant(lambda);
  bool tails = true;
  for (std::size_t v = 0; v < lambda.places(); ++v) tails = tails && tail_constant(lambda.row(v), i);
  const bool bottom_constant = bottom_constant_across_places(lambda);
  const bool suff_regular = dominant_integral && is_sufficiently_regular(lambda, i, cap);
  bool inner_bound = true;
  if (i < n) {
    const long threshold = static_cast<long>(2 * n - i + 1);
    for (std::size_t v = 0; v < lambda.places(); ++v) inner_bound = inner_bound && lambda.at(v, n - i - 1) > threshold;
  }

  report.hypotheses = {
      {"k_dominant_integral", dominant_integral},
      {"tail_constant", tails},
      {"bottom_entry_constant_across_places", bottom_constant},
      {"sufficiently_regular", suff_regular},
      {"inner_weight_bound", inner_bound},
  };
  report.assumptions = {
      "an irreducible holomorphic cuspidal representation pi of G_{n-i} with archimedean component "
      "the tensor product of L(lambda_{1,v},...,lambda_{n-i,v}) is given; its existence is not verified",
  };

  if (is_integral(lambda) && bottom_constant) {
    report.parity_class = parity_class(lambda);
    report.exponent = lambda.bottom(0) - static_cast<long>(n) + fraction(static_cast<long>(i) - 1, 2);
  }
  for (std::size_t v = 0; v < lambda.places(); ++v) {
    auto row = lambda.row(v);
    report.inner_weights.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n - i));
  }

  if (!report.all_passed()) {
    report.conclusion = Conclusion::HypothesesFail;
  } else if (character_sign && *character_sign != *report.parity_class) {
    report.conclusion = Conclusion::VanishesWrongParity;
  } else {
    report.conclusion = Conclusion::IsotypicDescription;
  }
  return report;
}

bool is_squarefree(std::uint64_t value) {
  if (value == 0) throw Error(Errc::InvalidArgument, "square-freeness is defined for positive integers");
  // Strip every prime up to the cube root; what remains has at most two
  // prime factors and is square-free unless it is a prime square.
  std::uint64_t m = value;
  for (std::uint64_t p = 2; p * p <= value / p; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return false;
  }
  if (m == 1) return true;
  mpz_class z(static_cast<unsigned long>(m));
  return mpz_perfect_square_p(z.get_mpz_t()) == 0;
}

std::string_view to_string(SurjectivityTag tag) {
  return tag == SurjectivityTag::SurjectiveByTheorem ? "SurjectiveByTheorem" : "NotCovered";
}

namespace {

SurjectivityVerdict surjectivity_with(const Weight& lambda, bool squarefree) {
  const std::size_t n = lambda.rank();
  if (n == 1) throw Error(Errc::RankOne, "the Siegel operator needs n > 1");
  if (!is_integral(lambda)) throw Error(Errc::NonIntegral, "weight " + lambda.to_string() + " is not integral");
  if (!is_k_dominant(lambda)) throw Error(Errc::NotDominant, "weight " + lambda.to_string() + " is not k-dominant");

  bool exceeds = true;
  bool tail_equal = true;
  bool second_constant = true;
  for (std::size_t v = 0; v < lambda.places(); ++v) {
    exceeds = exceeds && lambda.bottom(v) > static_cast<long>(2 * n);
    tail_equal = tail_equal && lambda.at(v, n - 2) == lambda.bottom(v);
    second_constant = second_constant && lambda.at(v, n - 2) == lambda.at(0, n - 2);
  }

  SurjectivityVerdict verdict;
  if (!squarefree) verdict.failed_conditions.emplace_back("level_squarefree");
  if (!exceeds) verdict.failed_conditions.emplace_back("bottom_entry_exceeds_2n");
  if (!bottom_constant_across_places(lambda)) verdict.failed_conditions.emplace_back("bottom_entry_constant_across_places");
  if (!(tail_equal || !second_constant)) verdict.failed_conditions.emplace_back("weight_alternative");
  verdict.tag = verdict.failed_conditions.empty() ? SurjectivityTag::SurjectiveByTheorem : SurjectivityTag::NotCovered;
  return verdict;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

}  // namespace

SurjectivityVerdict siegel_surjectivity_check(const Weight& lambda, std::uint64_t level) {
  return surjectivity_with(lambda, is_squarefree(level));
}

SurjectivityVerdict siegel_surjectivity_check(const Weight& lambda, std::span<const std::uint64_t> level_primes) {
  for (auto p : level_primes) {
    if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not a prime");
  }
  std::set<std::uint64_t> distinct(level_primes.begin(), level_primes.end());
  return surjectivity_with(lambda, distinct.size() == level_primes.size());
}

}  // namespace sympl
