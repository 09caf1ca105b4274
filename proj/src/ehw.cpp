#include "sympl/ehw.hpp"

#include <algorithm>

#include "sympl/error.hpp"
#include "sympl/weights.hpp"

namespace sympl {
namespace {

std::size_t count_equal(std::span<const Rational> v, long value) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [&](const Rational& x) { return x == value; }));
}

bool is_half_integral(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1 || x.get_den() == 2; });
}

}  // namespace

EhwProfile ehw_normalize(std::span<const Rational> lambda) {
  check_weight_row(lambda);
  if (!is_k_dominant(lambda)) throw Error(Errc::NotDominant, to_string(lambda) + " is not k-dominant");
  const long n = static_cast<long>(lambda.size());
  EhwProfile out;
  out.r = n - lambda.back();
  out.base.assign(lambda.begin(), lambda.end());
  for (auto& x : out.base) x += out.r;
  out.p = count_equal(out.base, n);
  out.q = count_equal(out.base, n + 1);
  return out;
}

Rational first_reduction_point(std::span<const Rational> base) {
  check_weight_row(base);
  if (!is_k_dominant(base)) throw Error(Errc::NotDominant, to_string(base) + " is not k-dominant");
  const long n = static_cast<long>(base.size());
  if (base.back() != n) {
    throw Error(Errc::BottomEntryNotRank, "bottom entry of " + to_string(base) + " must equal " + std::to_string(n));
  }
  const auto p = static_cast<long>(count_equal(base, n));
  const auto q = static_cast<long>(count_equal(base, n + 1));
  return fraction(p + q + 1, 2);
}

Rational second_unitarity_bound(std::size_t p, std::size_t q) {
  return Rational(static_cast<long>(p)) + fraction(static_cast<long>(q), 2);
}

bool is_unitary_highest_weight(std::span<const Rational> lambda) {
  const auto profile = ehw_normalize(lambda);
  if (profile.r <= first_reduction_point(profile.base)) return true;
  return is_half_integral(profile.base) && profile.r <= second_unitarity_bound(profile.p, profile.q);
}

}  // namespace sympl
