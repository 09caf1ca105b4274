#include <doctest.h>

#include "oracles.hpp"
#include "sympl/error.hpp"
#include "sympl/weights.hpp"

using namespace sympl;

namespace {

Weight w(std::string_view text) { return Weight::parse(text); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational(" 3 ") == 3);
  CHECK(parse_rational("-5/2") == fraction(-5, 2));
  CHECK(parse_rational("4/2") == 2);
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(code_of([] { parse_rational("6/-4"); }) == Errc::Parse);
  CHECK(code_of([] { parse_rational("1/0"); }) == Errc::Parse);
  CHECK(code_of([] { parse_rational("x"); }) == Errc::Parse);
  CHECK(code_of([] { parse_rational(""); }) == Errc::Parse);
  CHECK(parse_rational_list("1, -2,3/2").size() == 3);
  CHECK(parse_rational_list("").empty());
  CHECK(parity(Rational(-3)) == 1);
  CHECK(parity(Rational(-4)) == 0);
  CHECK(code_of([] { to_int64(fraction(1, 2)); }) == Errc::NonIntegral);
}

TEST_CASE("weight text format") {
  const Weight a = w("5,3;5,4");
  CHECK(a.places() == 2);
  CHECK(a.rank() == 2);
  CHECK(a.at(1, 1) == 4);
  CHECK(a.to_string() == "5,3;5,4");
  CHECK(Weight::parse(a.to_string()) == a);
  CHECK(w("5/2,3/2").at(0, 0) == fraction(5, 2));
  CHECK(code_of([] { w("5,7/2"); }) == Errc::NonIntegralDifference);
  CHECK(code_of([] { w("1/3"); }) == Errc::NotHalfIntegral);
  CHECK(code_of([] { w("1,2;3"); }) == Errc::ShapeMismatch);
  CHECK(code_of([] { w("1,,2"); }) == Errc::Parse);
}

TEST_CASE("rho") {
  CHECK(rho(1) == RationalVector{-1});
  CHECK(rho(3) == RationalVector{-1, -2, -3});
}

TEST_CASE("rho is half the sum of the positive roots") {
  // positive roots: -(e_i + e_j) for i <= j (long roots 2e_i included as i = j)
  // and e_k - e_l for k < l
  for (std::size_t n = 1; n <= 8; ++n) {
    RationalVector sum(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        sum[i] -= 1;
        sum[j] -= 1;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = k + 1; l < n; ++l) {
        sum[k] += 1;
        sum[l] -= 1;
      }
    }
    for (auto& x : sum) x /= 2;
    CHECK(sum == rho(n));
  }
}

TEST_CASE("dominance and integrality") {
  CHECK(is_k_dominant(w("5,3")));
  CHECK_FALSE(is_k_dominant(w("3,5")));
  CHECK(is_k_dominant(w("5,3;5,4")));
  CHECK(is_integral(w("5,3")));
  CHECK_FALSE(is_integral(w("5/2,3/2")));
  CHECK(is_k_dominant(w("5/2,3/2")));
}

TEST_CASE("parity class") {
  CHECK(parity_class(w("12,12")) == 1);
  CHECK(parity_class(w("11")) == -1);
  CHECK(code_of([] { parity_class(w("6,4;6,5")); }) == Errc::NonConstantBottomEntry);
  CHECK(code_of([] { parity_class(w("5/2,3/2")); }) == Errc::NonIntegral);

  oracle::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto row = rng.dominant_row(3, -10, 10);
    const int before = parity_class(Weight::single(row));
    row[2] -= 2 * rng.int_in(0, 5);
    CHECK(parity_class(Weight::single(row)) == before);
  }
}

TEST_CASE("holomorphy vanishing verdicts") {
  CHECK(holomorphy_vanishing(w("3,0")) == VanishingVerdict::NearlyHolomorphicSpaceVanishes);
  CHECK(holomorphy_vanishing(w("3,-1")) == VanishingVerdict::HolomorphicZeroOrConstant);
  CHECK(holomorphy_vanishing(w("3,1")) == VanishingVerdict::NoConclusion);
  CHECK(holomorphy_vanishing(w("0")) == VanishingVerdict::HolomorphicZeroOrConstant);
  CHECK(holomorphy_vanishing(w("0,0")) == VanishingVerdict::HolomorphicZeroOrConstant);
  CHECK(holomorphy_vanishing(w("4,2;3,0")) == VanishingVerdict::NearlyHolomorphicSpaceVanishes);
  CHECK(code_of([] { holomorphy_vanishing(w("1,3")); }) == Errc::NotDominant);
}

TEST_CASE("construction rejects non-lattice rows") {
  oracle::Rng rng(5);
  int accepted = 0;
  for (int trial = 0; trial < 500; ++trial) {
    RationalVector row;
    const auto n = static_cast<std::size_t>(rng.int_in(1, 4));
    for (std::size_t k = 0; k < n; ++k) row.push_back(rng.rational_in(-6, 6, 3));
    bool lattice = true;
    for (const auto& x : row) lattice = lattice && (x.get_den() == 1 || x.get_den() == 2);
    for (std::size_t k = 0; k + 1 < n; ++k) lattice = lattice && is_integer(Rational(row[k] - row[k + 1]));
    bool built = true;
    try {
      Weight::single(row);
    } catch (const Error&) {
      built = false;
    }
    CHECK(built == lattice);
    accepted += built;
  }
  CHECK(accepted > 0);
}
