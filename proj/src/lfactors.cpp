#include "sympl/lfactors.hpp"

#include <algorithm>

#include "sympl/error.hpp"

namespace sympl {
namespace {

LaurentPoly product(const std::vector<LaurentPoly>& factors) {
  LaurentPoly out(1L);
  for (const auto& f : factors) out *= f;
  return out;
}

// Removes the multiset intersection of a and b from both; inputs sorted.
void cancel_common(std::vector<LaurentPoly>& a, std::vector<LaurentPoly>& b) {
  std::vector<LaurentPoly> ra;
  std::vector<LaurentPoly> rb;
  std::size_t x = 0;
  std::size_t y = 0;
  while (x < a.size() && y < b.size()) {
    if (a[x] == b[y]) {
      ++x;
      ++y;
    } else if (a[x] < b[y]) {
      ra.push_back(std::move(a[x++]));
    } else {
      rb.push_back(std::move(b[y++]));
    }
  }
  for (; x < a.size(); ++x) ra.push_back(std::move(a[x]));
  for (; y < b.size(); ++y) rb.push_back(std::move(b[y]));
  a = std::move(ra);
  b = std::move(rb);
}

LaurentPoly one_minus(const LaurentPoly& monomial_term) { return LaurentPoly(1L) - monomial_term; }

}  // namespace

RationalFunction::RationalFunction(const LaurentPoly& numerator) : num_{numerator} { normalize(); }

RationalFunction::RationalFunction(std::vector<LaurentPoly> numerator_factors,
                                   std::vector<LaurentPoly> denominator_factors, Rational scale)
    : scale_(std::move(scale)), num_(std::move(numerator_factors)), den_(std::move(denominator_factors)) {
  normalize();
}

void RationalFunction::normalize() {
  for (const auto& f : den_) {
    if (f.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator factor");
  }
  // Constant factors fold into the scale.
  auto fold = [this](std::vector<LaurentPoly>& factors, bool numerator) {
    std::vector<LaurentPoly> kept;
    for (auto& f : factors) {
      if (f.is_constant()) {
        const Rational c = f.constant_term();
        if (numerator) {
          scale_ *= c;
        } else {
          scale_ /= c;
        }
      } else {
        kept.push_back(std::move(f));
      }
    }
    factors = std::move(kept);
  };
  fold(num_, true);
  fold(den_, false);
  if (scale_ == 0) {
    num_.clear();
    den_.clear();
    return;
  }
  std::sort(num_.begin(), num_.end());
  std::sort(den_.begin(), den_.end());
  cancel_common(num_, den_);
}

LaurentPoly RationalFunction::numerator() const { return product(num_) * LaurentPoly(scale_); }

LaurentPoly RationalFunction::denominator() const { return product(den_); }

RationalFunction RationalFunction::inverse() const {
  if (scale_ == 0) throw Error(Errc::DivisionByZero, "inverse of the zero function");
  return RationalFunction(den_, num_, Rational(1 / scale_));
}

RationalFunction RationalFunction::invert_symbol(std::string_view name) const {
  std::vector<LaurentPoly> num;
  std::vector<LaurentPoly> den;
  for (const auto& f : num_) num.push_back(f.invert_symbol(name));
  for (const auto& f : den_) den.push_back(f.invert_symbol(name));
  return RationalFunction(std::move(num), std::move(den), scale_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  auto num = a.num_;
  auto den = a.den_;
  num.insert(num.end(), b.num_.begin(), b.num_.end());
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  return RationalFunction(std::move(num), std::move(den), a.scale_ * b.scale_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

bool products_equal(std::vector<LaurentPoly> lhs, std::vector<LaurentPoly> rhs) {
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  cancel_common(lhs, rhs);
  return product(lhs) == product(rhs);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  // a.scale * a.num * b.den == b.scale * b.num * a.den
  auto lhs = a.num_;
  lhs.insert(lhs.end(), b.den_.begin(), b.den_.end());
  lhs.emplace_back(a.scale_);
  auto rhs = b.num_;
  rhs.insert(rhs.end(), a.den_.begin(), a.den_.end());
  rhs.emplace_back(b.scale_);
  return products_equal(std::move(lhs), std::move(rhs));
}

bool RationalFunction::same_factors(const RationalFunction& other) const {
  return scale_ == other.scale_ && num_ == other.num_ && den_ == other.den_;
}

std::string RationalFunction::to_string() const {
  auto side = [](const std::vector<LaurentPoly>& factors) {
    std::string out;
    for (const auto& f : factors) {
      if (!out.empty()) out += "*";
      out += f.size() > 1 ? "(" + f.to_string() + ")" : f.to_string();
    }
    return out;
  };
  std::string top = side(num_);
  if (scale_ != 1 || top.empty()) {
    const std::string s = scale_.get_str();
    top = top.empty() ? s : s + "*" + top;
  }
  if (den_.empty()) return top;
  const std::string bottom = side(den_);
  return top + "/" + (den_.size() > 1 ? "(" + bottom + ")" : bottom);
}

SatakeDatum SatakeDatum::symbolic(std::size_t m) { return SatakeDatum{std::vector<std::optional<Rational>>(m), std::nullopt}; }

LaurentPoly SatakeDatum::param(std::size_t k) const {
  if (k < 1 || k > params.size()) throw Error(Errc::IndexOutOfRange, "Satake parameter index out of range");
  const auto& p = params[k - 1];
  if (!p) return LaurentPoly::symbol("b" + std::to_string(k));
  if (*p == 0) throw Error(Errc::InvalidArgument, "Satake parameters must be nonzero");
  return LaurentPoly(*p);
}

LaurentPoly SatakeDatum::param_inverse(std::size_t k) const {
  const LaurentPoly b = param(k);
  if (!params[k - 1]) return b.invert_symbol("b" + std::to_string(k));
  return LaurentPoly(Rational(1 / *params[k - 1]));
}

LaurentPoly SatakeDatum::character_power(unsigned power) const {
  if (!character) return LaurentPoly::symbol("X", static_cast<int>(power));
  if (*character != 1 && *character != -1) throw Error(Errc::InvalidArgument, "character value must be +1 or -1");
  return LaurentPoly(power % 2 == 0 ? 1L : static_cast<long>(*character));
}

RationalFunction abelian_L(const Rational& shift, unsigned twist, const SatakeDatum& satake) {
  if (twist != 1 && twist != 2) throw Error(Errc::InvalidArgument, "twist power must be 1 or 2");
  const Rational q_exponent = -2 * shift;
  if (!is_integer(q_exponent)) throw Error(Errc::NotHalfIntegral, "L-factor shift must be a half-integer");
  const auto e = static_cast<int>(to_int64(q_exponent));
  const LaurentPoly term =
      satake.character_power(twist) * LaurentPoly::symbol("Q", e) * LaurentPoly::symbol("T", static_cast<int>(twist));
  return RationalFunction({}, {one_minus(term)});
}

RationalFunction standard_L(const Rational& shift, const SatakeDatum& satake) {
  const Rational q_exponent = -2 * shift;
  if (!is_integer(q_exponent)) throw Error(Errc::NotHalfIntegral, "L-factor shift must be a half-integer");
  const LaurentPoly core = satake.character_power(1) *
                           LaurentPoly::symbol("Q", static_cast<int>(to_int64(q_exponent))) * LaurentPoly::symbol("T");
  std::vector<LaurentPoly> den{one_minus(core)};
  // s - alpha_k multiplies q^{-s} by q^{alpha_k} = b_k, s + alpha_k by b_k^{-1}.
  for (std::size_t k = 1; k <= satake.m(); ++k) {
    den.push_back(one_minus(core * satake.param(k)));
    den.push_back(one_minus(core * satake.param_inverse(k)));
  }
  return RationalFunction({}, std::move(den));
}

RationalFunction xi(std::size_t i, const SatakeDatum& satake, const Rational& shift) {
  RationalFunction out;
  const auto ii = static_cast<long>(i);
  for (long l = 1; l <= ii; ++l) out = out * standard_L(shift + l - fraction(ii + 1, 2), satake);
  for (long p = 1; p <= ii; ++p) {
    for (long q = p + 1; q <= ii; ++q) out = out * abelian_L(2 * shift - ii - 1 + p + q, 2, satake);
  }
  return out;
}

RationalFunction gk_value(std::size_t i, std::size_t j, const SatakeDatum& satake) {
  if (j > i) throw Error(Errc::IndexOutOfRange, "gk_value needs 0 <= j <= i");
  const Rational offset = fraction(static_cast<long>(i - j), 2);
  return xi(j, satake, offset) / xi(j, satake, offset + 1);
}

Rational evaluate(const RationalFunction& f, const std::map<std::string, Rational>& assignment) {
  Rational den = 1;
  for (const auto& factor : f.denominator_factors()) den *= factor.evaluate(assignment);
  if (den == 0) throw Error(Errc::PoleAtPoint, "denominator vanishes at the given point");
  Rational num = f.scale();
  for (const auto& factor : f.numerator_factors()) num *= factor.evaluate(assignment);
  return num / den;
}

}  // namespace sympl
