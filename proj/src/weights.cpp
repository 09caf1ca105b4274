#include "sympl/weights.hpp"

#include <algorithm>

#include "sympl/error.hpp"

namespace sympl {

void check_weight_row(std::span<const Rational> row) {
  if (row.empty()) throw Error(Errc::InvalidArgument, "weight rank must be at least 1");
  for (const auto& x : row) {
    if (x.get_den() != 1 && x.get_den() != 2) {
      throw Error(Errc::NotHalfIntegral, "weight entry " + sympl::to_string(x) + " is not a half-integer");
    }
  }
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    if (!is_integer(Rational(row[i] - row[i + 1]))) {
      throw Error(Errc::NonIntegralDifference,
                  "entries " + sympl::to_string(row[i]) + " and " + sympl::to_string(row[i + 1]) +
                      " differ by a non-integer");
    }
  }
}

Weight::Weight(std::vector<RationalVector> rows) {
  if (rows.empty()) throw Error(Errc::InvalidArgument, "a weight needs at least one place");
  places_ = rows.size();
  rank_ = rows.front().size();
  entries_.reserve(places_ * rank_);
  for (const auto& r : rows) {
    if (r.size() != rank_) throw Error(Errc::ShapeMismatch, "all places must have the same rank");
    check_weight_row(r);
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Weight Weight::single(RationalVector row) { return Weight(std::vector<RationalVector>{std::move(row)}); }

Weight Weight::parse(std::string_view text) {
  std::vector<RationalVector> rows;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    rows.push_back(parse_rational_list(text.substr(start, semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return Weight(std::move(rows));
}

std::vector<RationalVector> Weight::rows() const {
  std::vector<RationalVector> out;
  for (std::size_t v = 0; v < places_; ++v) {
    auto r = row(v);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

bool Weight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x == 0; });
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t v = 0; v < places_; ++v) {
    if (v) out += ";";
    for (std::size_t i = 0; i < rank_; ++i) {
      if (i) out += ",";
      out += at(v, i).get_str();
    }
  }
  return out;
}

RationalVector rho(std::size_t n) {
  RationalVector out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) out.emplace_back(-static_cast<long>(k));
  return out;
}

bool is_k_dominant(std::span<const Rational> row) {
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    Rational diff = row[i] - row[i + 1];
    if (!is_integer(diff) || diff < 0) return false;
  }
  return true;
}

bool is_k_dominant(const Weight& weight) {
  for (std::size_t v = 0; v < weight.places(); ++v) {
    if (!is_k_dominant(weight.row(v))) return false;
  }
  return true;
}

bool is_integral(std::span<const Rational> row) {
  return std::all_of(row.begin(), row.end(), [](const Rational& x) { return is_integer(x); });
}

bool is_integral(const Weight& weight) {
  for (std::size_t v = 0; v < weight.places(); ++v) {
    if (!is_integral(weight.row(v))) return false;
  }
  return true;
}

bool bottom_constant_across_places(const Weight& weight) {
  for (std::size_t v = 1; v < weight.places(); ++v) {
    if (weight.bottom(v) != weight.bottom(0)) return false;
  }
  return true;
}

int parity_class(const Weight& weight) {
  if (!is_integral(weight)) throw Error(Errc::NonIntegral, "weight " + weight.to_string() + " is not integral");
  if (!bottom_constant_across_places(weight)) {
    throw Error(Errc::NonConstantBottomEntry, "bottom entry of " + weight.to_string() + " varies with the place");
  }
  return parity(weight.bottom(0)) == 0 ? 1 : -1;
}

std::string_view to_string(VanishingVerdict verdict) {
  switch (verdict) {
    case VanishingVerdict::NearlyHolomorphicSpaceVanishes: return "NearlyHolomorphicSpaceVanishes";
    case VanishingVerdict::HolomorphicZeroOrConstant: return "HolomorphicZeroOrConstant";
    case VanishingVerdict::NoConclusion: return "NoConclusion";
  }
  return "";
}

VanishingVerdict holomorphy_vanishing(const Weight& weight) {
  if (!is_integral(weight)) throw Error(Errc::NonIntegral, "weight " + weight.to_string() + " is not integral");
  if (!is_k_dominant(weight)) throw Error(Errc::NotDominant, "weight " + weight.to_string() + " is not k-dominant");
  bool some_zero = false;
  bool some_nonpositive = false;
  for (std::size_t v = 0; v < weight.places(); ++v) {
    some_zero = some_zero || weight.bottom(v) == 0;
    some_nonpositive = some_nonpositive || weight.bottom(v) <= 0;
  }
  // Rank one never takes the first verdict.
  if (weight.rank() > 1 && !weight.is_zero() && some_zero) {
    return VanishingVerdict::NearlyHolomorphicSpaceVanishes;
  }
  if (some_nonpositive) return VanishingVerdict::HolomorphicZeroOrConstant;
  return VanishingVerdict::NoConclusion;
}

}  // namespace sympl
