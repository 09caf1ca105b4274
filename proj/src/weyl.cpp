#include "sympl/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "sympl/error.hpp"

namespace sympl {
namespace {

void check_rank(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error(Errc::RankMismatch, "rank " + std::to_string(expected) + " vs " + std::to_string(got));
  }
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(Errc::RankTooLarge,
                "rank " + std::to_string(n) + " exceeds the orbit enumeration cap " + std::to_string(cap));
  }
}

RationalVector shifted(std::span<const Rational> lambda) {
  RationalVector out(lambda.begin(), lambda.end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= static_cast<long>(k + 1);
  return out;
}

}  // namespace

std::size_t orbit_cap_from_env() {
  if (const char* raw = std::getenv("SYMPL_ORBIT_CAP")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) return value;
  }
  return kDefaultOrbitCap;
}

WeylElement::WeylElement(std::vector<std::size_t> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  check_rank(perm_.size(), signs_.size());
  std::vector<bool> seen(perm_.size(), false);
  for (auto p : perm_) {
    if (p >= perm_.size() || seen[p]) throw Error(Errc::InvalidArgument, "not a permutation");
    seen[p] = true;
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw Error(Errc::InvalidArgument, "signs must be +1 or -1");
  }
}

WeylElement WeylElement::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return WeylElement(std::move(perm), std::vector<int>(n, 1));
}

WeylElement WeylElement::transposition(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (a >= n || b >= n) throw Error(Errc::IndexOutOfRange, "transposition index out of range");
  std::swap(perm[a], perm[b]);
  return WeylElement(std::move(perm), std::vector<int>(n, 1));
}

WeylElement WeylElement::sign_flip(std::size_t n, std::size_t position) {
  if (position >= n) throw Error(Errc::IndexOutOfRange, "sign flip position out of range");
  auto w = identity(n);
  w.signs_[position] = -1;
  return w;
}

WeylElement WeylElement::inverse() const {
  const std::size_t n = rank();
  std::vector<std::size_t> inv(n);
  std::vector<int> signs(n);
  for (std::size_t j = 0; j < n; ++j) inv[perm_[j]] = j;
  for (std::size_t i = 0; i < n; ++i) signs[i] = signs_[perm_[i]];
  return WeylElement(std::move(inv), std::move(signs));
}

bool WeylElement::is_identity() const { return *this == identity(rank()); }

WeylElement compose(const WeylElement& w1, const WeylElement& w2) {
  check_rank(w1.rank(), w2.rank());
  const std::size_t n = w1.rank();
  const auto inv1 = w1.inverse().perm();
  std::vector<std::size_t> perm(n);
  std::vector<int> signs(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = w1.perm()[w2.perm()[j]];
  for (std::size_t i = 0; i < n; ++i) signs[i] = w1.signs()[i] * w2.signs()[inv1[i]];
  return WeylElement(std::move(perm), std::move(signs));
}

RationalVector act(const WeylElement& w, std::span<const Rational> x) {
  check_rank(w.rank(), x.size());
  RationalVector out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const std::size_t i = w.perm()[j];
    out[i] = w.signs()[i] > 0 ? x[j] : Rational(-x[j]);
  }
  return out;
}

RationalVector dot_act(const WeylElement& w, std::span<const Rational> lambda) {
  check_rank(w.rank(), lambda.size());
  auto out = act(w, shifted(lambda));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += static_cast<long>(k + 1);
  return out;
}

std::vector<WeylElement> enumerate_weyl(std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  std::vector<WeylElement> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  const std::size_t masks = std::size_t{1} << n;
  do {
    for (std::size_t mask = 0; mask < masks; ++mask) {
      std::vector<int> signs(n);
      for (std::size_t i = 0; i < n; ++i) signs[i] = (mask >> i) & 1U ? -1 : 1;
      out.emplace_back(perm, std::move(signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

RationalVector infchar_canonical_row(std::span<const Rational> lambda) {
  auto p = shifted(lambda);
  for (auto& x : p) x = abs(x);
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

InfChar infchar_canonical(const Weight& lambda) {
  InfChar out{lambda.rank(), lambda.places(), {}};
  for (std::size_t v = 0; v < lambda.places(); ++v) out.canonical.push_back(infchar_canonical_row(lambda.row(v)));
  return out;
}

bool infchar_equal(const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != mu.rank() || lambda.places() != mu.places()) {
    throw Error(Errc::ShapeMismatch, "weights " + lambda.to_string() + " and " + mu.to_string() + " differ in shape");
  }
  return infchar_canonical(lambda) == infchar_canonical(mu);
}

bool is_regular(const Weight& lambda) {
  const auto chi = infchar_canonical(lambda);
  for (const auto& row : chi.canonical) {
    if (row.back() == 0) return false;
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
  }
  return true;
}

std::vector<RationalVector> dominant_orbit_row(std::span<const Rational> lambda, std::size_t cap) {
  const std::size_t n = lambda.size();
  check_cap(n, cap);
  // Every orbit element is a rearrangement of a sign pattern applied to
  // |lambda + rho|; the dominant ones are the strictly decreasing arrangements.
  const auto magnitudes = infchar_canonical_row(lambda);
  std::set<RationalVector, std::greater<>> found;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RationalVector p = magnitudes;
    for (std::size_t k = 0; k < n; ++k) {
      if ((mask >> k) & 1U) p[k] = -p[k];
    }
    std::sort(p.begin(), p.end(), std::greater<>());
    if (std::adjacent_find(p.begin(), p.end()) != p.end()) continue;
    for (std::size_t k = 0; k < n; ++k) p[k] += static_cast<long>(k + 1);
    found.insert(std::move(p));
  }
  return {found.begin(), found.end()};
}

std::vector<Weight> dominant_orbit_elements(const Weight& lambda, std::size_t cap) {
  std::vector<std::vector<RationalVector>> per_place;
  for (std::size_t v = 0; v < lambda.places(); ++v) per_place.push_back(dominant_orbit_row(lambda.row(v), cap));

  std::vector<Weight> out;
  for (const auto& rows : per_place) {
    if (rows.empty()) return out;
  }
  std::vector<std::size_t> index(per_place.size(), 0);
  while (true) {
    std::vector<RationalVector> rows;
    for (std::size_t v = 0; v < per_place.size(); ++v) rows.push_back(per_place[v][index[v]]);
    out.emplace_back(std::move(rows));
    std::size_t v = per_place.size();
    while (v > 0) {
      --v;
      if (++index[v] < per_place[v].size()) break;
      index[v] = 0;
      if (v == 0) return out;
    }
  }
}

bool is_sufficiently_regular(const Weight& lambda, std::size_t i, std::size_t cap) {
  const std::size_t n = lambda.rank();
  if (i < 1 || i > n) throw Error(Errc::IndexOutOfRange, "parabolic index must lie in [1, n]");
  if (!is_integral(lambda)) throw Error(Errc::NonIntegral, "weight " + lambda.to_string() + " is not integral");
  const long threshold = static_cast<long>(2 * n - i + 1);
  // Places are independent, so the cross product has a qualifying element
  // iff every place does.
  for (std::size_t v = 0; v < lambda.places(); ++v) {
    const auto rows = dominant_orbit_row(lambda.row(v), cap);
    const bool any = std::any_of(rows.begin(), rows.end(), [&](const RationalVector& r) { return r.back() > threshold; });
    if (!any) return false;
  }
  return true;
}

bool orbit_dichotomy_check(const Weight& lambda, std::size_t cap) {
  const std::size_t n = lambda.rank();
  if (!is_integral(lambda) || !is_k_dominant(lambda)) {
    throw Error(Errc::HypothesisViolated, "weight " + lambda.to_string() + " must be k-dominant and integral");
  }
  for (std::size_t v = 0; v < lambda.places(); ++v) {
    if (lambda.bottom(v) <= static_cast<long>(2 * n)) {
      throw Error(Errc::HypothesisViolated, "bottom entry " + to_string(lambda.bottom(v)) + " is not > 2n");
    }
  }
  for (const auto& omega : dominant_orbit_elements(lambda, cap)) {
    if (omega == lambda) continue;
    bool negative = false;
    for (std::size_t v = 0; v < omega.places(); ++v) negative = negative || omega.bottom(v) < 0;
    if (!negative) return false;
  }
  return true;
}

}  // namespace sympl
