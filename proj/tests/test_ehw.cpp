#include <doctest.h>

#include <algorithm>
#include <functional>

#include <iostream>

#include "sympl/ehw.hpp"
#include "sympl/error.hpp"

using namespace sympl;

namespace {

RationalVector v(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("normalization") {
  const auto a = ehw_normalize(v({4, 3, 3}));
  CHECK(a.base == v({4, 3, 3}));
  CHECK(a.r == 0);
  CHECK(a.p == 2);
  CHECK(a.q == 1);
  const auto b = ehw_normalize(v({0, 0}));
  CHECK(b.base == v({2, 2}));
  CHECK(b.r == 2);
  CHECK(b.p == 2);
  CHECK(b.q == 0);
  CHECK(ehw_normalize(v({2, 2})).r == 0);
  const auto c = ehw_normalize(RationalVector{fraction(7, 2), fraction(1, 2)});
  CHECK(c.base == v({5, 2}));
  CHECK(c.r == fraction(3, 2));
  CHECK_THROWS_AS(ehw_normalize(v({1, 2})), Error);
}

TEST_CASE("first reduction point") {
  CHECK(first_reduction_point(v({4, 3, 3})) == 2);
  CHECK(first_reduction_point(v({2, 2})) == fraction(3, 2));
  CHECK(first_reduction_point(v({1})) == 1);
  try {
    first_reduction_point(v({4, 4}));
    FAIL("expected BottomEntryNotRank");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BottomEntryNotRank);
  }
}

TEST_CASE("first reduction point ignores large top entries") {
  // Raising the rank by one: a new top entry above every old entry + 1 and
  // above n + 2 keeps p and q, once the old entries move up with n.
  for (long n = 1; n <= 4; ++n) {
    for (long top = 0; top <= 3; ++top) {
      for (long mid = 0; mid <= top; ++mid) {
        RationalVector base;
        for (long k = 0; k + 2 < n; ++k) base.emplace_back(n + top);
        if (n >= 2) base.emplace_back(n + mid);
        base.emplace_back(n);
        const Rational r0 = first_reduction_point(base);
        for (long extra = n + 3; extra <= n + 6; ++extra) {
          RationalVector grown{Rational(std::max(extra, n + top + 2))};
          for (const auto& x : base) grown.push_back(x + 1);
          CHECK(first_reduction_point(grown) == r0);
        }
      }
    }
  }
}

TEST_CASE("unitarity") {
  CHECK(is_unitary_highest_weight(v({2, 2})));
  CHECK(is_unitary_highest_weight(v({0, 0})));
  CHECK_FALSE(is_unitary_highest_weight(v({-1, -1})));
  CHECK(second_unitarity_bound(2, 0) == 2);
  CHECK(second_unitarity_bound(1, 1) == fraction(3, 2));
}

TEST_CASE("unitarity for positive bottom entry, reported") {
  // Counterexamples to "bottom entry >= 1 implies unitary" are printed, not
  // asserted; see README.
  std::size_t total = 0;
  std::size_t failures = 0;
  std::string first;
  for (long n = 1; n <= 4; ++n) {
    std::vector<long> cur(static_cast<std::size_t>(n), 1);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long cap) {
      if (pos == cur.size()) {
        const RationalVector row(cur.begin(), cur.end());
        ++total;
        if (!is_unitary_highest_weight(row)) {
          if (failures++ == 0) first = to_string(row);
        }
        return;
      }
      for (long x = 1; x <= cap; ++x) {
        cur[pos] = x;
        rec(pos + 1, x);
      }
    };
    rec(0, 8);
  }
  MESSAGE("positive bottom entry: " << failures << " of " << total << " not unitary; first " << first);
  CHECK(total > 0);
}
