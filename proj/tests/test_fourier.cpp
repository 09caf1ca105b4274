#include <doctest.h>

#include "oracles.hpp"
#include "sympl/error.hpp"
#include "sympl/fourier.hpp"

using namespace sympl;

namespace {

SymMatrix s(std::string_view upper) { return SymMatrix::parse_upper(upper); }
Matrix m(std::string_view text) { return Matrix::parse(text); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

oracle::Square square(const SymMatrix& h) {
  oracle::Square a(h.size(), RationalVector(h.size()));
  for (std::size_t r = 0; r < h.size(); ++r) {
    for (std::size_t c = 0; c < h.size(); ++c) a[r][c] = h(r, c);
  }
  return a;
}

// Every symmetric matrix of the given size with entries in [lo, hi].
template <class F>
void for_each_sym(std::size_t n, long lo, long hi, F&& f) {
  const std::size_t count = n * (n + 1) / 2;
  std::vector<long> digits(count, lo);
  while (true) {
    f(SymMatrix::from_upper(n, RationalVector(digits.begin(), digits.end())));
    std::size_t k = 0;
    while (k < count && digits[k] == hi) digits[k++] = lo;
    if (k == count) return;
    ++digits[k];
  }
}

SymMatrix random_sym(oracle::Rng& rng, std::size_t n, long lo, long hi) {
  RationalVector upper;
  for (std::size_t k = 0; k < n * (n + 1) / 2; ++k) upper.emplace_back(rng.int_in(lo, hi));
  return SymMatrix::from_upper(n, upper);
}

// tA A for a random integer A: always positive semidefinite.
SymMatrix gram(oracle::Rng& rng, std::size_t n) {
  Matrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.int_in(-2, 2);
  }
  return SymMatrix(a.transpose() * a);
}

Matrix random_invertible(oracle::Rng& rng, std::size_t n) {
  while (true) {
    Matrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.rational_in(-3, 3, 2);
    }
    if (a.determinant() != 0) return a;
  }
}

Matrix random_unimodular(oracle::Rng& rng, std::size_t n) {
  Matrix a = Matrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    const auto r = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(n) - 1));
    const auto c = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(n) - 1));
    Matrix e = Matrix::identity(n);
    if (r == c) {
      e(r, r) = -1;
    } else {
      e(r, c) = rng.int_in(-2, 2);
    }
    a = a * e;
  }
  return a;
}

// Random expansion whose support is closed under deleting a zero first row
// and column: every PSD h of corank c is stored as diag(0_c, h').
FourierExpansion random_normalized(oracle::Rng& rng, std::size_t n) {
  FourierExpansion f(n, 4);
  const long terms = rng.int_in(0, 4);
  for (long t = 0; t < terms; ++t) {
    const auto zeros = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(n)));
    SymMatrix h = SymMatrix::zero(0);
    if (zeros < n) {
      RationalVector diag;
      for (std::size_t k = zeros; k < n; ++k) diag.emplace_back(rng.int_in(1, 4));
      h = SymMatrix::diagonal(diag);
    }
    for (std::size_t k = 0; k < zeros; ++k) h = h.with_zero_block();
    f.add(h, rng.int_in(1, 9));
  }
  return f;
}

}  // namespace

TEST_CASE("matrix basics") {
  const Matrix a = m("1,2;3,4");
  CHECK(a.determinant() == -2);
  CHECK(a * a.inverse() == Matrix::identity(2));
  CHECK(a.transpose() == m("1,3;2,4"));
  CHECK(a.to_string() == "[1,2;3,4]");
  CHECK(code_of([] { m("1,2;2,4").inverse(); }) == Errc::Singular);
  CHECK(code_of([] { m("1,2;3"); }) == Errc::Parse);
  CHECK(code_of([] { Matrix(2, 2, RationalVector{1, 2, 3}); }) == Errc::ShapeMismatch);
  CHECK(code_of([] { SymMatrix(m("1,2;3,4")); }) == Errc::NotSymmetric);
  CHECK(code_of([] { s("1,2"); }) == Errc::Parse);
  CHECK(s("1,0,3").to_string() == "[1,0;0,3]");
  CHECK(s("1,0,3").upper() == RationalVector{1, 0, 3});
}

TEST_CASE("rank") {
  CHECK(SymMatrix::identity(2).rank() == 2);
  CHECK(SymMatrix::diagonal({0, 3}).rank() == 1);
  CHECK(s("1,2,4").rank() == 1);
  CHECK(SymMatrix::zero(3).rank() == 0);
}

TEST_CASE("definiteness examples") {
  CHECK(is_psd(SymMatrix::identity(2)));
  CHECK(is_pd(SymMatrix::identity(2)));
  CHECK_FALSE(is_psd(s("1,2,1")));
  CHECK_FALSE(is_pd(s("1,2,1")));
  CHECK(is_psd(SymMatrix::diagonal({0, 3})));
  CHECK_FALSE(is_pd(SymMatrix::diagonal({0, 3})));
  CHECK_FALSE(is_psd(SymMatrix::diagonal({0, -1})));
  CHECK(code_of([] { is_psd(SymMatrix::identity(7)); }) == Errc::SizeTooLarge);
  CHECK(is_pd(SymMatrix::identity(7)));
}

TEST_CASE("Sym^(j) membership") {
  CHECK(in_sym_j(s("1,2,1"), 0));
  CHECK(in_sym_j(SymMatrix::diagonal({0, 3}), 1));
  CHECK_FALSE(in_sym_j(SymMatrix::identity(2), 1));
  CHECK(in_sym_j(SymMatrix::zero(2), 2));
  CHECK(code_of([] { in_sym_j(SymMatrix::zero(2), 3); }) == Errc::IndexOutOfRange);
}

TEST_CASE("definiteness agrees with Leibniz minors") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_sym(n, -2, 2, [](const SymMatrix& h) {
      CHECK(is_psd(h) == oracle::psd_by_minors(square(h)));
      CHECK(is_pd(h) == oracle::pd_by_minors(square(h)));
    });
  }
  for_each_sym(4, -1, 1, [](const SymMatrix& h) {
    CHECK(is_psd(h) == oracle::psd_by_minors(square(h)));
    CHECK(is_pd(h) == oracle::pd_by_minors(square(h)));
  });
  oracle::Rng rng(81);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto h = random_sym(rng, 4, -2, 2);
    CHECK(is_psd(h) == oracle::psd_by_minors(square(h)));
    CHECK(is_pd(h) == oracle::pd_by_minors(square(h)));
  }
}

TEST_CASE("rank agrees with minors") {
  oracle::Rng rng(82);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(rng.int_in(1, 4));
    const auto h = random_sym(rng, n, -1, 1);
    CHECK(h.rank() == oracle::rank_by_minors(square(h)));
  }
}

TEST_CASE("coefficient transform") {
  const auto h = s("1,2,5");
  CHECK(gl_transform(h, Matrix::identity(2)) == h);
  CHECK(gl_transform(SymMatrix::identity(2), Matrix::diagonal({2, 1})) == SymMatrix::diagonal({fraction(1, 4), 1}));
  CHECK(code_of([&] { gl_transform(h, m("1,1;1,1")); }) == Errc::Singular);
  CHECK(code_of([&] { gl_transform(h, Matrix::identity(3)); }) == Errc::ShapeMismatch);
}

TEST_CASE("coefficient transform composes as a left action and preserves rank") {
  oracle::Rng rng(83);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.int_in(1, 4));
    const auto h = random_sym(rng, n, -3, 3);
    const auto a = random_invertible(rng, n);
    const auto b = random_invertible(rng, n);
    CHECK(gl_transform(gl_transform(h, a), b) == gl_transform(h, b * a));
    CHECK(gl_transform(h, a).rank() == h.rank());
    CHECK(is_psd(gl_transform(h, a)) == is_psd(h));
  }
}

TEST_CASE("slash invariance") {
  FourierExpansion f(2, 4, {{SymMatrix::identity(2), 1}});
  CHECK(slash_invariance_check(f, Matrix::identity(2)));
  CHECK(slash_invariance_check(f, m("-1,0;0,-1")));
  CHECK(slash_invariance_check(f, m("0,1;1,0")));
  FourierExpansion g(2, 4, {{SymMatrix::diagonal({1, 2}), 1}});
  CHECK_FALSE(slash_invariance_check(g, m("0,1;1,0")));
  g.add(SymMatrix::diagonal({2, 1}), 1);
  CHECK(slash_invariance_check(g, m("0,1;1,0")));
  FourierExpansion odd(1, 3, {{SymMatrix::identity(1), 1}});
  CHECK_FALSE(slash_invariance_check(odd, m("-1")));
  CHECK(code_of([&] { slash_invariance_check(f, m("2,0;0,1")); }) == Errc::NotUnimodular);
  CHECK(code_of([&] { slash_invariance_check(f, m("1/2,0;0,2")); }) == Errc::NotUnimodular);
}

TEST_CASE("orbit sums are invariant") {
  oracle::Rng rng(84);
  int closed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_unimodular(rng, 2);
    const auto h = random_sym(rng, 2, -2, 2);
    FourierExpansion f(2, 2);
    SymMatrix cur = h;
    for (int step = 0; step < 12; ++step) {
      f.add(cur, 1);
      cur = gl_transform(cur, g);
      if (cur == h) break;
    }
    if (cur != h) continue;
    ++closed;
    CHECK(slash_invariance_check(f, g));
  }
  CHECK(closed > 10);
}

TEST_CASE("transform order matters") {
  const auto h = s("1,0,2");
  const auto a = m("1,1;0,1");
  const auto b = m("1,0;1,1");
  CHECK(gl_transform(gl_transform(h, a), b) == gl_transform(h, b * a));
  CHECK_FALSE(gl_transform(gl_transform(h, a), b) == gl_transform(h, a * b));
}

TEST_CASE("Siegel operator") {
  FourierExpansion f(2, 4, {{SymMatrix::diagonal({0, 2}), 5}, {SymMatrix::identity(2), 7}});
  const auto phi = siegel_phi(f);
  CHECK(phi.size() == 1);
  CHECK(phi.weight() == 4);
  CHECK(phi == FourierExpansion(1, 4, {{SymMatrix::diagonal({2}), 5}}));
  CHECK(siegel_phi(FourierExpansion(2, 4, {{SymMatrix::identity(2), 7}})).empty());
  CHECK(siegel_phi(FourierExpansion(3, 4)).empty());
  CHECK(code_of([] { siegel_phi(FourierExpansion(1, 4)); }) == Errc::SizeOne);
}

TEST_CASE("cusp conditions") {
  const FourierExpansion a(2, 4, {{SymMatrix::identity(2), 1}});
  CHECK(cusp_condition_check(a));
  CHECK(is_cuspidal(a));
  const FourierExpansion b(2, 4, {{SymMatrix::diagonal({0, 1}), 1}});
  CHECK(cusp_condition_check(b));
  CHECK_FALSE(is_cuspidal(b));
  const FourierExpansion c(2, 4, {{s("1,2,1"), 1}});
  CHECK_FALSE(cusp_condition_check(c));
  CHECK_FALSE(is_cuspidal(c));
}

TEST_CASE("Siegel operator preserves the cusp condition") {
  oracle::Rng rng(85);
  int kept = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = static_cast<std::size_t>(rng.int_in(2, 4));
    FourierExpansion f(n, 2);
    for (int t = 0; t < 4; ++t) {
      const bool block = rng.coin();
      SymMatrix h = rng.int_in(0, 5) == 0 ? random_sym(rng, n, -2, 2) : gram(rng, block ? n - 1 : n);
      f.add(block && h.size() < n ? h.with_zero_block() : h, 1);
    }
    if (!cusp_condition_check(f)) continue;
    ++kept;
    CHECK(cusp_condition_check(siegel_phi(f)));
  }
  CHECK(kept > 20);
}

TEST_CASE("filtration index") {
  CHECK(filtration_index(FourierExpansion(2, 4, {{SymMatrix::identity(2), 1}})) == 1);
  CHECK(filtration_index(FourierExpansion(2, 4, {{SymMatrix::diagonal({0, 2}), 1}})) == 2);
  CHECK(filtration_index(FourierExpansion(2, 4)) == 0);
  CHECK(filtration_index(FourierExpansion(2, 4, {{SymMatrix::zero(2), 1}})) == 3);
}

TEST_CASE("filtration drops by at most one on normalized supports") {
  oracle::Rng rng(86);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = random_normalized(rng, static_cast<std::size_t>(rng.int_in(2, 4)));
    CHECK(filtration_index(siegel_phi(f)) + 1 >= filtration_index(f));
  }
}

TEST_CASE("filtration can drop by more than one on arbitrary supports") {
  // corank 1, but the zero sits in the last slot, so the Siegel operator sees nothing
  const FourierExpansion f(2, 4, {{SymMatrix::diagonal({1, 0}), 1}});
  CHECK(filtration_index(f) == 2);
  CHECK(filtration_index(siegel_phi(f)) == 0);
}

TEST_CASE("weight rigidity") {
  const FourierExpansion corank1(2, 4, {{SymMatrix::diagonal({0, 2}), 1}});
  const FourierExpansion corank2(2, 4, {{SymMatrix::zero(2), 1}});
  CHECK(rigidity_check(Weight::parse("5,3"), corank1, 1));
  CHECK_FALSE(rigidity_check(Weight::parse("5,3;5,4"), corank1, 1));
  CHECK_FALSE(rigidity_check(Weight::parse("5,3"), corank2, 2));
  CHECK(rigidity_check(Weight::parse("5,3"), corank1, 2));
  CHECK(rigidity_check(Weight::parse("3,3;4,3"), corank2, 2) == false);
  CHECK(rigidity_check(Weight::parse("4,4;4,4"), corank2, 2));
  CHECK(code_of([&] { rigidity_check(Weight::parse("5"), corank1, 1); }) == Errc::RankMismatch);
  CHECK(code_of([&] { rigidity_check(Weight::parse("5,3"), corank1, 3); }) == Errc::IndexOutOfRange);
}

TEST_CASE("expansion file format") {
  const auto f = FourierExpansion::parse("# test\nn=2 k=4\n\n0,0,2 : 5\n1,0,1 : -1/2\n");
  CHECK(f.size() == 2);
  CHECK(f.weight() == 4);
  CHECK(f.coefficient(SymMatrix::diagonal({0, 2})) == 5);
  CHECK(f.coefficient(SymMatrix::identity(2)) == fraction(-1, 2));
  CHECK(FourierExpansion::parse(f.serialize()) == f);
  CHECK(code_of([] { FourierExpansion::parse("k=4\n1 : 1\n"); }) == Errc::Parse);
  CHECK(code_of([] { FourierExpansion::parse("n=2 k=4\n1,0 : 1\n"); }) == Errc::ShapeMismatch);
  CHECK(code_of([] { FourierExpansion::parse("n=1 k=4\n1 1\n"); }) == Errc::Parse);
  FourierExpansion g(1, 2);
  g.add(SymMatrix::identity(1), 3);
  g.add(SymMatrix::identity(1), -3);
  CHECK(g.empty());
}

TEST_CASE("grid examples") {
  const auto one = build_pd_grid(1, DegreeBounds::uniform(1, 1, 2));
  CHECK(one.diagonal_offsets == std::vector<std::int64_t>{1});
  REQUIRE(one.points.size() == 3);
  CHECK(one.points[0][0] == SymMatrix::diagonal({1}));
  CHECK(one.points[2][0] == SymMatrix::diagonal({3}));
  CHECK(one.deviations.empty());

  const auto two = build_pd_grid(2, DegreeBounds::uniform(2, 1, 2));
  CHECK(two.diagonal_offsets == std::vector<std::int64_t>{8});
  CHECK(two.points.size() == 27);
  CHECK(two.deviations.empty());

  const auto small = build_pd_grid(2, DegreeBounds::uniform(2, 1, 1));
  REQUIRE(small.deviations.size() == 1);
  CHECK(small.deviations[0].literal_offset == 2);
  CHECK(small.deviations[0].applied_offset == 8);
  CHECK(small.deviations[0].witness == s("2,2,2"));
  CHECK(small.diagonal_offsets == std::vector<std::int64_t>{8});

  for (const auto* g : {&one, &two, &small}) {
    for (const auto& point : g->points) {
      for (const auto& h : point) CHECK(is_pd(h));
    }
  }
  CHECK(grid_variable(1, 2, 1) == "x_1_2_1");
}

TEST_CASE("multi-place grid") {
  DegreeBounds b{1, {{1}, {2}}};
  const auto g = build_pd_grid(1, b);
  CHECK(g.d == 2);
  CHECK(g.points.size() == 6);
  CHECK(g.points.front() == std::vector<SymMatrix>{SymMatrix::diagonal({1}), SymMatrix::diagonal({1})});
}

TEST_CASE("polynomial identity test examples") {
  const auto grid = build_pd_grid(1, DegreeBounds::uniform(1, 1, 2));
  CHECK(pit_vanishes(LaurentPoly(), grid));
  CHECK_FALSE(pit_vanishes(parse_poly("x_1_1_1 - 1"), grid));
  CHECK(pit_vanishes(parse_poly("x_1_1_1 - x_1_1_1"), grid));
  CHECK_FALSE(pit_vanishes(parse_poly("(x_1_1_1 - 1)*(x_1_1_1 - 2)"), grid));
  CHECK(code_of([&] { pit_vanishes(parse_poly("x_1_1_1^3"), grid); }) == Errc::DegreeExceedsGrid);
  CHECK(code_of([&] { pit_vanishes(parse_poly("x_1_1_1^-1"), grid); }) == Errc::DegreeExceedsGrid);
  CHECK(code_of([&] { pit_vanishes(parse_poly("y"), grid); }) == Errc::InvalidArgument);
  CHECK(code_of([&] { pit_vanishes(parse_poly("x_1_1_2"), grid); }) == Errc::InvalidArgument);
}

TEST_CASE("grid separates the monomial basis") {
  // The evaluation matrix of all monomials within the bounds has full rank,
  // so only the zero polynomial vanishes on the grid.
  for (const auto& [n, d, t] : std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>>{
           {1, 1, 2}, {1, 2, 2}, {2, 1, 1}, {2, 1, 2}, {3, 1, 1}}) {
    const auto grid = build_pd_grid(n, DegreeBounds::uniform(n, d, t));
    std::vector<std::string> vars;
    for (std::size_t k = 1; k <= d; ++k) {
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) vars.push_back(grid_variable(i, j, k));
      }
    }
    std::vector<Monomial> basis{Monomial()};
    for (const auto& v : vars) {
      std::vector<Monomial> next;
      for (const auto& b : basis) {
        for (std::uint32_t e = 0; e <= t; ++e) next.push_back(b * Monomial::symbol(v, static_cast<int>(e)));
      }
      basis = std::move(next);
    }
    REQUIRE(basis.size() == grid.points.size());
    Matrix eval(grid.points.size(), basis.size());
    for (std::size_t r = 0; r < grid.points.size(); ++r) {
      std::map<std::string, Rational> at;
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i; j < n; ++j) at[grid_variable(i + 1, j + 1, k + 1)] = grid.points[r][k](i, j);
        }
      }
      for (std::size_t c = 0; c < basis.size(); ++c) eval(r, c) = LaurentPoly(basis[c]).evaluate(at);
    }
    CHECK(eval.rank() == basis.size());
    for (const auto& b : basis) CHECK_FALSE(pit_vanishes(LaurentPoly(b), grid));
  }
}
