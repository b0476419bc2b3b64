#include <doctest.h>

#include <map>

#include "cbperm/binomial.hpp"
#include "cbperm/census.hpp"
#include "cbperm/generating_functions.hpp"
#include "cbperm/series.hpp"

using namespace cbperm;

namespace {

using Poly = std::map<std::vector<int>, long>;

TruncatedSeries x1(int cap) { return TruncatedSeries::variable({"x"}, {cap}, 0); }

// The x^n slice of s as a map from the remaining exponents to integers.
Poly slice(const TruncatedSeries& s, int n) {
  Poly out;
  s.for_each_nonzero([&](const TruncatedSeries::Exponents& e, const mpq_class& c) {
    if (e[0] != n) return;
    REQUIRE(c.get_den() == 1);
    out[std::vector<int>(e.begin() + 1, e.end())] = c.get_num().get_si();
  });
  return out;
}

}  // namespace

TEST_CASE("series arithmetic") {
  const auto x = x1(4);
  const auto one = TruncatedSeries::constant({"x"}, {4}, 1);
  const auto r = sqrt(one - mpq_class(4) * x);
  const long want[] = {1, -2, -2, -4, -10};
  for (int k = 0; k <= 4; ++k) CHECK(r.coefficient({k}) == want[k]);
  CHECK(r * r == one - mpq_class(4) * x);

  CHECK(div_by_x(x + x * x) == (one + x).restricted({3}));
  CHECK((one + x) * (one - x) == one - x * x);
  const auto geometric = one / (one - x);
  for (int k = 0; k <= 4; ++k) CHECK(geometric.coefficient({k}) == 1);
  CHECK_THROWS(one / x);
  CHECK_THROWS(div_by_x(one));
  CHECK_THROWS(sqrt(x));
  CHECK_THROWS_AS(r.coefficient({5}), std::out_of_range);
  CHECK_THROWS(r.restricted({6}));
  CHECK(r.restricted({2}).caps() == std::vector<int>{2});
}

TEST_CASE("multivariate helpers") {
  const std::vector<std::string> names{"x", "y"};
  const std::vector<int> caps{5, 5};
  const auto x = TruncatedSeries::variable(names, caps, 0);
  const auto y = TruncatedSeries::variable(names, caps, 1);
  const auto one = TruncatedSeries::constant(names, caps, 1);
  // (x^2 - y^2) / (x + y) = x - y
  CHECK(divide_exact(x * x - y * y, x + y) == x - y);
  CHECK_THROWS(divide_exact(x * x + y, x + y));
  const auto m = TruncatedSeries::monomial(names, caps, {1, 2}, 3);
  REQUIRE(m.as_monomial().has_value());
  CHECK(m.as_monomial()->first == std::vector<int>{1, 2});
  CHECK(divide_by_monomial_series(m * (one + x), m).coefficient({1, 0}) == 1);
  const auto merged = substitute_equal_vars(x * y, 1, 0);
  CHECK(merged.num_vars() == 1);
  CHECK(merged.coefficient({2}) == 1);
  CHECK((x * y).dump() == "x^1 y^1 : 1/1\n");
  CHECK((mpq_class(1, 2) * x).all_nonnegative_integers() == false);
}

TEST_CASE("series names") {
  CHECK(gf::parse_series_name("narayana") == gf::SeriesName::Narayana);
  CHECK(gf::parse_series_name("m") == gf::SeriesName::M);
  CHECK_THROWS_AS(gf::parse_series_name("Q"), std::invalid_argument);
  CHECK(gf::all_series().size() == 12);
}

TEST_CASE("hand-checked and sympy-checked coefficients") {
  const auto n = gf::narayana(6);
  CHECK(slice(n, 0) == Poly{{{0}, 1}});
  CHECK(slice(n, 1) == Poly{{{1}, 1}});
  CHECK(slice(n, 3) == Poly{{{1}, 1}, {{2}, 3}, {{3}, 1}});

  const auto m = gf::m_series(6);
  CHECK(slice(m, 2) == Poly{{{0}, 1}, {{1}, 1}});

  const auto s = gf::s_closed_form(6);
  CHECK(slice(s, 2) == Poly{{{0}, 1}, {{1}, 4}, {{2}, 1}});
  CHECK(slice(s, 4) == Poly{{{0}, 1}, {{1}, 16}, {{2}, 36}, {{3}, 16}, {{4}, 1}});

  const auto h = gf::h_from_g(6);
  CHECK(slice(h, 4) == Poly{{{1}, 6}, {{2}, 6}, {{3}, 4}, {{4}, 4}});

  const auto f = gf::f_from_e(6);
  CHECK(slice(f, 3) == Poly{{{0}, 1}, {{1}, 4}, {{2}, 1}});

  const auto a = gf::a_closed_form(6);
  CHECK(slice(a, 3) == Poly{{{1, 0}, 3}, {{2, 0}, 1}, {{0, 1}, 1}});
  CHECK(slice(a, 4) == Poly{{{0, 2}, 1}, {{1, 0}, 2}, {{1, 1}, 4}, {{2, 0}, 6}, {{3, 0}, 1}});
  CHECK(slice(a, 5) == Poly{{{4, 0}, 1}, {{3, 0}, 10}, {{2, 1}, 10}, {{2, 0}, 10}, {{1, 2}, 5}, {{1, 1}, 5},
                            {{0, 3}, 1}});

  const auto j = gf::j_from_b(6);
  CHECK(slice(j, 3) == Poly{{{1, 1}, 2}, {{2, 2}, 2}, {{3, 2}, 1}, {{3, 3}, 1}});
  const auto c = gf::c_from_j(6);
  CHECK(slice(c, 3) == Poly{{{1, 1}, 2}, {{2, 2}, 1}});
  const auto e = gf::e_closed_form(6);
  CHECK(slice(e, 3) == Poly{{{1}, 1}, {{2}, 1}});
  const auto v = gf::v_from_f_and_e(6);
  CHECK(slice(v, 3) == Poly{{{0}, 1}, {{1}, 2}});
}

TEST_CASE("alternative formulas agree") {
  const int t = 8;
  CHECK(gf::b_closed_form(t) == gf::b_from_narayana(t));
  CHECK(gf::j_from_b(t) == gf::j_from_b_and_c(t));
  CHECK(gf::h_from_g(t) == gf::h_closed_form(t));
  CHECK(gf::e_closed_form(t) == gf::e_from_a(t));
  CHECK(gf::f_from_e(t) == gf::f_from_e_and_v(t));
  CHECK(gf::s_closed_form(t) == gf::s_from_n_and_r(t));
}

TEST_CASE("every series has nonnegative integer coefficients at the default truncation") {
  for (auto name : gf::all_series()) {
    const auto s = gf::build(name);
    INFO(gf::to_string(name));
    CHECK(s.all_nonnegative_integers());
    CHECK(s.caps() == std::vector<int>(s.caps().size(), gf::kDefaultTruncation));
  }
}

TEST_CASE("coefficient sums give class sizes") {
  const auto f = gf::f_from_e(9);
  const auto m = gf::m_series(9);
  for (int n = 1; n <= 9; ++n) {
    mpz_class total_f = 0, total_m = 0;
    for (int k = 0; k <= 9; ++k) {
      total_f += gf::integer_coefficient(f, {n, k});
      total_m += gf::integer_coefficient(m, {n, k});
    }
    CHECK(total_f == binomial(2L * n - 2, n - 1));
    CHECK(total_m == binomial(2L * n - 2, n - 1));
  }
  CHECK_THROWS_AS(gf::integer_coefficient(f, {10, 0}), std::out_of_range);
}

TEST_CASE("F matches the ascent census of the first class") {
  const auto f = gf::f_from_e(8);
  const std::vector<Statistic> asc{Statistic::Asc};
  for (int n = 1; n <= 8; ++n) {
    const auto t = distribution(n, PatternBasis::t1(), asc);
    for (int k = 0; k <= 8; ++k) CHECK(gf::integer_coefficient(f, {n, k}) == t.at({k}));
  }
}
