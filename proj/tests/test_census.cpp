#include <doctest.h>

#include <json.hpp>

#include "cbperm/binomial.hpp"
#include "cbperm/census.hpp"

using namespace cbperm;

TEST_CASE("binomials") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(6, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(catalan(5) == 42);
  CHECK(pow2(10) == 1024);
}

TEST_CASE("generation") {
  CHECK(generate_class(3, PatternBasis::t1()).size() == 6);
  CHECK(generate_class(4, PatternBasis::t1()).size() == 20);
  CHECK(generate_class(5, PatternBasis::t1_union_t2()).size() == 40);
  CHECK(class_count(4, PatternBasis::t2()) == 20);
  CHECK(class_count(4, PatternBasis::t1_union_t2()) == 16);
  const auto all = generate_class(4, PatternBasis::t1());
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK_THROWS(generate_class(0, PatternBasis::t1()));
}

TEST_CASE("pruned generator matches the filter oracle up to n=7") {
  for (const auto& basis : {PatternBasis::t1(), PatternBasis::t2(), PatternBasis::t1_union_t2(),
                            PatternBasis::t1().with(PatternBasis::decreasing(3), "t1+321")}) {
    for (int n = 1; n <= 7; ++n) {
      INFO(basis.name() << " n=" << n);
      CHECK(generate_class(n, basis) == filter_class(n, basis));
    }
  }
}

TEST_CASE("class counts are central binomials up to n=9") {
  for (int n = 1; n <= 9; ++n) {
    CHECK(class_count(n, PatternBasis::t1()) == binomial(2L * n - 2, n - 1));
    CHECK(class_count(n, PatternBasis::t2()) == binomial(2L * n - 2, n - 1));
  }
}

TEST_CASE("statistic names") {
  CHECK(parse_statistic("pos_max") == Statistic::PosMax);
  CHECK(parse_statistics("pos_max,lmax") == std::vector<Statistic>{Statistic::PosMax, Statistic::Lmax});
  CHECK_THROWS_AS(parse_statistic("height"), std::invalid_argument);
  CHECK_THROWS_AS(parse_statistics("asc,"), std::invalid_argument);
}

TEST_CASE("distribution tables") {
  const std::vector<Statistic> head{Statistic::Head};
  const auto t = distribution(4, PatternBasis::t1(), head);
  CHECK(t.at({1}) == 6);
  CHECK(t.at({2}) == 6);
  CHECK(t.at({3}) == 4);
  CHECK(t.at({4}) == 4);
  CHECK(t.at({5}) == 0);
  CHECK(t.total() == 20);

  const std::vector<Statistic> asc{Statistic::Asc};
  const auto a = distribution(2, PatternBasis::t2(), asc);
  CHECK(a.at({0}) == 1);
  CHECK(a.at({1}) == 1);

  const std::vector<Statistic> conn{Statistic::Connected};
  for (int n = 2; n <= 7; ++n) {
    const auto c = distribution(n, PatternBasis::t1(), conn);
    CHECK(c.at({1}) == binomial(2L * n - 3, n - 2));
    CHECK(c.at({0}) == binomial(2L * n - 3, n - 2));
  }
}

TEST_CASE("table merging is associative and commutative") {
  const std::vector<Statistic> stats{Statistic::Asc, Statistic::Lmax};
  DistributionTable a(5, "t1", stats), b(5, "t1", stats), c(5, "t1", stats);
  int i = 0;
  for_each_in_class(5, PatternBasis::t1(), [&](const Permutation& s) {
    (i % 3 == 0 ? a : i % 3 == 1 ? b : c).add(s);
    ++i;
  });
  auto ab_c = a;
  ab_c.merge(b);
  ab_c.merge(c);
  auto c_ba = c;
  c_ba.merge(b);
  c_ba.merge(a);
  CHECK(ab_c.same_counts(c_ba));
  CHECK(ab_c.same_counts(distribution(5, PatternBasis::t1(), stats)));
  DistributionTable other(5, "t1", {Statistic::Head});
  CHECK_THROWS(a.merge(other));
}

TEST_CASE("table export") {
  const std::vector<Statistic> stats{Statistic::PosMax, Statistic::Lmax};
  const auto t = distribution(3, PatternBasis::t1(), stats);
  CHECK(t.to_csv() == "pos_max,lmax,count\n1,1,2\n2,2,2\n3,2,1\n3,3,1\n");
  const auto j = nlohmann::json::parse(t.to_json());
  CHECK(j["n"] == 3);
  CHECK(j["basis"] == "t1");
  CHECK(j["stats"][0] == "pos_max");
  CHECK(j["entries"].size() == 4);
  CHECK(j["entries"][0]["count"] == "2");
  CHECK(j["entries"][3]["lmax"] == 3);
}

TEST_CASE("head table") {
  const auto h = head_table(6);
  CHECK(h[4][1] == 6);
  CHECK(h[4][2] == 6);
  CHECK(h[5][5] == 8);
  CHECK(h[1][1] == 1);
  const std::vector<Statistic> head{Statistic::Head};
  for (int n = 1; n <= 6; ++n) {
    const auto t = distribution(n, PatternBasis::t1(), head);
    for (int k = 1; k <= n; ++k) CHECK(h[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] == t.at({k}));
  }
}

TEST_CASE("long decreasing patterns") {
  CHECK(count_avoiding_long_decreasing(4, 3) == 14);
  CHECK(count_avoiding_long_decreasing(4, 5) == 20);
  CHECK(count_avoiding_long_decreasing(5, 3) == 42);
  CHECK(count_avoiding_long_decreasing(5, 2) == 1);
  for (int k = 2; k <= 5; ++k) {
    const auto basis = PatternBasis::t1().with(PatternBasis::decreasing(k), "aug");
    for (int n = 1; n <= 7; ++n) CHECK(count_avoiding_long_decreasing(n, k) == class_count(n, basis));
  }
}
