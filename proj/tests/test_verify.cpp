#include <doctest.h>

#include <json.hpp>

#include "cbperm/verify.hpp"

using namespace cbperm;

TEST_CASE("suite at max_n=6 passes with at least 20 checks") {
  const auto report = verify_suite(6);
  INFO(report.to_text());
  CHECK(report.all_passed());
  CHECK(report.checks.size() >= 20);
  REQUIRE(report.first_ascent_difference.has_value());
  CHECK(*report.first_ascent_difference == 4);
  const auto union_check = report.find("union_count");
  REQUIRE(union_check != nullptr);
  CHECK(union_check->detail.find("n=5 count 40") != std::string::npos);
}

TEST_CASE("suite at max_n=4 includes the head equidistribution") {
  const auto report = verify_suite(4);
  const auto c = report.find("equidistribution(head)");
  REQUIRE(c != nullptr);
  CHECK(c->passed);
  CHECK(c->range == "n=1..4");
  CHECK(report.find("no such check") == nullptr);
}

TEST_CASE("report rendering") {
  const auto report = verify_suite(4, 6);
  CHECK(report.truncation == 6);
  const auto text = report.to_text();
  CHECK(text.find("PASS class_count(t1) [n=1..4]") != std::string::npos);
  const auto j = nlohmann::json::parse(report.to_json());
  CHECK(j["max_n"] == 4);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == report.checks.size());
  CHECK(verify_suite(4, 2).truncation == 4);
}

TEST_CASE("suite needs max_n >= 4") { CHECK_THROWS_AS(verify_suite(3), std::invalid_argument); }
