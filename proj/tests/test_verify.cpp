#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "pauli/verify.hpp"

using namespace pauli;

TEST_CASE("check names") {
  for (auto c : all_checks()) CHECK(parse_check(to_string(c)) == c);
  CHECK(all_checks().size() == 9);
  CHECK_THROWS_AS(parse_check("everything"), std::invalid_argument);
}

TEST_CASE("every check passes on a small range") {
  for (auto c : all_checks()) {
    auto report = run_check(c, 12, 2);
    INFO(report.to_text());
    CHECK(report.passed());
    CHECK_FALSE(report.cases.empty());
  }
}

TEST_CASE("witten report lists W(n;n)") {
  auto report = run_check(Check::witten, 50, 1);
  REQUIRE(report.cases.size() == 50);
  CHECK(report.cases[3].detail.find("W(4;4)=0") != std::string::npos);
  auto text = report.to_text();
  CHECK(text.find("PASS witten (50/50 cases)") != std::string::npos);
}

TEST_CASE("reports do not depend on thread count") {
  for (auto c : {Check::witten, Check::strong_witten, Check::strsc, Check::oracle, Check::appendix}) {
    auto one = run_check(c, 14, 1);
    auto four = run_check(c, 14, 4);
    REQUIRE(one.to_text() == four.to_text());
    REQUIRE(one.to_json() == four.to_json());
  }
}

TEST_CASE("json report") {
  auto doc = nlohmann::json::parse(run_check(Check::strsc, 10, 1).to_json());
  CHECK(doc["check"] == "strsc");
  CHECK(doc["passed"] == true);
  CHECK(doc["cases"].size() == 10);
  CHECK(doc["first_failure"].is_null());
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(run_check(Check::witten, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_check(Check::oracle, 35, 1), std::out_of_range);
}
