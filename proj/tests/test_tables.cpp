#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pauli/tables.hpp"

using namespace pauli;

TEST_CASE("printed tables load") {
  const auto& t1 = printed_allowed_table();
  const auto& t2 = printed_forbidden_table();
  CHECK(t1.kind == CountKind::allowed);
  CHECK(t1.provenance == Provenance::printed);
  CHECK(t1.entries.size() == 357);  // B + F <= 26, F <= 20
  CHECK(t2.entries.size() == 21 * 19);
  CHECK(t1.entries.at({4, 4}) == 9);
  CHECK(t1.entries.at({8, 16}) == 30667);
  CHECK(t1.entries.at({16, 8}) == 30666);
  CHECK(t2.entries.at({8, 16}) == 0);
  CHECK(t2.entries.at({16, 8}) == 1);
  CHECK(t2.entries.at({40, 36}) == 4862);
}

TEST_CASE("printed tables agree with the closed forms") {
  CHECK(diff_against_closed_form(printed_allowed_table()).empty());
  CHECK(diff_against_closed_form(printed_forbidden_table()).empty());
  CHECK(printed_table_allowlist().empty());
}

TEST_CASE("diffs carry the sieve count") {
  CountTable tampered = printed_allowed_table();
  tampered.entries.at({4, 4}) = 10;
  auto diffs = diff_against_closed_form(tampered);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].cell == Cell{4, 4});
  CHECK(diffs[0].printed == 10);
  CHECK(diffs[0].computed == 9);
  CHECK_FALSE(diffs[0].allowlisted);
  REQUIRE(diffs[0].sieve.has_value());
  CHECK(*diffs[0].sieve == 9);
}

TEST_CASE("bounds") {
  auto t = build_table(CountKind::allowed, {8, std::nullopt, std::nullopt});
  CHECK(t.entries.size() == 45);
  auto box = build_table(CountKind::forbidden, {std::nullopt, 8, 16});
  CHECK(box.entries.size() == 5 * 9);
  CHECK(box.entries.at({8, 16}) == 0);
  CHECK(build_table(CountKind::allowed, {0, std::nullopt, std::nullopt}).entries.size() == 1);
  CHECK_THROWS_AS(build_table(CountKind::allowed, {}), std::invalid_argument);
  CHECK_THROWS_AS(build_table(CountKind::allowed, {4, 4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(build_table(CountKind::allowed, {std::nullopt, 4, std::nullopt}), std::invalid_argument);
}

TEST_CASE("formats") {
  auto t = build_table(CountKind::allowed, {8, std::nullopt, std::nullopt});
  auto csv = format_table(t, TableFormat::csv);
  CHECK(csv.rfind("B,F,count\n", 0) == 0);
  CHECK(csv.find("\n4,4,9\n") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);

  auto json = format_table(t, TableFormat::json);
  CHECK(json.find("\"count\": \"9\"") != std::string::npos);

  auto vacuum = format_table(build_table(CountKind::allowed, {0, std::nullopt, std::nullopt}), TableFormat::paper);
  CHECK(vacuum == "B\\F | 0\n----+--\n  0 | 1\n");

  CHECK_THROWS_AS(parse_table_format("xml"), std::invalid_argument);
}

TEST_CASE("csv and json round trip") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    auto kind = trial % 2 ? CountKind::forbidden : CountKind::allowed;
    TableBounds bounds;
    if (trial % 3 == 0) {
      bounds.max_sum = rng() % 40;
    } else {
      bounds.max_b = rng() % 30;
      bounds.max_f = rng() % 30;
    }
    auto t = build_table(kind, bounds);
    REQUIRE(parse_csv_table(format_table(t, TableFormat::csv), kind, Provenance::closed_form) == t);
    REQUIRE(parse_json_table(format_table(t, TableFormat::json), kind, Provenance::closed_form) == t);
  }
}

TEST_CASE("csv parse errors") {
  CHECK_THROWS_AS(parse_csv_table("b,f\n", CountKind::allowed, Provenance::printed), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv_table("B,F,count\n1,2\n", CountKind::allowed, Provenance::printed), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv_table("B,F,count\n1,2,3\n1,2,3\n", CountKind::allowed, Provenance::printed),
                  std::invalid_argument);
}
