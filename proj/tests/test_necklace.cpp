#include <doctest.h>

#include <stdexcept>

#include "oracle.hpp"
#include "pauli/necklace.hpp"

using namespace pauli;

namespace {
BinaryWord w(const char* text) { return BinaryWord::parse(text); }
}  // namespace

TEST_CASE("parsing and text form") {
  CHECK(w("0101").to_string() == "0101");
  CHECK(w("afaf") == w("0101"));
  CHECK(w("faafaafaafaa") == w("100100100100"));
  CHECK(w("").empty());
  CHECK(w("0011").fermions() == 2);
  CHECK(w("0011").bosons() == 2);
  CHECK_THROWS_AS(BinaryWord::parse("01x"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord::parse(std::string(65, '0')), std::invalid_argument);
  CHECK(BinaryWord::parse(std::string(64, '1')).fermions() == 64);
}

TEST_CASE("rotate") {
  CHECK(rotate(w("0101"), 1) == w("1010"));
  CHECK(rotate(w("0011"), 2) == w("1100"));
  CHECK(rotate(w("0011"), 1) == w("1001"));
  CHECK(rotate(w("0011"), -1) == w("0110"));
  CHECK(rotate(w("011010"), 6) == w("011010"));
  CHECK(rotate(w(""), 3) == w(""));
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    auto text = oracle::word(bits, 8);
    for (std::size_t s = 0; s <= 9; ++s) {
      REQUIRE(rotate(BinaryWord(bits, 8), static_cast<long long>(s)).to_string() == oracle::rotate(text, s));
    }
  }
}

TEST_CASE("rotation sign") {
  CHECK(rotation_sign(w("0101"), 1) == -1);
  CHECK(rotation_sign(w("0011"), 2) == 1);
  CHECK(rotation_sign(w("0011"), 1) == -1);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      BinaryWord word(bits, n);
      REQUIRE(rotation_sign(word, static_cast<long long>(n)) == 1);
      for (std::size_t s = 0; s < n; ++s) {
        REQUIRE(rotation_sign(word, static_cast<long long>(s)) == oracle::rotation_sign(word.to_string(), s));
      }
    }
  }
}

TEST_CASE("rotation sign is a cocycle") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      BinaryWord word(bits, n);
      for (long long s = 0; s < static_cast<long long>(n); ++s) {
        for (long long t = 0; t < static_cast<long long>(n); ++t) {
          REQUIRE(rotation_sign(word, s + t) == rotation_sign(word, s) * rotation_sign(rotate(word, s), t));
        }
      }
    }
  }
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(w("0110")) == w("0011"));
  CHECK(canonical_form(w("1000")) == w("0001"));
  CHECK(canonical_form(w("010001")) == canonical_form(w("100010")));
  CHECK(canonical_form(w("")) == w(""));
  CHECK(canonical_form(w("1")) == w("1"));
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      BinaryWord word(bits, n);
      REQUIRE(canonical_form(word).to_string() == oracle::least_rotation(word.to_string()));
      REQUIRE(is_necklace(word) == (canonical_form(word) == word));
    }
  }
}

TEST_CASE("canonical form is rotation invariant") {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      BinaryWord word(bits, n);
      BinaryWord c = canonical_form(word);
      BinaryWord r = word;
      for (std::size_t s = 1; s < n; ++s) {
        r = rotate(r, 1);
        REQUIRE(canonical_form(r) == c);
      }
    }
  }
}

TEST_CASE("canonical form on long words") {
  BinaryWord long_word = BinaryWord::parse("1101001110100011101000111010001110100011101000111010001110100011");
  BinaryWord c = canonical_form(long_word);
  CHECK(c.to_string() == oracle::least_rotation(long_word.to_string()));
}

TEST_CASE("minimal period") {
  CHECK(minimal_period(w("0101")) == 2);
  CHECK(minimal_period(w("011011")) == 3);
  CHECK(minimal_period(w("0111")) == 4);
  CHECK(minimal_period(w("0000")) == 1);
  CHECK_THROWS_AS(minimal_period(w("")), std::invalid_argument);
}

TEST_CASE("classify examples") {
  auto c = classify(w("0101"));
  CHECK(c.status == Status::forbidden);
  CHECK(c.symmetry_order == 2);
  CHECK(c.fermions / c.symmetry_order == 1);

  CHECK(classify(w("01010101")).status == Status::forbidden);
  CHECK(classify(w("011011")).status == Status::allowed);
  CHECK(classify(w("011011")).symmetry_order == 2);
  auto faa = classify(w("faafaafaafaa"));
  CHECK(faa.status == Status::forbidden);
  CHECK(faa.period == 3);
  CHECK(faa.canonical == w("001001001001"));
  CHECK(classify(w("1111")).status == Status::forbidden);
  CHECK(classify(w("0011")).status == Status::allowed);
  CHECK(classify(w("0011")).statistics == Statistics::bosonic);
  CHECK(classify(w("0111")).statistics == Statistics::fermionic);
  CHECK_THROWS_AS(classify(w("")), std::invalid_argument);
}

TEST_CASE("both forbidden criteria agree on every word up to length 16") {
  for (std::size_t n = 1; n <= 16; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      BinaryWord word(bits, n);
      bool by_symmetry = forbidden_by_symmetry(word);
      REQUIRE(by_symmetry == forbidden_by_sign(word));
      if (word.fermions() % 2 == 1) REQUIRE_FALSE(by_symmetry);
    }
  }
}

TEST_CASE("classification matches the operator-level oracle") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      BinaryWord word(bits, n);
      auto c = classify(word);
      REQUIRE((c.status == Status::forbidden) == oracle::forbidden(word.to_string()));
      REQUIRE(c.n == n);
      REQUIRE(c.bosons + c.fermions == n);
      REQUIRE(n % c.period == 0);
      REQUIRE(rotate(word, static_cast<long long>(c.period)) == word);
      REQUIRE((c.statistics == Statistics::fermionic) == (c.fermions % 2 == 1));
    }
  }
}
