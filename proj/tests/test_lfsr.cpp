#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "pauli/counting.hpp"
#include "pauli/lfsr.hpp"
#include "pauli/sieve.hpp"

using namespace pauli;

TEST_CASE("step rule") {
  CHECK(lfsr_step(BinaryWord::parse("000")) == 1);
  CHECK(lfsr_step(BinaryWord::parse("111")) == 0);
  CHECK(lfsr_step(BinaryWord::parse("001")) == 0);
  CHECK(lfsr_step(BinaryWord::parse("011")) == 1);
  CHECK_THROWS_AS(lfsr_step(BinaryWord::parse("")), std::invalid_argument);
}

TEST_CASE("first extension of every 3-bit seed") {
  // Seeds 000..111 extend to 0001, 0010, 0100, 0111, ..., 1110.
  const char* expected[] = {"0001", "0010", "0100", "0111", "1000", "1011", "1101", "1110"};
  for (std::uint64_t s = 0; s < 8; ++s) CHECK(lfsr_cell(BinaryWord(s, 3)).to_string() == expected[s]);
  const char* second[] = {"00010", "00100", "01000", "01110"};
  for (std::uint64_t s = 0; s < 4; ++s) CHECK(to_string(lfsr_sequence(BinaryWord(s, 3), 5)) == second[s]);
  CHECK(to_string(lfsr_sequence(BinaryWord(7, 3), 5)) == "11101");
}

TEST_CASE("worked sequences") {
  CHECK(to_string(lfsr_sequence(BinaryWord::parse("010"), 18)) == "010001000100010001");
  CHECK(to_string(lfsr_sequence(BinaryWord::parse("100"), 18)) == "100010001000100010");
  CHECK(to_string(lfsr_sequence(BinaryWord::parse("110"), 18)) == "110111011101110111");
  CHECK(canonical_form(lfsr_cell(BinaryWord::parse("100"))) == canonical_form(lfsr_cell(BinaryWord::parse("010"))));
  CHECK(to_string(lfsr_sequence(BinaryWord::parse("010"), 2)) == "01");
}

TEST_CASE("state keeps odd windows and period n") {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n - 1)); ++s) {
      BinaryWord seed(s, n - 1);
      LfsrState state(seed);
      for (std::size_t i = 0; i < 3 * n; ++i) state.step();
      const auto& bits = state.emitted();
      REQUIRE(to_string(bits) == oracle::lfsr(seed.to_string(), bits.size()));
      for (std::size_t i = 0; i + n <= bits.size(); ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < n; ++j) ones += bits[i + j];
        REQUIRE(ones % 2 == 1);
        if (i + n < bits.size()) REQUIRE(bits[i + n] == bits[i]);
      }
    }
  }
}

TEST_CASE("cycles") {
  auto four = lfsr_cycles(4);
  REQUIRE(four.size() == 2);
  CHECK(four[0].to_string() == "0001");
  CHECK(four[1].to_string() == "0111");
  auto two = lfsr_cycles(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].to_string() == "01");
  CHECK_THROWS_AS(lfsr_cycles(1), std::out_of_range);
  CHECK_THROWS_AS(lfsr_cycles(25), std::out_of_range);
}

TEST_CASE("cycles are exactly the fermionic necklaces") {
  for (std::size_t n = 2; n <= 16; ++n) {
    auto cycles = lfsr_cycles(n);
    REQUIRE(cycles.size() == fermionic_count(n));
    std::set<std::uint64_t> fermionic;
    enumerate_necklaces(n, SieveMethod::scan, [&](const NecklaceClass& c) {
      if (c.statistics == Statistics::fermionic) fermionic.insert(c.canonical.bits());
    });
    std::set<std::uint64_t> got;
    for (const auto& c : cycles) {
      REQUIRE(c.fermions() % 2 == 1);
      got.insert(c.bits());
    }
    REQUIRE(got == fermionic);
    REQUIRE(lfsr_cycles(n, 3) == cycles);
  }
}
