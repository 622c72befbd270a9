#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact integer arithmetic and the small number-theoretic helpers that the
// necklace counting formulas are built from. Nothing here uses floating point.

namespace pauli {

using BigInt = boost::multiprecision::cpp_int;

/// Euler's totient. totient(1) == 1. Throws std::invalid_argument for d == 0.
std::uint64_t totient(std::uint64_t d);

/// Divisors of n in ascending order. Throws std::invalid_argument for n == 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Divisors of gcd(a, b), using gcd(0, m) == m. Rejects a == b == 0.
std::vector<std::uint64_t> common_divisors(std::uint64_t a, std::uint64_t b);

/// C(a, b); zero outside 0 <= b <= a.
BigInt binomial(std::uint64_t a, std::int64_t b);

BigInt catalan(std::uint64_t k);

BigInt pow2(std::uint64_t exponent);

/// numerator / denominator, throwing std::logic_error unless the division is exact.
BigInt exact_div(const BigInt& numerator, std::uint64_t denominator);

/// Exponent of the largest power of two dividing n (n > 0).
unsigned two_adic_valuation(std::uint64_t n);

std::string to_string(const BigInt& value);
BigInt parse_bigint(const std::string& text);

}  // namespace pauli
