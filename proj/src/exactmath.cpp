#include "pauli/exactmath.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace pauli {

std::uint64_t totient(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("totient: argument must be positive");
  std::uint64_t result = d;
  std::uint64_t rest = d;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> common_divisors(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("common_divisors: both arguments are zero");
  return divisors(std::gcd(a, b));
}

BigInt binomial(std::uint64_t a, std::int64_t b) {
  if (b < 0 || static_cast<std::uint64_t>(b) > a) return 0;
  std::uint64_t k = std::min<std::uint64_t>(static_cast<std::uint64_t>(b), a - static_cast<std::uint64_t>(b));
  BigInt result = 1;
  // result == C(a - k + i, i) after step i, so each division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= a - k + i;
    result /= i;
  }
  return result;
}

BigInt catalan(std::uint64_t k) { return exact_div(binomial(2 * k, static_cast<std::int64_t>(k)), k + 1); }

BigInt pow2(std::uint64_t exponent) {
  BigInt result = 1;
  result <<= exponent;
  return result;
}

BigInt exact_div(const BigInt& numerator, std::uint64_t denominator) {
  if (denominator == 0) throw std::logic_error("exact_div: division by zero");
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, BigInt(denominator), quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("exact_div: " + to_string(numerator) + " is not divisible by " +
                           std::to_string(denominator));
  }
  return quotient;
}

unsigned two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("two_adic_valuation: argument must be positive");
  return static_cast<unsigned>(std::countr_zero(n));
}

std::string to_string(const BigInt& value) { return value.str(); }

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_bigint: empty string");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("parse_bigint: not a decimal integer: '" + text + "'");
  }
  return BigInt(text);
}

}  // namespace pauli
