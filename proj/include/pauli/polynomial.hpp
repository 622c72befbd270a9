#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "pauli/exactmath.hpp"

namespace pauli {

/// Sparse polynomial in x, y with exact integer coefficients. Zero
/// coefficients are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<std::uint64_t, std::uint64_t>;  // (deg x, deg y)
  using Terms = std::map<Exponents, BigInt>;

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(const BigInt& c);
  static BivariatePolynomial monomial(const BigInt& c, std::uint64_t x_degree, std::uint64_t y_degree);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(std::uint64_t x_degree, std::uint64_t y_degree) const;

  /// True when every term has total degree `degree`.
  bool is_homogeneous(std::uint64_t degree) const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  BivariatePolynomial& operator*=(const BigInt& scalar);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const BigInt& s) { return a *= s; }

  BivariatePolynomial pow(std::uint64_t exponent) const;

  /// Divides every coefficient by `divisor`; std::logic_error if inexact.
  BivariatePolynomial exact_divide(std::uint64_t divisor) const;

  /// Substitutes y -> c * x^e and returns the univariate coefficients by x degree.
  std::map<std::uint64_t, BigInt> substitute_y(const BigInt& c, std::uint64_t e) const;

  std::string to_string() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  void add_term(const Exponents& e, const BigInt& c);
  Terms terms_;
};

}  // namespace pauli
