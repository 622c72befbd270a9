#include "pauli/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace pauli {

BivariatePolynomial BivariatePolynomial::constant(const BigInt& c) { return monomial(c, 0, 0); }

BivariatePolynomial BivariatePolynomial::monomial(const BigInt& c, std::uint64_t x_degree, std::uint64_t y_degree) {
  BivariatePolynomial p;
  p.add_term({x_degree, y_degree}, c);
  return p;
}

void BivariatePolynomial::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt BivariatePolynomial::coefficient(std::uint64_t x_degree, std::uint64_t y_degree) const {
  auto it = terms_.find({x_degree, y_degree});
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool BivariatePolynomial::is_homogeneous(std::uint64_t degree) const {
  for (const auto& [e, c] : terms_) {
    if (e.first + e.second != degree) return false;
  }
  return true;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::pow(std::uint64_t exponent) const {
  BivariatePolynomial result = constant(1);
  BivariatePolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BivariatePolynomial BivariatePolynomial::exact_divide(std::uint64_t divisor) const {
  BivariatePolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, exact_div(c, divisor));
  return out;
}

std::map<std::uint64_t, BigInt> BivariatePolynomial::substitute_y(const BigInt& c, std::uint64_t e) const {
  std::map<std::uint64_t, BigInt> out;
  for (const auto& [exps, coef] : terms_) {
    BigInt factor = 1;
    for (std::uint64_t i = 0; i < exps.second; ++i) factor *= c;
    out[exps.first + e * exps.second] += coef * factor;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending x degree reads naturally for homogeneous polynomials.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::vector<std::string> factors;
    BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (magnitude != 1 || (e.first == 0 && e.second == 0)) factors.push_back(pauli::to_string(magnitude));
    if (e.first > 0) factors.push_back(e.first == 1 ? "x" : "x^" + std::to_string(e.first));
    if (e.second > 0) factors.push_back(e.second == 1 ? "y" : "y^" + std::to_string(e.second));
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }
  return out;
}

}  // namespace pauli
