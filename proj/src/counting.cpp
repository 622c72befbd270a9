#include "pauli/counting.hpp"

#include <stdexcept>

namespace pauli {

namespace {

enum class DivisorParity { any, odd, even };

// (1/n) sum_{d|n, parity} phi(d) 2^(n/d), with an extra 1/2 when `halve`.
BigInt divisor_power_sum(std::uint64_t n, DivisorParity parity, bool halve) {
  BigInt sum = 0;
  for (auto d : divisors(n)) {
    if (parity == DivisorParity::odd && d % 2 == 0) continue;
    if (parity == DivisorParity::even && d % 2 == 1) continue;
    sum += totient(d) * pow2(n / d);
  }
  return exact_div(sum, halve ? 2 * n : n);
}

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be positive");
}

}  // namespace

BigInt total_necklaces(std::uint64_t n) {
  if (n == 0) return 1;
  return divisor_power_sum(n, DivisorParity::any, false);
}

BigInt polya(std::uint64_t bosons, std::uint64_t fermions) {
  std::uint64_t n = bosons + fermions;
  if (n == 0) return 1;
  BigInt sum = 0;
  for (auto d : common_divisors(bosons, fermions)) {
    sum += totient(d) * binomial(n / d, static_cast<std::int64_t>(fermions / d));
  }
  return exact_div(sum, n);
}

BigInt fermionic_count(std::uint64_t n) {
  require_positive(n, "fermionic_count");
  return divisor_power_sum(n, DivisorParity::odd, true);
}

BigInt allowed_total(std::uint64_t n) {
  require_positive(n, "allowed_total");
  return divisor_power_sum(n, DivisorParity::odd, false);
}

BigInt forbidden_total(std::uint64_t n) {
  require_positive(n, "forbidden_total");
  return divisor_power_sum(n, DivisorParity::even, false);
}

std::optional<unsigned> pauli_exponent(std::uint64_t bosons, std::uint64_t fermions) {
  if (bosons == 0 && fermions == 0) throw std::invalid_argument("pauli_exponent: (0, 0) has no exponent");
  if (fermions == 0) return std::nullopt;
  // F / 2^r odd pins r to the 2-adic valuation of F.
  unsigned r = two_adic_valuation(fermions);
  if (r == 0) return std::nullopt;
  if (bosons % (std::uint64_t{1} << r) != 0) return std::nullopt;
  return r;
}

BigInt forbidden(std::uint64_t bosons, std::uint64_t fermions) {
  auto r = pauli_exponent(bosons, fermions);
  if (!r) return 0;
  return polya(bosons >> *r, fermions >> *r);
}

BigInt allowed(std::uint64_t bosons, std::uint64_t fermions) {
  if (bosons == 0 && fermions == 0) return 1;
  return polya(bosons, fermions) - forbidden(bosons, fermions);
}

std::vector<BigInt> polya_row(std::uint64_t n) {
  if (n == 0) return {BigInt(1)};
  std::vector<BigInt> row(n + 1, BigInt(0));
  for (auto d : divisors(n)) {
    std::uint64_t k = n / d;
    BigInt phi = totient(d);
    // Walk C(k, j) for j = 0..k; it lands in cell F = j * d.
    BigInt c = 1;
    for (std::uint64_t j = 0; j <= k; ++j) {
      row[j * d] += phi * c;
      c *= k - j;
      c /= j + 1;
    }
  }
  for (auto& v : row) v = exact_div(v, n);
  return row;
}

std::vector<BigInt> forbidden_row(std::uint64_t n) {
  std::vector<BigInt> row(n + 1, BigInt(0));
  if (n == 0 || n % 2 == 1) return row;
  // Nonzero cells have F = 2^m f with f odd and 2^m | n, m >= 1.
  unsigned v = two_adic_valuation(n);
  for (unsigned m = 1; m <= v; ++m) {
    std::uint64_t reduced = n >> m;
    auto cell = polya_row(reduced);
    for (std::uint64_t f = 1; f <= reduced; f += 2) row[f << m] = std::move(cell[f]);
  }
  return row;
}

std::vector<BigInt> allowed_row(std::uint64_t n) {
  auto row = polya_row(n);
  if (n == 0) return row;
  auto forbidden_cells = forbidden_row(n);
  for (std::size_t f = 0; f < row.size(); ++f) row[f] -= forbidden_cells[f];
  return row;
}

AppendixCheck verify_appendix(std::uint64_t n) {
  require_positive(n, "verify_appendix");
  AppendixCheck check;
  check.n = n;
  for (std::uint64_t f = 0; f <= n; ++f) check.cell_sum += forbidden(n - f, f);
  check.closed_form = forbidden_total(n);
  check.telescoped = 0;
  if (n % 2 == 0) {
    unsigned r = two_adic_valuation(n);
    for (unsigned m = 1; m <= r; ++m) check.telescoped += fermionic_count(n >> m);
  }
  check.passed = check.cell_sum == check.closed_form && check.closed_form == check.telescoped;
  return check;
}

BigInt closed_form_count(CountKind kind, std::uint64_t bosons, std::uint64_t fermions) {
  switch (kind) {
    case CountKind::total:
      return polya(bosons, fermions);
    case CountKind::allowed:
      return allowed(bosons, fermions);
    case CountKind::forbidden:
      if (bosons == 0 && fermions == 0) return 0;
      return forbidden(bosons, fermions);
  }
  return 0;
}

CountTable closed_form_table(CountKind kind, std::uint64_t max_sum) {
  CountTable table{kind, Provenance::closed_form, {}};
  for (std::uint64_t n = 0; n <= max_sum; ++n) {
    std::vector<BigInt> row;
    switch (kind) {
      case CountKind::total:
        row = polya_row(n);
        break;
      case CountKind::allowed:
        row = allowed_row(n);
        break;
      case CountKind::forbidden:
        row = forbidden_row(n);
        break;
    }
    for (std::uint64_t f = 0; f <= n; ++f) table.entries.emplace(Cell{n - f, f}, std::move(row[f]));
  }
  return table;
}

CountTable closed_form_table(CountKind kind, std::uint64_t max_b, std::uint64_t max_f) {
  CountTable table{kind, Provenance::closed_form, {}};
  for (std::uint64_t b = 0; b <= max_b; ++b) {
    for (std::uint64_t f = 0; f <= max_f; ++f) table.entries.emplace(Cell{b, f}, closed_form_count(kind, b, f));
  }
  return table;
}

}  // namespace pauli
