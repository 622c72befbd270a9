#include "pauli/indices.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pauli/counting.hpp"
#include "pauli/parallel.hpp"

namespace pauli {

namespace {

void require_index_args(std::uint64_t n, std::uint64_t m, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be positive");
  if (m > n) throw std::invalid_argument(std::string(what) + ": m must not exceed n");
}

// c(F) for the strong index: one unit removed at F even, |B - F| == 1.
BigInt strong_term(std::uint64_t bosons, std::uint64_t fermions, BigInt allowed_count) {
  bool adjacent = bosons + 1 == fermions || fermions + 1 == bosons;
  if (adjacent && fermions % 2 == 0) allowed_count -= 1;
  return allowed_count;
}

bool odd(std::uint64_t k) { return (k & 1U) != 0; }

}  // namespace

BigInt witten(std::uint64_t n, std::uint64_t m) {
  require_index_args(n, m, "witten");
  auto row = allowed_row(n);
  BigInt sum = 0;
  for (std::uint64_t f = 0; f <= m; ++f) {
    if (odd(m - f)) {
      sum -= row[f];
    } else {
      sum += row[f];
    }
  }
  return sum;
}

std::vector<BigInt> strong_diagonal(std::uint64_t n) {
  std::vector<BigInt> cells;
  for (std::uint64_t f = 0; 2 * f <= n; ++f) cells.push_back(allowed(n - 2 * f, f));
  return cells;
}

BigInt strong_witten(std::uint64_t n, std::uint64_t m) {
  require_index_args(n, m, "strong_witten");
  std::uint64_t half = m / 2;
  BigInt sum = 0;
  for (std::uint64_t f = 0; f <= half && 2 * f <= n; ++f) {
    BigInt term = strong_term(n - 2 * f, f, allowed(n - 2 * f, f));
    if (odd(half - f)) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

bool GradedIndexReport::holds() const {
  bool all_nonnegative = std::all_of(values.begin(), values.end(), [](const GradedValue& v) { return v.nonnegative; });
  if (kind == IndexKind::strong) return all_nonnegative;
  return all_nonnegative && !values.empty() && values.back().value == 0;
}

GradedIndexReport graded_report(std::uint64_t n, IndexKind kind, const std::vector<BigInt>& cells) {
  GradedIndexReport report;
  report.n = n;
  report.kind = kind;
  // Prefix sums of (-1)^F c(F); the graded value is (-1)^top times one of them.
  std::vector<BigInt> prefix;
  BigInt running = 0;
  for (std::uint64_t f = 0; f < cells.size(); ++f) {
    BigInt term = kind == IndexKind::weak ? cells[f] : strong_term(n - 2 * f, f, cells[f]);
    if (odd(f)) {
      running -= term;
    } else {
      running += term;
    }
    prefix.push_back(running);
  }
  for (std::uint64_t m = 0; m <= n; ++m) {
    std::uint64_t top = kind == IndexKind::weak ? m : m / 2;
    std::uint64_t last = std::min<std::uint64_t>(top, prefix.size() - 1);
    BigInt value = odd(top) ? BigInt(-prefix[last]) : prefix[last];
    report.values.push_back({m, value, value >= 0});
  }
  return report;
}

GradedIndexReport witten_report(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("witten_report: n must be positive");
  return graded_report(n, IndexKind::weak, allowed_row(n));
}

GradedIndexReport strong_witten_report(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("strong_witten_report: n must be positive");
  return graded_report(n, IndexKind::strong, strong_diagonal(n));
}

std::vector<std::vector<BigInt>> strong_diagonals(std::uint64_t n_max, unsigned threads) {
  std::vector<std::vector<BigInt>> diagonals(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) diagonals[n].resize(n / 2 + 1);
  // Row N holds the cells (N - F, F); each lies on diagonal N + F, and each
  // slot is written by exactly one row.
  for_each_index(n_max + 1, threads, [&](std::uint64_t row_n, unsigned) {
    auto row = allowed_row(row_n);
    for (std::uint64_t f = 0; f <= row_n && row_n + f <= n_max; ++f) diagonals[row_n + f][f] = std::move(row[f]);
  });
  return diagonals;
}

BigInt strsc_rhs(std::uint64_t n) { return (n % 6 == 1 || n % 6 == 5) ? 1 : 0; }

StrscCheck strsc_check(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("strsc_check: n must be positive");
  StrscCheck check;
  check.n = n;
  check.lhs = 0;
  auto cells = strong_diagonal(n);
  for (std::uint64_t f = 0; f < cells.size(); ++f) {
    if (odd(f)) {
      check.lhs -= cells[f];
    } else {
      check.lhs += cells[f];
    }
  }
  check.rhs = strsc_rhs(n);
  check.passed = check.lhs == check.rhs;
  return check;
}

std::vector<BigInt> strsc_lhs_sweep(std::uint64_t n_max, unsigned threads) {
  threads = std::max(1U, threads);
  std::vector<std::vector<BigInt>> partial(threads, std::vector<BigInt>(n_max + 1, BigInt(0)));
  for_each_index(n_max + 1, threads, [&](std::uint64_t row_n, unsigned w) {
    auto row = allowed_row(row_n);
    for (std::uint64_t f = 0; f <= row_n && row_n + f <= n_max; ++f) {
      if (odd(f)) {
        partial[w][row_n + f] -= row[f];
      } else {
        partial[w][row_n + f] += row[f];
      }
    }
  });
  std::vector<BigInt> lhs(n_max + 1, BigInt(0));
  for (const auto& p : partial) {
    for (std::uint64_t n = 0; n <= n_max; ++n) lhs[n] += p[n];
  }
  return lhs;
}

BivariatePolynomial zagier_poly(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("zagier_poly: n must be positive");
  BivariatePolynomial sum;
  for (auto d : divisors(n)) {
    // x^d - (-y)^d
    BigInt y_coefficient = odd(d) ? 1 : -1;
    auto base = BivariatePolynomial::monomial(1, d, 0) + BivariatePolynomial::monomial(y_coefficient, 0, d);
    sum += base.pow(n / d) * BigInt(totient(d));
  }
  return sum.exact_divide(n);
}

namespace {

bool coefficients_match(std::uint64_t n, const BivariatePolynomial& phi) {
  if (!phi.is_homogeneous(n)) return false;
  auto row = allowed_row(n);
  std::size_t nonzero = 0;
  for (std::uint64_t f = 0; f <= n; ++f) {
    if (phi.coefficient(n - f, f) != row[f]) return false;
    if (row[f] != 0) ++nonzero;
  }
  return nonzero == phi.terms().size();
}

void finish_specialization(ZagierCheck& check) {
  auto strsc = strsc_check(check.n);
  check.specialization_match = check.specialized == strsc.lhs && check.specialized == strsc.rhs;
}

}  // namespace

ZagierCheck zagier_check(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("zagier_check: n must be positive");
  ZagierCheck check;
  check.n = n;
  check.specialized = 0;
  // Phi(x, -x^2; k) has x degrees k..2k, so only k >= n/2 reach x^n.
  for (std::uint64_t k = (n + 1) / 2; k <= n; ++k) {
    auto phi = zagier_poly(k);
    if (k == n) check.coefficients_match = coefficients_match(n, phi);
    auto series = phi.substitute_y(-1, 2);
    if (auto it = series.find(n); it != series.end()) check.specialized += it->second;
  }
  finish_specialization(check);
  return check;
}

std::vector<ZagierCheck> zagier_sweep(std::uint64_t n_max) {
  std::vector<ZagierCheck> checks(n_max);
  std::vector<BigInt> series(n_max + 1, BigInt(0));
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    auto phi = zagier_poly(k);
    checks[k - 1].n = k;
    checks[k - 1].coefficients_match = coefficients_match(k, phi);
    for (const auto& [degree, c] : phi.substitute_y(-1, 2)) {
      if (degree <= n_max) series[degree] += c;
    }
  }
  // Every k contributing to x^n satisfies k <= n, so series[n] is complete.
  for (auto& check : checks) {
    check.specialized = series[check.n];
    finish_specialization(check);
  }
  return checks;
}

Staircase staircase(std::uint64_t fermions) {
  Staircase s;
  s.fermions = fermions;
  s.upper = allowed(fermions + 1, fermions);
  s.matches_catalan = s.upper == catalan(fermions);
  if (fermions >= 1) {
    s.lower = allowed(fermions - 1, fermions);
    s.matches_catalan = s.matches_catalan && *s.lower == catalan(fermions - 1);
  }
  return s;
}

}  // namespace pauli
