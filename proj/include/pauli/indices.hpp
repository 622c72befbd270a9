#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pauli/exactmath.hpp"
#include "pauli/polynomial.hpp"

// Graded sums of allowed counts. The weak index runs along rows B + F = n,
// the strong one along diagonals B + 2F = n.

namespace pauli {

/// W(n; m) = sum_{F=0..m} (-1)^(F-m) allowed(n-F, F). Requires 1 <= n, m <= n.
BigInt witten(std::uint64_t n, std::uint64_t m);

/// W~(n; m) = sum over F <= m/2, B = n - 2F >= 0 of (-1)^(F - floor(m/2)) c(F),
/// c(F) = allowed(B, F) - [F even and |B - F| == 1]. Requires m <= n.
BigInt strong_witten(std::uint64_t n, std::uint64_t m);

enum class IndexKind { weak, strong };

struct GradedValue {
  std::uint64_t m = 0;
  BigInt value;
  bool nonnegative = true;
};

struct GradedIndexReport {
  std::uint64_t n = 0;
  IndexKind kind = IndexKind::weak;
  std::vector<GradedValue> values;  // m = 0..n

  /// Weak: every value >= 0 and W(n; n) == 0. Strong: every value >= 0.
  bool holds() const;
};

GradedIndexReport witten_report(std::uint64_t n);
GradedIndexReport strong_witten_report(std::uint64_t n);

/// The report from precomputed cells: a row allowed(n-F, F) for the weak
/// index, a diagonal allowed(n-2F, F) for the strong one.
GradedIndexReport graded_report(std::uint64_t n, IndexKind kind, const std::vector<BigInt>& cells);

/// The diagonal cells allowed(n - 2F, F), F = 0..floor(n/2).
std::vector<BigInt> strong_diagonal(std::uint64_t n);

/// All diagonals up to n_max, built row by row from allowed_row().
std::vector<std::vector<BigInt>> strong_diagonals(std::uint64_t n_max, unsigned threads = 1);

struct StrscCheck {
  std::uint64_t n = 0;
  BigInt lhs;  // sum_F (-1)^F allowed(n - 2F, F)
  BigInt rhs;  // 1 if n = +-1 mod 6 else 0
  bool passed = false;
};

BigInt strsc_rhs(std::uint64_t n);
StrscCheck strsc_check(std::uint64_t n);

/// Signed diagonal sums for n = 0..n_max, accumulated row by row.
std::vector<BigInt> strsc_lhs_sweep(std::uint64_t n_max, unsigned threads = 1);

/// (1/n) sum_{d|n} phi(d) (x^d - (-y)^d)^(n/d), expanded.
BivariatePolynomial zagier_poly(std::uint64_t n);

struct ZagierCheck {
  std::uint64_t n = 0;
  bool coefficients_match = false;     // [x^(n-F) y^F] == allowed(n-F, F)
  bool specialization_match = false;   // [x^n] of sum_k Phi(x, -x^2; k) == strsc lhs and rhs
  BigInt specialized;                  // that coefficient
  bool passed() const { return coefficients_match && specialization_match; }
};

ZagierCheck zagier_check(std::uint64_t n);

/// zagier_check for n = 1..n_max, expanding each polynomial once.
std::vector<ZagierCheck> zagier_sweep(std::uint64_t n_max);

struct Staircase {
  std::uint64_t fermions = 0;
  BigInt upper;                  // allowed(F + 1, F)
  std::optional<BigInt> lower;   // allowed(F - 1, F), F >= 1
  bool matches_catalan = false;  // upper == C_F, lower == C_(F-1)
};

Staircase staircase(std::uint64_t fermions);

}  // namespace pauli
