#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pauli/exactmath.hpp"

// Closed-form necklace counts. Cells are addressed by (B, F): B bosonic and
// F fermionic beads, n = B + F. The empty necklace (0, 0) is counted once
// and is allowed.

namespace pauli {

/// MacMahon: (1/n) sum_{d|n} phi(d) 2^(n/d). total_necklaces(0) == 1.
BigInt total_necklaces(std::uint64_t n);

/// Polya: (1/(B+F)) sum_{d | gcd(B,F)} phi(d) C((B+F)/d, F/d). polya(0,0) == 1.
BigInt polya(std::uint64_t bosons, std::uint64_t fermions);

/// Necklaces with an odd number of fermions: (1/2n) sum_{d|n, d odd} phi(d) 2^(n/d).
BigInt fermionic_count(std::uint64_t n);

/// (1/n) sum over odd d | n. Equals 2 * fermionic_count(n).
BigInt allowed_total(std::uint64_t n);

/// (1/n) sum over even d | n. Zero for odd n.
BigInt forbidden_total(std::uint64_t n);

/// The r >= 1 with F / 2^r odd and 2^r | B, if any.
std::optional<unsigned> pauli_exponent(std::uint64_t bosons, std::uint64_t fermions);

/// polya(B / 2^r, F / 2^r) when the Pauli exponent r exists, else 0.
BigInt forbidden(std::uint64_t bosons, std::uint64_t fermions);

/// polya(B, F) - forbidden(B, F).
BigInt allowed(std::uint64_t bosons, std::uint64_t fermions);

// Whole rows at fixed n = B + F, indexed by F = 0..n. These share the
// binomial rows across cells and are what the sweeps use.
std::vector<BigInt> polya_row(std::uint64_t n);
std::vector<BigInt> forbidden_row(std::uint64_t n);
std::vector<BigInt> allowed_row(std::uint64_t n);

struct AppendixCheck {
  std::uint64_t n = 0;
  BigInt cell_sum;     // sum_F forbidden(n - F, F)
  BigInt closed_form;  // forbidden_total(n)
  BigInt telescoped;   // sum_{m=1..v2(n)} fermionic_count(n / 2^m)
  bool passed = false;
};

/// Consistency of the per-cell forbidden counts with the global total.
AppendixCheck verify_appendix(std::uint64_t n);

enum class CountKind { total, allowed, forbidden };
enum class Provenance { closed_form, sieve, printed };

using Cell = std::pair<std::uint64_t, std::uint64_t>;  // (B, F)

struct CountTable {
  CountKind kind = CountKind::allowed;
  Provenance provenance = Provenance::closed_form;
  std::map<Cell, BigInt> entries;

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Closed-form table over all cells with B + F <= max_sum.
CountTable closed_form_table(CountKind kind, std::uint64_t max_sum);

/// Closed-form table over 0 <= B <= max_b, 0 <= F <= max_f.
CountTable closed_form_table(CountKind kind, std::uint64_t max_b, std::uint64_t max_f);

BigInt closed_form_count(CountKind kind, std::uint64_t bosons, std::uint64_t fermions);

}  // namespace pauli
