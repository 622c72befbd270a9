#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "pauli/counting.hpp"
#include "pauli/necklace.hpp"

// Brute-force enumeration of necklace classes. This is the oracle for the
// closed forms in counting.hpp and shares no code with them.

namespace pauli {

enum class SieveMethod { scan, fixed_density };

inline constexpr std::size_t kMaxScanLength = 24;
inline constexpr std::size_t kMaxFixedDensityLength = 34;

std::string_view to_string(SieveMethod method);
SieveMethod parse_sieve_method(std::string_view text);

/// Throws std::out_of_range when n is outside the method's supported range.
void check_sieve_range(std::size_t n, SieveMethod method);

using NecklaceVisitor = std::function<void(const NecklaceClass&)>;

/// Every rotation class of length n, once, via its least rotation. The scan
/// method visits in increasing numeric order; fixed-density visits cell by
/// cell (F = 0..n), each cell in lexicographic order.
void enumerate_necklaces(std::size_t n, SieveMethod method, const NecklaceVisitor& visit);

/// Fixed-content necklaces with the given bead counts, lexicographic order
/// (FKM generation restricted to the content). bosons + fermions <= 34.
void enumerate_fixed_content(std::size_t bosons, std::size_t fermions, const NecklaceVisitor& visit);

/// Scan restricted to words whose top `prefix_bits` beads equal `prefix`.
/// The prefixes 0 .. 2^prefix_bits - 1 partition the scan.
void enumerate_scan_partition(std::size_t n, std::size_t prefix_bits, std::uint64_t prefix,
                              const NecklaceVisitor& visit);

struct SieveCell {
  BigInt total = 0;
  BigInt allowed = 0;
  BigInt forbidden = 0;

  friend bool operator==(const SieveCell&, const SieveCell&) = default;
};

struct SieveReport {
  std::size_t n = 0;
  SieveMethod method = SieveMethod::scan;
  std::vector<SieveCell> cells;  // indexed by F, B = n - F

  BigInt classes() const;
  BigInt allowed() const;
  BigInt forbidden() const;
  CountTable table(CountKind kind) const;
};

/// Tally classify() over every class of length n. Work is split across
/// `threads` workers; the report does not depend on the split.
SieveReport sieve_counts(std::size_t n, SieveMethod method, unsigned threads = 1);

}  // namespace pauli
