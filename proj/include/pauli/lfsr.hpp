#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pauli/necklace.hpp"

// Odd-parity feedback register. A register of length n holds the last n - 1
// emitted bits and appends 1 + (their sum mod 2), so every n consecutive
// bits have odd sum and the output repeats with period n.

namespace pauli {

using BitSequence = std::vector<std::uint8_t>;

std::string to_string(const BitSequence& bits);

/// Next bit for a window of n - 1 bits: 0 if the window sum is odd, 1 if even.
/// Rejects an empty window (n < 2).
std::uint8_t lfsr_step(const BinaryWord& window);

class LfsrState {
 public:
  /// Register of length seed.size() + 1.
  explicit LfsrState(const BinaryWord& seed);

  std::size_t register_length() const { return length_; }
  BinaryWord window() const { return BinaryWord(window_, length_ - 1); }
  const BitSequence& emitted() const { return emitted_; }

  std::uint8_t step();

 private:
  std::size_t length_;
  std::uint64_t window_;
  BitSequence emitted_;
};

/// The seed followed by generated bits, `length` bits in all (a prefix of
/// the seed when length < seed size).
BitSequence lfsr_sequence(const BinaryWord& seed, std::size_t length);

/// The period-n cell starting at the seed: seed plus one generated bit.
BinaryWord lfsr_cell(const BinaryWord& seed);

inline constexpr std::size_t kMaxLfsrLength = 24;

/// Distinct canonical cells over all 2^(n-1) seeds, sorted. 2 <= n <= 24.
std::vector<BinaryWord> lfsr_cycles(std::size_t n, unsigned threads = 1);

}  // namespace pauli
