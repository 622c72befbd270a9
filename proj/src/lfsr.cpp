#include "pauli/lfsr.hpp"

#include "pauli/parallel.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pauli {

std::string to_string(const BitSequence& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

std::uint8_t lfsr_step(const BinaryWord& window) {
  if (window.empty()) throw std::invalid_argument("lfsr_step: register length must be at least 2");
  return window.fermions() % 2 == 1 ? 0 : 1;
}

LfsrState::LfsrState(const BinaryWord& seed) : length_(seed.size() + 1), window_(seed.bits()) {
  if (seed.empty()) throw std::invalid_argument("LfsrState: seed must have at least one bit");
  if (length_ > BinaryWord::kMaxLength) throw std::invalid_argument("LfsrState: register longer than 64");
  for (std::size_t i = 0; i < seed.size(); ++i) emitted_.push_back(seed[i]);
}

std::uint8_t LfsrState::step() {
  std::uint8_t bit = lfsr_step(window());
  window_ = ((window_ << 1) | bit) & BinaryWord::mask(length_ - 1);
  emitted_.push_back(bit);
  return bit;
}

BitSequence lfsr_sequence(const BinaryWord& seed, std::size_t length) {
  LfsrState state(seed);
  while (state.emitted().size() < length) state.step();
  BitSequence out = state.emitted();
  out.resize(length);
  return out;
}

BinaryWord lfsr_cell(const BinaryWord& seed) {
  std::uint8_t bit = lfsr_step(seed);
  return BinaryWord((seed.bits() << 1) | bit, seed.size() + 1);
}

std::vector<BinaryWord> lfsr_cycles(std::size_t n, unsigned threads) {
  if (n < 2 || n > kMaxLfsrLength) {
    throw std::out_of_range("lfsr_cycles: n = " + std::to_string(n) + " outside 2.." +
                            std::to_string(kMaxLfsrLength));
  }
  threads = std::max(1U, threads);
  std::uint64_t seeds = std::uint64_t{1} << (n - 1);
  std::vector<std::vector<BinaryWord>> partial(threads);
  auto work = [&](std::uint64_t seed, unsigned w) {
    BinaryWord cell = canonical_form(lfsr_cell(BinaryWord(seed, n - 1)));
    // Each distinct rotation of a cell is reached from its own seed; keep the
    // class once, from the seed that is its canonical prefix.
    if ((cell.bits() >> 1) == seed) partial[w].push_back(cell);
  };
  for_each_index(seeds, threads, [&](std::uint64_t seed, unsigned w) { work(seed, w); });
  std::vector<BinaryWord> cycles;
  for (auto& p : partial) cycles.insert(cycles.end(), p.begin(), p.end());
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  return cycles;
}

}  // namespace pauli
