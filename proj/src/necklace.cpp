#include "pauli/necklace.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace pauli {

BinaryWord::BinaryWord(std::uint64_t bits, std::size_t length) : bits_(bits), length_(length) {
  if (length > kMaxLength) throw std::invalid_argument("BinaryWord: length exceeds 64 beads");
  if ((bits & ~mask(length)) != 0) throw std::invalid_argument("BinaryWord: bits set beyond length");
}

BinaryWord BinaryWord::parse(std::string_view text) {
  if (text.size() > kMaxLength) throw std::invalid_argument("BinaryWord: word longer than 64 beads");
  std::uint64_t bits = 0;
  for (char c : text) {
    bits <<= 1;
    switch (c) {
      case '0':
      case 'a':
        break;
      case '1':
      case 'f':
        bits |= 1;
        break;
      default:
        throw std::invalid_argument(std::string("BinaryWord: invalid bead '") + c + "'");
    }
  }
  return BinaryWord(bits, text.size());
}

std::size_t BinaryWord::fermions() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::string BinaryWord::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((*this)[i]) out[i] = '1';
  }
  return out;
}

namespace {

std::size_t reduce_shift(long long s, std::size_t n) {
  auto m = static_cast<long long>(n);
  return static_cast<std::size_t>(((s % m) + m) % m);
}

// Right rotation of the packed bits by 0 <= s < n.
std::uint64_t rotr(std::uint64_t bits, std::size_t n, std::size_t s) {
  if (s == 0) return bits;
  return ((bits >> s) | (bits << (n - s))) & BinaryWord::mask(n);
}

}  // namespace

BinaryWord rotate(const BinaryWord& w, long long s) {
  std::size_t n = w.size();
  if (n == 0) return w;
  return BinaryWord(rotr(w.bits(), n, reduce_shift(s, n)), n);
}

int rotation_sign(const BinaryWord& w, long long s) {
  std::size_t n = w.size();
  if (n == 0) return 1;
  // A full turn moves every fermion past F - 1 others: F(F-1) swaps, even.
  std::size_t shift = reduce_shift(s, n);
  // The beads moved to the front are the last `shift` beads of w.
  auto moved_fermions = std::popcount(w.bits() & BinaryWord::mask(shift));
  bool odd_per_fermion = (w.fermions() % 2) == 0;  // (-1)^(F-1) == -1
  return (odd_per_fermion && (moved_fermions % 2 == 1)) ? -1 : 1;
}

BinaryWord canonical_form(const BinaryWord& w) {
  std::size_t n = w.size();
  if (n <= 1) return w;
  // Booth's least rotation over the doubled string.
  auto at = [&](std::size_t i) { return static_cast<int>(w[i % n]); };
  std::array<long long, 2 * BinaryWord::kMaxLength> failure;
  failure.fill(-1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    int sj = at(j);
    long long i = failure[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = failure[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i) + 1)) {  // i == -1
      if (sj < at(k)) k = j;
      failure[j - k] = -1;
    } else {
      failure[j - k] = i + 1;
    }
  }
  // Rotation starting at bead k is a left shift by k.
  return rotate(w, -static_cast<long long>(k));
}

bool is_necklace(const BinaryWord& w) {
  std::size_t n = w.size();
  for (std::size_t s = 1; s < n; ++s) {
    if (rotr(w.bits(), n, s) < w.bits()) return false;
  }
  return true;
}

std::size_t minimal_period(const BinaryWord& w) {
  std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("minimal_period: empty word");
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p == 0 && rotr(w.bits(), n, p) == w.bits()) return p;
  }
  return n;
}

bool forbidden_by_symmetry(const BinaryWord& w) {
  std::size_t k0 = w.size() / minimal_period(w);
  std::size_t fermions_per_cell = w.fermions() / k0;
  return k0 % 2 == 0 && fermions_per_cell % 2 == 1;
}

bool forbidden_by_sign(const BinaryWord& w) {
  std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("forbidden_by_sign: empty word");
  for (std::size_t s = 1; s < n; ++s) {
    if (rotr(w.bits(), n, s) == w.bits() && rotation_sign(w, static_cast<long long>(s)) == -1) return true;
  }
  return false;
}

NecklaceClass classify(const BinaryWord& w) {
  if (w.empty()) throw std::invalid_argument("classify: empty word");
  NecklaceClass c;
  c.canonical = canonical_form(w);
  c.n = w.size();
  c.fermions = w.fermions();
  c.bosons = c.n - c.fermions;
  c.period = minimal_period(w);
  c.symmetry_order = c.n / c.period;
  c.statistics = (c.fermions % 2 == 1) ? Statistics::fermionic : Statistics::bosonic;
  bool by_symmetry = forbidden_by_symmetry(w);
  if (by_symmetry != forbidden_by_sign(w)) {
    throw std::logic_error("classify: symmetry and sign criteria disagree for " + w.to_string());
  }
  c.status = by_symmetry ? Status::forbidden : Status::allowed;
  return c;
}

std::string_view to_string(Statistics s) { return s == Statistics::fermionic ? "fermionic" : "bosonic"; }
std::string_view to_string(Status s) { return s == Status::forbidden ? "forbidden" : "allowed"; }

}  // namespace pauli
