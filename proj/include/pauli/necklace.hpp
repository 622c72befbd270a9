#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace pauli {

/// A fixed-length sequence of at most 64 beads packed into one machine word.
/// Bead 0 (the leftmost) is stored in the most significant of the `size()`
/// low bits, so for equal lengths numeric order on `bits()` is lexicographic
/// order on beads. 0 is a bosonic bead, 1 a fermionic one.
class BinaryWord {
 public:
  static constexpr std::size_t kMaxLength = 64;

  BinaryWord() = default;
  BinaryWord(std::uint64_t bits, std::size_t length);

  /// Accepts '0'/'1' and the aliases 'a' (boson) / 'f' (fermion).
  static BinaryWord parse(std::string_view text);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](std::size_t i) const { return (bits_ >> (length_ - 1 - i)) & 1U; }

  std::size_t fermions() const;
  std::size_t bosons() const { return length_ - fermions(); }

  std::string to_string() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  static std::uint64_t mask(std::size_t length) {
    return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
  }

 private:
  std::uint64_t bits_ = 0;
  std::size_t length_ = 0;
};

enum class Statistics { bosonic, fermionic };
enum class Status { allowed, forbidden };

struct NecklaceClass {
  BinaryWord canonical;
  std::size_t n = 0;
  std::size_t bosons = 0;
  std::size_t fermions = 0;
  std::size_t period = 0;          // minimal period p
  std::size_t symmetry_order = 0;  // k0 = n / p
  Statistics statistics = Statistics::bosonic;
  Status status = Status::allowed;
};

/// Cyclic shift to the right by s (mod n): the last bead moves to the front.
BinaryWord rotate(const BinaryWord& w, long long s);

/// Fermionic sign picked up by `rotate(w, s)` when the word is read as a
/// trace of creation operators. Each single right shift moves the last bead
/// past the other n - 1; a fermionic bead contributes (-1)^(F-1).
int rotation_sign(const BinaryWord& w, long long s);

/// Lexicographically least rotation (Booth's algorithm, O(n)).
BinaryWord canonical_form(const BinaryWord& w);

/// True iff w is its own least rotation.
bool is_necklace(const BinaryWord& w);

/// Smallest p >= 1 with p | n and rotate(w, p) == w. Rejects the empty word.
std::size_t minimal_period(const BinaryWord& w);

/// Forbidden iff the symmetry order k0 is even and F / k0 is odd.
bool forbidden_by_symmetry(const BinaryWord& w);

/// Forbidden iff some rotation that maps w to itself carries sign -1.
bool forbidden_by_sign(const BinaryWord& w);

/// Full classification. Both forbidden criteria are evaluated and must agree
/// (std::logic_error otherwise). Rejects the empty word.
NecklaceClass classify(const BinaryWord& w);

std::string_view to_string(Statistics s);
std::string_view to_string(Status s);

}  // namespace pauli
