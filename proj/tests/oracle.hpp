#pragma once

// Slow, string-based reference implementations for the tests. Nothing here
// calls into the library, so agreement with it is an independent check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

inline std::uint64_t totient(std::uint64_t d) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 1; x <= d; ++x) {
    if (std::gcd(x, d) == 1) ++count;
  }
  return count;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

/// Pascal's triangle up to row `rows`.
inline std::vector<std::vector<Big>> pascal(std::size_t rows) {
  std::vector<std::vector<Big>> t(rows + 1);
  for (std::size_t a = 0; a <= rows; ++a) {
    t[a].assign(a + 1, 1);
    for (std::size_t b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

inline std::string word(std::uint64_t bits, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if ((bits >> (n - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

/// Right rotation by one step: last bead to the front.
inline std::string rotate_once(const std::string& w) {
  if (w.empty()) return w;
  return w.back() + w.substr(0, w.size() - 1);
}

inline std::string rotate(std::string w, std::size_t s) {
  for (std::size_t i = 0; i < s; ++i) w = rotate_once(w);
  return w;
}

/// Moves the last operator to the front one transposition at a time,
/// counting fermion-fermion swaps.
inline int rotation_sign(std::string w, std::size_t s) {
  int sign = 1;
  for (std::size_t step = 0; step < s; ++step) {
    for (std::size_t i = w.size() - 1; i > 0; --i) {
      if (w[i] == '1' && w[i - 1] == '1') sign = -sign;
      std::swap(w[i], w[i - 1]);
    }
  }
  return sign;
}

inline std::string least_rotation(const std::string& w) {
  std::string best = w;
  std::string cur = w;
  for (std::size_t s = 1; s < w.size(); ++s) {
    cur = rotate_once(cur);
    best = std::min(best, cur);
  }
  return best;
}

inline std::size_t fermions(const std::string& w) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), '1')); }

/// Forbidden iff the trace equals minus itself under some self-rotation.
inline bool forbidden(const std::string& w) {
  for (std::size_t s = 1; s <= w.size(); ++s) {
    if (rotate(w, s) == w && rotation_sign(w, s) == -1) return true;
  }
  return false;
}

struct Cell {
  Big total = 0, allowed = 0, forbidden = 0;
};

/// Classes of length n by F, from the set of least rotations of all words.
inline std::vector<Cell> brute_cells(std::size_t n) {
  std::set<std::string> classes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) classes.insert(least_rotation(word(bits, n)));
  std::vector<Cell> cells(n + 1);
  for (const auto& c : classes) {
    auto& cell = cells[fermions(c)];
    ++cell.total;
    if (forbidden(c)) {
      ++cell.forbidden;
    } else {
      ++cell.allowed;
    }
  }
  return cells;
}

inline std::set<std::string> brute_classes(std::size_t n) {
  std::set<std::string> classes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) classes.insert(least_rotation(word(bits, n)));
  return classes;
}

/// The feedback register run on characters.
inline std::string lfsr(const std::string& seed, std::size_t length) {
  std::string s = seed;
  std::size_t window = seed.size();
  while (s.size() < length) {
    std::size_t ones = static_cast<std::size_t>(std::count(s.end() - static_cast<std::ptrdiff_t>(window), s.end(), '1'));
    s.push_back(ones % 2 == 1 ? '0' : '1');
  }
  return s.substr(0, length);
}

}  // namespace oracle
