#include "pauli/sieve.hpp"

#include "pauli/parallel.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace pauli {

std::string_view to_string(SieveMethod method) {
  return method == SieveMethod::scan ? "scan" : "fixed-density";
}

SieveMethod parse_sieve_method(std::string_view text) {
  if (text == "scan") return SieveMethod::scan;
  if (text == "fixed-density") return SieveMethod::fixed_density;
  throw std::invalid_argument("unknown sieve method '" + std::string(text) + "'");
}

void check_sieve_range(std::size_t n, SieveMethod method) {
  std::size_t limit = method == SieveMethod::scan ? kMaxScanLength : kMaxFixedDensityLength;
  if (n < 1 || n > limit) {
    throw std::out_of_range("sieve: n = " + std::to_string(n) + " outside 1.." + std::to_string(limit) +
                            " for method " + std::string(to_string(method)));
  }
}

void enumerate_scan_partition(std::size_t n, std::size_t prefix_bits, std::uint64_t prefix,
                              const NecklaceVisitor& visit) {
  check_sieve_range(n, SieveMethod::scan);
  prefix_bits = std::min(prefix_bits, n);
  std::size_t low_bits = n - prefix_bits;
  std::uint64_t first = prefix << low_bits;
  std::uint64_t count = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 0; i < count; ++i) {
    BinaryWord w(first + i, n);
    if (is_necklace(w)) visit(classify(w));
  }
}

namespace {

// FKM prenecklace recursion with bead budgets. a[1..n] holds the word, a[0]
// is a sentinel 0. `p` is the length of the longest Lyndon prefix.
class FixedContentGenerator {
 public:
  FixedContentGenerator(std::size_t bosons, std::size_t fermions, const NecklaceVisitor& visit)
      : n_(bosons + fermions), remaining_{bosons, fermions}, visit_(visit) {}

  void run() {
    if (n_ == 0) return;
    if (remaining_[1] == 0 || remaining_[0] == 0) {
      // Single-colour content: one necklace.
      emit_word(remaining_[1] == 0 ? 0 : BinaryWord::mask(n_));
      return;
    }
    // A necklace with both colours starts with 0.
    a_[1] = 0;
    --remaining_[0];
    generate(2, 1, false);
  }

 private:
  void generate(std::size_t t, std::size_t p, bool seen_one) {
    std::size_t left = n_ - t + 1;
    if (left == 0) {
      if (n_ % p == 0) emit();
      return;
    }
    if (remaining_[1] == left) {
      // Only fermions remain: the tail is forced, finish the period test.
      for (std::size_t j = t; j <= n_; ++j) {
        a_[j] = 1;
        if (a_[j - p] == 0) p = j;
      }
      if (n_ % p == 0) emit();
      return;
    }
    // A word containing a 1 followed only by 0s cannot be least.
    if (remaining_[0] == left && seen_one) return;
    for (int bead = a_[t - p]; bead <= 1; ++bead) {
      if (remaining_[bead] == 0) continue;
      --remaining_[bead];
      a_[t] = static_cast<std::uint8_t>(bead);
      generate(t + 1, bead == a_[t - p] ? p : t, seen_one || bead == 1);
      ++remaining_[bead];
    }
  }

  void emit() {
    std::uint64_t bits = 0;
    for (std::size_t i = 1; i <= n_; ++i) bits = (bits << 1) | a_[i];
    emit_word(bits);
  }

  void emit_word(std::uint64_t bits) { visit_(classify(BinaryWord(bits, n_))); }

  std::size_t n_;
  std::array<std::size_t, 2> remaining_;
  std::array<std::uint8_t, kMaxFixedDensityLength + 1> a_{};
  const NecklaceVisitor& visit_;
};

}  // namespace

void enumerate_fixed_content(std::size_t bosons, std::size_t fermions, const NecklaceVisitor& visit) {
  if (bosons + fermions > kMaxFixedDensityLength) {
    throw std::out_of_range("enumerate_fixed_content: more than " + std::to_string(kMaxFixedDensityLength) +
                            " beads");
  }
  FixedContentGenerator(bosons, fermions, visit).run();
}

void enumerate_necklaces(std::size_t n, SieveMethod method, const NecklaceVisitor& visit) {
  check_sieve_range(n, method);
  if (method == SieveMethod::scan) {
    enumerate_scan_partition(n, 0, 0, visit);
    return;
  }
  for (std::size_t f = 0; f <= n; ++f) enumerate_fixed_content(n - f, f, visit);
}

BigInt SieveReport::classes() const {
  BigInt sum = 0;
  for (const auto& c : cells) sum += c.total;
  return sum;
}

BigInt SieveReport::allowed() const {
  BigInt sum = 0;
  for (const auto& c : cells) sum += c.allowed;
  return sum;
}

BigInt SieveReport::forbidden() const {
  BigInt sum = 0;
  for (const auto& c : cells) sum += c.forbidden;
  return sum;
}

CountTable SieveReport::table(CountKind kind) const {
  CountTable t{kind, Provenance::sieve, {}};
  for (std::size_t f = 0; f < cells.size(); ++f) {
    const auto& c = cells[f];
    const BigInt& v = kind == CountKind::total ? c.total : kind == CountKind::allowed ? c.allowed : c.forbidden;
    t.entries.emplace(Cell{n - f, f}, v);
  }
  return t;
}

namespace {

struct Tally {
  std::vector<std::array<std::uint64_t, 2>> cells;  // [F] -> {allowed, forbidden}
  explicit Tally(std::size_t n) : cells(n + 1, {0, 0}) {}
  void add(const NecklaceClass& c) { ++cells[c.fermions][c.status == Status::forbidden ? 1 : 0]; }
};

}  // namespace

SieveReport sieve_counts(std::size_t n, SieveMethod method, unsigned threads) {
  check_sieve_range(n, method);
  threads = std::max(1U, threads);

  // Work items: scan prefixes or fixed-density cells.
  std::size_t items = 0;
  std::size_t prefix_bits = 0;
  if (method == SieveMethod::scan) {
    prefix_bits = std::min<std::size_t>(n, 8);
    items = std::size_t{1} << prefix_bits;
  } else {
    items = n + 1;
  }
  auto run_item = [&](std::size_t item, Tally& tally) {
    auto add = [&](const NecklaceClass& c) { tally.add(c); };
    if (method == SieveMethod::scan) {
      enumerate_scan_partition(n, prefix_bits, item, add);
    } else {
      enumerate_fixed_content(n - item, item, add);
    }
  };

  std::vector<Tally> partial(threads, Tally(n));
  for_each_index(items, threads, [&](std::uint64_t item, unsigned w) { run_item(item, partial[w]); });

  SieveReport report;
  report.n = n;
  report.method = method;
  report.cells.resize(n + 1);
  for (const auto& tally : partial) {
    for (std::size_t f = 0; f <= n; ++f) {
      report.cells[f].allowed += tally.cells[f][0];
      report.cells[f].forbidden += tally.cells[f][1];
    }
  }
  for (auto& c : report.cells) c.total = c.allowed + c.forbidden;
  return report;
}

}  // namespace pauli
