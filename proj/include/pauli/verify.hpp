#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pauli {

enum class Check { witten, strong_witten, strsc, zagier, appendix, balance, oracle, tables, catalan };

Check parse_check(std::string_view text);
std::string_view to_string(Check check);
const std::vector<Check>& all_checks();

struct CaseResult {
  std::uint64_t n = 0;
  bool passed = false;
  std::string detail;
};

struct Failure {
  std::uint64_t n = 0;
  std::string what;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string check;
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 0;
  std::vector<CaseResult> cases;
  std::optional<Failure> first_failure;
  double seconds = 0.0;

  bool passed() const { return !first_failure.has_value(); }
  std::string to_text() const;
  std::string to_json() const;
};

inline constexpr std::uint64_t kOracleScanLimit = 18;

/// Runs one sweep over n = 1..n_max (F = 0..n_max for catalan; the fixed
/// printed tables for `tables`). Throws std::invalid_argument for n_max == 0
/// and std::out_of_range when n_max exceeds what the check can enumerate.
VerificationReport run_check(Check check, std::uint64_t n_max, unsigned threads = 1);

}  // namespace pauli
