#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pauli/counting.hpp"

namespace pauli {

enum class TableFormat { paper, csv, json };

TableFormat parse_table_format(std::string_view text);
CountKind parse_count_kind(std::string_view text);
std::string_view to_string(CountKind kind);

/// Either a bound on B + F or separate bounds on B and F.
struct TableBounds {
  std::optional<std::uint64_t> max_sum;
  std::optional<std::uint64_t> max_b;
  std::optional<std::uint64_t> max_f;
};

/// Closed-form table over the bounded cells. Forbidden tables keep only
/// cells with B and F both even; every other cell is identically zero.
CountTable build_table(CountKind kind, const TableBounds& bounds);

/// paper: B rows by F columns, blank where a cell is absent.
/// csv: header "B,F,count", LF line endings.
/// json: one array of {"b", "f", "count"} objects, counts as decimal strings.
std::string format_table(const CountTable& table, TableFormat format);

CountTable parse_csv_table(std::string_view text, CountKind kind, Provenance provenance);
CountTable parse_json_table(std::string_view text, CountKind kind, Provenance provenance);

/// The printed allowed table (B + F <= 26) and forbidden table (even
/// B <= 40, even F <= 36), as shipped under data/.
const CountTable& printed_allowed_table();
const CountTable& printed_forbidden_table();

/// A printed cell known to disagree with the closed form, with the reason.
struct AllowlistEntry {
  CountKind kind = CountKind::allowed;
  Cell cell;
  BigInt printed;
  BigInt computed;
  std::string justification;
};

const std::vector<AllowlistEntry>& printed_table_allowlist();

struct TableDiff {
  CountKind kind = CountKind::allowed;
  Cell cell;
  BigInt printed;
  BigInt computed;
  bool allowlisted = false;
  std::optional<BigInt> sieve;  // brute-force count when B + F is small enough
};

/// Cells of `printed` whose closed-form value differs.
std::vector<TableDiff> diff_against_closed_form(const CountTable& printed);

namespace golden {
std::string_view table1_csv();
std::string_view table2_csv();
std::string_view allowlist_csv();
}  // namespace golden

}  // namespace pauli
