#include "pauli/tables.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pauli/sieve.hpp"

namespace pauli {

TableFormat parse_table_format(std::string_view text) {
  if (text == "paper") return TableFormat::paper;
  if (text == "csv") return TableFormat::csv;
  if (text == "json") return TableFormat::json;
  throw std::invalid_argument("unknown table format '" + std::string(text) + "'");
}

CountKind parse_count_kind(std::string_view text) {
  if (text == "total") return CountKind::total;
  if (text == "allowed") return CountKind::allowed;
  if (text == "forbidden") return CountKind::forbidden;
  throw std::invalid_argument("unknown count kind '" + std::string(text) + "'");
}

std::string_view to_string(CountKind kind) {
  switch (kind) {
    case CountKind::total:
      return "total";
    case CountKind::allowed:
      return "allowed";
    case CountKind::forbidden:
      return "forbidden";
  }
  return "?";
}

CountTable build_table(CountKind kind, const TableBounds& bounds) {
  bool by_sum = bounds.max_sum.has_value();
  bool by_box = bounds.max_b.has_value() || bounds.max_f.has_value();
  if (by_sum == by_box) throw std::invalid_argument("table bounds: give either max_sum or both max_b and max_f");
  if (by_box && !(bounds.max_b && bounds.max_f)) throw std::invalid_argument("table bounds: max_b and max_f go together");

  CountTable table = by_sum ? closed_form_table(kind, *bounds.max_sum)
                            : closed_form_table(kind, *bounds.max_b, *bounds.max_f);
  if (kind == CountKind::forbidden) {
    std::erase_if(table.entries, [](const auto& kv) { return kv.first.first % 2 == 1 || kv.first.second % 2 == 1; });
  }
  return table;
}

namespace {

std::string format_paper(const CountTable& table) {
  std::set<std::uint64_t> rows;
  std::set<std::uint64_t> cols;
  std::size_t width = 1;
  for (const auto& [cell, value] : table.entries) {
    rows.insert(cell.first);
    cols.insert(cell.second);
    width = std::max(width, to_string(value).size());
  }
  for (auto f : cols) width = std::max(width, std::to_string(f).size());
  std::size_t label = 3;
  for (auto b : rows) label = std::max(label, std::to_string(b).size());

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  std::ostringstream out;
  out << pad("B\\F", label) << " |";
  for (auto f : cols) out << ' ' << pad(std::to_string(f), width);
  out << '\n' << std::string(label + 1, '-') << '+' << std::string(cols.size() * (width + 1), '-') << '\n';
  for (auto b : rows) {
    std::string line = pad(std::to_string(b), label) + " |";
    for (auto f : cols) {
      auto it = table.entries.find({b, f});
      line += ' ' + pad(it == table.entries.end() ? std::string() : to_string(it->second), width);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string format_csv(const CountTable& table) {
  std::string out = "B,F,count\n";
  for (const auto& [cell, value] : table.entries) {
    out += std::to_string(cell.first) + ',' + std::to_string(cell.second) + ',' + to_string(value) + '\n';
  }
  return out;
}

std::string format_json(const CountTable& table) {
  auto doc = nlohmann::json::array();
  for (const auto& [cell, value] : table.entries) {
    doc.push_back({{"b", cell.first}, {"f", cell.second}, {"count", to_string(value)}});
  }
  return doc.dump(1) + '\n';
}

std::vector<std::string> split(std::string_view line, char sep, std::size_t max_fields) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (fields.size() + 1 < max_fields) {
    auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) break;
    fields.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  fields.emplace_back(line.substr(start));
  return fields;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("expected a nonnegative integer, got '" + s + "'");
  }
  return std::stoull(s);
}

}  // namespace

std::string format_table(const CountTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::paper:
      return format_paper(table);
    case TableFormat::csv:
      return format_csv(table);
    case TableFormat::json:
      return format_json(table);
  }
  return {};
}

CountTable parse_csv_table(std::string_view text, CountKind kind, Provenance provenance) {
  auto lines = lines_of(text);
  if (lines.empty() || lines.front() != "B,F,count") throw std::invalid_argument("csv table: missing header B,F,count");
  CountTable table{kind, provenance, {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split(lines[i], ',', 3);
    if (fields.size() != 3) throw std::invalid_argument("csv table: bad line '" + std::string(lines[i]) + "'");
    Cell cell{parse_u64(fields[0]), parse_u64(fields[1])};
    if (!table.entries.emplace(cell, parse_bigint(fields[2])).second) {
      throw std::invalid_argument("csv table: duplicate cell " + fields[0] + "," + fields[1]);
    }
  }
  return table;
}

CountTable parse_json_table(std::string_view text, CountKind kind, Provenance provenance) {
  auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("json table: expected an array");
  CountTable table{kind, provenance, {}};
  for (const auto& item : doc) {
    Cell cell{item.at("b").get<std::uint64_t>(), item.at("f").get<std::uint64_t>()};
    table.entries.emplace(cell, parse_bigint(item.at("count").get<std::string>()));
  }
  return table;
}

const CountTable& printed_allowed_table() {
  static const CountTable table = parse_csv_table(golden::table1_csv(), CountKind::allowed, Provenance::printed);
  return table;
}

const CountTable& printed_forbidden_table() {
  static const CountTable table = parse_csv_table(golden::table2_csv(), CountKind::forbidden, Provenance::printed);
  return table;
}

const std::vector<AllowlistEntry>& printed_table_allowlist() {
  static const std::vector<AllowlistEntry> entries = [] {
    std::vector<AllowlistEntry> out;
    auto lines = lines_of(golden::allowlist_csv());
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto fields = split(lines[i], ',', 6);
      if (fields.size() != 6) throw std::invalid_argument("allowlist: bad line '" + std::string(lines[i]) + "'");
      out.push_back({parse_count_kind(fields[0]),
                     {parse_u64(fields[1]), parse_u64(fields[2])},
                     parse_bigint(fields[3]),
                     parse_bigint(fields[4]),
                     fields[5]});
    }
    return out;
  }();
  return entries;
}

std::vector<TableDiff> diff_against_closed_form(const CountTable& printed) {
  std::vector<TableDiff> diffs;
  const auto& allowlist = printed_table_allowlist();
  for (const auto& [cell, value] : printed.entries) {
    BigInt computed = closed_form_count(printed.kind, cell.first, cell.second);
    if (computed == value) continue;
    TableDiff d{printed.kind, cell, value, computed, false, std::nullopt};
    d.allowlisted = std::any_of(allowlist.begin(), allowlist.end(), [&](const AllowlistEntry& e) {
      return e.kind == printed.kind && e.cell == cell && e.printed == value && e.computed == computed;
    });
    if (cell.first + cell.second <= kMaxFixedDensityLength && cell.first + cell.second > 0) {
      BigInt count = 0;
      enumerate_fixed_content(cell.first, cell.second, [&](const NecklaceClass& c) {
        bool wanted = printed.kind == CountKind::total ||
                      (printed.kind == CountKind::forbidden) == (c.status == Status::forbidden);
        if (wanted) ++count;
      });
      d.sieve = count;
    }
    diffs.push_back(std::move(d));
  }
  return diffs;
}

}  // namespace pauli
