#include "pauli/verify.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pauli/counting.hpp"
#include "pauli/indices.hpp"
#include "pauli/parallel.hpp"
#include "pauli/sieve.hpp"
#include "pauli/tables.hpp"

namespace pauli {

namespace {

struct CheckName {
  Check check;
  std::string_view name;
};

constexpr CheckName kCheckNames[] = {
    {Check::witten, "witten"},     {Check::strong_witten, "strong-witten"},
    {Check::strsc, "strsc"},       {Check::zagier, "zagier"},
    {Check::appendix, "appendix"}, {Check::balance, "balance"},
    {Check::oracle, "oracle"},     {Check::tables, "tables"},
    {Check::catalan, "catalan"},
};

struct Outcome {
  CaseResult result;
  std::optional<Failure> failure;
};

Outcome pass(std::uint64_t n, std::string detail) { return {{n, true, std::move(detail)}, std::nullopt}; }

Outcome fail(std::uint64_t n, std::string what, const std::string& lhs, const std::string& rhs) {
  std::string detail = what + ": " + lhs + " vs " + rhs;
  return {{n, false, detail}, Failure{n, std::move(what), lhs, rhs}};
}

// Checks an equality, returning a failure outcome on mismatch.
std::optional<Outcome> expect_equal(std::uint64_t n, const std::string& what, const BigInt& lhs, const BigInt& rhs) {
  if (lhs == rhs) return std::nullopt;
  return fail(n, what, to_string(lhs), to_string(rhs));
}

std::string label(const char* name, std::uint64_t n, std::optional<std::uint64_t> m = std::nullopt) {
  std::string s = std::string(name) + "(" + std::to_string(n);
  if (m) s += ";" + std::to_string(*m);
  return s + ")";
}

Outcome graded_outcome(const GradedIndexReport& report) {
  const char* name = report.kind == IndexKind::weak ? "W" : "W~";
  const GradedValue* lowest = &report.values.front();
  for (const auto& v : report.values) {
    if (!v.nonnegative) return fail(report.n, label(name, report.n, v.m) + " >= 0", to_string(v.value), ">= 0");
    if (v.value < lowest->value) lowest = &v;
  }
  std::string detail;
  if (report.kind == IndexKind::weak) {
    const auto& top = report.values.back();
    if (top.value != 0) return fail(report.n, label(name, report.n, report.n) + " == 0", to_string(top.value), "0");
    detail = label(name, report.n, report.n) + "=0 ";
  }
  detail += "min " + label(name, report.n, lowest->m) + "=" + to_string(lowest->value);
  return pass(report.n, detail);
}

std::vector<Outcome> run_witten(std::uint64_t n_max, unsigned threads) {
  return parallel_map<Outcome>(n_max, threads, [](std::uint64_t i) {
    std::uint64_t n = i + 1;
    return graded_outcome(graded_report(n, IndexKind::weak, allowed_row(n)));
  });
}

std::vector<Outcome> run_strong_witten(std::uint64_t n_max, unsigned threads) {
  auto diagonals = strong_diagonals(n_max, threads);
  return parallel_map<Outcome>(n_max, threads, [&](std::uint64_t i) {
    std::uint64_t n = i + 1;
    return graded_outcome(graded_report(n, IndexKind::strong, diagonals[n]));
  });
}

std::vector<Outcome> run_strsc(std::uint64_t n_max, unsigned threads) {
  auto lhs = strsc_lhs_sweep(n_max, threads);
  std::vector<Outcome> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigInt rhs = strsc_rhs(n);
    if (auto f = expect_equal(n, "sum_F (-1)^F allowed(n-2F,F) == delta", lhs[n], rhs)) {
      out.push_back(*f);
    } else {
      out.push_back(pass(n, "lhs=rhs=" + to_string(rhs)));
    }
  }
  return out;
}

std::vector<Outcome> run_zagier(std::uint64_t n_max) {
  std::vector<Outcome> out;
  for (const auto& z : zagier_sweep(n_max)) {
    if (!z.coefficients_match) {
      out.push_back(fail(z.n, "Phi coefficients == allowed row", "mismatch", "allowed_row(" + std::to_string(z.n) + ")"));
    } else if (!z.specialization_match) {
      out.push_back(fail(z.n, "[x^n] sum_k Phi(x,-x^2;k) == strsc", to_string(z.specialized),
                         to_string(strsc_check(z.n).lhs)));
    } else {
      out.push_back(pass(z.n, "coefficients ok, [x^n]=" + to_string(z.specialized)));
    }
  }
  return out;
}

std::vector<Outcome> run_appendix(std::uint64_t n_max, unsigned threads) {
  return parallel_map<Outcome>(n_max, threads, [](std::uint64_t i) {
    auto a = verify_appendix(i + 1);
    if (auto f = expect_equal(a.n, "sum_F forbidden(n-F,F) == forbidden_total(n)", a.cell_sum, a.closed_form)) return *f;
    if (auto f = expect_equal(a.n, "forbidden_total(n) == sum_m fermionic_count(n/2^m)", a.closed_form, a.telescoped)) {
      return *f;
    }
    return pass(a.n, "both sides " + to_string(a.closed_form));
  });
}

std::vector<Outcome> run_balance(std::uint64_t n_max, unsigned threads) {
  return parallel_map<Outcome>(n_max, threads, [](std::uint64_t i) -> Outcome {
    std::uint64_t n = i + 1;
    auto allowed_cells = allowed_row(n);
    auto forbidden_cells = forbidden_row(n);
    auto total_cells = polya_row(n);
    BigInt odd = 0, even = 0, forbidden_sum = 0, total_sum = 0;
    for (std::uint64_t f = 0; f <= n; ++f) {
      (f % 2 == 1 ? odd : even) += allowed_cells[f];
      forbidden_sum += forbidden_cells[f];
      total_sum += total_cells[f];
    }
    BigInt fermionic = fermionic_count(n);
    if (auto f = expect_equal(n, "sum_{F odd} allowed == fermionic_count", odd, fermionic)) return *f;
    if (auto f = expect_equal(n, "sum_{F even} allowed == fermionic_count", even, fermionic)) return *f;
    if (auto f = expect_equal(n, "sum_F allowed == allowed_total", odd + even, allowed_total(n))) return *f;
    if (auto f = expect_equal(n, "sum_F forbidden == forbidden_total", forbidden_sum, forbidden_total(n))) return *f;
    if (auto f = expect_equal(n, "sum_F polya == total_necklaces", total_sum, total_necklaces(n))) return *f;
    if (n % 2 == 1) {
      if (auto f = expect_equal(n, "odd n: allowed_total == total_necklaces", allowed_total(n), total_necklaces(n))) {
        return *f;
      }
      if (auto f = expect_equal(n, "odd n: forbidden_total == 0", forbidden_total(n), 0)) return *f;
    }
    return pass(n, "odd=even=" + to_string(fermionic) + " forbidden=" + to_string(forbidden_sum));
  });
}

std::vector<Outcome> run_oracle(std::uint64_t n_max, unsigned threads) {
  if (n_max > kMaxFixedDensityLength) {
    throw std::out_of_range("oracle: n_max must not exceed " + std::to_string(kMaxFixedDensityLength));
  }
  std::vector<Outcome> out;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    auto report = sieve_counts(n, SieveMethod::fixed_density, threads);
    std::optional<Outcome> failure;
    bool scanned = n <= kOracleScanLimit;
    if (scanned) {
      auto scan = sieve_counts(n, SieveMethod::scan, threads);
      for (std::uint64_t f = 0; f <= n && !failure; ++f) {
        if (!(scan.cells[f] == report.cells[f])) {
          failure = fail(n, "scan == fixed-density at F=" + std::to_string(f), to_string(scan.cells[f].total),
                         to_string(report.cells[f].total));
        }
      }
    }
    for (std::uint64_t f = 0; f <= n && !failure; ++f) {
      std::uint64_t b = n - f;
      auto cell = "(" + std::to_string(b) + "," + std::to_string(f) + ")";
      failure = expect_equal(n, "sieve total == polya" + cell, report.cells[f].total, polya(b, f));
      if (!failure) failure = expect_equal(n, "sieve allowed == allowed" + cell, report.cells[f].allowed, allowed(b, f));
      if (!failure) {
        failure = expect_equal(n, "sieve forbidden == forbidden" + cell, report.cells[f].forbidden, forbidden(b, f));
      }
    }
    if (!failure) failure = expect_equal(n, "sieve classes == total_necklaces", report.classes(), total_necklaces(n));
    if (failure) {
      out.push_back(*failure);
    } else {
      out.push_back(pass(n, std::string(scanned ? "scan+fixed-density" : "fixed-density") +
                                " classes=" + to_string(report.classes()) + " forbidden=" +
                                to_string(report.forbidden())));
    }
  }
  return out;
}

Outcome table_outcome(std::uint64_t index, const char* name, const CountTable& printed) {
  auto diffs = diff_against_closed_form(printed);
  std::size_t allowlisted = 0;
  for (const auto& d : diffs) {
    auto cell = std::string(name) + "(" + std::to_string(d.cell.first) + "," + std::to_string(d.cell.second) + ")";
    if (!d.allowlisted) return fail(index, "printed " + cell + " == closed form", to_string(d.printed), to_string(d.computed));
    if (!d.sieve || *d.sieve != d.computed) {
      return fail(index, "allowlisted " + cell + " confirmed by sieve", d.sieve ? to_string(*d.sieve) : "unavailable",
                  to_string(d.computed));
    }
    ++allowlisted;
  }
  for (const auto& e : printed_table_allowlist()) {
    if (e.kind != printed.kind) continue;
    bool seen = std::any_of(diffs.begin(), diffs.end(), [&](const TableDiff& d) { return d.cell == e.cell; });
    if (!seen) {
      return fail(index, "allowlist entry is a live mismatch",
                  std::string(name) + "(" + std::to_string(e.cell.first) + "," + std::to_string(e.cell.second) + ")",
                  "no mismatch");
    }
  }
  return pass(index, std::string(name) + ": " + std::to_string(printed.entries.size()) + " cells, " +
                         std::to_string(allowlisted) + " allowlisted mismatches");
}

std::vector<Outcome> run_tables() {
  return {table_outcome(1, "allowed", printed_allowed_table()),
          table_outcome(2, "forbidden", printed_forbidden_table())};
}

std::vector<Outcome> run_catalan(std::uint64_t f_max, unsigned threads) {
  return parallel_map<Outcome>(f_max + 1, threads, [](std::uint64_t f) -> Outcome {
    auto s = staircase(f);
    if (auto e = expect_equal(f, label("allowed", f + 1) + " == catalan", s.upper, catalan(f))) return *e;
    if (s.lower) {
      if (auto e = expect_equal(f, "allowed(F-1,F) == catalan(F-1)", *s.lower, catalan(f - 1))) return *e;
    }
    return pass(f, "allowed(F+1,F)=" + to_string(s.upper) + (s.lower ? " allowed(F-1,F)=" + to_string(*s.lower) : ""));
  });
}

}  // namespace

Check parse_check(std::string_view text) {
  for (const auto& c : kCheckNames) {
    if (c.name == text) return c.check;
  }
  throw std::invalid_argument("unknown check '" + std::string(text) + "'");
}

std::string_view to_string(Check check) {
  for (const auto& c : kCheckNames) {
    if (c.check == check) return c.name;
  }
  return "?";
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    for (const auto& c : kCheckNames) out.push_back(c.check);
    return out;
  }();
  return checks;
}

VerificationReport run_check(Check check, std::uint64_t n_max, unsigned threads) {
  if (n_max == 0) throw std::invalid_argument("verify: n_max must be at least 1");
  auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes;
  VerificationReport report;
  report.check = std::string(to_string(check));
  report.n_max = n_max;
  switch (check) {
    case Check::witten:
      outcomes = run_witten(n_max, threads);
      break;
    case Check::strong_witten:
      outcomes = run_strong_witten(n_max, threads);
      break;
    case Check::strsc:
      outcomes = run_strsc(n_max, threads);
      break;
    case Check::zagier:
      outcomes = run_zagier(n_max);
      break;
    case Check::appendix:
      outcomes = run_appendix(n_max, threads);
      break;
    case Check::balance:
      outcomes = run_balance(n_max, threads);
      break;
    case Check::oracle:
      outcomes = run_oracle(n_max, threads);
      break;
    case Check::tables:
      outcomes = run_tables();
      report.n_max = 2;
      break;
    case Check::catalan:
      outcomes = run_catalan(n_max, threads);
      report.n_min = 0;
      break;
  }
  for (auto& o : outcomes) {
    if (o.failure && !report.first_failure) report.first_failure = o.failure;
    report.cases.push_back(std::move(o.result));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  const char* var = check == "catalan" ? "F" : check == "tables" ? "table" : "n";
  out << "check " << check << " " << var << "=" << n_min << ".." << n_max << '\n';
  std::size_t passed_cases = 0;
  for (const auto& c : cases) {
    out << var << "=" << c.n << ' ' << (c.passed ? "ok" : "FAIL") << ' ' << c.detail << '\n';
    if (c.passed) ++passed_cases;
  }
  if (first_failure) {
    out << "FAIL " << check << ": first failure at " << var << "=" << first_failure->n << ": " << first_failure->what
        << "\n  lhs: " << first_failure->lhs << "\n  rhs: " << first_failure->rhs << '\n';
  } else {
    out << "PASS " << check << " (" << passed_cases << "/" << cases.size() << " cases)\n";
  }
  return out.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::json doc;
  doc["check"] = check;
  doc["n_min"] = n_min;
  doc["n_max"] = n_max;
  doc["passed"] = passed();
  auto& list = doc["cases"] = nlohmann::json::array();
  for (const auto& c : cases) list.push_back({{"n", c.n}, {"passed", c.passed}, {"detail", c.detail}});
  if (first_failure) {
    doc["first_failure"] = {{"n", first_failure->n},
                            {"what", first_failure->what},
                            {"lhs", first_failure->lhs},
                            {"rhs", first_failure->rhs}};
  } else {
    doc["first_failure"] = nullptr;
  }
  return doc.dump(1) + '\n';
}

}  // namespace pauli
