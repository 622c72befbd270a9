// Command-line front end: counts, tables, sieve runs, register cycles and
// verification sweeps. Exit status: 0 success, 1 verification failure,
// 2 usage or range error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "pauli/counting.hpp"
#include "pauli/lfsr.hpp"
#include "pauli/parallel.hpp"
#include "pauli/sieve.hpp"
#include "pauli/tables.hpp"
#include "pauli/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CountArgs {
  std::string kind;
  std::optional<std::uint64_t> n, b, f;
};

struct TableArgs {
  std::string kind;
  std::optional<std::uint64_t> max_sum, max_b, max_f;
  std::string format = "paper";
};

struct SieveArgs {
  std::uint64_t n = 0;
  std::string method = "fixed-density";
  bool list = false;
  std::optional<unsigned> threads;
};

struct LfsrArgs {
  std::uint64_t n = 0;
  std::optional<std::string> seed;
  bool list = false;
  std::optional<unsigned> threads;
};

struct VerifyArgs {
  std::string check;
  std::uint64_t n_max = 0;
  bool json = false;
  std::optional<unsigned> threads;
};

unsigned thread_count(const std::optional<unsigned>& flag) {
  if (flag && *flag > 0) return *flag;
  return pauli::default_thread_count();
}

int cmd_count(const CountArgs& a) {
  using namespace pauli;
  bool has_n = a.n.has_value();
  bool has_cell = a.b.has_value() || a.f.has_value();
  if (has_cell && !(a.b && a.f)) throw UsageError("count: --b and --f go together");
  if (has_n == has_cell) throw UsageError("count " + a.kind + ": give either --n or --b/--f");

  BigInt value;
  if (a.kind == "total") {
    if (!has_n) throw UsageError("count total takes --n (use 'count polya' for a cell)");
    value = total_necklaces(*a.n);
  } else if (a.kind == "polya") {
    if (has_n) throw UsageError("count polya takes --b and --f");
    value = polya(*a.b, *a.f);
  } else if (a.kind == "fermionic") {
    if (!has_n || *a.n == 0) throw UsageError("count fermionic takes --n >= 1");
    value = fermionic_count(*a.n);
  } else if (a.kind == "allowed") {
    if (has_n && *a.n == 0) throw UsageError("count allowed: --n must be positive");
    value = has_n ? allowed_total(*a.n) : allowed(*a.b, *a.f);
  } else {  // forbidden
    if (has_n && *a.n == 0) throw UsageError("count forbidden: --n must be positive");
    if (has_cell && *a.b == 0 && *a.f == 0) throw UsageError("count forbidden: (0,0) is not a cell");
    value = has_n ? forbidden_total(*a.n) : forbidden(*a.b, *a.f);
  }
  std::cout << to_string(value) << '\n';
  return kExitOk;
}

int cmd_table(const TableArgs& a) {
  using namespace pauli;
  TableBounds bounds{a.max_sum, a.max_b, a.max_f};
  bool by_box = a.max_b || a.max_f;
  if (a.max_sum.has_value() == by_box || (by_box && !(a.max_b && a.max_f))) {
    throw UsageError("table: give either --max-sum or both --max-b and --max-f");
  }
  auto table = build_table(parse_count_kind(a.kind), bounds);
  std::cout << format_table(table, parse_table_format(a.format));
  return kExitOk;
}

int cmd_sieve(const SieveArgs& a) {
  using namespace pauli;
  auto method = parse_sieve_method(a.method);
  try {
    check_sieve_range(a.n, method);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (a.list) {
    enumerate_necklaces(a.n, method, [](const NecklaceClass& c) {
      std::cout << c.canonical.to_string() << " B=" << c.bosons << " F=" << c.fermions << " p=" << c.period
                << " k=" << c.symmetry_order << ' ' << to_string(c.statistics) << ' ' << to_string(c.status) << '\n';
    });
  }
  auto report = sieve_counts(a.n, method, thread_count(a.threads));
  std::cout << "n=" << report.n << " method=" << to_string(method) << '\n';
  std::cout << "B F total allowed forbidden\n";
  for (std::size_t f = 0; f <= report.n; ++f) {
    const auto& c = report.cells[f];
    std::cout << report.n - f << ' ' << f << ' ' << to_string(c.total) << ' ' << to_string(c.allowed) << ' '
              << to_string(c.forbidden) << '\n';
  }
  std::cout << "classes " << to_string(report.classes()) << " allowed " << to_string(report.allowed())
            << " forbidden " << to_string(report.forbidden()) << '\n';
  return kExitOk;
}

int cmd_lfsr(const LfsrArgs& a) {
  using namespace pauli;
  if (a.n < 2) throw UsageError("lfsr: --n must be at least 2");
  if (a.seed) {
    if (a.seed->size() != a.n - 1) throw UsageError("lfsr: seed must have n - 1 = " + std::to_string(a.n - 1) + " bits");
    BinaryWord seed;
    try {
      seed = BinaryWord::parse(*a.seed);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("lfsr: ") + e.what());
    }
    std::cout << to_string(lfsr_sequence(seed, 3 * a.n)) << '\n';
    return kExitOk;
  }
  if (a.n > kMaxLfsrLength) throw UsageError("lfsr: cycle listing supports n <= " + std::to_string(kMaxLfsrLength));
  auto cycles = lfsr_cycles(a.n, thread_count(a.threads));
  if (a.list) {
    for (const auto& c : cycles) std::cout << c.to_string() << '\n';
  }
  std::cout << "cycles " << cycles.size() << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a) {
  using namespace pauli;
  if (a.n_max == 0) throw UsageError("verify: --n-max must be at least 1");
  VerificationReport report;
  try {
    report = run_check(parse_check(a.check), a.n_max, thread_count(a.threads));
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  std::cout << (a.json ? report.to_json() : report.to_text());
  std::cerr << report.check << ": " << report.seconds << " s\n";
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of Pauli-allowed and Pauli-forbidden binary necklaces"};
  app.require_subcommand(1);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Print one exact count");
  count_cmd->add_option("kind", count.kind, "total | polya | allowed | forbidden | fermionic")
      ->required()
      ->check(CLI::IsMember({"total", "polya", "allowed", "forbidden", "fermionic"}));
  count_cmd->add_option("--n", count.n, "Total number of beads");
  count_cmd->add_option("--b", count.b, "Bosonic beads B");
  count_cmd->add_option("--f", count.f, "Fermionic beads F");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print a table of allowed or forbidden counts");
  table_cmd->add_option("kind", table.kind, "allowed | forbidden")
      ->required()
      ->check(CLI::IsMember({"allowed", "forbidden"}));
  table_cmd->add_option("--max-sum", table.max_sum, "Cells with B + F <= max-sum");
  table_cmd->add_option("--max-b", table.max_b, "Largest B");
  table_cmd->add_option("--max-f", table.max_f, "Largest F");
  table_cmd->add_option("--format", table.format, "paper | csv | json")
      ->check(CLI::IsMember({"paper", "csv", "json"}));

  SieveArgs sieve;
  auto* sieve_cmd = app.add_subcommand("sieve", "Enumerate and classify every necklace of length n");
  sieve_cmd->add_option("--n", sieve.n, "Necklace length")->required();
  sieve_cmd->add_option("--method", sieve.method, "scan | fixed-density")
      ->check(CLI::IsMember({"scan", "fixed-density"}));
  sieve_cmd->add_flag("--list", sieve.list, "List canonical words with their classification");
  sieve_cmd->add_option("--threads", sieve.threads, "Worker threads (default: PAULI_NECKLACE_THREADS or all cores)");

  LfsrArgs lfsr;
  auto* lfsr_cmd = app.add_subcommand("lfsr", "Odd-parity feedback register sequences and cycles");
  lfsr_cmd->add_option("--n", lfsr.n, "Register length")->required();
  lfsr_cmd->add_option("--seed", lfsr.seed, "Initial n - 1 bits; prints three periods");
  lfsr_cmd->add_flag("--list", lfsr.list, "List the distinct canonical cycles");
  lfsr_cmd->add_option("--threads", lfsr.threads, "Worker threads");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification sweep");
  std::vector<std::string> check_names;
  for (auto c : pauli::all_checks()) check_names.emplace_back(pauli::to_string(c));
  verify_cmd->add_option("--check", verify.check, "Sweep to run")->required()->check(CLI::IsMember(check_names));
  verify_cmd->add_option("--n-max", verify.n_max, "Upper end of the sweep")->required();
  verify_cmd->add_flag("--json", verify.json, "Machine-readable report");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count_cmd) return cmd_count(count);
    if (*table_cmd) return cmd_table(table);
    if (*sieve_cmd) return cmd_sieve(sieve);
    if (*lfsr_cmd) return cmd_lfsr(lfsr);
    if (*verify_cmd) return cmd_verify(verify);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
