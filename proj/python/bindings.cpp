#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "pauli/counting.hpp"
#include "pauli/exactmath.hpp"
#include "pauli/indices.hpp"
#include "pauli/lfsr.hpp"
#include "pauli/necklace.hpp"
#include "pauli/sieve.hpp"
#include "pauli/tables.hpp"
#include "pauli/verify.hpp"

namespace py = pybind11;
using namespace pauli;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(to_string(v))); }

py::list to_py(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::dict class_dict(const NecklaceClass& c) {
  py::dict d;
  d["canonical"] = c.canonical.to_string();
  d["n"] = c.n;
  d["bosons"] = c.bosons;
  d["fermions"] = c.fermions;
  d["period"] = c.period;
  d["symmetry_order"] = c.symmetry_order;
  d["statistics"] = std::string(to_string(c.statistics));
  d["status"] = std::string(to_string(c.status));
  return d;
}

template <class F>
auto count_fn(F f) {
  return [f](std::uint64_t b, std::uint64_t fermions) { return to_py(f(b, fermions)); };
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counts of Pauli-allowed and forbidden binary necklaces.";

  py::register_exception<std::out_of_range>(m, "RangeError", PyExc_ValueError);

  m.def("total_necklaces", [](std::uint64_t n) { return to_py(total_necklaces(n)); }, py::arg("n"));
  m.def("fermionic_count", [](std::uint64_t n) { return to_py(fermionic_count(n)); }, py::arg("n"));
  m.def("allowed_total", [](std::uint64_t n) { return to_py(allowed_total(n)); }, py::arg("n"));
  m.def("forbidden_total", [](std::uint64_t n) { return to_py(forbidden_total(n)); }, py::arg("n"));
  m.def("polya", count_fn(polya), py::arg("bosons"), py::arg("fermions"));
  m.def("allowed", count_fn(allowed), py::arg("bosons"), py::arg("fermions"));
  m.def("forbidden", count_fn(forbidden), py::arg("bosons"), py::arg("fermions"));
  m.def("catalan", [](std::uint64_t k) { return to_py(catalan(k)); }, py::arg("k"));
  m.def("allowed_row", [](std::uint64_t n) { return to_py(allowed_row(n)); }, py::arg("n"),
        "allowed(n - F, F) for F = 0..n.");
  m.def("forbidden_row", [](std::uint64_t n) { return to_py(forbidden_row(n)); }, py::arg("n"));

  m.def("canonical_form", [](const std::string& w) { return canonical_form(BinaryWord::parse(w)).to_string(); },
        py::arg("word"));
  m.def("classify", [](const std::string& w) { return class_dict(classify(BinaryWord::parse(w))); },
        py::arg("word"));
  m.def("rotation_sign", [](const std::string& w, long long s) { return rotation_sign(BinaryWord::parse(w), s); },
        py::arg("word"), py::arg("shift"));

  m.def(
      "necklaces",
      [](std::size_t n, const std::string& method) {
        py::list out;
        enumerate_necklaces(n, parse_sieve_method(method), [&](const NecklaceClass& c) { out.append(class_dict(c)); });
        return out;
      },
      py::arg("n"), py::arg("method") = "fixed-density");
  m.def(
      "sieve_counts",
      [](std::size_t n, const std::string& method, unsigned threads) {
        auto report = sieve_counts(n, parse_sieve_method(method), threads);
        py::list out;
        for (std::size_t f = 0; f < report.cells.size(); ++f) {
          const auto& c = report.cells[f];
          out.append(py::make_tuple(n - f, f, to_py(c.total), to_py(c.allowed), to_py(c.forbidden)));
        }
        return out;
      },
      py::arg("n"), py::arg("method") = "fixed-density", py::arg("threads") = 1,
      "(B, F, total, allowed, forbidden) for every cell of length n.");

  m.def("lfsr_sequence",
        [](const std::string& seed, std::size_t length) { return to_string(lfsr_sequence(BinaryWord::parse(seed), length)); },
        py::arg("seed"), py::arg("length"));
  m.def(
      "lfsr_cycles",
      [](std::size_t n, unsigned threads) {
        std::vector<std::string> out;
        for (const auto& w : lfsr_cycles(n, threads)) out.push_back(w.to_string());
        return out;
      },
      py::arg("n"), py::arg("threads") = 1);

  m.def("witten", [](std::uint64_t n, std::uint64_t k) { return to_py(witten(n, k)); }, py::arg("n"), py::arg("m"));
  m.def("strong_witten", [](std::uint64_t n, std::uint64_t k) { return to_py(strong_witten(n, k)); }, py::arg("n"),
        py::arg("m"));
  m.def("strsc_check", [](std::uint64_t n) { return strsc_check(n).passed; }, py::arg("n"));
  m.def("zagier_check", [](std::uint64_t n) { return zagier_check(n).passed(); }, py::arg("n"));
  m.def("appendix_check", [](std::uint64_t n) { return verify_appendix(n).passed; }, py::arg("n"));

  m.def(
      "table",
      [](const std::string& kind, std::optional<std::uint64_t> max_sum, std::optional<std::uint64_t> max_b,
         std::optional<std::uint64_t> max_f, const std::string& format) {
        auto t = build_table(parse_count_kind(kind), {max_sum, max_b, max_f});
        return format_table(t, parse_table_format(format));
      },
      py::arg("kind"), py::kw_only(), py::arg("max_sum") = py::none(), py::arg("max_b") = py::none(),
      py::arg("max_f") = py::none(), py::arg("format") = "csv");

  m.def(
      "verify",
      [](const std::string& check, std::uint64_t n_max, unsigned threads) {
        return run_check(parse_check(check), n_max, threads).to_json();
      },
      py::arg("check"), py::arg("n_max"), py::arg("threads") = 1, "Verification report as a JSON string.");
}
