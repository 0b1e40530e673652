// Python bindings for the main operations. Kernel vectors and matrix cells
// are exposed as exact "p/q" strings so nothing is rounded on the way out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gencospark/cospark.hpp"
#include "gencospark/errors.hpp"
#include "gencospark/matching.hpp"
#include "gencospark/matrix_market.hpp"
#include "gencospark/oracle.hpp"
#include "gencospark/pattern.hpp"

namespace py = pybind11;
using namespace gencospark;

namespace {

std::string rational_str(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

std::vector<std::string> rational_strs(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& q : values) out.push_back(rational_str(q));
  return out;
}

int full_sprank(const SparsityPattern& pattern) {
  BipartiteGraph graph(pattern);
  RowSubgraphView view(graph);
  for (int i = 0; i < graph.rows(); ++i) view.activate(i);
  return sprank(view);
}

}  // namespace

PYBIND11_MODULE(gencospark, m) {
  m.doc() = "Generic cospark of sparse matrix patterns via bipartite matching";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError",
                                         PyExc_ValueError);

  py::class_<SparsityPattern>(m, "SparsityPattern")
      .def(py::init<int, int, std::vector<SparsityPattern::Entry>>(),
           py::arg("rows"), py::arg("cols"), py::arg("entries"))
      .def_property_readonly("rows", &SparsityPattern::rows)
      .def_property_readonly("cols", &SparsityPattern::cols)
      .def_property_readonly("nnz", &SparsityPattern::nnz)
      .def("entries", &SparsityPattern::entries)
      .def("__eq__", [](const SparsityPattern& a,
                        const SparsityPattern& b) { return a == b; })
      .def("__repr__", [](const SparsityPattern& p) {
        return "SparsityPattern(" + std::to_string(p.rows()) + "x" +
               std::to_string(p.cols()) + ", nnz=" + std::to_string(p.nnz()) +
               ")";
      });

  py::class_<CosparkResult>(m, "CosparkResult")
      .def_readonly("value", &CosparkResult::value)
      .def_readonly("witness_rows", &CosparkResult::witness_rows)
      .def_readonly("deficient", &CosparkResult::deficient)
      .def("__repr__", [](const CosparkResult& r) {
        return "CosparkResult(value=" + std::to_string(r.value) +
               ", deficient=" + (r.deficient ? "True" : "False") + ")";
      });

  py::class_<RationalMatrix>(m, "RationalMatrix")
      .def_readonly("rows", &RationalMatrix::rows)
      .def_readonly("cols", &RationalMatrix::cols)
      .def("entry",
           [](const RationalMatrix& mat, int i, int j) {
             if (i < 0 || i >= mat.rows || j < 0 || j >= mat.cols) {
               throw py::index_error();
             }
             return rational_str(mat.at(i, j));
           },
           py::arg("i"), py::arg("j"), "Exact cell value as a 'p/q' string");

  py::class_<CosparkWitness>(m, "CosparkWitness")
      .def_readonly("value", &CosparkWitness::value)
      .def_readonly("support_rows", &CosparkWitness::support_rows)
      .def_property_readonly("kernel_vector",
                             [](const CosparkWitness& w) {
                               return rational_strs(w.kernel_vector);
                             });

  m.def("from_entries", &from_entries, py::arg("rows"), py::arg("cols"),
        py::arg("coords"));
  m.def("random_pattern", &random_pattern, py::arg("rows"), py::arg("cols"),
        py::arg("density"), py::arg("seed"));
  m.def("read_pattern",
        py::overload_cast<const std::string&>(&read_pattern),
        py::arg("text"), "Parse a Matrix Market coordinate-pattern string");
  m.def("write_pattern",
        py::overload_cast<const SparsityPattern&>(&write_pattern),
        py::arg("pattern"), "Render a pattern as a Matrix Market string");

  m.def("sprank", &full_sprank, py::arg("pattern"),
        "Structural rank: size of a maximum bipartite matching");
  m.def(
      "generic_cospark",
      [](const SparsityPattern& pattern,
         std::optional<std::uint64_t> order_seed) {
        CosparkOptions options;
        options.order_seed = order_seed;
        return generic_cospark(pattern, options);
      },
      py::arg("pattern"), py::arg("order_seed") = std::nullopt,
      "Generic cospark with a witness row set (0-indexed)");

  m.def("realize", &realize, py::arg("pattern"), py::arg("seed"),
        "Exact rational realization with nonzeros k/2^20, k in [1, 2^20]");
  m.def("exact_rank",
        py::overload_cast<const RationalMatrix&, const std::vector<int>&>(
            &exact_rank),
        py::arg("matrix"), py::arg("rows"));
  m.def("exact_rank", py::overload_cast<const RationalMatrix&>(&exact_rank),
        py::arg("matrix"));
  m.def("brute_cospark", &brute_cospark, py::arg("matrix"),
        "Exhaustive cospark of a concrete matrix with a kernel witness");
  m.def(
      "brute_generic_cospark",
      [](const SparsityPattern& pattern) {
        const BruteCosparkPattern r = brute_generic_cospark(pattern);
        return py::make_tuple(r.value, r.witness_rows);
      },
      py::arg("pattern"),
      "Exhaustive generic cospark; returns (value, witness_rows)");
}
