// Python bindings. Matrices cross the boundary as lists of lists of Python
// ints (arbitrary precision, converted through decimal strings).

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "walkmat/chebyshev.hpp"
#include "walkmat/errors.hpp"
#include "walkmat/exact_linalg.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/report.hpp"
#include "walkmat/verify.hpp"
#include "walkmat/walk.hpp"

namespace py = pybind11;
using namespace walkmat;

namespace {

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) {
  if (!py::isinstance<py::int_>(h)) throw py::type_error("matrix entries must be int");
  return BigInt(py::str(h).cast<std::string>());
}

BigMatrix matrix_from(const py::sequence& rows) {
  const std::size_t r = rows.size();
  std::size_t c = 0;
  if (r > 0) c = py::len(rows[0]);
  BigMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const py::sequence row = rows[i];
    if (row.size() != c) throw DimensionError("ragged matrix: row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = from_py(row[j]);
  }
  return m;
}

py::list matrix_to(const BigMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (const auto& x : m.row(i)) row.append(to_py(x));
    rows.append(row);
  }
  return rows;
}

py::list vector_to(std::span<const BigInt> v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_walkmat, m) {
  m.doc() = "Exact walk matrices, Smith normal forms and D_n verification";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<NotEquitable> not_equitable(m, "NotEquitable", PyExc_ValueError);
  static py::exception<NotApplicable> not_applicable(m, "NotApplicable", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(parse_error.ptr(), e.what());
    } catch (const NotEquitable& e) {
      PyErr_SetString(not_equitable.ptr(), e.what());
    } catch (const NotApplicable& e) {
      PyErr_SetString(not_applicable.ptr(), e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", [](const Graph& g) { return std::vector<Edge>(g.edges().begin(), g.edges().end()); })
      .def("has_edge", &Graph::has_edge)
      .def("degrees", &Graph::degrees)
      .def("adjacency", [](const Graph& g) { return matrix_to(adjacency_matrix(g)); })
      .def("to_graph6", &emit_graph6)
      .def_static("from_graph6", &parse_graph6)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("dynkin_d", &build_dynkin_d, py::arg("n"), "The Dynkin tree D_n (n >= 4).");

  m.def("walk_matrix", [](const py::sequence& a) { return matrix_to(walk_matrix(matrix_from(a))); },
        py::arg("a"), "W = [e, Ae, ..., A^{n-1} e] of a square integer matrix.");
  m.def("graph_walk_matrix", [](const Graph& g) { return matrix_to(walk_matrix(adjacency_matrix(g))); });
  m.def("hat_walk_matrix", [](const Graph& g) { return matrix_to(hat_walk_matrix(g)); },
        "Walk matrix with the first row and last column removed.");

  m.def("det", [](const py::sequence& a) { return to_py(det_bareiss(matrix_from(a))); });
  m.def("rank", [](const py::sequence& a) { return rank_rational(matrix_from(a)); });
  m.def("rank_mod2", [](const py::sequence& a) { return rank_mod2(matrix_from(a)); });
  m.def("smith_normal_form", [](const py::sequence& a) {
    const BigMatrix mat = matrix_from(a);
    const SnfResult r = smith_normal_form(mat);
    py::dict out;
    out["diag"] = vector_to(r.diag);
    out["left"] = matrix_to(r.left);
    out["right"] = matrix_to(r.right);
    out["certificate"] = snf_certificate_holds(mat, r);
    return out;
  }, py::arg("a"), "Invariant factors with unimodular witnesses: left @ a @ right = diag.");
  m.def("minor_gcd", [](const py::sequence& a, std::size_t k) { return to_py(minor_gcd_oracle(matrix_from(a), k)); });

  m.def("divisor_matrix", [](const Graph& g, const std::vector<std::vector<std::size_t>>& cells) {
    const DivisorData d = divisor_of_partition(g, Partition(g.order(), cells));
    return py::make_tuple(matrix_to(d.characteristic), matrix_to(d.divisor));
  }, py::arg("graph"), py::arg("cells"), "(C, B) with A C = C B for an equitable partition.");

  m.def("main_eigenvalue_count", [](const Graph& g, bool numeric, double tol) {
    return numeric ? main_eigenvalue_count_numeric(g, tol) : main_eigenvalue_count_exact(g);
  }, py::arg("graph"), py::arg("numeric") = false, py::arg("tol") = 1e-8);

  auto poly = [](const IntPolynomial& p) { return vector_to(p.coeffs()); };
  m.def("chebyshev_t", [poly](int n) { return poly(chebyshev_t(n)); }, "Coefficients, constant term first.");
  m.def("chebyshev_u", [poly](int n) { return poly(chebyshev_u(n)); });
  m.def("discriminant", [](const py::sequence& coeffs) {
    std::vector<BigInt> c;
    for (const auto& x : coeffs) c.push_back(from_py(x));
    return to_py(discriminant(IntPolynomial(std::move(c))));
  }, py::arg("coeffs"));

  m.def("verify", [](std::size_t n_from, std::size_t n_to, unsigned threads) {
    VerifyOptions opts;
    opts.threads = threads;
    std::vector<VerifyReport> reports;
    {
      py::gil_scoped_release release;
      reports = verify_dynkin_range(n_from, n_to, opts);
    }
    return json_to_py(to_json(reports));
  }, py::arg("n_from") = 4, py::arg("n_to") = 12, py::arg("threads") = 0,
        "Run every D_n check; one dict per n (big integers as decimal strings).");

  m.def("rank2_corpus", [](std::size_t count, std::size_t n_max, std::uint64_t seed, std::size_t dynkin_max) {
    Rank2CorpusResult r;
    {
      py::gil_scoped_release release;
      r = verify_rank2_corpus(count, n_max, seed, dynkin_max);
    }
    return json_to_py(to_json(r));
  }, py::arg("count") = 1000, py::arg("n_max") = 16, py::arg("seed") = 42, py::arg("dynkin_max") = 0);
}
