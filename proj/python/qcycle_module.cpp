#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcycle/analysis.hpp"
#include "qcycle/canonical.hpp"
#include "qcycle/congruence.hpp"
#include "qcycle/enumeration.hpp"
#include "qcycle/error.hpp"
#include "qcycle/extension.hpp"
#include "qcycle/fixtures.hpp"
#include "qcycle/io.hpp"
#include "qcycle/report.hpp"

namespace py = pybind11;
using namespace qcs;

namespace {

Rows rows_of(const QCycleSet& X, bool colon) {
  Rows out(X.size());
  for (Point x = 0; x < X.size(); ++x) {
    auto row = colon ? X.colon_row(x) : X.dot_row(x);
    out[x].assign(row.begin(), row.end());
  }
  return out;
}

Rows rows_of(const std::vector<Permutation>& perms) {
  Rows out;
  for (const auto& p : perms) out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

std::optional<std::size_t> level_of(const QCycleSet& X) { return primitive_level(X).level; }

std::vector<QCycleSet> run_enumeration(std::size_t order, const std::string& kind,
                                       const std::vector<std::string>& require,
                                       const std::vector<std::string>& forbid,
                                       const std::vector<std::string>& ignore,
                                       bool override_bounds, std::size_t workers) {
  EnumerationQuery q;
  q.order = order;
  q.kind = parse_kind(kind);
  q.override_bounds = override_bounds;
  q.workers = workers;
  for (const auto& p : require) q.filters[parse_property(p)] = Filter::require;
  for (const auto& p : forbid) q.filters[parse_property(p)] = Filter::forbid;
  for (const auto& p : ignore) q.filters[parse_property(p)] = Filter::ignore;
  py::gil_scoped_release release;
  return enumerate_all(q);
}

}  // namespace

PYBIND11_MODULE(_qcycle, m) {
  m.doc() = "Finite q-cycle sets: axioms, permutation groups, congruences, extensions";

  auto base = py::register_exception<Error>(m, "QcycleError", PyExc_ValueError);
  py::register_exception<InvalidStructure>(m, "InvalidStructure", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BoundExceeded>(m, "BoundExceeded", base.ptr());

  py::class_<QCycleSet>(m, "QCycleSet")
      .def(py::init([](const Rows& dot, const Rows& colon) { return QCycleSet::from_rows(dot, colon); }),
           py::arg("dot"), py::arg("colon"), "0-based tables; row x of dot is sigma_x")
      .def_static("cycle_set", &QCycleSet::cycle_set, py::arg("dot"))
      .def_static("from_cycles", &QCycleSet::from_cycles, py::arg("sigma"), py::arg("delta"),
                  py::arg("n"))
      .def_static("parse", &parse_qcycle_set, py::arg("text"))
      .def("__len__", &QCycleSet::size)
      .def_property_readonly("size", &QCycleSet::size)
      .def("dot", [](const QCycleSet& X, Point x, Point y) { return X.dot(x, y); })
      .def("colon", [](const QCycleSet& X, Point x, Point y) { return X.colon(x, y); })
      .def_property_readonly("dot_table", [](const QCycleSet& X) { return rows_of(X, false); })
      .def_property_readonly("colon_table", [](const QCycleSet& X) { return rows_of(X, true); })
      .def("is_cycle_set", &QCycleSet::is_cycle_set)
      .def("relabel", [](const QCycleSet& X, std::vector<Point> p) {
        return X.relabel(Permutation(std::move(p)));
      })
      .def("to_text", [](const QCycleSet& X) { return serialize(X); })
      .def("to_json", [](const QCycleSet& X) { return to_json(X).dump(); })
      .def(py::self == py::self)
      .def("__repr__", [](const QCycleSet& X) {
        return "<QCycleSet n=" + std::to_string(X.size()) + (X.is_cycle_set() ? " cycle set>" : ">");
      });

  py::class_<Solution>(m, "Solution")
      .def(py::init([](const Rows& lambda, const Rows& rho) { return Solution::from_rows(lambda, rho); }),
           py::arg("lambda_"), py::arg("rho"))
      .def_static("parse", &parse_solution, py::arg("text"))
      .def("__len__", &Solution::size)
      .def("__call__", [](const Solution& s, Point x, Point y) { return s(x, y); })
      .def_property_readonly("lambda_table", [](const Solution& s) { return rows_of(s.lambdas()); })
      .def_property_readonly("rho_table", [](const Solution& s) { return rows_of(s.rhos()); })
      .def("to_text", [](const Solution& s) { return serialize(s); })
      .def(py::self == py::self);

  m.def("check_axioms", [](const QCycleSet& X) {
    std::vector<std::tuple<std::string, Point, Point, Point>> out;
    for (const auto& v : check_q_axioms(X).violations) {
      out.emplace_back("q" + std::to_string(static_cast<int>(v.axiom)), v.x, v.y, v.z);
    }
    return out;
  }, "Axiom violations as (axiom, x, y, z), 0-based; empty when valid");
  m.def("is_regular", &is_regular);
  m.def("is_square_free", &is_square_free);
  m.def("is_indecomposable", &is_indecomposable);
  m.def("is_retractable", &is_retractable);
  m.def("multipermutation_level", &multipermutation_level);
  m.def("is_simple", &is_simple_oracle);
  m.def("is_simple_blocks", &is_simple_blocks);
  m.def("primitive_level", &level_of, "None when infinite");
  m.def("has_finite_primitive_level", &has_finite_primitive_level);
  m.def("group_order", [](const QCycleSet& X) { return permutation_group(X).order_string(); });
  m.def("block_systems", [](const QCycleSet& X) {
    std::vector<std::vector<std::vector<Point>>> out;
    for (const auto& B : all_block_systems(permutation_group(X))) out.push_back(B.blocks());
    return out;
  });
  m.def("congruences", [](const QCycleSet& X) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& c : all_congruences(X)) out.push_back(c.labels());
    return out;
  }, "Class label per point for every congruence");
  m.def("quotient", [](const QCycleSet& X, const std::vector<std::size_t>& labels) {
    return quotient(X, Congruence(labels)).set;
  });
  m.def("is_isomorphic", [](const QCycleSet& X, const QCycleSet& Y) -> std::optional<std::vector<Point>> {
    auto f = is_isomorphic(X, Y);
    if (!f) return std::nullopt;
    return std::vector<Point>(f->images().begin(), f->images().end());
  });
  m.def("canonical_form", &canonical_form);
  m.def("to_solution", &to_solution);
  m.def("from_solution", &from_solution);
  m.def("check_yang_baxter", &check_yang_baxter);
  m.def("is_involutive", &is_involutive);

  m.def("_analysis_report", [](const QCycleSet& X) { return analysis_report(X).dump(); });
  m.def("_analysis_report", [](const Solution& s) { return analysis_report(s).dump(); });

  m.def("fixture", [](const std::string& name) { return fixture(name).set; }, py::arg("name"));
  m.def("fixture_names", &fixture_names);
  m.def("extension", [](const std::string& family, std::size_t param) {
    auto data = paper_extension(family, param);
    return py::make_tuple(data.base, build_extension(data.base, data.pair),
                          extension_indecomposability_criterion(data.base, data.pair));
  }, py::arg("family"), py::arg("param") = 0,
     "(base, extension, stabilizer criterion) for a built-in dynamical pair");
  m.def("extend", [](const QCycleSet& X, const std::string& pair_text) {
    return build_extension(X, parse_pair(pair_text));
  }, py::arg("base"), py::arg("pair_text"));

  m.def("enumerate", &run_enumeration, py::arg("order"), py::arg("kind") = "qcs",
        py::arg("require") = std::vector<std::string>{}, py::arg("forbid") = std::vector<std::string>{},
        py::arg("ignore") = std::vector<std::string>{}, py::arg("override_bounds") = false,
        py::arg("workers") = 1);
}
