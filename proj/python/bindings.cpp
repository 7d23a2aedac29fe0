#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tdc/central.hpp"
#include "tdc/chromatic.hpp"
#include "tdc/classify.hpp"
#include "tdc/constructions.hpp"
#include "tdc/errors.hpp"
#include "tdc/families.hpp"
#include "tdc/formulas.hpp"
#include "tdc/graph6.hpp"
#include "tdc/io.hpp"
#include "tdc/longest_path.hpp"
#include "tdc/oracles.hpp"
#include "tdc/report.hpp"
#include "tdc/solvers.hpp"

namespace py = pybind11;

namespace {

tdc::SolveOptions make_opts(int cap, double budget) { return {cap, budget}; }

py::dict coloring_result_dict(const tdc::ColoringSolveResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["assignment"] = r.witness.assignment;
    d["classes"] = r.witness.num_classes;
    d["nodes"] = r.stats.nodes;
    d["seconds"] = r.stats.seconds;
    return d;
}

py::dict set_result_dict(const tdc::SetSolveResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["set"] = r.witness;
    d["nodes"] = r.stats.nodes;
    d["seconds"] = r.stats.seconds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_tdccentral, m) {
    m.doc() = "Exact total dominator colorings of central graphs";

    py::register_exception<tdc::ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<tdc::CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<tdc::MalformedColoringError>(m, "MalformedColoringError", PyExc_ValueError);
    py::register_exception<tdc::UndefinedInvariantError>(m, "UndefinedInvariantError", PyExc_ValueError);
    py::register_exception<tdc::UnsupportedFamilyError>(m, "UnsupportedFamilyError", PyExc_ValueError);
    py::register_exception<tdc::ParseError>(m, "GraphParseError", PyExc_ValueError);

    py::class_<tdc::Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &tdc::Graph::order)
        .def_property_readonly("m", &tdc::Graph::size)
        .def("edges", &tdc::Graph::edges)
        .def("has_edge", &tdc::Graph::has_edge)
        .def("neighbors", &tdc::Graph::neighbors)
        .def("degree", &tdc::Graph::degree)
        .def("__repr__", [](const tdc::Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    py::class_<tdc::CentralGraph>(m, "CentralGraph")
        .def_readonly("base", &tdc::CentralGraph::base)
        .def_readonly("result", &tdc::CentralGraph::result)
        .def("subdivision_index", &tdc::CentralGraph::subdivision_index)
        .def("role", [](const tdc::CentralGraph& cg, int v) { return cg.role_label(v); });

    m.def("build_family", [](const std::string& spec) {
        return tdc::build_family(tdc::FamilySpec::parse(spec));
    });
    m.def("central", &tdc::central);
    m.def("complement", &tdc::complement);
    m.def("join", &tdc::join);
    m.def("disjoint_union", &tdc::disjoint_union);
    m.def("components", &tdc::components);
    m.def("longest_path", [](const tdc::Graph& g, int cap) {
        auto r = tdc::longest_path(g, cap);
        return py::make_tuple(r.order, r.path);
    }, py::arg("g"), py::arg("cap") = tdc::kDefaultLongestPathCap);

    m.def("classify", [](const tdc::Graph& g) {
        auto t = tdc::classify(g);
        py::dict d;
        d["is_connected"] = t.is_connected;
        d["is_tree"] = t.is_tree;
        d["is_complete"] = t.is_complete;
        d["is_complete_bipartite"] = t.is_complete_bipartite;
        d["is_complete_multipartite"] = t.is_complete_multipartite;
        d["multipartite_parts"] = t.multipartite_parts;
        d["min_degree"] = t.min_degree;
        d["max_degree"] = t.max_degree;
        return d;
    });

    m.def("is_proper", [](const tdc::Graph& g, const std::vector<int>& assignment, int classes) {
        return tdc::is_proper(g, {assignment, classes}).ok;
    });
    m.def("is_tdc", [](const tdc::Graph& g, const std::vector<int>& assignment, int classes) {
        return tdc::is_tdc(g, {assignment, classes}).ok;
    });
    m.def("dominated_classes",
          [](const tdc::Graph& g, const std::vector<int>& assignment, int classes, int v) {
              return tdc::dominated_classes(g, {assignment, classes}, v);
          });

    m.def("chromatic_number", [](const tdc::Graph& g, int cap, double budget) {
        return coloring_result_dict(tdc::chromatic_number(g, make_opts(cap, budget)));
    }, py::arg("g"), py::arg("cap") = 64, py::arg("budget_seconds") = 0.0);
    m.def("total_domination_number", [](const tdc::Graph& g, int cap, double budget) {
        return set_result_dict(tdc::total_domination_number(g, make_opts(cap, budget)));
    }, py::arg("g"), py::arg("cap") = 40, py::arg("budget_seconds") = 0.0);
    m.def("tdc_number", [](const tdc::Graph& g, int cap, double budget) {
        return coloring_result_dict(tdc::tdc_number(g, make_opts(cap, budget)));
    }, py::arg("g"), py::arg("cap") = 40, py::arg("budget_seconds") = 0.0);
    m.def("tdc_number_bruteforce", &tdc::tdc_number_bruteforce);
    m.def("gamma_t_bruteforce", &tdc::gamma_t_bruteforce);

    m.def("construct_tdc_central", [](const std::string& spec) {
        auto [cg, coloring] = tdc::construct_tdc_central(tdc::FamilySpec::parse(spec));
        return py::make_tuple(cg, coloring.assignment, coloring.num_classes);
    });
    m.def("construct_tds_central_complete", &tdc::construct_tds_central_complete);
    m.def("formula_value", [](const std::string& spec, const std::string& invariant) {
        auto inv = invariant == "gammat" ? tdc::FormulaInvariant::kGammaT
                                         : tdc::FormulaInvariant::kTdc;
        return tdc::formula_value(tdc::FamilySpec::parse(spec), inv);
    }, py::arg("spec"), py::arg("invariant") = "tdc");
    m.def("formula_complement_central", &tdc::formula_complement_central);

    m.def("graph6_encode", &tdc::graph6_encode);
    m.def("graph6_decode", [](const std::string& s) { return tdc::graph6_decode(s); });

    m.def("theorem_report_json", [](const tdc::Graph& g, double budget) {
        tdc::ReportOptions opts;
        opts.budget_seconds = budget;
        return tdc::serialize_report(tdc::theorem_report(g, opts));
    }, py::arg("g"), py::arg("budget_seconds") = 60.0);
}
