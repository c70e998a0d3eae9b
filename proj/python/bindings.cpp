// Thin Python layer. Results cross the boundary as JSON text and are decoded
// on the Python side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tsibc/agreement.hpp"
#include "tsibc/cone.hpp"
#include "tsibc/decider.hpp"
#include "tsibc/errors.hpp"
#include "tsibc/json_io.hpp"
#include "tsibc/random_corpus.hpp"

namespace py = pybind11;
using namespace tsibc;

namespace {

CausalQuery to_query(const Scg& g, const std::vector<std::string>& dos, const std::vector<std::string>& effects) {
    return make_query(g, dos, effects);
}

std::string decide_json(const Scg& g, const std::vector<std::string>& dos, const std::vector<std::string>& effects,
                        bool consistency) {
    return verdict_to_json(g, decide(g, to_query(g, dos, effects), consistency)).dump();
}

std::string oracle_json(const Scg& g, const std::vector<std::string>& dos, const std::vector<std::string>& effects,
                        bool consistency, std::optional<std::uint64_t> budget) {
    OracleOverrides o;
    o.budget = budget;
    AgreementReport r = oracle_check(g, to_query(g, dos, effects), consistency, o);
    Json j;
    j["result"] = r.agree ? "AGREE" : "DISAGREE";
    j["decide"] = verdict_to_json(g, r.verdict);
    Json effs = Json::array();
    for (const auto& e : r.effects) {
        Json ej;
        ej["effect"] = vertex_to_json(g, e.effect);
        ej["identifiable"] = e.decided_identifiable;
        ej["oracle_witness"] = e.oracle_witness;
        ej["witness_embeds"] = e.witness_embeds;
        if (e.path) ej["path"] = path_to_json(g, *e.path);
        effs.push_back(std::move(ej));
    }
    j["effects"] = std::move(effs);
    return j.dump();
}

std::string t_nc_json(const Scg& g, const std::vector<std::string>& dos, const std::vector<std::string>& effects) {
    return thresholds_to_json(g, compute_t_nc(g, to_query(g, dos, effects))).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Identifiability of causal effects from summary causal graphs";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

    py::class_<Scg>(m, "Graph")
        .def(py::init<std::vector<std::string>, const std::vector<std::pair<std::string, std::string>>&>(),
             py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("vertices", &Scg::names)
        .def_property_readonly("edges",
                               [](const Scg& g) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (auto [a, b] : g.edges()) out.emplace_back(g.name(a), g.name(b));
                                   return out;
                               })
        .def("serialize", [](const Scg& g, const std::string& fmt) { return serialize_scg(g, format_from_name(fmt)); },
             py::arg("format") = "edgelist")
        .def("__len__", &Scg::size)
        .def("__eq__", &Scg::operator==)
        .def("__repr__", [](const Scg& g) {
            return "<Graph " + std::to_string(g.size()) + " series, " + std::to_string(g.edge_count()) + " edges>";
        });

    m.def("parse_graph", [](const std::string& text, const std::string& fmt) { return parse_scg(text, format_from_name(fmt)); },
          py::arg("text"), py::arg("format") = "edgelist");
    m.def("_decide", &decide_json, py::arg("graph"), py::arg("interventions"), py::arg("effects"),
          py::arg("consistency") = false);
    m.def("_oracle_check", &oracle_json, py::arg("graph"), py::arg("interventions"), py::arg("effects"),
          py::arg("consistency") = false, py::arg("budget") = std::nullopt);
    m.def("_t_nc", &t_nc_json, py::arg("graph"), py::arg("interventions"), py::arg("effects"));
    m.def("_random_instance", [](std::uint64_t seed, int max_series) {
        RandomSpec spec;
        spec.max_series = max_series;
        RandomInstance inst = random_instance(seed, spec);
        return py::make_tuple(inst.scg, query_to_json(inst.scg, inst.query).dump());
    }, py::arg("seed"), py::arg("max_series") = 5);
}
