#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include <ied/bounds.hpp>
#include <ied/entropy.hpp>
#include <ied/gndi.hpp>
#include <ied/graph.hpp>
#include <ied/io.hpp>
#include <ied/oracle.hpp>

namespace py = pybind11;
using namespace ied;

namespace {

Mode mode_from(const std::string& name) {
    if (name == "sets") return Mode::sets;
    if (name == "multisets") return Mode::multisets;
    throw InvalidInputError("mode must be 'sets' or 'multisets'");
}

py::int_ big_to_py(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

PartialColoring coloring_from(const std::vector<std::optional<Color>>& colors) {
    PartialColoring phi(static_cast<int>(colors.size()));
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i]) phi.set(static_cast<Vertex>(i + 1), *colors[i]);
    return phi;
}

py::dict run_result_to_dict(const RunResult& result, const std::string& log_text) {
    py::dict out;
    out["complete"] = result.completed();
    out["iterations"] = result.iterations;
    out["draws"] = result.draws;
    std::vector<std::optional<Color>> colors(result.coloring.vertex_count());
    for (Vertex v = 1; v <= result.coloring.vertex_count(); ++v)
        if (result.coloring.is_colored(v)) colors[v - 1] = result.coloring.color(v);
    out["coloring"] = colors;
    out["log"] = log_text;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "List colorings of uniform hypergraphs distinguishing intersecting edges";

    py::register_exception<Error>(m, "IedError");

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<int, std::vector<std::vector<Vertex>>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Hypergraph::vertex_count)
        .def_property_readonly("m", &Hypergraph::edge_count)
        .def("edge", &Hypergraph::edge, py::arg("e"))
        .def("degree", &Hypergraph::degree, py::arg("v"))
        .def("max_degree", &Hypergraph::max_degree)
        .def("__repr__", [](const Hypergraph& h) {
            std::ostringstream out;
            out << "Hypergraph(n=" << h.vertex_count() << ", m=" << h.edge_count() << ")";
            return out.str();
        });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<Vertex, Vertex>>>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edge", &Graph::edge, py::arg("e"))
        .def("degree", &Graph::degree, py::arg("v"));

    py::class_<PermutationFamily>(m, "PermutationFamily")
        .def(py::init<int, std::vector<std::vector<int>>>(), py::arg("k"), py::arg("perms"))
        .def_static("identity", &PermutationFamily::identity_only, py::arg("k"))
        .def_static("identity_and_reversal", &PermutationFamily::identity_and_reversal,
                    py::arg("k"))
        .def_property_readonly("k", &PermutationFamily::arity)
        .def("__len__", &PermutationFamily::size);

    m.def("uniformity", &uniformity, py::arg("h"));
    m.def("difference_spectrum", &difference_spectrum, py::arg("h"));

    m.def(
        "verify",
        [](const Hypergraph& h, const std::vector<Color>& phi, const std::string& mode)
            -> std::optional<std::pair<int, int>> {
            const auto violation = verify(h, phi, mode_from(mode));
            if (!violation) return std::nullopt;
            return std::pair<int, int>{violation->p, violation->q};
        },
        py::arg("h"), py::arg("coloring"), py::arg("mode") = "sets",
        "None when valid, else the least violating edge pair");

    m.def(
        "verify_partial",
        [](const Hypergraph& h, const std::vector<std::optional<Color>>& phi,
           const std::string& mode) -> std::optional<std::pair<int, int>> {
            const auto violation = verify_partial(h, coloring_from(phi), mode_from(mode));
            if (!violation) return std::nullopt;
            return std::pair<int, int>{violation->p, violation->q};
        },
        py::arg("h"), py::arg("coloring"), py::arg("mode") = "sets");

    m.def(
        "verify_sequences",
        [](const Hypergraph& h, const PermutationFamily& pi, const std::vector<Color>& phi)
            -> std::optional<std::tuple<int, int, int>> {
            const auto violation = verify_sequences(h, pi, phi);
            if (!violation) return std::nullopt;
            return std::tuple<int, int, int>{violation->p, violation->q, violation->sigma};
        },
        py::arg("h"), py::arg("pi"), py::arg("coloring"));

    m.def(
        "similar_under",
        [](const Hypergraph& h, EdgeId p, EdgeId q, const std::vector<int>& sigma,
           const std::vector<std::optional<Color>>& phi) {
            return similar_under(h, p, q, sigma, coloring_from(phi));
        },
        py::arg("h"), py::arg("p"), py::arg("q"), py::arg("sigma"), py::arg("coloring"));

    m.def("stirling2", [](int n, int i) { return big_to_py(stirling2(n, i)); }, py::arg("n"),
          py::arg("i"));
    m.def("fubini", [](int n) { return big_to_py(fubini(n)); }, py::arg("n"));
    m.def("q", &q, py::arg("i"));
    m.def("bound_ieds", &bound_ieds, py::arg("k"), py::arg("delta"), py::arg("spectrum"));
    m.def("bound_iedm", &bound_iedm, py::arg("k"), py::arg("delta"), py::arg("spectrum"));
    m.def("bound_sequences", &bound_sequences, py::arg("k"), py::arg("delta"),
          py::arg("spectrum"), py::arg("pi"));

    m.def(
        "run",
        [](const Hypergraph& h, const std::vector<std::vector<Color>>& lists,
           const std::string& mode, std::uint64_t seed, int r,
           std::optional<std::uint64_t> max_iterations) {
            RunOptions options;
            options.max_iterations = max_iterations;
            const auto result = run(h, ListAssignment(lists), mode_from(mode),
                                    DrawSequence::seeded(seed, r), options);
            return run_result_to_dict(result, format_log(result.log));
        },
        py::arg("h"), py::arg("lists"), py::arg("mode"), py::arg("seed"), py::arg("r"),
        py::arg("max_iterations") = std::nullopt,
        "Seeded coloring run; returns completion flag, iterations, draws, coloring and log");

    m.def(
        "run_sequences",
        [](const Hypergraph& h, const PermutationFamily& pi,
           const std::vector<std::vector<Color>>& lists, std::uint64_t seed, int r,
           std::optional<std::uint64_t> max_iterations) {
            RunOptions options;
            options.max_iterations = max_iterations;
            const auto result = run_sequences(h, pi, ListAssignment(lists),
                                              DrawSequence::seeded(seed, r), options);
            return run_result_to_dict(result, format_log(result.log));
        },
        py::arg("h"), py::arg("pi"), py::arg("lists"), py::arg("seed"), py::arg("r"),
        py::arg("max_iterations") = std::nullopt);

    m.def(
        "decode",
        [](const Hypergraph& h, const std::vector<std::vector<Color>>& lists,
           const std::string& mode, int r, const std::string& log_text,
           const std::vector<std::optional<Color>>& final_coloring) {
            std::istringstream in(log_text);
            return decode(h, ListAssignment(lists), mode_from(mode), r, parse_log(in),
                          coloring_from(final_coloring));
        },
        py::arg("h"), py::arg("lists"), py::arg("mode"), py::arg("r"), py::arg("log"),
        py::arg("final_coloring"),
        "Reconstructs the consumed draw prefix from a conflict log trace");

    m.def(
        "decode_sequences",
        [](const Hypergraph& h, const PermutationFamily& pi,
           const std::vector<std::vector<Color>>& lists, int r, const std::string& log_text,
           const std::vector<std::optional<Color>>& final_coloring) {
            std::istringstream in(log_text);
            return decode_sequences(h, pi, ListAssignment(lists), r, parse_log(in),
                                    coloring_from(final_coloring));
        },
        py::arg("h"), py::arg("pi"), py::arg("lists"), py::arg("r"), py::arg("log"),
        py::arg("final_coloring"));

    m.def("dual_hypergraph", &dual_hypergraph, py::arg("g"));
    m.def("total_hypergraph", &total_hypergraph, py::arg("g"));
    m.def("is_nice", &is_nice, py::arg("g"));
    m.def(
        "verify_gap",
        [](const Graph& g, const std::vector<int>& labels)
            -> std::optional<std::pair<int, int>> {
            const auto violation = verify_gap(g, labels);
            if (!violation) return std::nullopt;
            return std::pair<int, int>{violation->u, violation->v};
        },
        py::arg("g"), py::arg("edge_labels"));
    m.def("gap_coloring", &gap_coloring, py::arg("g"), py::arg("edge_labels"));
    m.def("line_arrangement", &line_arrangement, py::arg("points"), py::arg("lines"));

    py::class_<NaeFormula>(m, "NaeFormula")
        .def(py::init([](int num_vars, std::vector<std::vector<int>> clauses) {
                 return validate_formula({num_vars, std::move(clauses)});
             }),
             py::arg("num_vars"), py::arg("clauses"))
        .def_readonly("num_vars", &NaeFormula::num_vars)
        .def_readonly("clauses", &NaeFormula::clauses);

    m.def(
        "nae_satisfiable",
        [](const NaeFormula& formula, const std::vector<int>& forced_true)
            -> std::optional<std::vector<bool>> { return nae_satisfiable(formula, forced_true); },
        py::arg("formula"), py::arg("forced_true") = std::vector<int>{});
    m.def("property_b", &property_b, py::arg("h"));
    m.def(
        "gndi",
        [](const Graph& g, const std::vector<EdgeId>& forced_ones) {
            const auto result = gndi_of(g, forced_ones);
            return py::make_tuple(result.value, result.labeling);
        },
        py::arg("g"), py::arg("forced_ones") = std::vector<EdgeId>{},
        "(value, labeling or None) of a bipartite graph");
    m.def(
        "hardness_gadget",
        [](const NaeFormula& formula, int girth) { return hardness_gadget(formula, girth).graph; },
        py::arg("formula"), py::arg("girth") = 4);
    m.def("fano_incidence", &fano_incidence);
    m.def("fano_plane", &fano_plane);

    m.def("brute_force_coloring",
          [](const Hypergraph& h, const std::vector<std::vector<Color>>& lists,
             const std::string& mode) {
              return brute_force_coloring(h, ListAssignment(lists), mode_from(mode));
          },
          py::arg("h"), py::arg("lists"), py::arg("mode") = "sets");
    m.def("brute_force_gndi", &brute_force_gndi, py::arg("g"), py::arg("max_labels") = 8);
}
