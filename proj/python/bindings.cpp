#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "palettelab/coloring.hpp"
#include "palettelab/families.hpp"
#include "palettelab/interval.hpp"
#include "palettelab/io.hpp"
#include "palettelab/palette_graph.hpp"
#include "palettelab/solver.hpp"
#include "palettelab/verify.hpp"

namespace py = pybind11;
using namespace palettelab;

namespace {

Multigraph build_from_py(int n, const py::iterable& specs) {
    std::vector<EdgeSpec> out;
    for (py::handle h : specs) {
        auto seq = py::cast<py::sequence>(h);
        if (seq.size() == 2) {
            out.push_back({seq[0].cast<int>(), seq[1].cast<int>(), 1});
        } else if (seq.size() == 3) {
            out.push_back({seq[0].cast<int>(), seq[1].cast<int>(), seq[2].cast<int>()});
        } else {
            throw std::invalid_argument("edge spec needs (u, v) or (u, v, multiplicity)");
        }
    }
    return Multigraph::build(n, out);
}

SearchConfig make_config(std::optional<int> max_colors,
                         std::optional<std::int64_t> time_budget_ms,
                         bool symmetry_breaking, int workers) {
    SearchConfig cfg;
    cfg.max_colors = max_colors;
    cfg.time_budget_ms = time_budget_ms;
    cfg.symmetry_breaking = symmetry_breaking;
    cfg.workers = workers;
    return cfg;
}

const char* method_name(SearchMethod m) {
    return m == SearchMethod::decomposition ? "decomposition" : "direct";
}

const char* status_name(IntervalSearchStatus s) {
    switch (s) {
        case IntervalSearchStatus::found: return "found";
        case IntervalSearchStatus::none: return "none";
        default: return "unknown";
    }
}

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skipped";
    }
}

const char* violation_name(ForestCheck::Violation v) {
    switch (v) {
        case ForestCheck::Violation::none: return "none";
        case ForestCheck::Violation::loop: return "loop";
        case ForestCheck::Violation::multi_edge: return "multi_edge";
        default: return "cycle";
    }
}

VerifyOptions make_verify_options(
    int n_max, int delta, int samples, std::uint64_t seed, bool slow, int workers,
    std::optional<std::int64_t> time_budget_ms,
    const std::vector<std::pair<std::string, Multigraph>>& extra_corpus) {
    VerifyOptions o;
    o.n_max = n_max;
    o.delta = delta;
    o.samples = samples;
    o.seed = seed;
    o.slow = slow;
    o.workers = workers;
    o.time_budget_ms = time_budget_ms;
    for (const auto& [name, graph] : extra_corpus) o.extra_corpus.push_back({name, graph});
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact multigraph edge-coloring solvers and checkers";

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init<>())
        .def_static("build", &build_from_py, py::arg("vertex_count"), py::arg("edges"),
                    "Build from (u, v) or (u, v, multiplicity) tuples.")
        .def("vertex_count", &Multigraph::vertex_count)
        .def("edge_count", &Multigraph::edge_count)
        .def("endpoints", &Multigraph::endpoints, py::arg("edge"))
        .def("incident_edges", &Multigraph::incident_edges, py::arg("vertex"))
        .def("degree", &Multigraph::degree, py::arg("vertex"))
        .def("max_degree", &Multigraph::max_degree)
        .def("multiplicity", &Multigraph::multiplicity, py::arg("u"), py::arg("v"))
        .def("max_multiplicity", &Multigraph::max_multiplicity)
        .def("simple_projection", &Multigraph::simple_projection)
        .def("sorted_pair_list", &Multigraph::sorted_pair_list)
        .def("__eq__",
             [](const Multigraph& a, const Multigraph& b) { return a == b; })
        .def("__repr__", [](const Multigraph& g) {
            std::ostringstream s;
            s << "Multigraph(vertices=" << g.vertex_count() << ", edges="
              << g.edge_count() << ")";
            return s.str();
        });

    m.def(
        "disjoint_union",
        [](const std::vector<Multigraph>& parts) {
            UnionLayout u = disjoint_union(parts);
            return py::make_tuple(u.graph, u.component_of_vertex, u.vertex_offset,
                                  u.edge_offset);
        },
        py::arg("parts"),
        "Returns (graph, component_of_vertex, vertex_offset, edge_offset).");

    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init([](int k, const std::vector<int>& assignment) {
                 return EdgeColoring{k, assignment};
             }),
             py::arg("k"), py::arg("assignment"))
        .def_readwrite("k", &EdgeColoring::k)
        .def_readwrite("assignment", &EdgeColoring::assignment)
        .def("__repr__", [](const EdgeColoring& c) {
            std::ostringstream s;
            s << "EdgeColoring(k=" << c.k << ", edges=" << c.assignment.size() << ")";
            return s.str();
        });

    m.def("is_proper", &is_proper, py::arg("g"), py::arg("c"));
    m.def("palette_of", &palette_of, py::arg("g"), py::arg("c"), py::arg("v"));
    m.def(
        "distinct_palettes",
        [](const Multigraph& g, const EdgeColoring& c) {
            auto set = distinct_palettes(g, c);
            return std::vector<Palette>(set.begin(), set.end());
        },
        py::arg("g"), py::arg("c"), "Sorted list of the distinct palettes.");
    m.def("relabel_colors", &relabel_colors, py::arg("c"), py::arg("permutation"));
    m.def("strip_unused_colors", &strip_unused_colors, py::arg("c"));
    m.def("used_colors", &used_colors, py::arg("c"));
    m.def(
        "random_proper_coloring",
        [](const Multigraph& g, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            return random_proper_coloring(g, rng);
        },
        py::arg("g"), py::arg("seed"));

    py::class_<PaletteMultigraph>(m, "PaletteMultigraph")
        .def_readonly("vertices", &PaletteMultigraph::vertices)
        .def_readonly("edges", &PaletteMultigraph::edges)
        .def("vertex_count", &PaletteMultigraph::vertex_count)
        .def("edge_count", &PaletteMultigraph::edge_count)
        .def("degree", &PaletteMultigraph::degree, py::arg("index"));
    m.def("build_palette_multigraph", &build_palette_multigraph, py::arg("g"),
          py::arg("c"));
    m.def("palette_degree", &palette_degree, py::arg("pg"), py::arg("palette"));
    m.def("remove_palette", &remove_palette, py::arg("pg"), py::arg("palette"));

    py::class_<ForestCheck>(m, "ForestCheck")
        .def_readonly("is_simple_forest", &ForestCheck::is_simple_forest)
        .def_property_readonly(
            "violation", [](const ForestCheck& f) { return violation_name(f.violation); })
        .def_readonly("witness", &ForestCheck::witness);
    m.def("is_simple_forest", &is_simple_forest, py::arg("pg"));
    m.def(
        "average_degree",
        [](const PaletteMultigraph& pg) {
            Rational r = average_degree(pg);
            return py::make_tuple(r.num, r.den);
        },
        py::arg("pg"), "Exact average degree as a (numerator, denominator) pair.");

    py::class_<HGraph>(m, "HGraph")
        .def_readonly("graph", &HGraph::graph)
        .def_readonly("delta", &HGraph::delta)
        .def_readonly("t", &HGraph::t)
        .def_readonly("center", &HGraph::center)
        .def("rim_vertex", &HGraph::rim_vertex, py::arg("j"))
        .def("spoke_edge", &HGraph::spoke_edge, py::arg("j"))
        .def_static("partner", &HGraph::partner, py::arg("j"));

    py::class_<GDeltaGraph>(m, "GDeltaGraph")
        .def_readonly("graph", &GDeltaGraph::graph)
        .def_readonly("delta", &GDeltaGraph::delta)
        .def_readonly("parts", &GDeltaGraph::parts)
        .def_readonly("component_of_vertex", &GDeltaGraph::component_of_vertex)
        .def_readonly("centers", &GDeltaGraph::centers);

    py::class_<GDeltaTilde>(m, "GDeltaTilde")
        .def_readonly("graph", &GDeltaTilde::graph)
        .def_readonly("delta", &GDeltaTilde::delta)
        .def_readonly("hub", &GDeltaTilde::hub)
        .def_readonly("centers", &GDeltaTilde::centers);

    m.def("windmill", &windmill, py::arg("delta"));
    m.def("h_delta_t", &h_delta_t, py::arg("delta"), py::arg("t"));
    m.def("lobe", &lobe, py::arg("h"), py::arg("j"));
    m.def("g_delta", &g_delta, py::arg("delta"));
    m.def("g_delta_tilde", &g_delta_tilde, py::arg("delta"));
    m.def("complete", &complete, py::arg("n"));
    m.def("complete_bipartite", &complete_bipartite, py::arg("m"), py::arg("n"));
    m.def("path", &path, py::arg("n"));
    m.def("cycle", &cycle, py::arg("n"));
    m.def("star", &star, py::arg("leaves"));
    m.def("random_multigraph", &random_multigraph, py::arg("n"), py::arg("p"),
          py::arg("max_multiplicity"), py::arg("seed"));
    m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));

    py::class_<ChromaticIndexResult>(m, "ChromaticIndexResult")
        .def_readonly("value", &ChromaticIndexResult::value)
        .def_readonly("exact", &ChromaticIndexResult::exact)
        .def_readonly("lower", &ChromaticIndexResult::lower)
        .def_readonly("upper", &ChromaticIndexResult::upper);

    py::class_<PaletteIndexResult>(m, "PaletteIndexResult")
        .def_readonly("value", &PaletteIndexResult::value)
        .def_readonly("exact", &PaletteIndexResult::exact)
        .def_readonly("lower_bound", &PaletteIndexResult::lower_bound)
        .def_readonly("colors_used", &PaletteIndexResult::colors_used)
        .def_readonly("explored_k_min", &PaletteIndexResult::explored_k_min)
        .def_readonly("explored_k_max", &PaletteIndexResult::explored_k_max)
        .def_readonly("witness", &PaletteIndexResult::witness)
        .def_property_readonly(
            "method", [](const PaletteIndexResult& r) { return method_name(r.method); })
        .def_readonly("wall_ms", &PaletteIndexResult::wall_ms)
        .def_readonly("nodes", &PaletteIndexResult::nodes);

    py::class_<MinPalettesResult>(m, "MinPalettesResult")
        .def_readonly("value", &MinPalettesResult::value)
        .def_readonly("exact", &MinPalettesResult::exact)
        .def_readonly("witness", &MinPalettesResult::witness)
        .def_readonly("nodes", &MinPalettesResult::nodes);

    py::class_<ChiPrimeSResult>(m, "ChiPrimeSResult")
        .def_readonly("k", &ChiPrimeSResult::k)
        .def_readonly("palette_count", &ChiPrimeSResult::palette_count)
        .def_readonly("witness", &ChiPrimeSResult::witness);

    m.def(
        "chromatic_index",
        [](const Multigraph& g, std::optional<int> max_colors,
           std::optional<std::int64_t> time_budget_ms, bool symmetry_breaking,
           int workers) {
            return chromatic_index(
                g, make_config(max_colors, time_budget_ms, symmetry_breaking, workers));
        },
        py::arg("g"), py::kw_only(), py::arg("max_colors") = py::none(),
        py::arg("time_budget_ms") = py::none(), py::arg("symmetry_breaking") = true,
        py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def(
        "min_palettes_with_k_colors",
        [](const Multigraph& g, int k, std::optional<std::int64_t> time_budget_ms,
           bool symmetry_breaking, int workers) {
            return min_palettes_with_k_colors(
                g, k, make_config(std::nullopt, time_budget_ms, symmetry_breaking,
                                  workers));
        },
        py::arg("g"), py::arg("k"), py::kw_only(),
        py::arg("time_budget_ms") = py::none(), py::arg("symmetry_breaking") = true,
        py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def(
        "palette_index",
        [](const Multigraph& g, std::optional<int> max_colors,
           std::optional<std::int64_t> time_budget_ms, bool symmetry_breaking,
           int workers) {
            return palette_index(
                g, make_config(max_colors, time_budget_ms, symmetry_breaking, workers));
        },
        py::arg("g"), py::kw_only(), py::arg("max_colors") = py::none(),
        py::arg("time_budget_ms") = py::none(), py::arg("symmetry_breaking") = true,
        py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def(
        "chi_prime_s",
        [](const Multigraph& g, std::optional<std::int64_t> time_budget_ms,
           bool symmetry_breaking, int workers) {
            return chi_prime_s(g, make_config(std::nullopt, time_budget_ms,
                                              symmetry_breaking, workers));
        },
        py::arg("g"), py::kw_only(), py::arg("time_budget_ms") = py::none(),
        py::arg("symmetry_breaking") = true, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "palette_index_union",
        [](const std::vector<Multigraph>& parts,
           std::optional<std::int64_t> time_budget_ms, bool symmetry_breaking,
           int workers) {
            return palette_index_union(
                parts,
                make_config(std::nullopt, time_budget_ms, symmetry_breaking, workers));
        },
        py::arg("parts"), py::kw_only(), py::arg("time_budget_ms") = py::none(),
        py::arg("symmetry_breaking") = true, py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def("degree_diversity_lower_bound", &degree_diversity_lower_bound, py::arg("g"));
    m.def("trivial_palette_upper_bound", &trivial_palette_upper_bound, py::arg("delta"));
    m.def("gdelta_bounds", &gdelta_bounds, py::arg("delta"));

    py::class_<IntervalReport>(m, "IntervalReport")
        .def_readonly("is_interval", &IntervalReport::is_interval)
        .def_readonly("is_cyclic_interval", &IntervalReport::is_cyclic_interval)
        .def_readonly("t", &IntervalReport::t)
        .def_readonly("offending_vertex", &IntervalReport::offending_vertex);
    m.def("is_interval_coloring", &is_interval_coloring, py::arg("g"), py::arg("c"));
    m.def("is_cyclic_interval_coloring", &is_cyclic_interval_coloring, py::arg("g"),
          py::arg("c"));

    py::class_<IntervalSearchResult>(m, "IntervalSearchResult")
        .def_property_readonly(
            "status",
            [](const IntervalSearchResult& r) { return status_name(r.status); })
        .def_readonly("witness", &IntervalSearchResult::witness)
        .def_readonly("colors", &IntervalSearchResult::colors)
        .def_readonly("max_colors_tried", &IntervalSearchResult::max_colors_tried);
    m.def(
        "find_interval_coloring",
        [](const Multigraph& g, std::optional<int> max_colors,
           std::optional<std::int64_t> time_budget_ms, int workers) {
            return find_interval_coloring(
                g, make_config(max_colors, time_budget_ms, true, workers));
        },
        py::arg("g"), py::kw_only(), py::arg("max_colors") = py::none(),
        py::arg("time_budget_ms") = py::none(), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
    m.def("interval_palette_bound", &interval_palette_bound, py::arg("delta"));

    py::class_<IntervalBoundReport>(m, "IntervalBoundReport")
        .def_property_readonly(
            "status",
            [](const IntervalBoundReport& r) { return status_name(r.status); })
        .def_readonly("applicable", &IntervalBoundReport::applicable)
        .def_readonly("palette_index", &IntervalBoundReport::palette_index)
        .def_readonly("bound", &IntervalBoundReport::bound)
        .def_readonly("holds", &IntervalBoundReport::holds)
        .def_readonly("exact", &IntervalBoundReport::exact);
    m.def(
        "check_interval_bound",
        [](const Multigraph& g, std::optional<std::int64_t> time_budget_ms,
           int workers) {
            return check_interval_bound(
                g, make_config(std::nullopt, time_budget_ms, true, workers));
        },
        py::arg("g"), py::kw_only(), py::arg("time_budget_ms") = py::none(),
        py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());

    m.def(
        "parse_multigraph",
        [](const std::string& text) {
            std::istringstream in(text);
            NamedMultigraph nm = parse_multigraph(in);
            return py::make_tuple(nm.graph, nm.names);
        },
        py::arg("text"), "Returns (graph, vertex_names).");
    m.def("serialize_multigraph", &serialize_multigraph, py::arg("g"),
          py::arg("names") = std::vector<std::string>{});
    m.def(
        "parse_coloring",
        [](const std::string& text, int edge_count) {
            std::istringstream in(text);
            return parse_coloring(in, edge_count);
        },
        py::arg("text"), py::arg("edge_count"));
    m.def("serialize_coloring", &serialize_coloring, py::arg("c"));
    m.def(
        "parse_color_matrix",
        [](const std::string& text) {
            std::istringstream in(text);
            auto [g, c] = parse_color_matrix(in);
            return py::make_tuple(g, c);
        },
        py::arg("text"),
        "Validate a 1-based bipartite color matrix; returns (graph, coloring).");
    m.def(
        "to_dot",
        [](const Multigraph& g, const std::vector<std::string>& names) {
            return to_dot(g, names);
        },
        py::arg("g"), py::arg("names") = std::vector<std::string>{});
    m.def(
        "palette_graph_dot",
        [](const PaletteMultigraph& pg) { return to_dot(pg); }, py::arg("pg"));

    py::class_<CheckLine>(m, "CheckLine")
        .def_readonly("label", &CheckLine::label)
        .def_property_readonly(
            "status", [](const CheckLine& c) { return check_status_name(c.status); })
        .def_readonly("detail", &CheckLine::detail);
    py::class_<SuiteResult>(m, "SuiteResult")
        .def_readonly("name", &SuiteResult::name)
        .def_readonly("checks", &SuiteResult::checks)
        .def("passed", &SuiteResult::pass)
        .def("failed", &SuiteResult::failed)
        .def("skipped", &SuiteResult::skipped);
    m.def("suite_names", &suite_names);
    m.def(
        "named_small_graphs",
        []() {
            std::vector<std::pair<std::string, Multigraph>> out;
            for (const NamedGraph& ng : named_small_graphs())
                out.emplace_back(ng.name, ng.graph);
            return out;
        },
        "The fixed corpus as (name, graph) pairs.");
    m.def(
        "run_suite",
        [](const std::string& name, int n_max, int delta, int samples,
           std::uint64_t seed, bool slow, int workers,
           std::optional<std::int64_t> time_budget_ms,
           const std::vector<std::pair<std::string, Multigraph>>& extra_corpus) {
            return run_suite(name,
                             make_verify_options(n_max, delta, samples, seed, slow,
                                                 workers, time_budget_ms, extra_corpus));
        },
        py::arg("name"), py::kw_only(), py::arg("n_max") = 7, py::arg("delta") = 4,
        py::arg("samples") = 0, py::arg("seed") = 7, py::arg("slow") = false,
        py::arg("workers") = 1, py::arg("time_budget_ms") = py::none(),
        py::arg("extra_corpus") = std::vector<std::pair<std::string, Multigraph>>{},
        py::call_guard<py::gil_scoped_release>());
}
