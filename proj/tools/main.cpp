#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "palettelab/coloring.hpp"
#include "palettelab/families.hpp"
#include "palettelab/interval.hpp"
#include "palettelab/io.hpp"
#include "palettelab/palette_graph.hpp"
#include "palettelab/solver.hpp"
#include "palettelab/verify.hpp"

using namespace palettelab;

namespace {

constexpr int kExitError = 1;    // bad input or infeasible request
constexpr int kExitBounded = 2;  // search ended without a certificate

struct CommonOpts {
    bool json = false;
    int jobs = 1;
    std::optional<double> time_budget_s;

    // Flag wins, then the environment, then the command's own default.
    std::int64_t budget_ms(std::int64_t fallback) const {
        if (time_budget_s) return static_cast<std::int64_t>(*time_budget_s * 1000.0);
        if (const char* env = std::getenv("PALETTELAB_TIME_BUDGET_MS"))
            return std::strtoll(env, nullptr, 10);
        return fallback;
    }

    SearchConfig search(std::int64_t fallback_ms) const {
        SearchConfig cfg;
        cfg.workers = jobs;
        cfg.time_budget_ms = budget_ms(fallback_ms);
        return cfg;
    }
};

NamedMultigraph read_graph(const std::string& path) {
    if (path == "-") return parse_multigraph(std::cin);
    return parse_multigraph_file(path);
}

EdgeColoring read_coloring(const std::string& path, int edge_count) {
    if (path == "-") return parse_coloring(std::cin, edge_count);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return parse_coloring(in, edge_count);
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << content;
}

void emit(const Report& report, const CommonOpts& common) {
    std::cout << (common.json ? report.json() + "\n" : report.text());
}

int run_generate(const std::string& family, int delta, int t, int n, int m, double p,
                 int max_multiplicity, std::uint64_t seed, bool dot,
                 const std::string& out) {
    Multigraph g;
    if (family == "windmill") {
        g = windmill(delta);
    } else if (family == "h_delta_t") {
        g = h_delta_t(delta, t).graph;
    } else if (family == "g_delta") {
        g = g_delta(delta).graph;
    } else if (family == "g_delta_tilde") {
        g = g_delta_tilde(delta).graph;
    } else if (family == "complete") {
        g = complete(n);
    } else if (family == "complete_bipartite") {
        g = complete_bipartite(m, n);
    } else if (family == "path") {
        g = path(n);
    } else if (family == "cycle") {
        g = cycle(n);
    } else if (family == "star") {
        g = star(n);
    } else if (family == "random") {
        g = random_multigraph(n, p, max_multiplicity, seed);
    } else if (family == "random_tree") {
        g = random_tree(n, seed);
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    write_output(out, dot ? to_dot(g) : serialize_multigraph(g));
    return 0;
}

int run_palette_index(const CommonOpts& common, const std::string& in,
                      std::optional<int> max_colors, const std::string& witness_out) {
    NamedMultigraph nm = read_graph(in);
    SearchConfig cfg = common.search(120'000);
    cfg.max_colors = max_colors;
    PaletteIndexResult r = palette_index(nm.graph, cfg);
    Report report;
    report.add("graph", in);
    report.add("vertices", nm.graph.vertex_count());
    report.add("edges", nm.graph.edge_count());
    report.add("palette_index", r.value);
    report.add("exact", r.exact);
    report.add("lower_bound", r.lower_bound);
    report.add("colors_used", r.colors_used);
    report.add("method",
               r.method == SearchMethod::decomposition ? "decomposition" : "direct");
    report.add("explored_k_min", r.explored_k_min);
    report.add("explored_k_max", r.explored_k_max);
    report.add("nodes", static_cast<long long>(r.nodes));
    report.add("wall_ms", static_cast<long long>(r.wall_ms));
    if (!witness_out.empty() && r.witness) {
        write_output(witness_out, serialize_coloring(*r.witness));
        report.add("witness", witness_out);
    }
    emit(report, common);
    return r.exact ? 0 : kExitBounded;
}

int run_chi_prime_s(const CommonOpts& common, const std::string& in,
                    const std::string& witness_out) {
    NamedMultigraph nm = read_graph(in);
    ChiPrimeSResult r;
    try {
        r = chi_prime_s(nm.graph, common.search(120'000));
    } catch (const std::runtime_error& e) {
        std::cerr << "not certified: " << e.what() << "\n";
        return kExitBounded;
    }
    Report report;
    report.add("graph", in);
    report.add("chi_prime_s", r.k);
    report.add("palette_index", r.palette_count);
    if (!witness_out.empty()) {
        write_output(witness_out, serialize_coloring(r.witness));
        report.add("witness", witness_out);
    }
    emit(report, common);
    return 0;
}

int run_palette_graph(const std::string& in, const std::string& coloring_path,
                      const std::string& out) {
    NamedMultigraph nm = read_graph(in);
    EdgeColoring c = read_coloring(coloring_path, nm.graph.edge_count());
    PaletteMultigraph pg = build_palette_multigraph(nm.graph, c);
    write_output(out, to_dot(pg));
    return 0;
}

int run_check_coloring(const CommonOpts& common, const std::string& in,
                       const std::string& coloring_path) {
    NamedMultigraph nm = read_graph(in);
    EdgeColoring c = read_coloring(coloring_path, nm.graph.edge_count());
    Report report;
    report.add("graph", in);
    report.add("coloring", coloring_path);
    bool proper = false;
    std::string problem;
    try {
        proper = is_proper(nm.graph, c);
        if (!proper) problem = "two incident edges share a color";
    } catch (const std::invalid_argument& e) {
        problem = e.what();
    }
    report.add("proper", proper);
    if (!proper) {
        report.add("problem", problem);
        emit(report, common);
        return kExitError;
    }
    report.add("k", c.k);
    report.add("colors_used", static_cast<int>(used_colors(c).size()));
    report.add("distinct_palettes",
               static_cast<int>(distinct_palettes(nm.graph, c).size()));
    emit(report, common);
    return 0;
}

int run_check_interval(const CommonOpts& common, const std::string& in,
                       const std::string& coloring_path, bool find, bool cyclic,
                       std::optional<int> max_colors, const std::string& witness_out) {
    NamedMultigraph nm = read_graph(in);
    Report report;
    report.add("graph", in);
    if (find) {
        SearchConfig cfg = common.search(60'000);
        cfg.max_colors = max_colors;
        IntervalSearchResult r = find_interval_coloring(nm.graph, cfg);
        const char* status = r.status == IntervalSearchStatus::found   ? "found"
                             : r.status == IntervalSearchStatus::none ? "none"
                                                                      : "unknown";
        report.add("status", status);
        report.add("max_colors_tried", r.max_colors_tried);
        if (r.witness) {
            report.add("colors", r.colors);
            if (!witness_out.empty()) {
                write_output(witness_out, serialize_coloring(*r.witness));
                report.add("witness", witness_out);
            }
        }
        emit(report, common);
        if (r.status == IntervalSearchStatus::found) return 0;
        return r.status == IntervalSearchStatus::none ? kExitError : kExitBounded;
    }
    if (coloring_path.empty())
        throw std::invalid_argument("check-interval needs --coloring or --find");
    EdgeColoring c = read_coloring(coloring_path, nm.graph.edge_count());
    IntervalReport r = cyclic ? is_cyclic_interval_coloring(nm.graph, c)
                              : is_interval_coloring(nm.graph, c);
    report.add("coloring", coloring_path);
    report.add("is_interval", r.is_interval);
    report.add("is_cyclic_interval", r.is_cyclic_interval);
    report.add("t", r.t);
    if (r.offending_vertex) report.add("offending_vertex", *r.offending_vertex);
    emit(report, common);
    return (cyclic ? r.is_cyclic_interval : r.is_interval) ? 0 : kExitError;
}

int run_matrix(const CommonOpts& common, const std::string& in,
               const std::string& graph_out, const std::string& coloring_out) {
    ColorMatrix m;
    if (in == "-") {
        m = parse_matrix(std::cin);
    } else {
        std::ifstream f(in);
        if (!f) throw std::invalid_argument("cannot open " + in);
        m = parse_matrix(f);
    }
    MatrixCheck chk = check_color_matrix(m);
    Report report;
    report.add("matrix", in);
    report.add("rows", m.rows);
    report.add("cols", m.cols);
    report.add("proper", chk.proper);
    if (!chk.errors.empty()) {
        std::ostringstream joined;
        for (std::size_t i = 0; i < chk.errors.size(); ++i)
            joined << (i ? "; " : "") << chk.errors[i];
        report.add("problems", joined.str());
    }
    report.add("distinct_colors", chk.distinct_colors);
    report.add("distinct_palettes", chk.distinct_palettes);
    if (chk.proper && (!graph_out.empty() || !coloring_out.empty())) {
        auto [g, c] = matrix_to_coloring(m);
        if (!graph_out.empty()) {
            write_output(graph_out, serialize_multigraph(g));
            report.add("graph_out", graph_out);
        }
        if (!coloring_out.empty()) {
            write_output(coloring_out, serialize_coloring(c));
            report.add("coloring_out", coloring_out);
        }
    }
    emit(report, common);
    return chk.proper ? 0 : kExitError;
}

const char* status_tag(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "[PASS]";
        case CheckStatus::fail: return "[FAIL]";
        default: return "[SKIP]";
    }
}

int run_verify(const CommonOpts& common, const std::string& suite, VerifyOptions opts,
               const std::string& corpus_dir) {
    opts.workers = common.jobs;
    if (common.time_budget_s)
        opts.time_budget_ms = static_cast<std::int64_t>(*common.time_budget_s * 1000.0);
    else if (const char* env = std::getenv("PALETTELAB_TIME_BUDGET_MS"))
        opts.time_budget_ms = std::strtoll(env, nullptr, 10);
    if (!corpus_dir.empty()) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".txt")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files)
            opts.extra_corpus.push_back(
                {f.stem().string(), parse_multigraph_file(f.string()).graph});
    }
    std::vector<std::string> names =
        suite.empty() ? suite_names() : std::vector<std::string>{suite};
    bool all_pass = true;
    nlohmann::ordered_json doc;
    doc["suites"] = nlohmann::ordered_json::array();
    for (const std::string& name : names) {
        SuiteResult r = run_suite(name, opts);
        all_pass = all_pass && r.pass();
        if (common.json) {
            nlohmann::ordered_json js;
            js["name"] = r.name;
            js["pass"] = r.pass();
            js["checks"] = nlohmann::ordered_json::array();
            for (const CheckLine& c : r.checks) {
                nlohmann::ordered_json jc;
                jc["label"] = c.label;
                jc["status"] = c.status == CheckStatus::pass   ? "pass"
                               : c.status == CheckStatus::fail ? "fail"
                                                               : "skipped";
                jc["detail"] = c.detail;
                js["checks"].push_back(jc);
            }
            doc["suites"].push_back(js);
            continue;
        }
        std::cout << "suite " << r.name << "\n";
        for (const CheckLine& c : r.checks) {
            std::cout << "  " << status_tag(c.status) << " " << c.label;
            if (!c.detail.empty()) std::cout << ": " << c.detail;
            std::cout << "\n";
        }
        std::cout << "suite " << r.name << ": "
                  << (r.checks.size() - r.failed() - r.skipped()) << " passed, "
                  << r.failed() << " failed, " << r.skipped() << " skipped\n";
    }
    if (common.json) {
        doc["pass"] = all_pass;
        std::cout << doc.dump(2) << "\n";
    }
    return all_pass ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multigraph edge-coloring laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    CommonOpts common;
    app.add_flag("--json", common.json, "emit JSON reports");
    app.add_option("--jobs", common.jobs, "solver worker threads")
        ->check(CLI::Range(1, 64));
    app.add_option("--time-budget", common.time_budget_s,
                   "solver time budget in seconds");

    auto* gen = app.add_subcommand("generate", "write a graph from a named family");
    std::string family, gen_out = "-";
    int gen_delta = 4, gen_t = 1, gen_n = 5, gen_m = 2, gen_mult = 3;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    bool gen_dot = false;
    gen->add_option("--family", family,
                    "windmill, h_delta_t, g_delta, g_delta_tilde, complete, "
                    "complete_bipartite, path, cycle, star, random, random_tree")
        ->required();
    gen->add_option("--delta", gen_delta, "max degree for the hub-and-rim families");
    gen->add_option("--t", gen_t, "rim edge multiplicity for h_delta_t");
    gen->add_option("--n", gen_n, "order (vertices, leaves, or right side)");
    gen->add_option("--m", gen_m, "left side size for complete_bipartite");
    gen->add_option("--p", gen_p, "pair probability for random");
    gen->add_option("--max-multiplicity", gen_mult, "multiplicity cap for random");
    gen->add_option("--seed", gen_seed, "seed for the random families");
    gen->add_flag("--dot", gen_dot, "write DOT instead of the text format");
    gen->add_option("--out", gen_out, "output path, - for stdout");

    auto* pidx = app.add_subcommand("palette-index",
                                    "fewest distinct palettes over proper colorings");
    std::string pi_in = "-", pi_witness;
    std::optional<int> pi_max_colors;
    pidx->add_option("--in", pi_in, "graph file, - for stdin");
    pidx->add_option("--max-colors", pi_max_colors, "cap the color universe");
    pidx->add_option("--witness", pi_witness, "write an optimal coloring here");

    auto* cps = app.add_subcommand("chi-prime-s",
                                   "fewest colors attaining the palette index");
    std::string cps_in = "-", cps_witness;
    cps->add_option("--in", cps_in, "graph file, - for stdin");
    cps->add_option("--witness", cps_witness, "write an attaining coloring here");

    auto* pg = app.add_subcommand("palette-graph",
                                  "palette multigraph of a coloring, as DOT");
    std::string pg_in = "-", pg_coloring, pg_out = "-";
    pg->add_option("--in", pg_in, "graph file, - for stdin");
    pg->add_option("--coloring", pg_coloring, "coloring file")->required();
    pg->add_option("--out", pg_out, "output path, - for stdout");

    auto* cc = app.add_subcommand("check-coloring", "validate a proper coloring");
    std::string cc_in = "-", cc_coloring;
    cc->add_option("--in", cc_in, "graph file, - for stdin");
    cc->add_option("--coloring", cc_coloring, "coloring file")->required();

    auto* ci = app.add_subcommand("check-interval",
                                  "check or search for interval colorings");
    std::string ci_in = "-", ci_coloring, ci_witness;
    bool ci_find = false, ci_cyclic = false;
    std::optional<int> ci_max_colors;
    ci->add_option("--in", ci_in, "graph file, - for stdin");
    ci->add_option("--coloring", ci_coloring, "coloring file to check");
    ci->add_flag("--find", ci_find, "search for an interval coloring");
    ci->add_flag("--cyclic", ci_cyclic, "judge the cyclic variant instead");
    ci->add_option("--max-colors", ci_max_colors, "cap the searched color count");
    ci->add_option("--witness", ci_witness, "write the found coloring here");

    auto* mx = app.add_subcommand("matrix", "validate a bipartite color matrix");
    std::string mx_in = "-", mx_graph_out, mx_coloring_out;
    mx->add_option("--in", mx_in, "matrix file, - for stdin");
    mx->add_option("--graph-out", mx_graph_out, "write the K_{m,n} graph here");
    mx->add_option("--coloring-out", mx_coloring_out, "write the coloring here");

    auto* vf = app.add_subcommand("verify", "run the claim verification suites");
    std::string vf_suite, vf_corpus;
    VerifyOptions vopts;
    vf->add_option("--suite", vf_suite, "one suite name; default runs them all")
        ->check(CLI::IsMember(suite_names()));
    vf->add_option("--n-max", vopts.n_max, "largest complete graph in kn-table");
    vf->add_option("--delta", vopts.delta, "max degree for the structural suites");
    vf->add_option("--samples", vopts.samples, "sample count for randomized suites");
    vf->add_option("--seed", vopts.seed, "seed for randomized suites");
    vf->add_option("--corpus", vf_corpus, "directory of extra .txt graph files");
    vf->add_flag("--slow", vopts.slow, "unlock the delta=6 bound check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen)
            return run_generate(family, gen_delta, gen_t, gen_n, gen_m, gen_p, gen_mult,
                                gen_seed, gen_dot, gen_out);
        if (*pidx) return run_palette_index(common, pi_in, pi_max_colors, pi_witness);
        if (*cps) return run_chi_prime_s(common, cps_in, cps_witness);
        if (*pg) return run_palette_graph(pg_in, pg_coloring, pg_out);
        if (*cc) return run_check_coloring(common, cc_in, cc_coloring);
        if (*ci)
            return run_check_interval(common, ci_in, ci_coloring, ci_find, ci_cyclic,
                                      ci_max_colors, ci_witness);
        if (*mx) return run_matrix(common, mx_in, mx_graph_out, mx_coloring_out);
        if (*vf) return run_verify(common, vf_suite, vopts, vf_corpus);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
