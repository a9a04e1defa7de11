#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "palettelab/multigraph.hpp"

namespace palettelab {

enum class CheckStatus { pass, fail, skipped };

// One verified claim. `skipped` marks a check that was out of reach (too
// large for exact search, or a budget expired); it never counts as a pass.
struct CheckLine {
    std::string label;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckLine> checks;

    bool pass() const;
    int failed() const;
    int skipped() const;
};

struct NamedGraph {
    std::string name;
    Multigraph graph;
};

struct VerifyOptions {
    int n_max = 7;  // kn-table: largest complete graph checked
    int delta = 4;  // forest-lemma and gdelta-bounds
    // Sample count for the randomized suites; 0 picks the suite default
    // (500 for palette-graph-identities, 100 per t for forest-lemma,
    // 200 random graphs for conjecture).
    int samples = 0;
    std::uint64_t seed = 7;
    bool slow = false;  // unlocks the delta = 6 bound check
    int workers = 1;
    // Per solver call; suites have their own defaults when unset.
    std::optional<std::int64_t> time_budget_ms;
    std::vector<NamedGraph> extra_corpus;
};

std::vector<std::string> suite_names();

// Runs one suite by name. Throws std::invalid_argument for an unknown name
// or infeasible suite parameters (e.g. an odd delta).
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts = {});

// Fixed corpus shared by the conjecture and interval-bound suites: complete
// graphs, paths, cycles, stars, complete bipartite graphs, the Petersen
// graph, two hub-and-rim graphs, and the doubled triangle.
std::vector<NamedGraph> named_small_graphs();

}  // namespace palettelab
