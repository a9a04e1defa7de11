#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "palettelab/coloring.hpp"
#include "palettelab/multigraph.hpp"

namespace palettelab {

struct SearchConfig {
    // Cap on the color universe; must be at least the max degree when set.
    // Without a cap the search runs to the provable ceiling (edge count,
    // hard-limited to 64 colors by the bitmask representation).
    std::optional<int> max_colors;
    std::optional<std::int64_t> time_budget_ms;
    bool symmetry_breaking = true;
    int workers = 1;
};

struct ChromaticIndexResult {
    int value = 0;
    bool exact = true;
    // When inexact: feasibility is open in [lower, upper].
    int lower = 0;
    int upper = 0;
};

enum class SearchMethod { direct, decomposition };

struct PaletteIndexResult {
    int value = 0;
    bool exact = true;
    int lower_bound = 1;
    int colors_used = 0;
    int explored_k_min = 0;
    int explored_k_max = 0;
    // Normalized optimal coloring (unused colors stripped); absent only when
    // a time budget expired before any coloring was completed.
    std::optional<EdgeColoring> witness;
    SearchMethod method = SearchMethod::direct;
    std::int64_t wall_ms = 0;
    std::uint64_t nodes = 0;
};

struct MinPalettesResult {
    int value = 0;
    bool exact = true;
    EdgeColoring witness;  // universe kept at the requested k
    std::uint64_t nodes = 0;
};

struct ChiPrimeSResult {
    int k = 0;              // fewest colors attaining the palette index
    int palette_count = 0;  // == palette index
    EdgeColoring witness;   // uses exactly k colors
};

// Exact chromatic index by feasibility search ascending from the max
// degree; the multigraph bound max_degree + max_multiplicity guarantees
// termination.
ChromaticIndexResult chromatic_index(const Multigraph& g, const SearchConfig& cfg = {});

// Minimum number of distinct palettes over proper colorings with colors
// drawn from {0..k-1}. Rejects k below the chromatic index.
MinPalettesResult min_palettes_with_k_colors(const Multigraph& g, int k,
                                             const SearchConfig& cfg = {});

// Exact palette index. Runs min-palette searches over a short ladder of
// universes; a result is exact once the searched universe covers every
// coloring that could still improve on the incumbent (any coloring with
// <= T palettes uses at most T * max_degree colors), or the incumbent
// meets the degree diversity lower bound.
PaletteIndexResult palette_index(const Multigraph& g, const SearchConfig& cfg = {});

// Fewest colors k for which some proper k-coloring attains the palette
// index. Requires the palette index itself to be exactly computable.
ChiPrimeSResult chi_prime_s(const Multigraph& g, const SearchConfig& cfg = {});

// Palette index of a disjoint union from per-component results.
// Decomposition applies when at most one degree class is shared between
// components and each sharing component has exactly one vertex of that
// degree: those palettes can all be relabeled onto {0..d-1} and merged,
// and nothing else can collide across components. Other overlap patterns
// fall back to a direct whole-graph search; `method` reports the path.
PaletteIndexResult palette_index_union(const std::vector<Multigraph>& parts,
                                       const SearchConfig& cfg = {});

// Number of distinct vertex degrees; palettes of different sizes never
// coincide, so this bounds the palette index from below.
int degree_diversity_lower_bound(const Multigraph& g);

// 2^(delta+1) - 2: a simple graph of max degree delta has a proper coloring
// with delta+1 colors, and every palette is a nonempty proper subset of it.
long long trivial_palette_upper_bound(int delta);

// Strict bounds (lower, upper) for the palette index of g_delta(delta).
std::pair<long long, long long> gdelta_bounds(int delta);

}  // namespace palettelab
