#pragma once

#include <random>
#include <set>
#include <vector>

#include "palettelab/multigraph.hpp"

namespace palettelab {

using Color = int;

// Sorted, duplicate-free set of colors seen at a vertex.
using Palette = std::vector<Color>;

// Total assignment edge id -> color, over the universe {0..k-1}.
// A value of -1 marks a hole; most operations reject holes explicitly.
struct EdgeColoring {
    int k = 0;
    std::vector<Color> assignment;
};

// True when no two edges sharing a vertex carry the same color.
// Throws if the assignment is not a total in-range map for g, listing the
// offending edge ids.
bool is_proper(const Multigraph& g, const EdgeColoring& c);

// Colors on the edges incident to v. Requires a proper coloring.
Palette palette_of(const Multigraph& g, const EdgeColoring& c, VertexId v);

// All distinct palettes of the coloring (isolated vertices contribute the
// empty palette). Requires a proper coloring.
std::set<Palette> distinct_palettes(const Multigraph& g, const EdgeColoring& c);

// Applies a permutation of {0..k-1} to every edge color.
EdgeColoring relabel_colors(const EdgeColoring& c, const std::vector<int>& permutation);

// Renumbers the used colors to 0..u-1 (order preserving) and shrinks the
// universe to u. Palette counts are unchanged.
EdgeColoring strip_unused_colors(const EdgeColoring& c);

std::vector<Color> used_colors(const EdgeColoring& c);

// Uniform-ish proper coloring for property tests: edges are visited in a
// seeded random order and each takes a random feasible color from a fixed
// window of 2*max_degree colors, then the result is normalized with
// strip_unused_colors. Draws depend only on the rng state.
EdgeColoring random_proper_coloring(const Multigraph& g, std::mt19937_64& rng);

}  // namespace palettelab
