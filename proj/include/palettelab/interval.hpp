#pragma once

#include <optional>
#include <vector>

#include "palettelab/coloring.hpp"
#include "palettelab/multigraph.hpp"
#include "palettelab/solver.hpp"

namespace palettelab {

// Verdict on one proper coloring, judged after renumbering the used colors
// consecutively from 0 (the definitions require every color to be used, so
// gaps in the declared universe are normalized away first).
//   is_interval: every palette is a run of consecutive integers.
//   is_cyclic_interval: every palette is a run of consecutive residues
//   modulo t, equivalently an interval or the complement of one.
struct IntervalReport {
    bool is_interval = false;
    bool is_cyclic_interval = false;
    int t = 0;  // number of colors after normalization
    std::optional<VertexId> offending_vertex;
};

// Both checkers reject improper or partial colorings; is_interval always
// implies is_cyclic_interval.
IntervalReport is_interval_coloring(const Multigraph& g, const EdgeColoring& c);
IntervalReport is_cyclic_interval_coloring(const Multigraph& g, const EdgeColoring& c);

enum class IntervalSearchStatus { found, none, unknown };

struct IntervalSearchResult {
    IntervalSearchStatus status = IntervalSearchStatus::none;
    std::optional<EdgeColoring> witness;  // present iff status == found
    int colors = 0;                       // t of the witness
    int max_colors_tried = 0;
};

// Look for an interval t-coloring (all t colors used), t ascending from the
// max degree to the edge count; every color class is nonempty so larger t
// cannot help. `none` is an exhaustive certificate; `unknown` means the
// time budget ran out or a max_colors cap kept the sweep short.
IntervalSearchResult find_interval_coloring(const Multigraph& g,
                                            const SearchConfig& cfg = {});

// delta^2 - delta + 1: palette count ceiling for interval-colorable graphs
// of the given max degree.
long long interval_palette_bound(int delta);

struct IntervalBoundReport {
    IntervalSearchStatus status = IntervalSearchStatus::none;
    bool applicable = false;  // an interval coloring exists
    int palette_index = -1;   // computed only when applicable
    long long bound = 0;
    bool holds = true;  // vacuously true when not applicable
    bool exact = true;
};

// Checks the palette bound above on one graph: find an interval coloring,
// and when one exists compare the palette index against the bound.
IntervalBoundReport check_interval_bound(const Multigraph& g,
                                         const SearchConfig& cfg = {});

}  // namespace palettelab
