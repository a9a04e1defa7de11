#include <optional>
#include <stdexcept>

#include "doctest.h"
#include "oracle.hpp"
#include "palettelab/coloring.hpp"
#include "palettelab/families.hpp"
#include "palettelab/solver.hpp"

using namespace palettelab;

namespace {

Multigraph doubled_triangle() {
    return Multigraph::build(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}});
}

SearchConfig quick() {
    SearchConfig cfg;
    cfg.time_budget_ms = 60'000;
    return cfg;
}

}  // namespace

TEST_CASE("chromatic index matches the oracle on small graphs") {
    const Multigraph cases[] = {
        complete(3),  complete(4), complete(5),          path(5),
        cycle(5),     cycle(6),    star(4),              complete_bipartite(2, 3),
        windmill(4),  doubled_triangle(),                h_delta_t(4, 2).graph,
    };
    for (const Multigraph& g : cases) {
        ChromaticIndexResult got = chromatic_index(g, quick());
        CHECK(got.exact);
        CHECK(got.value == oracle::brute_chromatic_index(g));
    }
}

TEST_CASE("chromatic index of the doubled triangle is six") {
    ChromaticIndexResult r = chromatic_index(doubled_triangle(), quick());
    CHECK(r.exact);
    CHECK(r.value == 6);
}

TEST_CASE("chromatic index on random multigraphs agrees with the oracle") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Multigraph g = random_multigraph(5, 0.6, 3, seed);
        if (g.edge_count() > 9) continue;  // keep the oracle affordable
        ChromaticIndexResult got = chromatic_index(g, quick());
        CHECK(got.exact);
        CHECK(got.value == oracle::brute_chromatic_index(g));
    }
}

TEST_CASE("min palettes matches the oracle across k") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        Multigraph g = random_multigraph(4, 0.7, 2, seed);
        if (g.edge_count() > 7 || g.edge_count() == 0) continue;
        int chi = chromatic_index(g, quick()).value;
        for (int k = chi; k <= chi + 2 && k <= 6; ++k) {
            MinPalettesResult got = min_palettes_with_k_colors(g, k, quick());
            std::optional<int> want = oracle::brute_min_palettes(g, k);
            REQUIRE(want.has_value());
            CHECK(got.exact);
            CHECK(got.value == *want);
            CHECK(is_proper(g, got.witness));
            CHECK(static_cast<int>(distinct_palettes(g, got.witness).size()) == got.value);
            CHECK(got.witness.k == k);
        }
    }
}

TEST_CASE("min palettes rejects k below the chromatic index") {
    CHECK_THROWS_AS(min_palettes_with_k_colors(complete(3), 2, quick()), std::invalid_argument);
    CHECK_THROWS_AS(min_palettes_with_k_colors(path(3), -1, quick()), std::invalid_argument);
    CHECK_THROWS_AS(min_palettes_with_k_colors(path(3), 65, quick()), std::invalid_argument);
}

TEST_CASE("palette index matches the oracle on small graphs") {
    const Multigraph cases[] = {
        complete(3), complete(4),  path(2),     path(5),     cycle(3),
        cycle(4),    cycle(5),     cycle(6),    star(3),     star(5),
        complete_bipartite(2, 3),  windmill(4), windmill(6),
    };
    for (const Multigraph& g : cases) {
        PaletteIndexResult got = palette_index(g, quick());
        CHECK(got.exact);
        CHECK(got.value == oracle::brute_palette_index(g));
        REQUIRE(got.witness.has_value());
        CHECK(is_proper(g, *got.witness));
        CHECK(static_cast<int>(distinct_palettes(g, *got.witness).size()) == got.value);
    }
}

TEST_CASE("palette index on random multigraphs agrees with the oracle") {
    for (uint64_t seed = 100; seed < 130; ++seed) {
        Multigraph g = random_multigraph(4 + static_cast<int>(seed % 2), 0.55, 2, seed);
        if (g.edge_count() > 8) continue;
        PaletteIndexResult got = palette_index(g, quick());
        CHECK(got.exact);
        CHECK(got.value == oracle::brute_palette_index(g));
    }
}

// Golden values below were frozen from oracle::brute_palette_index runs;
// the solver must reproduce them exactly.
TEST_CASE("palette index goldens for the rim families") {
    PaletteIndexResult h41 = palette_index(h_delta_t(4, 1).graph, quick());
    CHECK(h41.exact);
    CHECK(h41.value == 4);
    PaletteIndexResult h42 = palette_index(h_delta_t(4, 2).graph, quick());
    CHECK(h42.exact);
    CHECK(h42.value == 4);
    PaletteIndexResult dt = palette_index(doubled_triangle(), quick());
    CHECK(dt.exact);
    CHECK(dt.value == 3);
}

TEST_CASE("palette index of complete graphs up to six") {
    int expected[] = {0, 1, 1, 3, 1, 4, 1};  // index by n
    for (int n = 1; n <= 6; ++n) {
        PaletteIndexResult r = palette_index(complete(n), quick());
        CHECK(r.exact);
        CHECK(r.value == expected[n]);
    }
}

TEST_CASE("an edgeless graph has the single empty palette") {
    PaletteIndexResult r = palette_index(Multigraph::build(3, {}), quick());
    CHECK(r.exact);
    CHECK(r.value == 1);
    CHECK(r.colors_used == 0);
}

TEST_CASE("chi_prime_s finds the fewest colors attaining the palette index") {
    ChiPrimeSResult k4 = chi_prime_s(complete(4), quick());
    CHECK(k4.palette_count == 1);
    CHECK(k4.k == 3);
    ChiPrimeSResult k5 = chi_prime_s(complete(5), quick());
    CHECK(k5.palette_count == 4);
    CHECK(k5.k == 6);
    CHECK(is_proper(complete(5), k5.witness));
    CHECK(static_cast<int>(used_colors(k5.witness).size()) == 6);
    ChiPrimeSResult s5 = chi_prime_s(star(5), quick());
    CHECK(s5.k == 5);
}

TEST_CASE("chi_prime_s witness attains the palette index at its k") {
    for (uint64_t seed = 40; seed < 52; ++seed) {
        Multigraph g = random_multigraph(5, 0.5, 2, seed);
        if (g.edge_count() == 0 || g.edge_count() > 8) continue;
        PaletteIndexResult pi = palette_index(g, quick());
        ChiPrimeSResult cps = chi_prime_s(g, quick());
        CHECK(cps.palette_count == pi.value);
        CHECK(static_cast<int>(distinct_palettes(g, cps.witness).size()) == pi.value);
        CHECK(static_cast<int>(used_colors(cps.witness).size()) == cps.k);
        // no smaller universe can reach the palette index
        int chi = chromatic_index(g, quick()).value;
        for (int k = chi; k < cps.k; ++k)
            CHECK(min_palettes_with_k_colors(g, k, quick()).value > pi.value);
    }
}

TEST_CASE("union decomposition agrees with the direct search") {
    std::vector<Multigraph> parts{h_delta_t(4, 1).graph, h_delta_t(4, 2).graph};
    PaletteIndexResult dec = palette_index_union(parts, quick());
    CHECK(dec.exact);
    CHECK(dec.method == SearchMethod::decomposition);
    // centers share degree 4, one per part: total is sum minus the overlap
    CHECK(dec.value == 4 + 4 - 1);
    REQUIRE(dec.witness.has_value());
    Multigraph whole = disjoint_union(parts).graph;
    CHECK(is_proper(whole, *dec.witness));
    CHECK(static_cast<int>(distinct_palettes(whole, *dec.witness).size()) == dec.value);
}

TEST_CASE("union decomposition falls back when palettes may collide") {
    // equal graphs share both degree classes, so only direct search is safe
    std::vector<Multigraph> parts{cycle(3), cycle(3)};
    PaletteIndexResult r = palette_index_union(parts, quick());
    CHECK(r.exact);
    CHECK(r.method == SearchMethod::direct);
    CHECK(r.value == 3);  // reuse the same three pair palettes on both triangles
}

TEST_CASE("diversity lower bound counts degree classes") {
    CHECK(degree_diversity_lower_bound(complete(4)) == 1);
    CHECK(degree_diversity_lower_bound(star(3)) == 2);
    CHECK(degree_diversity_lower_bound(Multigraph::build(4, {{0, 1, 1}, {1, 2, 2}})) == 4);
}

TEST_CASE("trivial palette upper bound") {
    CHECK(trivial_palette_upper_bound(0) == 1);
    CHECK(trivial_palette_upper_bound(2) == 6);
    CHECK(trivial_palette_upper_bound(4) == 30);
    CHECK_THROWS_AS(trivial_palette_upper_bound(-1), std::invalid_argument);
    CHECK_THROWS_AS(trivial_palette_upper_bound(62), std::invalid_argument);
}

TEST_CASE("gdelta bounds are the strict window") {
    auto [lo4, hi4] = gdelta_bounds(4);
    CHECK(lo4 == 4);
    CHECK(hi4 == 10);
    auto [lo6, hi6] = gdelta_bounds(6);
    CHECK(lo6 == 12);
    CHECK(hi6 == 28);
    CHECK_THROWS_WITH(gdelta_bounds(5), doctest::Contains("even"));
    CHECK_THROWS_AS(gdelta_bounds(2), std::invalid_argument);
}

TEST_CASE("symmetry breaking can be disabled without changing values") {
    SearchConfig plain = quick();
    plain.symmetry_breaking = false;
    for (uint64_t seed = 7; seed < 13; ++seed) {
        Multigraph g = random_multigraph(4, 0.6, 2, seed);
        if (g.edge_count() == 0 || g.edge_count() > 7) continue;
        CHECK(palette_index(g, plain).value == palette_index(g, quick()).value);
    }
}

TEST_CASE("parallel workers return the same values") {
    SearchConfig par = quick();
    par.workers = 4;
    CHECK(palette_index(complete(5), par).value == 4);
    CHECK(palette_index(h_delta_t(4, 2).graph, par).value == 4);
    MinPalettesResult mp = min_palettes_with_k_colors(complete(4), 4, par);
    CHECK(mp.value == oracle::brute_min_palettes(complete(4), 4).value());
}

TEST_CASE("time budget reports inexact instead of wrong") {
    SearchConfig tight;
    tight.time_budget_ms = 1;
    // big enough that one millisecond cannot certify anything
    Multigraph g = complete(9);
    PaletteIndexResult r = palette_index(g, tight);
    CHECK_FALSE(r.exact);
    if (r.witness) {
        CHECK(is_proper(g, *r.witness));
        CHECK(static_cast<int>(distinct_palettes(g, *r.witness).size()) == r.value);
    }
}
