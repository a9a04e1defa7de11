#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "palettelab/families.hpp"
#include "palettelab/verify.hpp"

using namespace palettelab;

namespace {

bool has_label(const SuiteResult& r, const std::string& label) {
    return std::any_of(r.checks.begin(), r.checks.end(),
                       [&](const CheckLine& c) { return c.label == label; });
}

const CheckLine& find_label(const SuiteResult& r, const std::string& label) {
    for (const CheckLine& c : r.checks)
        if (c.label == label) return c;
    REQUIRE(false);
    return r.checks.front();
}

}  // namespace

TEST_CASE("suite result tallies statuses") {
    SuiteResult r{"demo",
                  {{"a", CheckStatus::pass, ""},
                   {"b", CheckStatus::skipped, ""},
                   {"c", CheckStatus::pass, ""}}};
    CHECK(r.pass());
    CHECK(r.failed() == 0);
    CHECK(r.skipped() == 1);
    r.checks.push_back({"d", CheckStatus::fail, ""});
    CHECK_FALSE(r.pass());
    CHECK(r.failed() == 1);
}

TEST_CASE("suite names are stable") {
    std::vector<std::string> want = {"palette-graph-identities",
                                     "forest-lemma",
                                     "gdelta-bounds",
                                     "kn-table",
                                     "matrices",
                                     "conjecture",
                                     "interval-bound"};
    CHECK(suite_names() == want);
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
    CHECK_THROWS_WITH(run_suite("nope", {}), "unknown suite: nope");
}

TEST_CASE("named corpus covers the standard small graphs") {
    std::vector<NamedGraph> corpus = named_small_graphs();
    CHECK(corpus.size() == 23);
    CHECK(corpus.front().name == "K2");
    for (const NamedGraph& ng : corpus) CHECK(ng.graph.edge_count() >= 1);
    auto pet = std::find_if(corpus.begin(), corpus.end(),
                            [](const NamedGraph& ng) { return ng.name == "petersen"; });
    REQUIRE(pet != corpus.end());
    CHECK(pet->graph.vertex_count() == 10);
    CHECK(pet->graph.edge_count() == 15);
    CHECK(pet->graph.max_degree() == 3);
    auto h41 = std::find_if(corpus.begin(), corpus.end(),
                            [](const NamedGraph& ng) { return ng.name == "H4_1"; });
    REQUIRE(h41 != corpus.end());
    CHECK(h41->graph == windmill(4));
}

TEST_CASE("matrices suite certifies both reference colorings") {
    SuiteResult r = run_suite("matrices", {});
    CHECK(r.name == "matrices");
    REQUIRE(r.checks.size() == 8);
    CHECK(r.pass());
    CHECK(r.skipped() == 0);
    CHECK(find_label(r, "the 12-color matrix uses 12 colors").detail == "got 12");
    CHECK(find_label(r, "the 8-color matrix uses 8 colors").detail == "got 8");
    CHECK(has_label(r, "the 8-color matrix has 6 palettes"));
}

TEST_CASE("kn-table suite checks the small complete graphs") {
    VerifyOptions o;
    o.n_max = 4;
    SuiteResult r = run_suite("kn-table", o);
    REQUIRE(r.checks.size() == 3);
    CHECK(r.pass());
    CHECK(r.skipped() == 0);
    CHECK(find_label(r, "palette index of K3 is 3").detail == "got 3 (exact)");
    CHECK(has_label(r, "palette index of K4 is 1"));
}

TEST_CASE("kn-table suite skips sizes beyond exact reach") {
    VerifyOptions o;
    o.n_max = 9;
    o.time_budget_ms = 200;  // keep the in-reach rows cheap, statuses not asserted
    SuiteResult r = run_suite("kn-table", o);
    REQUIRE(r.checks.size() == 8);
    const CheckLine& k9 = find_label(r, "palette index of K9 is 4");
    CHECK(k9.status == CheckStatus::skipped);
    CHECK(k9.detail == "exact search at this size is out of reach");
}

TEST_CASE("palette graph identities hold on sampled colorings") {
    VerifyOptions o;
    o.samples = 20;
    o.seed = 11;
    SuiteResult r = run_suite("palette-graph-identities", o);
    REQUIRE(r.checks.size() == 3);
    CHECK(r.pass());
    for (const CheckLine& c : r.checks) CHECK(c.detail == "20/20 samples");
}

TEST_CASE("forest lemma suite covers every lobe count") {
    VerifyOptions o;
    o.delta = 4;
    o.samples = 3;
    SuiteResult r = run_suite("forest-lemma", o);
    REQUIRE(r.checks.size() == 4);  // t = 1, 2 with two claims each
    CHECK(r.pass());
    CHECK(has_label(r, "dropping the center palette leaves a simple forest (delta=4, t=1)"));
    CHECK(has_label(r, "reduced degree of each palette counts its rim vertices (delta=4, t=2)"));
}

TEST_CASE("forest lemma suite rejects an odd delta") {
    VerifyOptions o;
    o.delta = 5;
    CHECK_THROWS_AS(run_suite("forest-lemma", o), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("gdelta-bounds", o), std::invalid_argument);
}

TEST_CASE("gdelta suite skips out-of-reach deltas without failing") {
    VerifyOptions o;
    o.delta = 8;
    SuiteResult r = run_suite("gdelta-bounds", o);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.pass());
    CHECK(r.checks[0].status == CheckStatus::skipped);
    CHECK(r.checks[0].label ==
          "palette index of g_delta(8) lies strictly inside (24, 54)");
}

TEST_CASE("gdelta suite certifies the delta=4 union exactly") {
    VerifyOptions o;
    o.delta = 4;
    SuiteResult r = run_suite("gdelta-bounds", o);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.pass());
    const CheckLine& strict =
        find_label(r, "palette index of g_delta(4) lies strictly inside (4, 10)");
    CHECK(strict.detail == "got 7");
}

TEST_CASE("conjecture suite reports per-graph and aggregate lines") {
    VerifyOptions o;
    o.samples = 2;
    o.time_budget_ms = 50;  // large corpus graphs land as budget skips
    o.extra_corpus.push_back({"dt", Multigraph::build(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}})});
    SuiteResult r = run_suite("conjecture", o);
    const CheckLine& dt = find_label(r, "bound check for dt");
    CHECK(dt.status == CheckStatus::skipped);
    CHECK(dt.detail == "not a simple graph");
    CHECK(has_label(r, "conjectured bound holds on the named graphs"));
    CHECK(has_label(r, "conjectured bound holds on random simple graphs"));
    for (const CheckLine& c : r.checks)
        CHECK(c.label.rfind("counterexample:", 0) == std::string::npos);
}

TEST_CASE("interval suite keeps every certified graph under the bound") {
    VerifyOptions o;
    o.time_budget_ms = 200;  // hard graphs degrade to skips, never to failures
    SuiteResult r = run_suite("interval-bound", o);
    REQUIRE(r.checks.size() == 24);  // C5 certificate plus the named corpus
    CHECK(r.pass());
    CHECK(find_label(r, "C5 admits no interval coloring").status == CheckStatus::pass);
    CHECK(find_label(r, "palette index of P3 is within delta^2-delta+1").status ==
          CheckStatus::pass);
    const CheckLine& c5 = find_label(r, "palette index of C5 is within delta^2-delta+1");
    CHECK(c5.status == CheckStatus::skipped);
    CHECK(c5.detail == "no interval coloring exists, bound not applicable");
}
