#include "doctest.h"

#include "pcf9/generator.hpp"
#include "pcf9/oracle.hpp"
#include "pcf9/pcf.hpp"

using namespace pcf9;

namespace {

// Flat enumeration of all k^n colorings, filtered by the verifier. The
// oracle must agree with this on every graph small enough to afford it.
bool enumeration_feasible(const Graph& g, int h, int k) {
    long long total = 1;
    for (int i = 0; i < g.n; ++i) total *= k;
    Coloring phi(k, g.n);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int v = 0; v < g.n; ++v, c /= k) phi.colors[v] = 1 + static_cast<int>(c % k);
        if (is_h_pcf_valid(g, phi, h)) return true;
    }
    return false;
}

// Plain proper-coloring backtracker, the independent route for the
// min_k(.,3) == chi(square) check.
bool proper_colorable(const Graph& g, int k, int v, std::vector<int>& colors) {
    if (v == g.n) return true;
    for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int u : g.adj[v])
            if (u < v && colors[u] == c) ok = false;
        if (!ok) continue;
        colors[v] = c;
        if (proper_colorable(g, k, v + 1, colors)) return true;
        colors[v] = 0;
    }
    return false;
}

int chromatic_number(const Graph& g) {
    for (int k = 1; k <= g.n; ++k) {
        std::vector<int> colors(g.n, 0);
        if (proper_colorable(g, k, 0, colors)) return k;
    }
    return g.n;
}

} // namespace

TEST_CASE("oracle decides the 5-cycle exactly") {
    auto c5 = corpus("c5").graph;
    CHECK_FALSE(exists_h_pcf_k(c5, 2, 4).feasible());
    auto at5 = exists_h_pcf_k(c5, 2, 5);
    REQUIRE(at5.feasible());
    CHECK(is_h_pcf_valid(c5, *at5.witness, 2));
    CHECK(min_k(c5, 2) == 5);
    CHECK(min_k(c5, 1) == 5); // with two neighbors, one unique means both
}

TEST_CASE("oracle decides the cube exactly") {
    auto cube = corpus("cube").graph;
    CHECK_FALSE(exists_h_pcf_k(cube, 2, 3).feasible());
    auto at4 = exists_h_pcf_k(cube, 2, 4);
    REQUIRE(at4.feasible());
    CHECK(is_h_pcf_valid(cube, *at4.witness, 2));
    CHECK(min_k(cube, 2) == 4);
    CHECK(min_k(Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}), 2) == 3);
}

TEST_CASE("oracle agrees with flat enumeration on small graphs") {
    // quick slice here; the acceptance suite sweeps every connected graph
    // on up to six vertices
    for (int n = 1; n <= 4; ++n) {
        int pairs = n * (n - 1) / 2;
        for (int mask = 0; mask < (1 << pairs); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (1 << bit)) edges.emplace_back(u, v);
            Graph g = Graph::from_edges(n, edges);
            if (!is_connected(g)) continue;
            for (int h = 1; h <= 3; ++h)
                for (int k = 1; k <= 4; ++k) {
                    CAPTURE(n);
                    CAPTURE(mask);
                    CAPTURE(h);
                    CAPTURE(k);
                    CHECK(exists_h_pcf_k(g, h, k).feasible() == enumeration_feasible(g, h, k));
                }
        }
    }
}

TEST_CASE("every witness the oracle returns verifies") {
    for (const char* name : {"k4", "c5", "cube", "prism(3)", "ladder(3)", "petersen"}) {
        auto g = corpus(name).graph;
        for (int h : {1, 2}) {
            int k = min_k(g, h);
            auto result = exists_h_pcf_k(g, h, k);
            REQUIRE(result.feasible());
            CHECK(is_h_pcf_valid(g, *result.witness, h));
            CHECK(result.stats.nodes >= g.n);
            if (k > 1) CHECK_FALSE(exists_h_pcf_k(g, h, k - 1).feasible());
        }
    }
}

TEST_CASE("min_k at h=3 equals the chromatic number of the square") {
    for (const char* name : {"k4", "c5", "cube", "prism(3)", "ladder(3)", "grid(2,3)"}) {
        CAPTURE(name);
        auto g = corpus(name).graph;
        REQUIRE(g.n <= 8);
        CHECK(min_k(g, 3) == chromatic_number(square(g)));
    }
}

TEST_CASE("theorem bound holds on the small planar corpus") {
    for (const char* name :
         {"k4", "c5", "cube", "dodecahedron", "prism(3)", "prism(5)", "grid(3,3)", "ladder(4)"}) {
        auto g = corpus(name).graph;
        if (g.n > 14) continue; // keep the exact search quick
        CHECK(min_k(g, 2) <= 9);
    }
}

TEST_CASE("node budget exhaustion reports instead of lying") {
    auto g = corpus("grid(4,4)").graph;
    OracleOptions tiny;
    tiny.node_budget = 10;
    try {
        (void)exists_h_pcf_k(g, 2, 3, tiny);
        FAIL("expected InstanceTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InstanceTooLarge);
    }
}

TEST_CASE("parallel root split returns the sequential witness") {
    for (const char* name : {"c5", "cube", "prism(3)"}) {
        auto g = corpus(name).graph;
        for (int k : {4, 5}) {
            OracleOptions par;
            par.jobs = 3;
            auto seq = exists_h_pcf_k(g, 2, k);
            auto split = exists_h_pcf_k(g, 2, k, par);
            CHECK(seq.feasible() == split.feasible());
            if (seq.feasible()) CHECK(seq.witness->colors == split.witness->colors);
        }
    }
}
