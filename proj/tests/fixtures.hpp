#pragma once

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pcf9/graph.hpp"
#include "pcf9/reduction.hpp"

// Hand-built configuration fixtures. Each core plants exactly one target
// configuration; the closure takes four copies of the core and wires the
// remaining degree deficit across copies (a ring for deficit 2, a diagonal
// matching for deficit 1). Cross edges touch only vertices meant to reach
// degree 4 and never create triangles or short cycles through 3-vertices,
// so the copies keep the core's configuration census.

namespace fixtures {

struct Core {
    int n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> target_degree; // 3 or 4 per vertex
};

inline pcf9::Graph close_four_copies(const Core& core) {
    const int copies = 4;
    std::vector<std::pair<int, int>> edges;
    auto id = [&](int copy, int v) { return copy * core.n + v; };
    for (int c = 0; c < copies; ++c)
        for (auto [u, v] : core.edges) edges.emplace_back(id(c, u), id(c, v));

    std::vector<int> degree(core.n, 0);
    for (auto [u, v] : core.edges) {
        ++degree[u];
        ++degree[v];
    }
    for (int v = 0; v < core.n; ++v) {
        int deficit = core.target_degree[v] - degree[v];
        if (deficit < 0 || deficit > 2)
            throw std::logic_error("fixture core: deficit out of range at vertex " +
                                   std::to_string(v));
        if (deficit >= 2)
            for (int c = 0; c < copies; ++c) edges.emplace_back(id(c, v), id((c + 1) % copies, v));
        if (deficit % 2 == 1)
            for (int c = 0; c < copies / 2; ++c)
                edges.emplace_back(id(c, v), id(c + copies / 2, v));
    }
    pcf9::Graph g = pcf9::Graph::from_edges(copies * core.n, edges);
    for (int c = 0; c < copies; ++c)
        for (int v = 0; v < core.n; ++v)
            if (g.degree(id(c, v)) != core.target_degree[v])
                throw std::logic_error("fixture closure missed target degree");
    return g;
}

// K1: any 2-vertex; the plain 5-cycle.
inline pcf9::Graph k1_fixture() {
    return pcf9::Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// K2 subcase 1: complete graph on four vertices; every triangle carries a
// 3-vertex whose outside neighbor is the fourth 3-vertex.
inline pcf9::Graph k2_case1_fixture() {
    return pcf9::Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// K2 subcase 2 with a 3-vertex y: triangle x=0,y=1,z=2, x's outside
// neighbor x1=3 of degree 4, y of degree 3.
inline pcf9::Graph k2_case2_y3_fixture() {
    return pcf9::Graph::from_edges(8, {{0, 1},
                                       {0, 2},
                                       {1, 2}, // triangle
                                       {0, 3}, // x1
                                       {1, 4}, // y1
                                       {2, 5},
                                       {2, 6}, // z1, z2
                                       {3, 4},
                                       {3, 5},
                                       {3, 6}, // x1 reaches degree 4
                                       {7, 4},
                                       {7, 5},
                                       {7, 6}});
}

// K2 subcase 2 with 4-vertices y and z.
inline pcf9::Graph k2_case2_y4_fixture() {
    return pcf9::Graph::from_edges(9, {{0, 1}, {0, 2}, {1, 2},         // triangle
                                       {0, 3},                         // x1
                                       {1, 4}, {1, 5},                 // y1, y2
                                       {2, 6}, {2, 7},                 // z1, z2
                                       {3, 4}, {3, 7}, {3, 8},         // x1 degree 4
                                       {8, 5}, {8, 6},                 // w
                                       {4, 6}, {5, 7}});
}

// K3: the octahedron, 4-regular and full of triangles.
inline pcf9::Graph k3_fixture() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 3) edges.emplace_back(u, v);
    return pcf9::Graph::from_edges(6, edges);
}

// K4: the cube plus one long chord; vertex 0's neighbor 4 turns into a
// 4-vertex next to the all-3-vertex path 1-0-2.
inline pcf9::Graph k4_fixture() {
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                           {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                           {0, 4}, {1, 5}, {2, 6}, {3, 7},
                                           {0, 6}};
    return pcf9::Graph::from_edges(8, edges);
}

// K5: the cube; every facial path runs through four 3-vertices.
inline pcf9::Graph k5_fixture() {
    return pcf9::Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                       {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                       {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// K6: 4-cycle 0-1-2-3 with 3-vertices 0,1; the six outside neighbors close
// into a triangle-free 3-regular patch (C6 plus long diagonals).
inline pcf9::Graph k6_fixture() {
    return pcf9::Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {0, 3},    // cycle
                                        {0, 4}, {1, 5},                    // x1, y1
                                        {2, 6}, {2, 7},                    // z1, z2
                                        {3, 8}, {3, 9},                    // w1, w2
                                        {6, 8}, {8, 7}, {7, 9}, {9, 4}, {4, 5}, {5, 6},
                                        {6, 9}, {8, 4}, {7, 5}});
}

// K7 core: 3-vertex v=0 on 4-cycles x-y-z-v and u-w-z-v sharing edge z-v.
inline pcf9::Graph k7_fixture() {
    Core core;
    core.n = 13;
    // v=0 z=1 x=2 u=3 y=4 w=5 z1=6 xa=7 xb=8 ua=9 ub=10 y1=11 w1=12
    core.edges = {{0, 1}, {0, 2}, {0, 3},           // v
                  {1, 4}, {1, 5}, {1, 6},           // z to y, w, z1
                  {2, 4}, {2, 7}, {2, 8},           // x to y, xa, xb
                  {3, 5}, {3, 9}, {3, 10},          // u to w, ua, ub
                  {4, 11}, {5, 12},                 // y1, w1
                  {6, 7}, {6, 10}, {11, 9}, {12, 8}};
    core.target_degree = {3, 4, 4, 4, 3, 3, 4, 4, 4, 4, 4, 4, 4};
    return close_four_copies(core);
}

// K8 core: 5-cycle 0-1-2-3-4 with consecutive 3-vertices 1,2,3.
inline pcf9::Graph k8_fixture() {
    Core core;
    core.n = 14;
    // x=0 y=1 z=2 u=3 v=4 y1=5 u1=6 zs=7 g1=8 g2=9 xa=10 xb=11 va=12 vb=13
    core.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                  {1, 5}, {3, 6}, {2, 7},
                  {7, 8}, {7, 9},
                  {0, 10}, {0, 11}, {4, 12}, {4, 13},
                  {5, 10}, {6, 12}, {8, 11}, {9, 13}};
    core.target_degree = {4, 3, 3, 3, 4, 4, 4, 3, 4, 4, 4, 4, 4, 4};
    return close_four_copies(core);
}

// K9 core: 5-cycle with 3-vertices 0,2,4 where z=2's outside neighbor 6 is
// a 3-vertex.
inline pcf9::Graph k9_fixture() {
    Core core;
    core.n = 14;
    // x=0 y=1 z=2 u=3 v=4 x1=5 z1=6 v1=7 f1=8 f2=9 ya=10 yb=11 ua=12 ub=13
    core.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                  {0, 5}, {2, 6}, {4, 7},
                  {6, 8}, {6, 9},
                  {1, 10}, {1, 11}, {3, 12}, {3, 13},
                  {5, 8}, {7, 9}, {10, 12}, {11, 13}};
    core.target_degree = {3, 4, 3, 4, 3, 4, 3, 4, 4, 4, 4, 4, 4, 4};
    return close_four_copies(core);
}

// K10 subcase 1 core: the 5-cycle pattern of K9 but with a 4-vertex z1 and
// a bad z witnessed by the 4-cycle u-z-z1-u1.
inline pcf9::Graph k10_bad_z_fixture() {
    Core core;
    core.n = 12;
    // x=0 y=1 z=2 u=3 v=4 x1=5 z1=6 v1=7 u1=8 ya=9 yb=10 ub=11
    core.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                  {0, 5}, {2, 6}, {4, 7},
                  {3, 8}, {6, 8}, // witness cycle u-z-z1-u1
                  {1, 9}, {1, 10}, {3, 11},
                  {5, 9}, {7, 11}, {10, 8}};
    core.target_degree = {3, 4, 3, 4, 3, 4, 4, 4, 4, 4, 4, 4};
    return close_four_copies(core);
}

// K10 subcase 2 core: bad v witnessed by the 4-cycle u-v-v1-u1; z stays on
// no 4-cycle so subcase 1 cannot preempt.
inline pcf9::Graph k10_bad_v_fixture() {
    Core core;
    core.n = 12;
    // x=0 y=1 z=2 u=3 v=4 x1=5 z1=6 v1=7 u1=8 ya=9 yb=10 ub=11
    core.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                  {0, 5}, {2, 6}, {4, 7},
                  {3, 8}, {7, 8}, // witness cycle u-v-v1-u1
                  {1, 9}, {1, 10}, {3, 11},
                  {5, 6}, {9, 11}, {10, 7}};
    core.target_degree = {3, 4, 3, 4, 3, 4, 4, 4, 4, 4, 4, 4};
    return close_four_copies(core);
}

struct NamedFixture {
    const char* name;
    pcf9::ConfigKind kind;
    int subcase; // 0 = unchecked
    pcf9::Graph graph;
};

inline std::vector<NamedFixture> all_fixtures() {
    using pcf9::ConfigKind;
    std::vector<NamedFixture> out;
    out.push_back({"k1/c5", ConfigKind::K1, 0, k1_fixture()});
    out.push_back({"k2/complete4", ConfigKind::K2, 1, k2_case1_fixture()});
    out.push_back({"k2/tri-3vertex-y", ConfigKind::K2, 2, k2_case2_y3_fixture()});
    out.push_back({"k2/tri-4vertices", ConfigKind::K2, 2, k2_case2_y4_fixture()});
    out.push_back({"k3/octahedron", ConfigKind::K3, 0, k3_fixture()});
    out.push_back({"k4/cube-chord", ConfigKind::K4, 0, k4_fixture()});
    out.push_back({"k5/cube", ConfigKind::K5, 0, k5_fixture()});
    out.push_back({"k6/quad-patch", ConfigKind::K6, 0, k6_fixture()});
    out.push_back({"k7/shared-edge", ConfigKind::K7, 0, k7_fixture()});
    out.push_back({"k8/pentagon-run", ConfigKind::K8, 0, k8_fixture()});
    out.push_back({"k9/pentagon-3nbr", ConfigKind::K9, 0, k9_fixture()});
    out.push_back({"k10/bad-z", ConfigKind::K10, 1, k10_bad_z_fixture()});
    out.push_back({"k10/bad-v", ConfigKind::K10, 2, k10_bad_v_fixture()});
    return out;
}

} // namespace fixtures
