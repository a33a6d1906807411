#include <algorithm>
#include <array>
#include <optional>

#include "pcf9/errors.hpp"
#include "pcf9/reduction.hpp"

// Detection of the ten reducible configurations. Priority is part of the
// contract: every extension recipe for kind Ki relies on K1..K(i-1) being
// absent, so later detectors never need to re-check what an earlier one
// would have caught. Within one kind all candidate role bindings are
// enumerated and the lexicographically smallest tuple wins, making runs
// reproducible.

namespace pcf9 {

const char* to_string(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::K1: return "K1";
        case ConfigKind::K2: return "K2";
        case ConfigKind::K3: return "K3";
        case ConfigKind::K4: return "K4";
        case ConfigKind::K5: return "K5";
        case ConfigKind::K6: return "K6";
        case ConfigKind::K7: return "K7";
        case ConfigKind::K8: return "K8";
        case ConfigKind::K9: return "K9";
        case ConfigKind::K10: return "K10";
    }
    return "?";
}

int ConfigMatch::at(const std::string& role) const {
    auto it = roles.find(role);
    if (it == roles.end())
        throw Error(ErrorKind::BadInput, "match has no role '" + role + "'");
    return it->second;
}

namespace {

using Tuple = std::vector<int>;

struct Candidate {
    Tuple key;
    ConfigMatch match;
};

void consider(std::optional<Candidate>& best, Tuple key, ConfigMatch match) {
    if (!best || key < best->key) best = Candidate{std::move(key), std::move(match)};
}

// Neighbors of v outside the set `excluded`, ascending.
std::vector<int> neighbors_outside(const Graph& g, int v, const std::vector<int>& excluded) {
    std::vector<int> out;
    for (int u : g.adj[v])
        if (std::find(excluded.begin(), excluded.end(), u) == excluded.end()) out.push_back(u);
    return out;
}

std::optional<ConfigMatch> detect_k1(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) <= 2) {
            ConfigMatch m{ConfigKind::K1, {{"v", v}}, 0};
            return m;
        }
    return std::nullopt;
}

// 3-cycle x,y,z with d(x)=3. Subcase 1 when x's off-triangle neighbor has
// degree 3 (removal set {x,x1}), subcase 2 otherwise ({x,y,z}).
std::optional<ConfigMatch> detect_k2(const Graph& g) {
    std::optional<Candidate> best;
    for (int x = 0; x < g.n; ++x) {
        if (g.degree(x) != 3) continue;
        const auto& nbrs = g.adj[x];
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                int y = nbrs[i], z = nbrs[j];
                if (!g.has_edge(y, z)) continue;
                auto xo = neighbors_outside(g, x, {y, z});
                if (xo.size() != 1) continue;
                ConfigMatch m{ConfigKind::K2, {}, 0};
                m.roles = {{"x", x}, {"y", y}, {"z", z}, {"x1", xo[0]}};
                auto yo = neighbors_outside(g, y, {x, z});
                auto zo = neighbors_outside(g, z, {x, y});
                if (yo.empty() || zo.empty()) continue;
                m.roles["y1"] = yo[0];
                if (yo.size() > 1) m.roles["y2"] = yo[1];
                m.roles["z1"] = zo[0];
                if (zo.size() > 1) m.roles["z2"] = zo[1];
                m.subcase = g.degree(xo[0]) == 3 ? 1 : 2;
                consider(best, {x, y, z}, std::move(m));
            }
    }
    return best ? std::optional<ConfigMatch>(best->match) : std::nullopt;
}

// 3-cycle with all three vertices of degree 4.
std::optional<ConfigMatch> detect_k3(const Graph& g) {
    std::optional<Candidate> best;
    for (int x = 0; x < g.n; ++x) {
        if (g.degree(x) != 4) continue;
        for (int y : g.adj[x]) {
            if (y <= x || g.degree(y) != 4) continue;
            for (int z : g.adj[y]) {
                if (z <= y || g.degree(z) != 4 || !g.has_edge(x, z)) continue;
                auto xo = neighbors_outside(g, x, {y, z});
                auto yo = neighbors_outside(g, y, {x, z});
                auto zo = neighbors_outside(g, z, {x, y});
                if (xo.size() != 2 || yo.size() != 2 || zo.size() != 2) continue;
                ConfigMatch m{ConfigKind::K3, {}, 0};
                m.roles = {{"x", x},      {"y", y},      {"z", z},
                           {"x1", xo[0]}, {"x2", xo[1]}, {"y1", yo[0]},
                           {"y2", yo[1]}, {"z1", zo[0]}, {"z2", zo[1]}};
                consider(best, {x, y, z}, std::move(m));
            }
        }
    }
    return best ? std::optional<ConfigMatch>(best->match) : std::nullopt;
}

// Path x-y-z on three 3-vertices whose middle vertex has a degree-4
// neighbor y1.
std::optional<ConfigMatch> detect_k4(const Graph& g) {
    std::optional<Candidate> best;
    for (int y = 0; y < g.n; ++y) {
        if (g.degree(y) != 3) continue;
        const auto& nbrs = g.adj[y];
        for (int y1 : nbrs) {
            if (g.degree(y1) != 4) continue;
            std::vector<int> rest;
            for (int u : nbrs)
                if (u != y1) rest.push_back(u);
            if (rest.size() != 2 || g.degree(rest[0]) != 3 || g.degree(rest[1]) != 3) continue;
            ConfigMatch m{ConfigKind::K4, {}, 0};
            m.roles = {{"x", rest[0]}, {"y", y}, {"z", rest[1]}, {"y1", y1}};
            consider(best, {rest[0], y, rest[1], y1}, std::move(m));
        }
    }
    return best ? std::optional<ConfigMatch>(best->match) : std::nullopt;
}

// Path x-y-z-w on four 3-vertices.
std::optional<ConfigMatch> detect_k5(const Graph& g) {
    std::optional<Candidate> best;
    for (int y = 0; y < g.n; ++y) {
        if (g.degree(y) != 3) continue;
        for (int z : g.adj[y]) {
            if (g.degree(z) != 3) continue;
            for (int x : g.adj[y]) {
                if (x == z || g.degree(x) != 3) continue;
                for (int w : g.adj[z]) {
                    if (w == y || w == x || g.degree(w) != 3) continue;
                    auto yo = neighbors_outside(g, y, {x, z});
                    auto zo = neighbors_outside(g, z, {y, w});
                    if (yo.size() != 1 || zo.size() != 1) continue;
                    int y1 = yo[0], z1 = zo[0];
                    if (y1 == w || z1 == x) continue;
                    ConfigMatch m{ConfigKind::K5, {}, 0};
                    m.roles = {{"x", x}, {"y", y}, {"z", z}, {"w", w}, {"y1", y1}, {"z1", z1}};
                    consider(best, {x, y, z, w}, std::move(m));
                }
            }
        }
    }
    return best ? std::optional<ConfigMatch>(best->match) : std::nullopt;
}

// 4-cycle x-y-z-w with adjacent 3-vertices x,y; the binding is normalized so
// that z (y's other cycle neighbor) has degree 4.
std::optional<ConfigMatch> detect_k6(const Graph& g) {
    std::optional<Candidate> best;
    for (int x = 0; x < g.n; ++x) {
        if (g.degree(x) != 3) continue;
        for (int y : g.adj[x]) {
            if (g.degree(y) != 3) continue;
            for (int z : g.adj[y]) {
                if (z == x || g.degree(z) != 4) continue;
                for (int w : g.adj[x]) {
                    if (w == y || w == z || !g.has_edge(w, z)) continue;
                    if (g.degree(w) < 3) continue;
                    std::vector<int> cycle{x, y, z, w};
                    auto xo = neighbors_outside(g, x, cycle);
                    auto yo = neighbors_outside(g, y, cycle);
                    auto zo = neighbors_outside(g, z, cycle);
                    auto wo = neighbors_outside(g, w, cycle);
                    if (xo.size() != 1 || yo.size() != 1 || zo.size() != 2 || wo.empty()) continue;
                    ConfigMatch m{ConfigKind::K6, {}, 0};
                    m.roles = {{"x", x},      {"y", y},      {"z", z},      {"w", w},
                               {"x1", xo[0]}, {"y1", yo[0]}, {"z1", zo[0]}, {"z2", zo[1]},
                               {"w1", wo[0]}};
                    if (wo.size() > 1) m.roles["w2"] = wo[1];
                    consider(best, {x, y, z, w}, std::move(m));
                }
            }
        }
    }
    return best ? std::optional<ConfigMatch>(best->match) : std::nullopt;
}

// 3-vertex v on two 4-cycles x-y-z-v and u-w-z-v sharing the edge z-v.
std::optional<ConfigMatch> detect_k7(const Graph& g) {
    std::optional<Candidate> best;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 3) continue;
        for (int z : g.adj[v]) {
            if (g.degree(z) != 4) continue;
            std::vector<int> others;
            for (int t : g.adj[v])
                if (t != z) others.push_back(t);
            for (int pick = 0; pick < 2; ++pick) {
                int x = others[pick], u = others[1 - pick];
                if (x == u) continue;
                for (int y : g.adj[x]) {
                    if (y == v || y == z || y == u || !g.has_edge(y, z)) continue;
                    for (int w : g.adj[u]) {
                        if (w == v || w == z || w == x || w == y || !g.has_edge(w, z)) continue;
                        auto zo = neighbors_outside(g, z, {v, y, w});
                        if (zo.size() != 1) continue;
                        int z1 = zo[0];
                        if (z1 == x || z1 == u) continue;
                        ConfigMatch m{ConfigKind::K7, {}, 0};
                        m.roles = {{"x", x}, {"y", y}, {"z", z}, {"w", w},
                                   {"u", u}, {"v", v}, {"z1", z1}};
                        consider(best, {v, z, x, y, u, w}, std::move(m));
                    }
                }
            }
        }
    }
    return best ? std::optional<ConfigMatch>(best->match) : std::nullopt;
}

// All 5-cycles, each reported once as (c0..c4) with c0 minimal and c1 < c4.
template <typename F>
void for_each_5cycle(const Graph& g, F&& fn) {
    for (int c0 = 0; c0 < g.n; ++c0)
        for (int c1 : g.adj[c0]) {
            if (c1 <= c0) continue;
            for (int c2 : g.adj[c1]) {
                if (c2 <= c0 || c2 == c1) continue;
                for (int c3 : g.adj[c2]) {
                    if (c3 <= c0 || c3 == c1 || c3 == c2) continue;
                    for (int c4 : g.adj[c3]) {
                        if (c4 <= c1 || c4 == c2 || c4 == c1) continue;
                        if (!g.has_edge(c4, c0)) continue;
                        fn(std::array<int, 5>{c0, c1, c2, c3, c4});
                    }
                }
            }
        }
}

// The ten symmetries of a 5-cycle as index sequences.
std::vector<std::array<int, 5>> cycle_symmetries(const std::array<int, 5>& c) {
    std::vector<std::array<int, 5>> out;
    for (int r = 0; r < 5; ++r) {
        std::array<int, 5> fwd, rev;
        for (int i = 0; i < 5; ++i) {
            fwd[i] = c[(r + i) % 5];
            rev[i] = c[(r + 5 - i) % 5];
        }
        out.push_back(fwd);
        out.push_back(rev);
    }
    return out;
}

// 5-cycle x-y-z-u-v with three consecutive 3-vertices y,z,u.
std::optional<ConfigMatch> detect_k8(const Graph& g) {
    std::optional<Candidate> best;
    for_each_5cycle(g, [&](const std::array<int, 5>& cyc) {
        for (const auto& s : cycle_symmetries(cyc)) {
            int x = s[0], y = s[1], z = s[2], u = s[3], v = s[4];
            if (g.degree(y) != 3 || g.degree(z) != 3 || g.degree(u) != 3) continue;
            std::vector<int> cycle{x, y, z, u, v};
            auto yo = neighbors_outside(g, y, cycle);
            auto uo = neighbors_outside(g, u, cycle);
            if (yo.size() != 1 || uo.size() != 1) continue;
            ConfigMatch m{ConfigKind::K8, {}, 0};
            m.roles = {{"x", x}, {"y", y}, {"z", z}, {"u", u}, {"v", v},
                       {"y1", yo[0]}, {"u1", uo[0]}};
            consider(best, {x, y, z, u, v}, std::move(m));
        }
    });
    return best ? std::optional<ConfigMatch>(best->match) : std::nullopt;
}

// Shared pattern of K9 and K10: 5-cycle x-y-z-u-v whose 3-vertices are
// exactly x, z, v (so y and u have degree 4), with off-cycle neighbors
// x1, z1, v1 of the 3-vertices. Returns role bindings for every admissible
// orientation.
struct PentagonRoles {
    int x, y, z, u, v, x1, z1, v1;
};

std::vector<PentagonRoles> pentagon_orientations(const Graph& g, const std::array<int, 5>& cyc) {
    std::vector<PentagonRoles> out;
    for (const auto& s : cycle_symmetries(cyc)) {
        int x = s[0], y = s[1], z = s[2], u = s[3], v = s[4];
        if (g.degree(x) != 3 || g.degree(z) != 3 || g.degree(v) != 3) continue;
        if (g.degree(y) != 4 || g.degree(u) != 4) continue;
        std::vector<int> cycle{x, y, z, u, v};
        auto xo = neighbors_outside(g, x, cycle);
        auto zo = neighbors_outside(g, z, cycle);
        auto vo = neighbors_outside(g, v, cycle);
        if (xo.size() != 1 || zo.size() != 1 || vo.size() != 1) continue;
        if (xo[0] == vo[0]) continue; // distinct in the shape; a coincidence is a triangle
        out.push_back({x, y, z, u, v, xo[0], zo[0], vo[0]});
    }
    return out;
}

// 5-cycle with 3-vertices x,z,v where z's off-cycle neighbor z1 is itself a
// 3-vertex. Detection keys on z1 only; x1 and v1 have degree 4 whenever the
// earlier kinds are absent, and demanding it keeps the binding canonical.
std::optional<ConfigMatch> detect_k9(const Graph& g) {
    std::optional<Candidate> best;
    for_each_5cycle(g, [&](const std::array<int, 5>& cyc) {
        for (const auto& r : pentagon_orientations(g, cyc)) {
            if (g.degree(r.z1) != 3) continue;
            if (g.degree(r.x1) != 4 || g.degree(r.v1) != 4) continue;
            if (r.z1 == r.x1 || r.z1 == r.v1) continue;
            ConfigMatch m{ConfigKind::K9, {}, 0};
            m.roles = {{"x", r.x},   {"y", r.y},   {"z", r.z},   {"u", r.u},
                       {"v", r.v},   {"x1", r.x1}, {"z1", r.z1}, {"v1", r.v1}};
            consider(best, {r.x, r.y, r.z, r.u, r.v}, std::move(m));
        }
    });
    return best ? std::optional<ConfigMatch>(best->match) : std::nullopt;
}

// 5-cycle with 3-vertices x,z,v where one of them is bad. Only the two
// witness shapes the recipes can consume are detected: a 4-cycle u-z-z1-u1
// for a bad z (subcase 1) and u-v-v1-u1 for a bad v (subcase 2); the mirror
// shapes through y appear as the reflected orientation. Subcase 1 is
// preferred over subcase 2, then the smallest role tuple; among witnesses
// for one binding the smallest u1 is taken.
std::optional<ConfigMatch> detect_k10(const Graph& g) {
    std::optional<Candidate> best_a, best_b;
    for_each_5cycle(g, [&](const std::array<int, 5>& cyc) {
        for (const auto& r : pentagon_orientations(g, cyc)) {
            if (g.degree(r.x1) != 4 || g.degree(r.z1) != 4 || g.degree(r.v1) != 4) continue;
            std::vector<int> cycle{r.x, r.y, r.z, r.u, r.v};
            auto on_cycle = [&](int t) {
                return std::find(cycle.begin(), cycle.end(), t) != cycle.end();
            };
            // subcase 1: bad z via 4-cycle u-z-z1-u1
            for (int u1 : g.adj[r.u]) {
                if (on_cycle(u1) || u1 == r.z1 || u1 == r.x1 || u1 == r.v1) continue;
                if (!g.has_edge(u1, r.z1)) continue;
                ConfigMatch m{ConfigKind::K10, {}, 1};
                m.roles = {{"x", r.x},   {"y", r.y},   {"z", r.z},   {"u", r.u},  {"v", r.v},
                           {"x1", r.x1}, {"z1", r.z1}, {"v1", r.v1}, {"u1", u1}};
                consider(best_a, {r.x, r.y, r.z, r.u, r.v, u1}, std::move(m));
                break; // adjacency is ascending, so the first u1 is minimal
            }
            // subcase 2: bad v via 4-cycle u-v-v1-u1 (z1 == v1 is the one
            // coincidence the recipe explicitly tolerates)
            for (int u1 : g.adj[r.u]) {
                if (on_cycle(u1) || u1 == r.v1 || u1 == r.x1 || u1 == r.z1) continue;
                if (!g.has_edge(u1, r.v1)) continue;
                ConfigMatch m{ConfigKind::K10, {}, 2};
                m.roles = {{"x", r.x},   {"y", r.y},   {"z", r.z},   {"u", r.u},  {"v", r.v},
                           {"x1", r.x1}, {"z1", r.z1}, {"v1", r.v1}, {"u1", u1}};
                consider(best_b, {r.x, r.y, r.z, r.u, r.v, u1}, std::move(m));
                break;
            }
        }
    });
    if (best_a) return best_a->match;
    if (best_b) return best_b->match;
    return std::nullopt;
}

} // namespace

std::optional<ConfigMatch> find_configuration(const Graph& g) {
    if (auto m = detect_k1(g)) return m;
    if (auto m = detect_k2(g)) return m;
    if (auto m = detect_k3(g)) return m;
    if (auto m = detect_k4(g)) return m;
    if (auto m = detect_k5(g)) return m;
    if (auto m = detect_k6(g)) return m;
    if (auto m = detect_k7(g)) return m;
    if (auto m = detect_k8(g)) return m;
    if (auto m = detect_k9(g)) return m;
    if (auto m = detect_k10(g)) return m;
    return std::nullopt;
}

} // namespace pcf9
