#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "pcf9/errors.hpp"
#include "pcf9/pcf.hpp"
#include "pcf9/reduction.hpp"

// Extension of a 2-PCF 9-coloring across one reduction step. Every kind has
// a fixed recipe: color the removed vertices in a stated order, each time
// taking the smallest palette color outside a forbidden set assembled from
// boundary palettes (B_S / C_H) and explicitly named vertices. Two colorings
// are kept apart on purpose: boundary palettes are always evaluated against
// the untouched coloring of the reduced graph, while the explicit color
// terms read the current partial state, because later steps must see the
// colors earlier steps picked.

namespace pcf9 {

namespace {

using Bits = unsigned; // bit c set <=> color c in the set, colors 1..9

constexpr int kPalette = 9;

int popcount(Bits b) { return std::popcount(b); }
Bits bit(int color) { return 1u << color; }

int smallest_outside(Bits forbidden) {
    for (int c = 1; c <= kPalette; ++c)
        if (!(forbidden & bit(c))) return c;
    return 0;
}

// Two unique colors of u in the reduced graph, to be kept unique for u
// while S is recolored. When u has more than two, the ones that appear on
// real neighbors (N_G(u)\S) come first: a unique color carried only by a
// join-edge neighbor vanishes from u's neighborhood once S returns, so
// protecting it would waste the slot and let a later step repeat a real
// neighbor's color.
std::vector<int> two_protective_unique(const std::vector<int>& h_colors,
                                       const std::vector<int>& outside_colors) {
    std::vector<int> sorted = h_colors;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> unique;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        if (j - i == 1) unique.push_back(sorted[i]);
        i = j;
    }
    auto on_outside = [&](int c) {
        return std::find(outside_colors.begin(), outside_colors.end(), c) != outside_colors.end();
    };
    std::stable_partition(unique.begin(), unique.end(), on_outside);
    if (unique.size() > 2) unique.resize(2);
    return unique;
}

struct Extender {
    const Graph& g;
    const ReductionPlan& plan;
    Coloring base;    // coloring of the reduced graph lifted to g's ids; never mutated
    Coloring current; // partial extension being built
    std::vector<char> in_s;
    std::vector<std::vector<int>> h_adj; // reduced-graph adjacency in g's ids
    std::map<std::string, int> roles;    // local copy; normalizations permute it
    ExtendLog* log;

    Extender(const Graph& graph, const ReductionPlan& p, const Coloring& phi_h, ExtendLog* lg)
        : g(graph), plan(p), base(kPalette, graph.n), current(kPalette, graph.n),
          in_s(graph.n, 0), h_adj(graph.n), roles(p.match.roles), log(lg) {
        if (phi_h.size() != plan.reduced.n)
            throw Error(ErrorKind::BadInput, "coloring does not match the reduced graph");
        for (int i = 0; i < plan.reduced.n; ++i) {
            if (!phi_h.assigned(i))
                throw Error(ErrorKind::PartialColoring,
                            "reduced-graph coloring leaves vertex " + std::to_string(i) + " blank");
            base.colors[plan.kept[i]] = phi_h.colors[i];
            for (int j : plan.reduced.adj[i]) h_adj[plan.kept[i]].push_back(plan.kept[j]);
        }
        for (int s : plan.S) in_s[s] = 1;
        current = base;
    }

    int r(const std::string& name) const {
        auto it = roles.find(name);
        if (it == roles.end())
            throw Error(ErrorKind::BadInput, "recipe needs unbound role '" + name + "'");
        return it->second;
    }
    bool has_role(const std::string& name) const { return roles.count(name) != 0; }
    void swap_roles(const std::string& a, const std::string& b) {
        bool ha = has_role(a), hb = has_role(b);
        if (ha && hb) {
            std::swap(roles[a], roles[b]);
        } else if (ha) {
            roles[b] = roles[a];
            roles.erase(a);
        } else if (hb) {
            roles[a] = roles[b];
            roles.erase(b);
        }
    }

    // --- color set helpers (current state; unassigned vertices skipped) ---

    Bits color_of(int v) const { return current.assigned(v) ? bit(current.colors[v]) : 0; }
    Bits colors_of(std::initializer_list<int> vs) const {
        Bits b = 0;
        for (int v : vs) b |= color_of(v);
        return b;
    }
    Bits colors_of(const std::vector<int>& vs) const {
        Bits b = 0;
        for (int v : vs) b |= color_of(v);
        return b;
    }

    std::vector<int> outside_neighbors(int v) const {
        std::vector<int> out;
        for (int u : g.adj[v])
            if (!in_s[u]) out.push_back(u);
        return out;
    }

    // --- boundary palettes against the untouched reduced coloring ---

    Bits boundary_bits(int u) const {
        std::vector<int> outside_colors;
        for (int w : outside_neighbors(u)) outside_colors.push_back(base.colors[w]);
        std::vector<int> sorted = outside_colors;
        std::sort(sorted.begin(), sorted.end());
        bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        Bits b = bit(base.colors[u]);
        if (distinct) {
            std::vector<int> h_colors;
            for (int w : h_adj[u]) h_colors.push_back(base.colors[w]);
            for (int c : two_protective_unique(h_colors, outside_colors)) b |= bit(c);
        } else {
            for (int c : outside_colors) b |= bit(c);
        }
        return b;
    }

    Bits forbidden_base_bits(int v) const {
        Bits b = 0;
        for (int u : outside_neighbors(v)) b |= boundary_bits(u);
        return b;
    }
    Bits C(const std::string& role) const { return forbidden_base_bits(r(role)); }

    Bits outside_colors_bits(const std::string& role) const {
        return colors_of(outside_neighbors(r(role)));
    }

    // --- assignment steps ---

    void record(const std::string& role, int vertex, int forbidden_size, int bound, int chosen,
                bool forced, bool recolor) {
        if (log) log->steps.push_back({role, vertex, forbidden_size, bound, chosen, forced, recolor});
    }

    void assign(const std::string& role, Bits forbidden, int bound, bool recolor = false) {
        int v = r(role);
        int c = smallest_outside(forbidden);
        if (c == 0)
            throw Error(ErrorKind::ScriptExhausted,
                        "all nine colors forbidden for role " + role + " (" +
                            to_string(plan.kind) + ")");
        record(role, v, popcount(forbidden), bound, c, false, recolor);
        current.colors[v] = c;
    }

    // pick the smallest color that lies in `source` but not in `forbidden`
    void assign_from(const std::string& role, Bits source, Bits forbidden, int bound) {
        int v = r(role);
        Bits usable = source & ~forbidden;
        if (usable == 0)
            throw Error(ErrorKind::ScriptExhausted,
                        "source palette exhausted for role " + role + " (" +
                            to_string(plan.kind) + ")");
        int c = std::countr_zero(usable);
        record(role, v, popcount(forbidden), bound, c, false, false);
        current.colors[v] = c;
    }

    void force(const std::string& role, int color, bool recolor = false) {
        int v = r(role);
        record(role, v, 0, kPalette, color, true, recolor);
        current.colors[v] = color;
    }

    // --- the recipes ---

    void run() {
        switch (plan.kind) {
            case ConfigKind::K1: run_k1(); break;
            case ConfigKind::K2: run_k2(); break;
            case ConfigKind::K3: run_k3(); break;
            case ConfigKind::K4: run_k4(); break;
            case ConfigKind::K5: run_k5(); break;
            case ConfigKind::K6: run_k6(); break;
            case ConfigKind::K7: run_k7(); break;
            case ConfigKind::K8: run_k8(); break;
            case ConfigKind::K9: run_k9(); break;
            case ConfigKind::K10: plan.match.subcase == 1 ? run_k10_bad_z() : run_k10_bad_v(); break;
        }
    }

    void run_k1() { assign("v", C("v"), 6); }

    void run_k2() {
        if (plan.match.subcase == 1) {
            // off-triangle neighbor x1 has degree 3; S = {x, x1}
            assign("x1", C("x1") | colors_of({r("y"), r("z")}), 8);
            assign("x",
                   colors_of({r("x1")}) | outside_colors_bits("x1") |
                       colors_of({r("y"), r("z"), r("y1"), r("z1")}),
                   7);
            return;
        }
        // S = {x, y, z}; make y the 3-vertex if either of y,z is one
        if (g.degree(r("y")) != 3 && g.degree(r("z")) == 3) {
            swap_roles("y", "z");
            swap_roles("y1", "z1");
            swap_roles("y2", "z2");
        }
        if (g.degree(r("y")) == 3) {
            assign("z", C("z") | colors_of({r("x1"), r("y1")}), 8);
            assign("y", C("y") | outside_colors_bits("z") | colors_of({r("x1"), r("z")}), 7);
            assign("x", colors_of({r("x1"), r("y"), r("z"), r("y1")}) | outside_colors_bits("z"), 6);
        } else {
            assign("y", C("y") | colors_of({r("x1")}), 7);
            assign("z", C("z") | colors_of({r("y"), r("x1")}), 8);
            assign("x",
                   colors_of({r("x1"), r("y"), r("y1"), r("y2"), r("z"), r("z1"), r("z2")}), 7);
        }
    }

    void run_k3() {
        Bits cprime = C("x") | colors_of({r("y1"), r("y2"), r("z1"), r("z2")});
        if (popcount(cprime) <= 8) {
            assign("x", cprime, 8);
            Bits with_x = colors_of({r("x"), r("x1"), r("x2")});
            if (popcount(C("y") | with_x) > 8 && popcount(C("z") | with_x) <= 8) {
                swap_roles("y", "z");
                swap_roles("y1", "z1");
                swap_roles("y2", "z2");
            }
            if (popcount(C("y") | with_x) <= 8) {
                assign("y", C("y") | with_x, 8);
                assign("z", C("z") | colors_of({r("x"), r("y")}), 8);
            } else {
                // both remainders cover the palette: shuffle x's color onto y
                // and x1's onto z, then recolor x
                int old_x = current.colors[r("x")];
                current.colors[r("x")] = kUnassigned;
                force("y", old_x);
                force("z", current.colors[r("x1")]);
                assign("x", C("x") | colors_of({r("y"), r("z")}), 8);
            }
            return;
        }
        // cprime covers the palette; one of y's off-triangle colors occurs
        // exactly once around the patch N({x1,x2,x,y,z}) \ S and goes on x
        std::vector<char> in_patch(g.n, 0);
        for (int w : {r("x1"), r("x2"), r("x"), r("y"), r("z")})
            for (int t : g.adj[w])
                if (!in_s[t]) in_patch[t] = 1;
        auto occurrences = [&](int color) {
            int count = 0;
            for (int t = 0; t < g.n; ++t)
                if (in_patch[t] && current.colors[t] == color) ++count;
            return count;
        };
        if (occurrences(current.colors[r("y1")]) != 1) {
            if (occurrences(current.colors[r("y2")]) != 1)
                throw Error(ErrorKind::ScriptExhausted,
                            "K3: neither off-triangle color of y is a singleton in the patch");
            swap_roles("y1", "y2");
        }
        force("x", current.colors[r("y1")]);
        assign("z", C("z") | colors_of({r("y1"), r("y2")}), 8);
        Bits x_aux = colors_of({r("x1"), r("x2")});
        if (!(x_aux & color_of(r("z"))))
            assign("y", C("y") | colors_of({r("z")}), 7);
        else
            assign("y", C("y") | x_aux, 8);
    }

    void run_k4() {
        assign("x", C("x") | colors_of({r("y1")}), 7);
        assign("z", C("z") | colors_of({r("x"), r("y1")}), 8);
        assign("y",
               outside_colors_bits("x") | outside_colors_bits("z") |
                   colors_of({r("x"), r("y1"), r("z")}),
               7);
    }

    void run_k5() {
        Bits source = C("x") | colors_of({r("y1")});
        Bits y_forbidden = C("y") | outside_colors_bits("x") | colors_of({r("z1")});
        if (popcount(source) == 7)
            assign_from("y", source, y_forbidden, 6);
        else
            assign("y", y_forbidden, 6);
        assign("w", C("w") | colors_of({r("y"), r("z1")}), 8);
        assign("z",
               C("z") | outside_colors_bits("w") | colors_of({r("y"), r("y1"), r("w")}), 8);
        assign("x", C("x") | colors_of({r("y"), r("y1"), r("z")}), 8);
    }

    void run_k6() {
        assign("z", C("z") | colors_of({r("y1"), r("w1")}), 8);
        assign("w", C("w") | colors_of({r("z"), r("x1")}), 8);
        assign("y", C("y") | colors_of({r("x1"), r("w"), r("z"), r("z1"), r("z2")}), 8);
        assign("x", C("x") | colors_of({r("y"), r("y1"), r("z"), r("w"), r("w1")}), 8);
    }

    // v is the removed 3-vertex; the reduced graph is G - v plus the edge
    // x-u, so its coloring already covers every other vertex.
    void run_k7() {
        auto two_distinct = [&](int center, int excluded) {
            std::vector<int> cs;
            for (int w : g.adj[center])
                if (w != excluded && current.assigned(w)) cs.push_back(current.colors[w]);
            std::sort(cs.begin(), cs.end());
            cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
            if (cs.size() > 2) cs.resize(2);
            Bits b = 0;
            for (int c : cs) b |= bit(c);
            return b;
        };
        int v = r("v");
        Bits ab = two_distinct(r("x"), v);
        Bits gd = two_distinct(r("u"), v);

        Bits v_neighborhood = colors_of({r("x"), r("z"), r("u")});
        if (popcount(v_neighborhood) == 3) {
            assign("v", colors_of({r("x")}) | ab | colors_of({r("z"), r("u")}) | gd, 7);
            return;
        }
        // exactly two distinct colors around v (x and u differ, they are
        // adjacent in the reduced graph); normalize so x and z share
        if (current.colors[r("z")] == current.colors[r("u")]) {
            swap_roles("x", "u");
            swap_roles("y", "w");
            std::swap(ab, gd);
        }
        // a: a color on w's neighborhood besides those of u and z
        Bits w_nbhd = 0;
        for (int t : g.adj[r("w")])
            if (current.assigned(t)) w_nbhd |= bit(current.colors[t]);
        Bits a_candidates = w_nbhd & ~colors_of({r("u"), r("z")});
        if (a_candidates == 0)
            throw Error(ErrorKind::ScriptExhausted, "K7: no spare color around w");
        Bits a = bit(std::countr_zero(a_candidates));
        // b, c: two distinct colors next to z1 (other than z itself)
        Bits bc = two_distinct(r("z1"), r("z"));

        Bits z_forbidden = colors_of({r("x"), r("u"), r("y"), r("z1")}) | bc |
                           colors_of({r("w")}) | a;
        current.colors[r("z")] = kUnassigned;
        assign("z", z_forbidden, 8, /*recolor=*/true);
        assign("v", colors_of({r("x")}) | ab | colors_of({r("z"), r("u")}) | gd, 7);
    }

    void run_k8() {
        assign("v", C("v") | colors_of({r("u1")}), 7);
        assign("x", C("x") | colors_of({r("v"), r("y1")}), 8);
        assign("z", C("z") | colors_of({r("u1"), r("v"), r("y1"), r("x")}), 7);
        assign("y",
               C("y") | outside_colors_bits("x") | outside_colors_bits("z") |
                   colors_of({r("z"), r("x")}),
               8);
        assign("u",
               outside_colors_bits("v") | outside_colors_bits("z") |
                   colors_of({r("y"), r("z"), r("v"), r("u1")}),
               7);
    }

    void run_k9() {
        assign("y", C("y") | colors_of({r("x1")}), 7);
        assign("u", C("u") | colors_of({r("y"), r("v1")}), 8);
        assign("z1", C("z1") | colors_of({r("y"), r("u")}), 8);
        assign("z", outside_colors_bits("z1") | colors_of({r("y"), r("u"), r("z1")}), 5);
        assign("x",
               outside_colors_bits("y") | colors_of({r("y"), r("u"), r("v1"), r("x1")}), 6);
        assign("v",
               outside_colors_bits("u") |
                   colors_of({r("u"), r("v1"), r("x"), r("x1"), r("y")}),
               7);
    }

    // bad z: 4-cycle u-z-z1-u1; S = {x,y,z,u,v,z1,u1}
    void run_k10_bad_z() {
        assign("z1", C("z1") | outside_colors_bits("u1"), 8);
        assign("y", C("y") | colors_of({r("x1"), r("z1")}), 8);
        assign("u",
               C("u") | outside_colors_bits("u1") | colors_of({r("v1"), r("y"), r("z1")}), 8);
        assign("u1", C("u1") | colors_of({r("z1"), r("u")}), 8);
        assign("z",
               outside_colors_bits("z1") | colors_of({r("z1"), r("u"), r("y"), r("u1")}), 6);
        assign("x",
               outside_colors_bits("y") |
                   colors_of({r("y"), r("x1"), r("u1"), r("z"), r("v1"), r("u")}),
               8);
        assign("v",
               colors_of({r("x"), r("x1"), r("y"), r("u"), r("u1"), r("z"), r("v1")}), 7);
    }

    // bad v: 4-cycle u-v-v1-u1; S = {x,y,z,u,v,u1,v1}. z1 may coincide with
    // v1; references to it before v1 is colored simply contribute nothing.
    void run_k10_bad_v() {
        assign("y", C("y") | colors_of({r("z1"), r("x1")}), 8);
        assign("v1", C("v1") | outside_colors_bits("u1"), 8);
        assign("u",
               C("u") | outside_colors_bits("u1") | colors_of({r("y"), r("z1"), r("v1")}), 8);
        assign("u1", C("u1") | colors_of({r("u"), r("v1")}), 8);
        assign("v",
               outside_colors_bits("v1") |
                   colors_of({r("v1"), r("u1"), r("u"), r("x1"), r("y")}),
               7);
        assign("x", C("x") | colors_of({r("v"), r("v1"), r("u"), r("y")}), 7);
        assign("z",
               outside_colors_bits("y") |
                   colors_of({r("y"), r("z1"), r("u"), r("u1"), r("v")}),
               7);
    }
};

} // namespace

std::vector<int> boundary_palette(const Graph& g, const std::vector<int>& S,
                                  const Coloring& phi_h, int u) {
    std::vector<char> in_s(g.n, 0);
    for (int s : S) in_s[s] = 1;
    if (in_s[u])
        throw Error(ErrorKind::NotOnBoundary, "vertex " + std::to_string(u) + " belongs to S");
    bool touches = false;
    for (int w : g.adj[u])
        if (in_s[w]) touches = true;
    if (!touches)
        throw Error(ErrorKind::NotOnBoundary,
                    "vertex " + std::to_string(u) + " has no neighbor in S");

    // Rebuild the S-reduced adjacency around u to recover its unique colors
    // in the reduced graph.
    std::vector<int> kept;
    for (int v = 0; v < g.n; ++v)
        if (!in_s[v]) kept.push_back(v);
    Graph reduced = induced_subgraph(g, kept);
    auto index = [&](int v) {
        return static_cast<int>(std::lower_bound(kept.begin(), kept.end(), v) - kept.begin());
    };
    for (int s : S) {
        std::vector<int> outside;
        for (int w : g.adj[s])
            if (!in_s[w]) outside.push_back(w);
        if (outside.size() > 2)
            throw Error(ErrorKind::SReductionPrecondition,
                        "vertex " + std::to_string(s) + " of S has more than two outside neighbors");
        if (outside.size() == 2) reduced.add_edge(index(outside[0]), index(outside[1]));
    }

    std::vector<int> outside_colors;
    for (int w : g.adj[u])
        if (!in_s[w]) {
            if (!phi_h.assigned(w))
                throw Error(ErrorKind::PartialColoring,
                            "vertex " + std::to_string(w) + " outside S carries no color");
            outside_colors.push_back(phi_h.colors[w]);
        }
    std::vector<int> sorted = outside_colors;
    std::sort(sorted.begin(), sorted.end());
    bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    std::vector<int> result{phi_h.colors[u]};
    if (distinct) {
        std::vector<int> h_colors;
        for (int j : reduced.adj[index(u)]) h_colors.push_back(phi_h.colors[kept[j]]);
        for (int c : two_protective_unique(h_colors, outside_colors)) result.push_back(c);
    } else {
        for (int c : outside_colors) result.push_back(c);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<int> forbidden_base(const Graph& g, const std::vector<int>& S,
                                const Coloring& phi_h, int v) {
    std::vector<char> in_s(g.n, 0);
    for (int s : S) in_s[s] = 1;
    std::vector<int> result;
    for (int u : g.adj[v]) {
        if (in_s[u]) continue;
        auto b = boundary_palette(g, S, phi_h, u);
        result.insert(result.end(), b.begin(), b.end());
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

Coloring extend(const Graph& g, const ReductionPlan& plan, const Coloring& phi_h,
                ExtendLog* log) {
    Extender ext(g, plan, phi_h, log);
    ext.run();
    for (int s : plan.S)
        if (!ext.current.assigned(s))
            throw Error(ErrorKind::ExtensionUnsound,
                        "recipe left vertex " + std::to_string(s) + " uncolored");
    PcfReport report = is_h_pcf(g, ext.current, 2);
    if (!report.valid) {
        const auto& v = report.violations.front();
        throw Error(ErrorKind::ExtensionUnsound,
                    std::string(to_string(plan.kind)) + " extension fails at vertex " +
                        std::to_string(v.vertex) +
                        (v.kind == ViolationKind::ImproperEdge ? " (improper edge)"
                                                               : " (too few unique colors)"));
    }
    return ext.current;
}

} // namespace pcf9
