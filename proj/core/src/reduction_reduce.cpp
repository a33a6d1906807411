#include <algorithm>

#include "pcf9/errors.hpp"
#include "pcf9/reduction.hpp"

namespace pcf9 {

int ReductionPlan::reduced_index(int original) const {
    auto it = std::lower_bound(kept.begin(), kept.end(), original);
    if (it == kept.end() || *it != original)
        throw Error(ErrorKind::BadInput,
                    "vertex " + std::to_string(original) + " is not in the reduced graph");
    return static_cast<int>(it - kept.begin());
}

namespace {

std::vector<int> removal_set(const Graph& g, const ConfigMatch& m) {
    auto ids = [&](std::initializer_list<const char*> names) {
        std::vector<int> s;
        for (const char* r : names) s.push_back(m.at(r));
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    };
    switch (m.kind) {
        case ConfigKind::K1: return ids({"v"});
        case ConfigKind::K2:
            return m.subcase == 1 ? ids({"x", "x1"}) : ids({"x", "y", "z"});
        case ConfigKind::K3: return ids({"x", "y", "z"});
        case ConfigKind::K4: return ids({"x", "y", "z"});
        case ConfigKind::K5: return ids({"x", "y", "z", "w"});
        case ConfigKind::K6: return ids({"x", "y", "z", "w"});
        case ConfigKind::K7: return ids({"v"});
        case ConfigKind::K8: return ids({"x", "y", "z", "u", "v"});
        case ConfigKind::K9: return ids({"x", "y", "z", "u", "v", "z1"});
        case ConfigKind::K10:
            return m.subcase == 1 ? ids({"x", "y", "z", "u", "v", "z1", "u1"})
                                  : ids({"x", "y", "z", "u", "v", "u1", "v1"});
    }
    throw Error(ErrorKind::BadInput, "unknown configuration kind");
}

} // namespace

ReductionPlan reduce(const Graph& g, const ConfigMatch& match) {
    ReductionPlan plan;
    plan.kind = match.kind;
    plan.match = match;
    plan.S = removal_set(g, match);

    std::vector<char> in_s(g.n, 0);
    for (int s : plan.S) in_s[s] = 1;
    for (int v = 0; v < g.n; ++v)
        if (!in_s[v]) plan.kept.push_back(v);

    if (match.kind == ConfigKind::K7) {
        // Not an S-reduction: delete v, then connect its cycle neighbors x
        // and u directly.
        plan.s_reduction = false;
        plan.reduced = induced_subgraph(g, plan.kept);
        int x = match.at("x"), u = match.at("u");
        if (!g.has_edge(x, u)) {
            plan.added_edges.emplace_back(std::min(x, u), std::max(x, u));
            plan.reduced.add_edge(plan.reduced_index(x), plan.reduced_index(u));
        }
        return plan;
    }

    // S-reduced graph: each removed vertex must see at most two survivors,
    // and any two survivors sharing a removed neighbor become adjacent.
    for (int s : plan.S) {
        int outside = 0;
        for (int u : g.adj[s])
            if (!in_s[u]) ++outside;
        if (outside > 2)
            throw Error(ErrorKind::SReductionPrecondition,
                        "vertex " + std::to_string(s) + " of S has " + std::to_string(outside) +
                            " neighbors outside S (" + to_string(match.kind) + " match)");
    }

    plan.reduced = induced_subgraph(g, plan.kept);
    for (int s : plan.S) {
        std::vector<int> outside;
        for (int u : g.adj[s])
            if (!in_s[u]) outside.push_back(u);
        if (outside.size() == 2 && !g.has_edge(outside[0], outside[1])) {
            int a = plan.reduced_index(outside[0]);
            int b = plan.reduced_index(outside[1]);
            if (!plan.reduced.has_edge(a, b)) {
                plan.reduced.add_edge(a, b);
                plan.added_edges.emplace_back(std::min(outside[0], outside[1]),
                                              std::max(outside[0], outside[1]));
            }
        }
    }
    std::sort(plan.added_edges.begin(), plan.added_edges.end());
    return plan;
}

} // namespace pcf9
