#include "pcf9/pcf.hpp"

#include <algorithm>
#include <array>

#include "pcf9/errors.hpp"

namespace pcf9 {

std::vector<int> unique_colors(const Graph& g, const Coloring& phi, int v) {
    // Counting with a small map keyed by color; palettes are tiny.
    std::vector<std::pair<int, int>> counts;
    for (int u : g.adj[v]) {
        if (!phi.assigned(u))
            throw Error(ErrorKind::UnassignedNeighbor,
                        "neighbor " + std::to_string(u) + " of " + std::to_string(v) +
                            " carries no color");
        int c = phi.colors[u];
        auto it = std::find_if(counts.begin(), counts.end(),
                               [c](const auto& p) { return p.first == c; });
        if (it == counts.end())
            counts.emplace_back(c, 1);
        else
            ++it->second;
    }
    std::vector<int> unique;
    for (const auto& [color, count] : counts)
        if (count == 1) unique.push_back(color);
    std::sort(unique.begin(), unique.end());
    return unique;
}

namespace {

// Unique-color count for v given a total coloring, no allocation.
int unique_count(const Graph& g, const Coloring& phi, int v) {
    const auto& nbrs = g.adj[v];
    int unique = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        int c = phi.colors[nbrs[i]];
        bool repeated = false;
        for (std::size_t j = 0; j < nbrs.size(); ++j)
            if (j != i && phi.colors[nbrs[j]] == c) {
                repeated = true;
                break;
            }
        if (!repeated) ++unique;
    }
    return unique;
}

} // namespace

PcfReport is_h_pcf(const Graph& g, const Coloring& phi, int h) {
    for (int v = 0; v < g.n; ++v)
        if (!phi.assigned(v))
            throw Error(ErrorKind::PartialColoring,
                        "vertex " + std::to_string(v) + " carries no color");

    PcfReport report;
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v])
            if (v < u && phi.colors[v] == phi.colors[u])
                report.violations.push_back({v, ViolationKind::ImproperEdge,
                                             unique_count(g, phi, v), std::min(h, g.degree(v))});
    for (int v = 0; v < g.n; ++v) {
        int required = std::min(h, g.degree(v));
        int observed = unique_count(g, phi, v);
        if (observed < required)
            report.violations.push_back({v, ViolationKind::TooFewUnique, observed, required});
    }
    report.valid = report.violations.empty();
    return report;
}

bool is_h_pcf_valid(const Graph& g, const Coloring& phi, int h) {
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v])
            if (v < u && phi.colors[v] == phi.colors[u]) return false;
    for (int v = 0; v < g.n; ++v)
        if (unique_count(g, phi, v) < std::min(h, g.degree(v))) return false;
    return true;
}

} // namespace pcf9
