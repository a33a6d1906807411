#include "pcf9/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "pcf9/errors.hpp"

namespace pcf9 {

Graph Graph::from_edges(int vertices, const std::vector<std::pair<int, int>>& edges) {
    Graph g(vertices);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertices || v < 0 || v >= vertices)
            throw Error(ErrorKind::BadInput,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for n=" + std::to_string(vertices));
        // Kept verbatim, including self-loops and duplicates, so validate()
        // can report them.
        g.adj[u].push_back(v);
        if (u != v) g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& nbrs : adj) total += static_cast<int>(nbrs.size());
    return total / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

void Graph::add_edge(int u, int v) {
    if (u == v || has_edge(u, v)) return;
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

void Graph::remove_edge(int u, int v) {
    auto it = std::lower_bound(adj[u].begin(), adj[u].end(), v);
    if (it != adj[u].end() && *it == v) adj[u].erase(it);
    auto jt = std::lower_bound(adj[v].begin(), adj[v].end(), u);
    if (jt != adj[v].end() && *jt == u) adj[v].erase(jt);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n; ++v)
        for (int u : adj[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

std::string ValidationIssue::describe() const {
    std::string s = to_string(kind);
    s += " at vertex " + std::to_string(vertex);
    if (other >= 0) s += " (with " + std::to_string(other) + ")";
    return s;
}

std::vector<ValidationIssue> validate(const Graph& g, bool require_max4) {
    std::vector<ValidationIssue> issues;
    for (int v = 0; v < g.n; ++v) {
        const auto& nbrs = g.adj[v];
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            int u = nbrs[i];
            if (u == v) {
                issues.push_back({ErrorKind::SelfLoop, v, v});
                continue;
            }
            if (i > 0 && nbrs[i - 1] == u) {
                if (u > v || !g.has_edge(u, v)) // report each parallel pair once
                    issues.push_back({ErrorKind::ParallelEdge, std::min(u, v), std::max(u, v)});
                continue;
            }
            if (!g.has_edge(u, v)) issues.push_back({ErrorKind::AsymmetricAdjacency, v, u});
        }
    }
    if (require_max4)
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) > 4) issues.push_back({ErrorKind::DegreeExceeded, v});
    return issues;
}

void ensure_valid(const Graph& g, bool require_max4) {
    auto issues = validate(g, require_max4);
    if (!issues.empty()) throw Error(issues.front().kind, issues.front().describe());
}

Graph square(const Graph& g) {
    Graph sq = g;
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v])
            for (int w : g.adj[u])
                if (w != v) sq.add_edge(v, w);
    return sq;
}

bool is_connected(const Graph& g) {
    return g.n <= 1 || static_cast<int>(connected_components(g).front().size()) == g.n;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> components;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::unordered_map<int, int> index;
    index.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    Graph sub(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int u : g.adj[vertices[i]]) {
            auto it = index.find(u);
            if (it != index.end() && it->second > static_cast<int>(i))
                sub.add_edge(static_cast<int>(i), it->second);
        }
    return sub;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    dist[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

} // namespace pcf9
