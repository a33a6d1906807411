#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pcf9/errors.hpp"

namespace pcf9 {

// Simple undirected graph over dense vertex ids 0..n-1, adjacency kept as
// sorted neighbor lists. External formats map labels to ids on ingestion.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(vertices) {}

    static Graph from_edges(int vertices, const std::vector<std::pair<int, int>>& edges);

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj[v]; }
    bool has_edge(int u, int v) const;
    int edge_count() const;
    int max_degree() const;

    // Inserts u-v in both adjacency lists, keeping them sorted. No-op when
    // the edge already exists.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;
};

struct ValidationIssue {
    ErrorKind kind;
    int vertex = -1;
    int other = -1;
    std::string describe() const;
};

// Structural checks: simplicity, symmetry, and optionally max degree 4.
// All issues are collected, none thrown.
std::vector<ValidationIssue> validate(const Graph& g, bool require_max4);

// Throws the first validation issue as an Error; solver entry points call
// this so downstream code may assume a clean Δ<=4 graph.
void ensure_valid(const Graph& g, bool require_max4);

// g plus an edge for every pair of vertices at distance exactly 2.
Graph square(const Graph& g);

bool is_connected(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Induced subgraph on `vertices` (must be sorted); vertex i of the result is
// vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// BFS distances from src; unreachable = -1.
std::vector<int> bfs_distances(const Graph& g, int src);

} // namespace pcf9
