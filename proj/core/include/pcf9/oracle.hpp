#pragma once

#include <cstdint>
#include <optional>

#include "pcf9/coloring.hpp"
#include "pcf9/graph.hpp"

namespace pcf9 {

struct SearchStats {
    long long nodes = 0;
    long long backtracks = 0;
    double elapsed_seconds = 0.0;
};

struct OracleOptions {
    long long node_budget = 100000000LL;
    int jobs = 1;
};

struct OracleResult {
    std::optional<Coloring> witness;
    SearchStats stats;
    bool feasible() const { return witness.has_value(); }
};

// Exact decision procedure: is there a proper k-coloring where every vertex
// sees at least min{h, d(v)} unique colors in its neighborhood? Complete
// backtracking over a degeneracy order (repeatedly peel a minimum-degree
// vertex, color in reverse), pruning when a vertex can no longer reach its
// required unique count. The first vertex is pinned to color 1 and its first
// colored neighbor to color 2; the reported witness is the lexicographically
// smallest under the fixed order regardless of worker count. Throws
// InstanceTooLarge when the node budget is exhausted.
OracleResult exists_h_pcf_k(const Graph& g, int h, int k, const OracleOptions& options = {});

// Smallest k admitting an h-PCF k-coloring. Distinct colors always work, so
// the answer is at most n.
int min_k(const Graph& g, int h, const OracleOptions& options = {});

} // namespace pcf9
