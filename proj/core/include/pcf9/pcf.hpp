#pragma once

#include <vector>

#include "pcf9/coloring.hpp"
#include "pcf9/graph.hpp"

namespace pcf9 {

enum class ViolationKind { ImproperEdge, TooFewUnique };

struct PcfViolation {
    int vertex;
    ViolationKind kind;
    int unique;   // observed number of unique colors at vertex
    int required; // min{h, d(vertex)}
};

struct PcfReport {
    bool valid = true;
    std::vector<PcfViolation> violations;
};

// Colors appearing on exactly one neighbor of v. Throws UnassignedNeighbor
// if some neighbor of v carries no color.
std::vector<int> unique_colors(const Graph& g, const Coloring& phi, int v);

// Checks that phi is a proper coloring where every vertex sees at least
// min{h, d(v)} unique colors in its neighborhood. phi must be total
// (PartialColoring otherwise). All failures are enumerated, not just the
// first, so callers can localize extension bugs.
PcfReport is_h_pcf(const Graph& g, const Coloring& phi, int h);

// Same predicate without building a report; used by search loops.
bool is_h_pcf_valid(const Graph& g, const Coloring& phi, int h);

} // namespace pcf9
