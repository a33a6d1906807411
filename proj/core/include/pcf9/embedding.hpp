#pragma once

#include <utility>
#include <vector>

#include "pcf9/graph.hpp"

namespace pcf9 {

// Combinatorial embedding: per-vertex cyclic (clockwise) neighbor order.
struct Embedding {
    std::vector<std::vector<int>> rotations;
};

// One face of an embedded graph. The boundary walk is a cyclic sequence of
// directed edges; length counts edge-sides, so a bridge on the walk
// contributes twice.
struct Face {
    std::vector<std::pair<int, int>> boundary;
    int length() const { return static_cast<int>(boundary.size()); }
    bool contains_vertex(int v) const {
        for (const auto& e : boundary)
            if (e.first == v) return true;
        return false;
    }
    // Occurrences of v as a corner of this face (tails of boundary edges).
    int vertex_multiplicity(int v) const {
        int count = 0;
        for (const auto& e : boundary)
            if (e.first == v) ++count;
        return count;
    }
};

// Face tracing by the rotation-successor rule: after directed edge (v,u)
// comes (u,w) where w follows v in rotations(u). Requires a connected graph;
// throws RotationMismatch if rotations disagree with adjacency and
// NonPlanarEmbedding if the traced faces fail Euler's formula.
std::vector<Face> faces_of(const Graph& g, const Embedding& emb);

// Builds clockwise rotations by sorting each vertex's neighbors by angle
// around it. Used by the corpus and the grid generator, where coordinates
// are available and crossing-free by construction.
Embedding embedding_from_coordinates(const Graph& g,
                                     const std::vector<std::pair<double, double>>& coords);

} // namespace pcf9
