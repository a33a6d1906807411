#include "pcf9/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pcf9/errors.hpp"

namespace pcf9 {

namespace {

void check_rotations(const Graph& g, const Embedding& emb) {
    if (static_cast<int>(emb.rotations.size()) != g.n)
        throw Error(ErrorKind::RotationMismatch,
                    "rotation system covers " + std::to_string(emb.rotations.size()) +
                        " vertices, graph has " + std::to_string(g.n));
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> rot = emb.rotations[v];
        std::sort(rot.begin(), rot.end());
        if (rot != g.adj[v])
            throw Error(ErrorKind::RotationMismatch,
                        "rotations(" + std::to_string(v) + ") is not a permutation of its adjacency");
    }
}

} // namespace

std::vector<Face> faces_of(const Graph& g, const Embedding& emb) {
    check_rotations(g, emb);

    if (g.n == 1 && g.adj[0].empty()) {
        // A lone vertex bounds exactly one (empty) face; 1 - 0 + 1 = 2.
        return {Face{}};
    }

    // successor of directed edge (v,u): (u, w) with w right after v in rotations(u)
    std::map<std::pair<int, int>, int> position;
    for (int v = 0; v < g.n; ++v)
        for (std::size_t i = 0; i < emb.rotations[v].size(); ++i)
            position[{v, emb.rotations[v][i]}] = static_cast<int>(i);

    std::map<std::pair<int, int>, bool> used;
    std::vector<Face> faces;
    for (int v = 0; v < g.n; ++v) {
        for (int u : g.adj[v]) {
            if (used[{v, u}]) continue;
            Face face;
            int a = v, b = u;
            while (!used[{a, b}]) {
                used[{a, b}] = true;
                face.boundary.emplace_back(a, b);
                const auto& rot = emb.rotations[b];
                int idx = position[{b, a}];
                int w = rot[(idx + 1) % rot.size()];
                a = b;
                b = w;
            }
            faces.push_back(std::move(face));
        }
    }

    long long euler = static_cast<long long>(g.n) - g.edge_count() + static_cast<long long>(faces.size());
    if (euler != 2)
        throw Error(ErrorKind::NonPlanarEmbedding,
                    "|V|-|E|+|F| = " + std::to_string(euler) + ", expected 2");
    return faces;
}

Embedding embedding_from_coordinates(const Graph& g,
                                     const std::vector<std::pair<double, double>>& coords) {
    Embedding emb;
    emb.rotations.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        emb.rotations[v] = g.adj[v];
        auto& rot = emb.rotations[v];
        std::sort(rot.begin(), rot.end(), [&](int a, int b) {
            double angle_a = std::atan2(coords[a].second - coords[v].second,
                                        coords[a].first - coords[v].first);
            double angle_b = std::atan2(coords[b].second - coords[v].second,
                                        coords[b].first - coords[v].first);
            return angle_a > angle_b; // clockwise
        });
    }
    return emb;
}

} // namespace pcf9
