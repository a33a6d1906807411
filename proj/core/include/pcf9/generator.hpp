#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pcf9/embedding.hpp"
#include "pcf9/graph.hpp"

namespace pcf9 {

enum class GenMode { TreePlusEdges, GridPerturb };

const char* to_string(GenMode mode);

// Identical specs yield identical graphs and embeddings, across runs and
// platforms: the only entropy source is mt19937_64 seeded with `seed`, and
// all range reductions are plain modulo.
struct GenSpec {
    std::uint64_t seed = 1;
    int n = 1;
    GenMode mode = GenMode::TreePlusEdges;
};

struct GeneratedGraph {
    Graph graph;
    Embedding embedding;
    GenSpec spec;
};

struct CorpusEntry {
    std::string name;
    Graph graph;
    std::optional<Embedding> embedding; // absent only for non-planar entries
    bool planar = true;
};

// Named instances: k4, c5, cube, dodecahedron, grid(w,h), prism(k),
// ladder(k), petersen (non-planar, oracle-only). UnknownName otherwise.
CorpusEntry corpus(const std::string& name);

// The fixed-size corpus entries plus small parameterized ones, for test
// sweeps.
std::vector<std::string> corpus_names();

// Connected simple planar graph with max degree 4 and a valid embedding,
// planar by construction: a random embedded tree grown with degree caps,
// then face-respecting chords between boundary vertices of degree <= 3,
// updating rotations locally (TreePlusEdges); or a partial grid with random
// non-bridge edge deletions (GridPerturb). The Euler check is asserted
// before returning.
GeneratedGraph generate(const GenSpec& spec);

} // namespace pcf9
