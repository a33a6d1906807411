#include "pcf9/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pcf9/errors.hpp"

namespace pcf9 {

const char* to_string(GenMode mode) {
    return mode == GenMode::TreePlusEdges ? "tree-plus-edges" : "grid-perturb";
}

namespace {

constexpr double kPi = 3.14159265358979323846;

// Range reduction by plain modulo: biased in principle, but portable and
// deterministic, which is what reproducible corpora need.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }

CorpusEntry with_coords(std::string name, Graph g,
                        const std::vector<std::pair<double, double>>& coords) {
    Embedding emb = embedding_from_coordinates(g, coords);
    return {std::move(name), std::move(g), std::move(emb), true};
}

CorpusEntry make_k4() {
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    std::vector<std::pair<double, double>> coords{{0, 0}};
    for (int i = 0; i < 3; ++i) {
        double a = (90 + 120 * i) * kPi / 180;
        coords.emplace_back(2 * std::cos(a), 2 * std::sin(a));
    }
    return with_coords("k4", std::move(g), coords);
}

CorpusEntry make_cycle(int k, std::string name) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    Graph g = Graph::from_edges(k, edges);
    std::vector<std::pair<double, double>> coords;
    for (int i = 0; i < k; ++i) {
        double a = (90 + 360.0 * i / k) * kPi / 180;
        coords.emplace_back(std::cos(a), std::sin(a));
    }
    return with_coords(std::move(name), std::move(g), coords);
}

CorpusEntry make_prism(int k, std::string name) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);         // outer ring
        edges.emplace_back(k + i, k + (i + 1) % k); // inner ring
        edges.emplace_back(i, k + i);               // spoke
    }
    Graph g = Graph::from_edges(2 * k, edges);
    std::vector<std::pair<double, double>> coords(2 * k);
    for (int i = 0; i < k; ++i) {
        double a = (90 + 360.0 * i / k) * kPi / 180;
        coords[i] = {2 * std::cos(a), 2 * std::sin(a)};
        coords[k + i] = {std::cos(a), std::sin(a)};
    }
    return with_coords(std::move(name), std::move(g), coords);
}

// Four rings of five: outer pentagon a, spoke layer b, staggered layer c,
// inner pentagon d. All edges are radial or follow a ring, so angle-sorted
// rotations are a plane embedding.
CorpusEntry make_dodecahedron() {
    auto a = [](int i) { return i; };
    auto b = [](int i) { return 5 + i; };
    auto c = [](int i) { return 10 + i; };
    auto d = [](int i) { return 15 + i; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        edges.emplace_back(a(i), a(j));
        edges.emplace_back(a(i), b(i));
        edges.emplace_back(b(i), c(i));
        edges.emplace_back(c(i), b(j));
        edges.emplace_back(c(i), d(i));
        edges.emplace_back(d(i), d(j));
    }
    Graph g = Graph::from_edges(20, edges);
    std::vector<std::pair<double, double>> coords(20);
    for (int i = 0; i < 5; ++i) {
        double base = (90 + 72.0 * i) * kPi / 180;
        double offset = base + 36.0 * kPi / 180;
        coords[a(i)] = {4 * std::cos(base), 4 * std::sin(base)};
        coords[b(i)] = {2.6 * std::cos(base), 2.6 * std::sin(base)};
        coords[c(i)] = {2.0 * std::cos(offset), 2.0 * std::sin(offset)};
        coords[d(i)] = {1.0 * std::cos(offset), 1.0 * std::sin(offset)};
    }
    return with_coords("dodecahedron", std::move(g), coords);
}

CorpusEntry make_grid(int w, int h, std::string name) {
    if (w < 1 || h < 1) throw Error(ErrorKind::UnknownName, "grid needs positive dimensions");
    int n = w * h;
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < h; ++r)
        for (int col = 0; col < w; ++col) {
            int id = r * w + col;
            if (col + 1 < w) edges.emplace_back(id, id + 1);
            if (r + 1 < h) edges.emplace_back(id, id + w);
        }
    Graph g = Graph::from_edges(n, edges);
    std::vector<std::pair<double, double>> coords(n);
    for (int r = 0; r < h; ++r)
        for (int col = 0; col < w; ++col) coords[r * w + col] = {double(col), double(-r)};
    return with_coords(std::move(name), std::move(g), coords);
}

CorpusEntry make_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, 5 + i);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return {"petersen", Graph::from_edges(10, edges), std::nullopt, false};
}

bool parse_call(const std::string& name, const std::string& fn, std::vector<int>& args) {
    if (name.size() < fn.size() + 3 || name.compare(0, fn.size(), fn) != 0) return false;
    if (name[fn.size()] != '(' || name.back() != ')') return false;
    args.clear();
    int value = 0;
    bool any = false;
    for (std::size_t i = fn.size() + 1; i + 1 < name.size(); ++i) {
        char ch = name[i];
        if (ch >= '0' && ch <= '9') {
            value = value * 10 + (ch - '0');
            any = true;
        } else if (ch == ',') {
            if (!any) return false;
            args.push_back(value);
            value = 0;
            any = false;
        } else {
            return false;
        }
    }
    if (!any) return false;
    args.push_back(value);
    return true;
}

} // namespace

CorpusEntry corpus(const std::string& name) {
    if (name == "k4") return make_k4();
    if (name == "c5") return make_cycle(5, "c5");
    if (name == "cube") return make_prism(4, "cube");
    if (name == "dodecahedron") return make_dodecahedron();
    if (name == "petersen") return make_petersen();
    std::vector<int> args;
    if (parse_call(name, "grid", args) && args.size() == 2)
        return make_grid(args[0], args[1], name);
    if (parse_call(name, "prism", args) && args.size() == 1 && args[0] >= 3)
        return make_prism(args[0], name);
    if (parse_call(name, "ladder", args) && args.size() == 1 && args[0] >= 1)
        return make_grid(args[0], 2, name);
    throw Error(ErrorKind::UnknownName, "no corpus entry named '" + name + "'");
}

std::vector<std::string> corpus_names() {
    return {"k4",       "c5",       "cube",      "dodecahedron", "grid(4,4)", "grid(5,5)",
            "grid(2,4)", "prism(3)", "prism(5)", "prism(6)",     "ladder(3)", "ladder(4)",
            "petersen"};
}

namespace {

struct Builder {
    Graph g;
    Embedding emb;

    explicit Builder(int n) : g(n) { emb.rotations.resize(n); }

    int degree(int v) const { return g.degree(v); }

    void attach_leaf(int child, int parent, std::size_t slot) {
        g.add_edge(child, parent);
        auto& rot = emb.rotations[parent];
        rot.insert(rot.begin() + static_cast<long>(slot % (rot.size() + 1)), child);
        emb.rotations[child] = {parent};
    }

    // Insert a chord between two corners of one face, keeping the embedding
    // planar: each endpoint's rotation gains the other endpoint right after
    // the incoming walk edge at that corner.
    bool add_chord(const Face& face, int i, int j) {
        int len = face.length();
        int a = face.boundary[i].first;
        int b = face.boundary[j].first;
        if (a == b || g.has_edge(a, b)) return false;
        if (g.degree(a) > 3 || g.degree(b) > 3) return false;
        int a_in = face.boundary[(i + len - 1) % len].first;
        int b_in = face.boundary[(j + len - 1) % len].first;
        auto insert_after = [&](int at, int incoming, int added) {
            auto& rot = emb.rotations[at];
            auto it = std::find(rot.begin(), rot.end(), incoming);
            rot.insert(it + 1, added);
        };
        insert_after(a, a_in, b);
        insert_after(b, b_in, a);
        g.add_edge(a, b);
        return true;
    }
};

GeneratedGraph generate_tree_plus_edges(const GenSpec& spec, std::mt19937_64& rng) {
    Builder builder(spec.n);
    for (int v = 1; v < spec.n; ++v) {
        std::vector<int> eligible;
        for (int p = 0; p < v; ++p)
            if (builder.degree(p) < 4) eligible.push_back(p);
        int parent = eligible[pick(rng, eligible.size())];
        builder.attach_leaf(v, parent, pick(rng, 8));
    }
    if (spec.n >= 4) {
        int target = spec.n / 4 + static_cast<int>(pick(rng, std::max(1, spec.n / 2)));
        int added = 0;
        for (int attempt = 0; attempt < 40 * target && added < target; ++attempt) {
            auto faces = faces_of(builder.g, builder.emb);
            const Face& face = faces[pick(rng, faces.size())];
            if (face.length() < 4) continue;
            int i = static_cast<int>(pick(rng, face.length()));
            int j = static_cast<int>(pick(rng, face.length()));
            if (builder.add_chord(face, i, j)) ++added;
        }
        // Raise leaves and 2-vertices with further face-respecting chords so
        // the output keeps degree-3+ regions; partners of low degree are
        // preferred to fix two vertices per chord.
        for (bool progress = true; progress;) {
            progress = false;
            auto faces = faces_of(builder.g, builder.emb);
            for (const Face& face : faces) {
                int len = face.length();
                for (int i = 0; i < len && !progress; ++i) {
                    int v = face.boundary[i].first;
                    if (builder.degree(v) > 2) continue;
                    std::vector<int> partners;
                    for (int j = 0; j < len; ++j) {
                        int b = face.boundary[j].first;
                        if (b != v && builder.degree(b) <= 2 && !builder.g.has_edge(v, b))
                            partners.push_back(j);
                    }
                    if (partners.empty())
                        for (int j = 0; j < len; ++j) {
                            int b = face.boundary[j].first;
                            if (b != v && builder.degree(b) <= 3 && !builder.g.has_edge(v, b))
                                partners.push_back(j);
                        }
                    if (partners.empty()) continue;
                    int j = partners[pick(rng, partners.size())];
                    progress = builder.add_chord(face, i, j);
                }
                if (progress) break; // faces are stale after an insertion
            }
        }
    }
    return {std::move(builder.g), std::move(builder.emb), spec};
}

GeneratedGraph generate_grid_perturb(const GenSpec& spec, std::mt19937_64& rng) {
    int w = std::max(1, static_cast<int>(std::ceil(std::sqrt(double(spec.n)))));
    Graph g(spec.n);
    for (int id = 0; id < spec.n; ++id) {
        int r = id / w, c = id % w;
        if (c + 1 < w && id + 1 < spec.n) g.add_edge(id, id + 1);
        if (id + w < spec.n) g.add_edge(id, id + w);
        (void)r;
    }
    std::vector<std::pair<double, double>> coords(spec.n);
    for (int id = 0; id < spec.n; ++id) coords[id] = {double(id % w), double(-(id / w))};
    Embedding emb = embedding_from_coordinates(g, coords);

    auto edges = g.edges();
    int deletions = edges.empty() ? 0 : static_cast<int>(pick(rng, std::max<std::size_t>(1, edges.size() / 5)));
    for (int t = 0; t < deletions; ++t) {
        auto current = g.edges();
        if (current.empty()) break;
        auto [u, v] = current[pick(rng, current.size())];
        g.remove_edge(u, v);
        if (!is_connected(g)) {
            g.add_edge(u, v);
            continue;
        }
        auto& ru = emb.rotations[u];
        ru.erase(std::find(ru.begin(), ru.end(), v));
        auto& rv = emb.rotations[v];
        rv.erase(std::find(rv.begin(), rv.end(), u));
    }
    return {std::move(g), std::move(emb), spec};
}

} // namespace

GeneratedGraph generate(const GenSpec& spec) {
    if (spec.n < 1) throw Error(ErrorKind::BadInput, "generator needs n >= 1");
    std::mt19937_64 rng(spec.seed);
    GeneratedGraph out = spec.mode == GenMode::TreePlusEdges
                             ? generate_tree_plus_edges(spec, rng)
                             : generate_grid_perturb(spec, rng);
    ensure_valid(out.graph, /*require_max4=*/true);
    faces_of(out.graph, out.embedding); // Euler check; throws if the build broke
    return out;
}

} // namespace pcf9
