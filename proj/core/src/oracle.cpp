#include "pcf9/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "pcf9/errors.hpp"
#include "pcf9/pcf.hpp"

namespace pcf9 {

namespace {

// Coloring order: repeatedly peel a vertex of minimum residual degree
// (smallest id on ties), then color in reverse peel order.
std::vector<int> degeneracy_order(const Graph& g) {
    std::vector<int> deg(g.n);
    std::vector<char> removed(g.n, 0);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<int> peel;
    peel.reserve(g.n);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        peel.push_back(best);
        for (int u : g.adj[best])
            if (!removed[u]) --deg[u];
    }
    std::reverse(peel.begin(), peel.end());
    return peel;
}

struct Search {
    const Graph& g;
    int h, k;
    long long budget;
    std::atomic<long long>* shared_nodes; // global budget across workers
    std::vector<int> order;               // coloring order
    std::vector<int> position;            // vertex -> order index
    int pinned_first = -1;                // order[0], forced to color 1
    int pinned_second = -1;               // first neighbor of order[0], forced to 2

    std::vector<int> color;                      // 0 = unassigned
    std::vector<std::vector<int>> color_count;   // per vertex, per color 1..k
    std::vector<int> unique_now;                 // colors seen exactly once among assigned nbrs
    std::vector<int> unassigned_nbrs;
    long long nodes = 0, backtracks = 0;
    bool out_of_budget = false;

    Search(const Graph& graph, int hh, int kk, long long b, std::atomic<long long>* shared)
        : g(graph), h(hh), k(kk), budget(b), shared_nodes(shared) {
        order = degeneracy_order(g);
        position.assign(g.n, -1);
        for (int i = 0; i < g.n; ++i) position[order[i]] = i;
        if (g.n > 0) {
            pinned_first = order[0];
            for (int i = 1; i < g.n; ++i)
                if (g.has_edge(order[i], pinned_first)) {
                    pinned_second = order[i];
                    break;
                }
        }
        color.assign(g.n, 0);
        color_count.assign(g.n, std::vector<int>(k + 1, 0));
        unique_now.assign(g.n, 0);
        unassigned_nbrs.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v) unassigned_nbrs[v] = g.degree(v);
    }

    int required(int v) const { return std::min(h, g.degree(v)); }

    void place(int v, int c) {
        color[v] = c;
        for (int u : g.adj[v]) {
            int cnt = ++color_count[u][c];
            if (cnt == 1)
                ++unique_now[u];
            else if (cnt == 2)
                --unique_now[u];
            --unassigned_nbrs[u];
        }
    }

    void unplace(int v, int c) {
        color[v] = 0;
        for (int u : g.adj[v]) {
            int cnt = --color_count[u][c];
            if (cnt == 0)
                --unique_now[u];
            else if (cnt == 1)
                ++unique_now[u];
            ++unassigned_nbrs[u];
        }
    }

    // Sound prune: unique_now can rise by at most one per uncolored neighbor.
    bool feasible_after(int v) const {
        for (int u : g.adj[v])
            if (unique_now[u] + unassigned_nbrs[u] < required(u)) return false;
        return true;
    }

    bool proper_at(int v, int c) const { return color_count[v][c] == 0; }

    // Colors a suffix of the order; `fixed_colors` pins specific colors at
    // given order positions (symmetry breaking and root splitting).
    bool run(int depth, const std::vector<std::pair<int, int>>& pins,
             std::vector<int>& witness) {
        if (depth == g.n) {
            witness = color;
            return true;
        }
        int v = order[depth];
        int lo = 1, hi = k;
        for (const auto& [pos, c] : pins)
            if (pos == depth) lo = hi = c;
        if (v == pinned_first) lo = hi = 1;
        if (v == pinned_second) lo = hi = 2; // empty range when k < 2: infeasible anyway
        hi = std::min(hi, k);
        for (int c = lo; c <= hi; ++c) {
            if (!proper_at(v, c)) continue;
            ++nodes;
            if (shared_nodes) {
                if (shared_nodes->fetch_add(1, std::memory_order_relaxed) >= budget) {
                    out_of_budget = true;
                    return false;
                }
            } else if (nodes >= budget) {
                out_of_budget = true;
                return false;
            }
            place(v, c);
            if (feasible_after(v) && run(depth + 1, pins, witness)) return true;
            unplace(v, c);
            ++backtracks;
            if (out_of_budget) return false;
        }
        return false;
    }
};

OracleResult search_single(const Graph& g, int h, int k, long long budget,
                           std::atomic<long long>* shared,
                           const std::vector<std::pair<int, int>>& pins) {
    Search search(g, h, k, budget, shared);
    std::vector<int> witness;
    bool found = search.run(0, pins, witness);
    OracleResult result;
    result.stats.nodes = search.nodes;
    result.stats.backtracks = search.backtracks;
    if (search.out_of_budget)
        throw Error(ErrorKind::InstanceTooLarge,
                    "node budget " + std::to_string(budget) + " exhausted");
    if (found) {
        Coloring phi(k, g.n);
        phi.colors = witness;
        result.witness = phi;
    }
    return result;
}

// Splits the color choices of the first genuinely branching order position
// across workers. Each worker enumerates its pinned colors in ascending
// order, so its first witness is its lexicographic minimum; the global
// minimum is the componentwise-smallest over workers in order space.
OracleResult search_parallel(const Graph& g, int h, int k, const OracleOptions& options) {
    Search probe(g, h, k, options.node_budget, nullptr);
    int split_pos = -1;
    for (int i = 0; i < g.n; ++i) {
        int v = probe.order[i];
        if (v != probe.pinned_first && v != probe.pinned_second) {
            split_pos = i;
            break;
        }
    }
    if (split_pos < 0) return search_single(g, h, k, options.node_budget, nullptr, {});

    int jobs = std::min(options.jobs, k);
    std::atomic<long long> shared_nodes{0};
    std::vector<std::vector<int>> assigned_colors(jobs);
    for (int c = 1; c <= k; ++c) assigned_colors[(c - 1) % jobs].push_back(c);

    struct WorkerOut {
        std::optional<std::vector<int>> witness;
        long long nodes = 0, backtracks = 0;
        bool budget_hit = false;
    };
    std::vector<WorkerOut> outs(jobs);
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) {
        threads.emplace_back([&, w] {
            for (int c : assigned_colors[w]) {
                Search search(g, h, k, options.node_budget, &shared_nodes);
                std::vector<int> witness;
                bool found = search.run(0, {{split_pos, c}}, witness);
                outs[w].nodes += search.nodes;
                outs[w].backtracks += search.backtracks;
                if (search.out_of_budget) {
                    outs[w].budget_hit = true;
                    return;
                }
                if (found) {
                    outs[w].witness = witness;
                    return;
                }
            }
        });
    }
    for (auto& t : threads) t.join();

    OracleResult result;
    bool budget_hit = false;
    std::optional<std::vector<int>> best;
    for (const auto& out : outs) {
        result.stats.nodes += out.nodes;
        result.stats.backtracks += out.backtracks;
        budget_hit = budget_hit || out.budget_hit;
        if (out.witness) {
            // Compare in order space for the lexicographic contract.
            auto in_order = [&](const std::vector<int>& cs) {
                std::vector<int> seq(g.n);
                for (int i = 0; i < g.n; ++i) seq[i] = cs[probe.order[i]];
                return seq;
            };
            if (!best || in_order(*out.witness) < in_order(*best)) best = out.witness;
        }
    }
    if (budget_hit)
        throw Error(ErrorKind::InstanceTooLarge,
                    "node budget " + std::to_string(options.node_budget) + " exhausted");
    if (best) {
        Coloring phi(k, g.n);
        phi.colors = *best;
        result.witness = phi;
    }
    return result;
}

} // namespace

OracleResult exists_h_pcf_k(const Graph& g, int h, int k, const OracleOptions& options) {
    if (k < 1) throw Error(ErrorKind::BadInput, "palette size must be at least 1");
    if (h < 0) throw Error(ErrorKind::BadInput, "h must be non-negative");
    auto start = std::chrono::steady_clock::now();
    OracleResult result = options.jobs > 1 ? search_parallel(g, h, k, options)
                                           : search_single(g, h, k, options.node_budget, nullptr, {});
    result.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.witness && !is_h_pcf_valid(g, *result.witness, h))
        throw Error(ErrorKind::ExtensionUnsound, "oracle produced an invalid witness");
    return result;
}

int min_k(const Graph& g, int h, const OracleOptions& options) {
    if (g.n == 0) throw Error(ErrorKind::BadInput, "empty graph");
    for (int k = 1; k <= g.n; ++k)
        if (exists_h_pcf_k(g, h, k, options).feasible()) return k;
    return g.n; // distinct colors always succeed, so this is unreachable
}

} // namespace pcf9
