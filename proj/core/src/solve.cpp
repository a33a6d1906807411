#include <algorithm>

#include "pcf9/errors.hpp"
#include "pcf9/oracle.hpp"
#include "pcf9/pcf.hpp"
#include "pcf9/reduction.hpp"

namespace pcf9 {

namespace {

constexpr int kBaseCase = 9;

void remap_steps(std::vector<TraceStep>& steps, const std::vector<int>& to_parent) {
    for (auto& step : steps) {
        for (int& s : step.S) s = to_parent[s];
        for (auto& [a, b] : step.added_edges) {
            a = to_parent[a];
            b = to_parent[b];
            if (a > b) std::swap(a, b);
        }
        for (auto& [name, v] : step.roles) v = to_parent[v];
        remap_steps(step.children, to_parent);
    }
}

struct Impl {
    const SolveOptions& options;

    SolveResult run(const Graph& g) {
        SolveResult result;
        if (g.n <= kBaseCase) {
            result.coloring = Coloring(9, g.n);
            for (int v = 0; v < g.n; ++v) result.coloring.colors[v] = v + 1;
            return result;
        }
        auto match = find_configuration(g);
        if (!match) {
            if (g.n <= options.oracle_fallback_bound) {
                OracleOptions oo;
                oo.node_budget = options.oracle_budget;
                auto oracle = exists_h_pcf_k(g, 2, 9, oo);
                if (oracle.witness) {
                    result.coloring = *oracle.witness;
                    result.used_fallback = true;
                    return result;
                }
            }
            throw Error(ErrorKind::NoConfigurationFound,
                        "no reducible configuration in a graph on " + std::to_string(g.n) +
                            " vertices; input is likely not planar");
        }

        ReductionPlan plan = reduce(g, *match);
        Coloring phi_h(9, plan.reduced.n);
        TraceStep step{plan.kind, plan.match.subcase, plan.S, plan.added_edges,
                       plan.match.roles, {}};

        for (const auto& comp : connected_components(plan.reduced)) {
            Graph sub = induced_subgraph(plan.reduced, comp);
            SolveResult inner = run(sub);
            for (std::size_t i = 0; i < comp.size(); ++i)
                phi_h.colors[comp[i]] = inner.coloring.colors[i];
            // translate the component's trace into this graph's ids
            std::vector<int> to_parent(comp.size());
            for (std::size_t i = 0; i < comp.size(); ++i) to_parent[i] = plan.kept[comp[i]];
            remap_steps(inner.trace, to_parent);
            for (auto& child : inner.trace) step.children.push_back(std::move(child));
            result.reductions += inner.reductions;
            result.used_fallback = result.used_fallback || inner.used_fallback;
        }

        result.coloring = extend(g, plan, phi_h);
        result.reductions += 1;
        result.trace.push_back(std::move(step));
        return result;
    }
};

void collect(const std::vector<TraceStep>& steps, std::vector<const TraceStep*>& out) {
    for (const auto& s : steps) {
        out.push_back(&s);
        collect(s.children, out);
    }
}

} // namespace

std::vector<const TraceStep*> SolveResult::flat_trace() const {
    std::vector<const TraceStep*> out;
    collect(trace, out);
    return out;
}

SolveResult solve(const Graph& g, const SolveOptions& options) {
    ensure_valid(g, /*require_max4=*/true);
    SolveResult result = Impl{options}.run(g);
    if (!is_h_pcf_valid(g, result.coloring, 2))
        throw Error(ErrorKind::ExtensionUnsound, "final coloring failed verification");
    return result;
}

} // namespace pcf9
