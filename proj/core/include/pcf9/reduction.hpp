#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcf9/coloring.hpp"
#include "pcf9/graph.hpp"

namespace pcf9 {

// The ten reducible configurations, in detection priority order. Each later
// kind's extension recipe assumes all earlier kinds are absent from the
// graph, so the order is part of the contract, not a tuning knob.
enum class ConfigKind {
    K1,  // 2^- vertex
    K2,  // 3-cycle carrying a 3-vertex
    K3,  // 3-cycle, all three 4-vertices
    K4,  // path on three 3-vertices, middle one adjacent to a 4-vertex
    K5,  // path on four 3-vertices
    K6,  // 4-cycle xyzw with adjacent 3-vertices x,y (z normalized to degree 4)
    K7,  // 3-vertex on two 4-cycles sharing an edge
    K8,  // 5-cycle with three consecutive 3-vertices
    K9,  // 5-cycle, 3-vertices x,z,v, and z's off-cycle neighbor has degree 3
    K10, // 5-cycle, 3-vertices x,z,v, one of them bad (on a 4-cycle)
};

const char* to_string(ConfigKind kind);

// A located configuration: which kind, and the role->vertex binding of its
// shape (x, y, z, ..., x1, y1, ... as the shapes require). `subcase`
// distinguishes bindings that lead to different removal sets: K2 keeps 1 for
// "off-triangle neighbor of x has degree 3" and 2 otherwise; K10 keeps 1 for
// a bad z (witness cycle u-z-z1-u1) and 2 for a bad v (witness u-v-v1-u1).
struct ConfigMatch {
    ConfigKind kind;
    std::map<std::string, int> roles;
    int subcase = 0;

    int at(const std::string& role) const;
    bool has(const std::string& role) const { return roles.count(role) != 0; }
};

// The removal package: S, the reduced graph (relabeled to dense ids via
// `kept`, where kept[i] is the original id of reduced vertex i), and the
// edges the reduction added, in original ids. For every kind except K7 the
// reduced graph is the S-reduced graph: delete S, then join any two outside
// vertices that share a neighbor in S. K7 instead removes its single vertex
// and adds one edge between two of its neighbors.
struct ReductionPlan {
    ConfigKind kind;
    ConfigMatch match;
    std::vector<int> S;
    Graph reduced;
    std::vector<int> kept;
    std::vector<std::pair<int, int>> added_edges;
    bool s_reduction = true;

    int reduced_index(int original) const;
};

// Searches for configurations in priority order K1 > K2 > ... > K10; within
// a kind the lexicographically smallest role tuple wins, so identical graphs
// always produce identical matches. Returns nothing when the graph contains
// none of the ten shapes (legitimate for non-planar input).
std::optional<ConfigMatch> find_configuration(const Graph& g);

// Builds the removal package for a match. Throws SReductionPrecondition if
// some vertex of S has more than two neighbors outside S, which indicates a
// detection bug rather than a property of the input.
ReductionPlan reduce(const Graph& g, const ConfigMatch& match);

// B_S(u): the colors a vertex of S must avoid so that the boundary vertex u
// keeps a proper neighborhood with two unique colors. phi_h is indexed by
// g's vertex ids and must be assigned exactly on the complement of S. When
// the colors on N_G(u)\S are pairwise distinct this is {phi(u)} plus up to
// two unique colors of u in the S-reduced graph; otherwise it is {phi(u)}
// together with all colors on N_G(u)\S. Size is at most 3 whenever the
// maximum degree is at most 4.
std::vector<int> boundary_palette(const Graph& g, const std::vector<int>& S,
                                  const Coloring& phi_h, int u);

// C_{G*S}(v) for v in S: the union of boundary_palette over N_G(v)\S.
// Coloring v outside this set preserves properness and two unique colors
// for every neighbor of v outside S.
std::vector<int> forbidden_base(const Graph& g, const std::vector<int>& S,
                                const Coloring& phi_h, int v);

// One "color w with a color not in ..." step of an extension recipe, kept
// for auditing: the recipes' counting arguments promise `bound` as a ceiling
// on |forbidden| at that point, and tests assert the observation.
struct ExtendStep {
    std::string role;
    int vertex;
    int forbidden_size;
    int bound;   // stated ceiling; 9 means "forced assignment, no bound"
    int chosen;
    bool forced; // true when the recipe dictates the exact color
    bool recolor_outside_s = false;
};

struct ExtendLog {
    std::vector<ExtendStep> steps;
};

// Extends a 2-PCF 9-coloring phi_h of plan.reduced (indexed by reduced ids)
// to all of g by executing the matched configuration's recipe: the vertices
// of S are colored in the recipe's stated order, each receiving the smallest
// palette color outside the recipe's forbidden set; symmetry steps normalize
// the match first; K3 and K7 recolor exactly the vertices their recipes
// recolor. The result is re-verified with is_h_pcf(g, ., 2) before being
// returned; failure throws ExtensionUnsound. A forbidden set covering all
// nine colors throws ScriptExhausted (the counting arguments cap every set
// at eight).
Coloring extend(const Graph& g, const ReductionPlan& plan, const Coloring& phi_h,
                ExtendLog* log = nullptr);

struct TraceStep {
    ConfigKind kind;
    int subcase = 0;
    std::vector<int> S;
    std::vector<std::pair<int, int>> added_edges;
    std::map<std::string, int> roles;
    std::vector<TraceStep> children;
};

struct SolveOptions {
    // When no configuration is found in a graph larger than the base case,
    // fall back to the exact oracle up to this many vertices.
    int oracle_fallback_bound = 16;
    long long oracle_budget = 100000000LL;
};

struct SolveResult {
    Coloring coloring;
    std::vector<TraceStep> trace; // forest: one root per top-level reduction
    int reductions = 0;
    bool used_fallback = false;

    std::vector<const TraceStep*> flat_trace() const;
};

// Produces a verified 2-PCF 9-coloring of a simple planar graph with
// maximum degree at most 4 (planarity is the caller's assertion). Graphs
// with at most nine vertices are colored pairwise-distinctly; anything
// larger is reduced configuration by configuration, recursing per connected
// component of each reduced graph. Throws NoConfigurationFound when no
// configuration exists, the graph exceeds the fallback bound, and therefore
// the input was presumably not planar.
SolveResult solve(const Graph& g, const SolveOptions& options = {});

} // namespace pcf9
