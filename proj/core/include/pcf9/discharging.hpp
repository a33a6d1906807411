#pragma once

#include <string>
#include <vector>

#include "pcf9/embedding.hpp"
#include "pcf9/graph.hpp"
#include "pcf9/rational.hpp"

namespace pcf9 {

// A 3-vertex lying on some 4-cycle of the graph (cycle, not face) is bad;
// one on no 4-cycle is good.
enum class ThreeVertexClass { Good, Bad };

ThreeVertexClass classify_3vertex(const Graph& g, int v);

enum class ChargePhase { Initial, Final };

// Exact per-element charges: charge d(z)-4 on every vertex and face. The
// total is -8 on every connected plane graph and both discharging phases
// preserve it.
struct ChargeLedger {
    ChargePhase phase = ChargePhase::Initial;
    std::vector<Rational> vertex_charge;
    std::vector<Rational> face_charge;

    Rational total() const {
        Rational t;
        for (const auto& c : vertex_charge) t += c;
        for (const auto& c : face_charge) t += c;
        return t;
    }
};

enum class DischargeRule { R1, R2, R3 };

struct RuleFlow {
    int face;
    int vertex;
    Rational amount;
    DischargeRule rule;
};

struct ElementRef {
    bool is_face;
    int id;
};

struct LemmaViolation {
    int item; // 1..5
    std::vector<int> witness;
};

struct RecountViolation {
    char clause; // 'a'..'f'
    ElementRef element;
    Rational final_charge;
};

struct MultiIncidence {
    int face;
    int vertex;
    int count;
};

struct AuditReport {
    Rational total_initial;
    Rational total_final;
    std::vector<LemmaViolation> lemma_violations;
    std::vector<std::pair<ElementRef, Rational>> negative_elements;
    std::vector<RuleFlow> rule_flows;
    std::vector<RecountViolation> recount_violations;
    std::vector<MultiIncidence> multi_incidences;
};

// d(z)-4 on every vertex and face. Requires a connected graph with a planar
// embedding (Disconnected / NonPlanarEmbedding otherwise).
ChargeLedger initial_charges(const Graph& g, const Embedding& emb);

// The three discharging rules:
//   R1: every 5-face sends 1/3 to each incident good 3-vertex,
//   R2: every 5-face sends 1/2 to each incident bad 3-vertex,
//   R3: every 6+-face sends 1/2 to each incident 3-vertex.
// Incidence counts per occurrence on the boundary walk, which keeps the
// total exactly preserved even when a vertex repeats on a walk.
std::pair<ChargeLedger, std::vector<RuleFlow>> apply_rules(const Graph& g, const Embedding& emb,
                                                           const ChargeLedger& initial);

// Full audit: totals, all violations of the five structural lemma items,
// every element ending with negative charge, and the per-element recount
// clauses (a)-(f) that must hold whenever their local hypotheses do:
//   (a) good 3-vertex with all incident faces 5+       -> final >= 0
//   (b) bad 3-vertex on at least two 5+-faces          -> final >= 0
//   (c) 4-vertices and 4-faces                         -> final == 0
//   (d) 5-face with a bad 3-vertex, <=1 other 3-vertex -> final >= 0
//   (e) 5-face, no bad 3-vertex, <=3 3-vertices        -> final >= 0
//   (f) 6+-face with <= floor(3d/4) 3-vertices         -> final >= 0
AuditReport audit(const Graph& g, const Embedding& emb);

} // namespace pcf9
