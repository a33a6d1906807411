#include "pcf9/discharging.hpp"

#include <algorithm>
#include <set>

#include "pcf9/errors.hpp"

namespace pcf9 {

ThreeVertexClass classify_3vertex(const Graph& g, int v) {
    if (g.degree(v) != 3)
        throw Error(ErrorKind::NotA3Vertex,
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    // 4-cycle v-a-w-b: two neighbors of v with a second common neighbor
    const auto& nbrs = g.adj[v];
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            for (int w : g.adj[nbrs[i]])
                if (w != v && g.has_edge(w, nbrs[j])) return ThreeVertexClass::Bad;
    return ThreeVertexClass::Good;
}

ChargeLedger initial_charges(const Graph& g, const Embedding& emb) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "charge audit needs one component");
    auto faces = faces_of(g, emb); // throws on rotation or Euler failure
    ChargeLedger ledger;
    ledger.phase = ChargePhase::Initial;
    for (int v = 0; v < g.n; ++v) ledger.vertex_charge.push_back(Rational(g.degree(v) - 4));
    for (const auto& f : faces) ledger.face_charge.push_back(Rational(f.length() - 4));
    return ledger;
}

std::pair<ChargeLedger, std::vector<RuleFlow>> apply_rules(const Graph& g, const Embedding& emb,
                                                           const ChargeLedger& initial) {
    auto faces = faces_of(g, emb);
    ChargeLedger final_ledger = initial;
    final_ledger.phase = ChargePhase::Final;
    std::vector<RuleFlow> flows;

    std::vector<int> klass(g.n, -1); // lazily classified 3-vertices
    auto is_bad = [&](int v) {
        if (klass[v] < 0) klass[v] = classify_3vertex(g, v) == ThreeVertexClass::Bad ? 1 : 0;
        return klass[v] == 1;
    };

    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        int len = faces[fi].length();
        if (len < 5) continue;
        for (const auto& [tail, head] : faces[fi].boundary) {
            (void)head;
            if (g.degree(tail) != 3) continue;
            Rational amount;
            DischargeRule rule;
            if (len == 5) {
                if (is_bad(tail)) {
                    amount = Rational(1, 2);
                    rule = DischargeRule::R2;
                } else {
                    amount = Rational(1, 3);
                    rule = DischargeRule::R1;
                }
            } else {
                amount = Rational(1, 2);
                rule = DischargeRule::R3;
            }
            final_ledger.face_charge[fi] -= amount;
            final_ledger.vertex_charge[tail] += amount;
            flows.push_back({static_cast<int>(fi), tail, amount, rule});
        }
    }
    return {final_ledger, flows};
}

AuditReport audit(const Graph& g, const Embedding& emb) {
    ChargeLedger initial = initial_charges(g, emb);
    auto [final_ledger, flows] = apply_rules(g, emb, initial);
    auto faces = faces_of(g, emb);

    AuditReport report;
    report.total_initial = initial.total();
    report.total_final = final_ledger.total();
    report.rule_flows = std::move(flows);

    std::vector<int> klass(g.n, -1);
    auto is_bad = [&](int v) {
        if (klass[v] < 0) klass[v] = classify_3vertex(g, v) == ThreeVertexClass::Bad ? 1 : 0;
        return klass[v] == 1;
    };

    // distinct vertices per face and distinct faces per vertex
    std::vector<std::vector<int>> face_vertices(faces.size());
    std::vector<std::vector<int>> vertex_faces(g.n);
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        std::set<int> seen;
        for (const auto& [tail, head] : faces[fi].boundary) {
            (void)head;
            if (seen.insert(tail).second) {
                face_vertices[fi].push_back(tail);
                vertex_faces[tail].push_back(static_cast<int>(fi));
            }
        }
        std::sort(face_vertices[fi].begin(), face_vertices[fi].end());
        for (int v : face_vertices[fi]) {
            int mult = faces[fi].vertex_multiplicity(v);
            if (mult >= 2) report.multi_incidences.push_back({static_cast<int>(fi), v, mult});
        }
    }

    // lemma items
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) <= 2) report.lemma_violations.push_back({1, {v}});
    for (int x = 0; x < g.n; ++x)
        for (int y : g.adj[x]) {
            if (y <= x) continue;
            for (int z : g.adj[y])
                if (z > y && g.has_edge(x, z)) report.lemma_violations.push_back({2, {x, y, z}});
        }
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 3) continue;
        std::vector<int> quad_faces;
        for (int fi : vertex_faces[v])
            if (faces[fi].length() == 4) quad_faces.push_back(fi);
        if (quad_faces.size() >= 2)
            report.lemma_violations.push_back({3, {v, quad_faces[0], quad_faces[1]}});
    }
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        std::vector<int> threes;
        for (int v : face_vertices[fi])
            if (g.degree(v) == 3) threes.push_back(v);
        int len = faces[fi].length();
        if (len == 5 && threes.size() == 3) {
            for (int v : threes)
                if (is_bad(v)) {
                    report.lemma_violations.push_back({4, {static_cast<int>(fi), v}});
                    break;
                }
        }
        if (len >= 5 && static_cast<int>(threes.size()) > 3 * len / 4)
            report.lemma_violations.push_back(
                {5, {static_cast<int>(fi), static_cast<int>(threes.size())}});
    }

    for (int v = 0; v < g.n; ++v)
        if (final_ledger.vertex_charge[v] < Rational(0))
            report.negative_elements.push_back({{false, v}, final_ledger.vertex_charge[v]});
    for (std::size_t fi = 0; fi < faces.size(); ++fi)
        if (final_ledger.face_charge[fi] < Rational(0))
            report.negative_elements.push_back(
                {{true, static_cast<int>(fi)}, final_ledger.face_charge[fi]});

    // per-element recount clauses; each fires only when its hypothesis holds
    auto flag = [&](char clause, bool face, int id, Rational charge) {
        report.recount_violations.push_back({clause, {face, id}, charge});
    };
    for (int v = 0; v < g.n; ++v) {
        Rational charge = final_ledger.vertex_charge[v];
        if (g.degree(v) == 3) {
            int big_faces = 0;
            bool all_big = true;
            for (int fi : vertex_faces[v]) {
                if (faces[fi].length() >= 5)
                    ++big_faces;
                else
                    all_big = false;
            }
            if (!is_bad(v) && all_big && charge < Rational(0)) flag('a', false, v, charge);
            if (is_bad(v) && big_faces >= 2 && charge < Rational(0)) flag('b', false, v, charge);
        }
        if (g.degree(v) == 4 && charge != Rational(0)) flag('c', false, v, charge);
    }
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        Rational charge = final_ledger.face_charge[fi];
        int len = faces[fi].length();
        int threes = 0, bad = 0;
        for (int v : face_vertices[fi])
            if (g.degree(v) == 3) {
                ++threes;
                if (is_bad(v)) ++bad;
            }
        int id = static_cast<int>(fi);
        if (len == 4 && charge != Rational(0)) flag('c', true, id, charge);
        if (len == 5 && bad >= 1 && threes <= 2 && charge < Rational(0)) flag('d', true, id, charge);
        if (len == 5 && bad == 0 && threes <= 3 && charge < Rational(0)) flag('e', true, id, charge);
        if (len >= 6 && threes <= 3 * len / 4 && charge < Rational(0)) flag('f', true, id, charge);
    }
    return report;
}

} // namespace pcf9
