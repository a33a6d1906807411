#include "pcf9/json_io.hpp"

#include <sstream>

#include "json.hpp"

#include "pcf9/errors.hpp"

// nlohmann::ordered_json keeps insertion order, which together with the
// all-integer policy makes every emitter byte-stable across runs.

namespace pcf9 {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r) { return Json{{"num", r.num}, {"den", r.den}}; }

GraphDocument parse_graph_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::BadInput, std::string("graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw Error(ErrorKind::BadInput, "graph JSON needs fields \"n\" and \"edges\"");
    int n = doc["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw Error(ErrorKind::BadInput, "each edge must be a pair [u,v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    GraphDocument out;
    out.graph = Graph::from_edges(n, edges);
    if (doc.contains("rotations") && !doc["rotations"].is_null()) {
        Embedding emb;
        for (const auto& rot : doc["rotations"]) emb.rotations.push_back(rot.get<std::vector<int>>());
        if (static_cast<int>(emb.rotations.size()) != n)
            throw Error(ErrorKind::BadInput, "rotations must cover every vertex");
        out.embedding = std::move(emb);
    }
    return out;
}

GraphDocument parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_data_line = [&](std::string& out_line) {
        while (std::getline(in, line)) {
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            out_line = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_data_line(header)) throw Error(ErrorKind::BadInput, "empty graph file");
    std::istringstream hs(header);
    int n = 0, m = 0;
    if (!(hs >> n >> m)) throw Error(ErrorKind::BadInput, "expected header line \"n m\"");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        std::string edge_line;
        if (!next_data_line(edge_line))
            throw Error(ErrorKind::BadInput, "expected " + std::to_string(m) + " edge lines");
        std::istringstream es(edge_line);
        int u = 0, v = 0;
        if (!(es >> u >> v)) throw Error(ErrorKind::BadInput, "bad edge line: " + edge_line);
        edges.emplace_back(u, v);
    }
    return {Graph::from_edges(n, edges), std::nullopt};
}

} // namespace

GraphDocument parse_graph(const std::string& text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw Error(ErrorKind::BadInput, "empty graph input");
    return text[pos] == '{' ? parse_graph_json(text) : parse_graph_text(text);
}

std::string graph_to_json(const Graph& g, const Embedding* emb, const GenSpec* meta) {
    Json doc;
    doc["n"] = g.n;
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    doc["edges"] = std::move(edges);
    if (emb) {
        Json rotations = Json::array();
        for (const auto& rot : emb->rotations) rotations.push_back(rot);
        doc["rotations"] = std::move(rotations);
    }
    if (meta) {
        doc["meta"] = Json{{"seed", meta->seed},
                           {"n", meta->n},
                           {"mode", to_string(meta->mode)},
                           {"rng", "mt19937_64"}};
    }
    return doc.dump(2);
}

Coloring parse_coloring(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorKind::BadInput, std::string("coloring JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("colors"))
        throw Error(ErrorKind::BadInput, "coloring JSON needs fields \"k\" and \"colors\"");
    Coloring phi;
    phi.k = doc["k"].get<int>();
    for (const auto& c : doc["colors"]) phi.colors.push_back(c.is_null() ? 0 : c.get<int>());
    return phi;
}

std::string coloring_to_json(const Coloring& phi) {
    Json doc;
    doc["k"] = phi.k;
    doc["colors"] = phi.colors;
    return doc.dump(2);
}

std::string pcf_report_to_json(const PcfReport& report) {
    Json doc;
    doc["valid"] = report.valid;
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back(Json{
            {"vertex", v.vertex},
            {"kind", v.kind == ViolationKind::ImproperEdge ? "ImproperEdge" : "TooFewUnique"},
            {"unique", v.unique},
            {"required", v.required}});
    doc["violations"] = std::move(violations);
    return doc.dump(2);
}

namespace {

void flatten_trace(const std::vector<TraceStep>& steps, Json& out) {
    for (const auto& step : steps) {
        Json entry;
        entry["kind"] = to_string(step.kind);
        entry["S"] = step.S;
        Json added = Json::array();
        for (const auto& [u, v] : step.added_edges) added.push_back(Json::array({u, v}));
        entry["added_edges"] = std::move(added);
        Json roles;
        for (const auto& [name, vertex] : step.roles) roles[name] = vertex;
        entry["roles"] = std::move(roles);
        out.push_back(std::move(entry));
        flatten_trace(step.children, out);
    }
}

} // namespace

std::string trace_to_json(const std::vector<TraceStep>& trace) {
    Json doc = Json::array();
    flatten_trace(trace, doc);
    return doc.dump(2);
}

std::string audit_to_json(const AuditReport& report) {
    Json doc;
    doc["total_initial"] = rational_json(report.total_initial);
    doc["total_final"] = rational_json(report.total_final);
    Json lemma = Json::array();
    for (const auto& v : report.lemma_violations)
        lemma.push_back(Json{{"item", v.item}, {"witness", v.witness}});
    doc["lemma_violations"] = std::move(lemma);
    Json negatives = Json::array();
    for (const auto& [el, charge] : report.negative_elements)
        negatives.push_back(Json{{"element", el.is_face ? "face" : "vertex"},
                                 {"id", el.id},
                                 {"charge", rational_json(charge)}});
    doc["negative_elements"] = std::move(negatives);
    Json flows = Json::array();
    for (const auto& f : report.rule_flows) {
        const char* rule = f.rule == DischargeRule::R1 ? "R1"
                           : f.rule == DischargeRule::R2 ? "R2"
                                                         : "R3";
        flows.push_back(Json{{"face", f.face},
                             {"vertex", f.vertex},
                             {"rule", rule},
                             {"amount", rational_json(f.amount)}});
    }
    doc["rule_flows"] = std::move(flows);
    Json recount = Json::array();
    for (const auto& v : report.recount_violations)
        recount.push_back(Json{{"clause", std::string(1, v.clause)},
                               {"element", v.element.is_face ? "face" : "vertex"},
                               {"id", v.element.id},
                               {"charge", rational_json(v.final_charge)}});
    doc["recount_violations"] = std::move(recount);
    Json multi = Json::array();
    for (const auto& m : report.multi_incidences)
        multi.push_back(Json{{"face", m.face}, {"vertex", m.vertex}, {"count", m.count}});
    doc["multi_incidences"] = std::move(multi);
    return doc.dump(2);
}

std::string audit_to_table(const AuditReport& report) {
    std::ostringstream out;
    out << "total initial charge: " << report.total_initial << "\n";
    out << "total final charge:   " << report.total_final << "\n";
    out << "lemma violations:     " << report.lemma_violations.size() << "\n";
    for (const auto& v : report.lemma_violations) {
        out << "  item " << v.item << " witness";
        for (int w : v.witness) out << ' ' << w;
        out << "\n";
    }
    out << "negative elements:    " << report.negative_elements.size() << "\n";
    for (const auto& [el, charge] : report.negative_elements)
        out << "  " << (el.is_face ? "face " : "vertex ") << el.id << " -> " << charge << "\n";
    out << "rule flows:           " << report.rule_flows.size() << "\n";
    return out.str();
}

std::string oracle_result_to_json(const OracleResult& result, int k) {
    Json doc;
    doc["feasible"] = result.feasible();
    doc["k"] = k;
    if (result.witness)
        doc["coloring"] = result.witness->colors;
    else
        doc["coloring"] = nullptr;
    doc["stats"] = Json{{"nodes", result.stats.nodes}, {"backtracks", result.stats.backtracks}};
    return doc.dump(2);
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n; ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

void dot_steps(const std::vector<TraceStep>& steps, std::ostringstream& out, int& counter,
               int parent) {
    for (const auto& step : steps) {
        int id = counter++;
        out << "  n" << id << " [label=\"" << to_string(step.kind) << " S={";
        for (std::size_t i = 0; i < step.S.size(); ++i)
            out << (i ? "," : "") << step.S[i];
        out << "}\"];\n";
        if (parent >= 0) out << "  n" << parent << " -> n" << id << ";\n";
        dot_steps(step.children, out, counter, id);
    }
}

} // namespace

std::string trace_to_dot(const std::vector<TraceStep>& trace) {
    std::ostringstream out;
    out << "digraph reductions {\n  node [shape=box];\n";
    int counter = 0;
    dot_steps(trace, out, counter, -1);
    out << "}\n";
    return out.str();
}

} // namespace pcf9
