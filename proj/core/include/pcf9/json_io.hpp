#pragma once

#include <optional>
#include <string>

#include "pcf9/coloring.hpp"
#include "pcf9/discharging.hpp"
#include "pcf9/embedding.hpp"
#include "pcf9/generator.hpp"
#include "pcf9/graph.hpp"
#include "pcf9/oracle.hpp"
#include "pcf9/pcf.hpp"
#include "pcf9/reduction.hpp"

// Serialization boundary. All emitters produce deterministic JSON with fixed
// key order and no floating point; charges stay exact as {"num","den"}.

namespace pcf9 {

struct GraphDocument {
    Graph graph;
    std::optional<Embedding> embedding;
};

// Accepts either the JSON document {"n":..,"edges":[[u,v],..],"rotations":..}
// or the plain-text form "n m" followed by m lines "u v" ('#' starts a
// comment). Throws BadInput with a one-line diagnostic.
GraphDocument parse_graph(const std::string& text);

std::string graph_to_json(const Graph& g, const Embedding* emb = nullptr,
                          const GenSpec* meta = nullptr);

Coloring parse_coloring(const std::string& text);
std::string coloring_to_json(const Coloring& phi);

std::string pcf_report_to_json(const PcfReport& report);

std::string trace_to_json(const std::vector<TraceStep>& trace);

std::string audit_to_json(const AuditReport& report);
// Human-readable charge table.
std::string audit_to_table(const AuditReport& report);

std::string oracle_result_to_json(const OracleResult& result, int k);

// DOT export: a plain undirected graph, and the reduction forest of a solve.
std::string graph_to_dot(const Graph& g);
std::string trace_to_dot(const std::vector<TraceStep>& trace);

} // namespace pcf9
