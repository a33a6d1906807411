#include "pcf9_cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "pcf9/errors.hpp"
#include "pcf9/json_io.hpp"
#include "pcf9/pcf.hpp"

namespace pcf9::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::BadInput, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::BadInput, "cannot write " + out_path);
    file << text << "\n";
}

int exit_code_for(const Error& e) {
    if (is_internal_invariant_failure(e.kind())) return 3;
    return 2;
}

struct Args {
    std::string graph_path, coloring_path, out_path, trace_path, dot_path;
    int h = 2;
    int k = 0;
    bool min_mode = false;
    long long budget = 100000000LL;
    int jobs = 1;
    bool table = false;
    std::uint64_t seed = 1;
    int n = 0;
    std::string mode = "tree-plus-edges";
    std::string corpus_name;
};

int cmd_solve(const Args& a, std::ostream& out) {
    auto doc = parse_graph(slurp(a.graph_path));
    ensure_valid(doc.graph, /*require_max4=*/true);
    SolveResult result = solve(doc.graph);
    // solve() verified the coloring already; exit 0 states exactly that.
    emit(coloring_to_json(result.coloring), a.out_path, out);
    if (!a.trace_path.empty()) emit(trace_to_json(result.trace), a.trace_path, out);
    if (!a.dot_path.empty()) emit(trace_to_dot(result.trace), a.dot_path, out);
    return 0;
}

int cmd_verify(const Args& a, std::ostream& out) {
    auto doc = parse_graph(slurp(a.graph_path));
    ensure_valid(doc.graph, /*require_max4=*/false);
    Coloring phi = parse_coloring(slurp(a.coloring_path));
    if (phi.size() != doc.graph.n)
        throw Error(ErrorKind::BadInput, "coloring covers " + std::to_string(phi.size()) +
                                             " vertices, graph has " + std::to_string(doc.graph.n));
    PcfReport report = is_h_pcf(doc.graph, phi, a.h);
    emit(pcf_report_to_json(report), a.out_path, out);
    return report.valid ? 0 : 1;
}

int cmd_oracle(const Args& a, std::ostream& out) {
    auto doc = parse_graph(slurp(a.graph_path));
    ensure_valid(doc.graph, /*require_max4=*/false);
    OracleOptions options;
    options.node_budget = a.budget;
    options.jobs = a.jobs;
    if (a.min_mode) {
        int k = min_k(doc.graph, a.h, options);
        OracleResult result = exists_h_pcf_k(doc.graph, a.h, k, options);
        emit(oracle_result_to_json(result, k), a.out_path, out);
        return 0;
    }
    OracleResult result = exists_h_pcf_k(doc.graph, a.h, a.k, options);
    emit(oracle_result_to_json(result, a.k), a.out_path, out);
    return result.feasible() ? 0 : 1;
}

int cmd_discharge(const Args& a, std::ostream& out) {
    auto doc = parse_graph(slurp(a.graph_path));
    if (!doc.embedding)
        throw Error(ErrorKind::BadInput, "discharge needs a graph file with rotations");
    AuditReport report = audit(doc.graph, *doc.embedding);
    emit(a.table ? audit_to_table(report) : audit_to_json(report), a.out_path, out);
    return 0;
}

int cmd_gen(const Args& a, std::ostream& out) {
    Graph graph;
    std::optional<Embedding> emb;
    std::optional<GenSpec> meta;
    if (!a.corpus_name.empty()) {
        CorpusEntry entry = corpus(a.corpus_name);
        graph = std::move(entry.graph);
        emb = std::move(entry.embedding);
    } else {
        GenSpec spec;
        spec.seed = a.seed;
        spec.n = a.n;
        if (a.mode == "tree-plus-edges")
            spec.mode = GenMode::TreePlusEdges;
        else if (a.mode == "grid-perturb")
            spec.mode = GenMode::GridPerturb;
        else
            throw Error(ErrorKind::BadInput, "unknown mode " + a.mode);
        GeneratedGraph gen = generate(spec);
        graph = std::move(gen.graph);
        emb = std::move(gen.embedding);
        meta = spec;
    }
    emit(graph_to_json(graph, emb ? &*emb : nullptr, meta ? &*meta : nullptr), a.out_path, out);
    if (!a.dot_path.empty()) emit(graph_to_dot(graph), a.dot_path, out);
    return 0;
}

int cmd_square(const Args& a, std::ostream& out) {
    auto doc = parse_graph(slurp(a.graph_path));
    ensure_valid(doc.graph, /*require_max4=*/false);
    emit(graph_to_json(square(doc.graph)), a.out_path, out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"proper conflict-free coloring toolkit for planar max-degree-4 graphs"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help"); // --h is a real option below
    auto subcommand = [&](const char* name, const char* description) {
        auto* sub = app.add_subcommand(name, description);
        sub->set_help_flag("--help", "print help");
        return sub;
    };
    Args a;

    auto* solve_cmd = subcommand("solve", "2-PCF 9-coloring via reductions");
    solve_cmd->add_option("graph", a.graph_path)->required();
    solve_cmd->add_option("--out", a.out_path);
    solve_cmd->add_option("--trace", a.trace_path);
    solve_cmd->add_option("--dot", a.dot_path);

    auto* verify_cmd = subcommand("verify", "check an h-PCF coloring");
    verify_cmd->add_option("graph", a.graph_path)->required();
    verify_cmd->add_option("coloring", a.coloring_path)->required();
    verify_cmd->add_option("--h", a.h)->required();
    verify_cmd->add_option("--out", a.out_path);

    auto* oracle_cmd = subcommand("oracle", "exact brute-force search");
    oracle_cmd->add_option("graph", a.graph_path)->required();
    oracle_cmd->add_option("--h", a.h)->required();
    auto* k_opt = oracle_cmd->add_option("--k", a.k);
    auto* min_opt = oracle_cmd->add_flag("--min", a.min_mode);
    k_opt->excludes(min_opt);
    oracle_cmd->add_option("--budget", a.budget);
    oracle_cmd->add_option("--jobs", a.jobs);
    oracle_cmd->add_option("--out", a.out_path);

    auto* discharge_cmd = subcommand("discharge", "charge audit of a plane graph");
    discharge_cmd->add_option("graph", a.graph_path)->required();
    discharge_cmd->add_flag("--table", a.table);
    discharge_cmd->add_option("--out", a.out_path);

    auto* gen_cmd = subcommand("gen", "corpus and random planar graphs");
    gen_cmd->add_option("--seed", a.seed);
    gen_cmd->add_option("--n", a.n);
    gen_cmd->add_option("--mode", a.mode);
    gen_cmd->add_option("--corpus", a.corpus_name);
    gen_cmd->add_option("--out", a.out_path);
    gen_cmd->add_option("--dot", a.dot_path);

    auto* square_cmd = subcommand("square", "distance-2 closure of a graph");
    square_cmd->add_option("graph", a.graph_path)->required();
    square_cmd->add_option("--out", a.out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(a, out);
        if (verify_cmd->parsed()) return cmd_verify(a, out);
        if (oracle_cmd->parsed()) {
            if (!a.min_mode && a.k <= 0)
                throw Error(ErrorKind::BadInput, "oracle needs --k K or --min");
            return cmd_oracle(a, out);
        }
        if (discharge_cmd->parsed()) return cmd_discharge(a, out);
        if (gen_cmd->parsed()) {
            if (a.corpus_name.empty() && a.n <= 0)
                throw Error(ErrorKind::BadInput, "gen needs --corpus NAME or --seed S --n N");
            return cmd_gen(a, out);
        }
        if (square_cmd->parsed()) return cmd_square(a, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace pcf9::cli
