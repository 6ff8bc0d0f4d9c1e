#include "graft/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "graft/edge_list.hpp"
#include "graft/edit_number.hpp"
#include "graft/regular.hpp"

namespace graft {

namespace {

// Usage / I/O problems (exit 2), as opposed to domain errors (exit 1).
struct UsageFailure {
    std::string message;
};

struct Record {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
};

void print_record(std::ostream& out, const Record& rec, bool porcelain) {
    if (porcelain) {
        for (const auto& [key, value] : rec.fields) out << key << "=" << value << "\n";
        return;
    }
    std::size_t width = 0;
    for (const auto& [key, value] : rec.fields) width = std::max(width, key.size());
    for (const auto& [key, value] : rec.fields)
        out << key << std::string(width - key.size() + 2, ' ') << value << "\n";
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageFailure{"cannot open input file '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageFailure{"cannot open output file '" + path + "'"};
    out << content;
    if (!out) throw UsageFailure{"failed writing '" + path + "'"};
}

std::string edges_to_string(const std::vector<Edge>& edges) {
    std::string s;
    for (const Edge& e : edges) {
        if (!s.empty()) s += ",";
        s += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return s;
}

std::string method_name(EditNumberResult::Method method) {
    switch (method) {
        case EditNumberResult::Method::Theorem1Case1: return "theorem-1-case-1";
        case EditNumberResult::Method::Theorem1Case2Equality: return "theorem-1-case-2-equality";
        case EditNumberResult::Method::Oracle: return "oracle";
        case EditNumberResult::Method::BoundOnly: return "bound-only";
    }
    return "unknown";
}

// Default, overridden by GRAFT_ORACLE_LIMIT, overridden by --oracle-limit.
int resolve_oracle_limit(int flag_value) {
    if (flag_value > 0) return flag_value;
    const char* env = std::getenv("GRAFT_ORACLE_LIMIT");
    if (env == nullptr) return kOracleVertexLimit;
    std::string text(env);
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != text.size() || value < kOracleVertexLimitMin || value > kOracleVertexLimitMax)
        throw UsageFailure{"GRAFT_ORACLE_LIMIT must be an integer in [" +
                           std::to_string(kOracleVertexLimitMin) + "," +
                           std::to_string(kOracleVertexLimitMax) + "], got '" + text + "'"};
    return value;
}

struct GenRegularArgs {
    int n = 0;
    int k = 0;
    bool nearly = false;
    std::string output;
    bool porcelain = false;
};

int run_gen_regular(const GenRegularArgs& a, std::ostream& out) {
    RegularSpec spec{a.n, a.k, a.nearly ? RegularMode::NearlyRegular : RegularMode::ExactlyRegular};
    Graph g = generate(spec);
    std::string doc = serialize_edge_list(g);
    if (a.output.empty()) {
        out << doc;
        return 0;
    }
    write_file(a.output, doc);
    Record rec;
    rec.add("n", g.vertex_count());
    rec.add("k", a.k);
    rec.add("nearly", a.nearly ? "true" : "false");
    rec.add("edges", g.edge_count());
    rec.add("file", a.output);
    print_record(out, rec, a.porcelain);
    return 0;
}

struct ExtendArgs {
    std::string input;
    int r = 0;
    int k = 0;
    std::string output;
    bool trace = false;
    bool porcelain = false;
};

int run_extend(const ExtendArgs& a, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(a.input);
    ExtensionProblem problem(g, a.r, a.k);

    Extension ext;
    Record rec;
    rec.add("r", a.r);
    rec.add("k", a.k);
    if (a.k <= a.r - 1) {
        ext = trivial_extension(problem);
        rec.add("mode", "trivial");
    } else {
        const int t = static_cast<int>(static_cast<long long>(a.r) * (a.k - a.r + 1) / 2);
        RtSubgraphResult search = find_rt_subgraph(g, a.r, t);
        if (!search.found()) {
            if (search.exact)
                throw Error("no (r,t)-subgraph with t=" + std::to_string(t) +
                            " exists: the edit number exceeds " + std::to_string(3 * t));
            throw Error("no (r,t)-subgraph with t=" + std::to_string(t) +
                        " found by heuristic search (graph above the exact limit)");
        }
        ext = optimal_extension(problem, *search.witness, a.trace ? &err : nullptr);
        rec.add("mode", "optimal");
        rec.add("t", t);
        rec.add("exact_search", search.exact ? "true" : "false");
    }

    rec.add("cost", edit_cost(g, ext));
    rec.add("removed", static_cast<long long>(ext.removed.size()));
    rec.add("added", static_cast<long long>(ext.added.size()));
    rec.add("cross", static_cast<long long>(ext.cross_edges.size()));

    std::string doc = serialize_edge_list(ext.h);
    if (a.output.empty()) {
        out << doc;
        return 0;
    }
    write_file(a.output, doc);
    rec.add("file", a.output);
    print_record(out, rec, a.porcelain);
    return 0;
}

struct EditNumberArgs {
    std::string input;
    int r = 0;
    int k = 0;
    bool oracle = false;
    int oracle_limit = 0;
    bool porcelain = false;
};

int run_edit_number(const EditNumberArgs& a, std::ostream& out) {
    Graph g = load_graph(a.input);
    int limit = resolve_oracle_limit(a.oracle_limit);
    EditNumberResult result = edit_number(g, a.r, a.k, a.oracle, limit);

    Record rec;
    rec.add("r", a.r);
    rec.add("k", a.k);
    if (a.k >= a.r)
        rec.add("t", static_cast<long long>(a.r) * (a.k - a.r + 1) / 2);
    if (const auto* finite = result.finite()) {
        rec.add("value", finite->value);
    } else if (result.infinite()) {
        rec.add("value", "infinite");
    } else {
        const auto* interval = result.interval();
        rec.add("value", "unknown");
        rec.add("lo", interval->lo);
        rec.add("hi", interval->hi ? std::to_string(*interval->hi) : "infinite");
    }
    rec.add("method", method_name(result.method));
    if (result.witness) rec.add("witness_edges", edges_to_string(result.witness->h.edges()));
    print_record(out, rec, a.porcelain);
    return 0;
}

struct CheckOptimalArgs {
    std::string input;
    int r = 0;
    int k = 0;
    bool porcelain = false;
};

int run_check_optimal(const CheckOptimalArgs& a, std::ostream& out) {
    Graph g = load_graph(a.input);

    Record rec;
    rec.add("r", a.r);
    rec.add("k", a.k);
    std::optional<int> corollary = check_corollary(g, a.r, a.k);
    if (a.k <= a.r - 1) {
        // Zero edits: the trivial extension already matches the lower bound.
        rec.add("trivial", "true");
        rec.add("value", 0);
        rec.add("optimal", "yes");
        print_record(out, rec, a.porcelain);
        return 0;
    }

    const int t = static_cast<int>(static_cast<long long>(a.r) * (a.k - a.r + 1) / 2);
    rec.add("t", t);
    rec.add("corollary_case", corollary ? std::to_string(*corollary) : "none");
    RtSubgraphResult search = find_rt_subgraph(g, a.r, t);
    rec.add("rt_subgraph", search.found() ? "found" : "not-found");
    rec.add("exact", search.exact ? "true" : "false");
    rec.add("optimal", search.found() ? "yes" : (search.exact ? "no" : "unknown"));
    if (search.found()) rec.add("witness_edges", edges_to_string(search.witness->edges));
    print_record(out, rec, a.porcelain);
    return 0;
}

struct VerifyArgs {
    std::string graph_file;
    std::string extension_file;
    int r = 0;
    int k = 0;
    bool porcelain = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
    Graph g = load_graph(a.graph_file);
    Graph h = load_graph(a.extension_file);
    Extension ext = validate_extension(g, h, a.r, a.k);

    Record rec;
    rec.add("valid", "true");
    rec.add("cost", edit_cost(g, ext));
    rec.add("removed", static_cast<long long>(ext.removed.size()));
    rec.add("added", static_cast<long long>(ext.added.size()));
    rec.add("cross", static_cast<long long>(ext.cross_edges.size()));
    print_record(out, rec, a.porcelain);
    return 0;
}

struct OracleArgs {
    std::string input;
    int r = 0;
    int k = 0;
    int oracle_limit = 0;
    bool porcelain = false;
};

int run_oracle(const OracleArgs& a, std::ostream& out) {
    Graph g = load_graph(a.input);
    int limit = resolve_oracle_limit(a.oracle_limit);
    OracleResult result = exact_oracle(g, a.r, a.k, limit);

    Record rec;
    rec.add("r", a.r);
    rec.add("k", a.k);
    if (result.infinite()) {
        rec.add("value", "infinite");
    } else {
        rec.add("value", *result.value);
        rec.add("witness_edges", edges_to_string(result.best->edges()));
    }
    print_record(out, rec, a.porcelain);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"degree-preserving graph extensions, edit numbers and regular graphs"};
    app.name("graft");
    app.require_subcommand(1);

    GenRegularArgs gen_args;
    auto* gen = app.add_subcommand("gen-regular", "construct a connected (nearly) k-regular graph");
    gen->add_option("--n", gen_args.n, "vertex count")->required();
    gen->add_option("--k", gen_args.k, "target degree")->required();
    gen->add_flag("--nearly", gen_args.nearly, "one vertex of degree k-1 (odd n, odd k)");
    gen->add_option("-o,--output", gen_args.output, "write the graph here instead of stdout");
    gen->add_flag("--porcelain", gen_args.porcelain, "machine-readable output");

    ExtendArgs extend_args;
    auto* extend = app.add_subcommand("extend", "build a degree-preserving (r,k)-extension");
    extend->add_option("-i,--input", extend_args.input, "edge-list file")->required();
    extend->add_option("--r", extend_args.r, "new vertex count")->required()
        ->check(CLI::PositiveNumber);
    extend->add_option("--k", extend_args.k, "degree of each new vertex")->required()
        ->check(CLI::PositiveNumber);
    extend->add_option("-o,--output", extend_args.output, "write the extension here");
    extend->add_flag("--trace", extend_args.trace, "dump the intermediate stage to stderr");
    extend->add_flag("--porcelain", extend_args.porcelain, "machine-readable output");

    EditNumberArgs en_args;
    auto* en = app.add_subcommand("edit-number", "compute or bound the (r,k)-edit number");
    en->add_option("-i,--input", en_args.input, "edge-list file")->required();
    en->add_option("--r", en_args.r, "new vertex count")->required()->check(CLI::PositiveNumber);
    en->add_option("--k", en_args.k, "degree of each new vertex")->required()
        ->check(CLI::PositiveNumber);
    en->add_flag("--oracle", en_args.oracle, "allow exhaustive enumeration when undecided");
    en->add_option("--oracle-limit", en_args.oracle_limit, "max n+r for enumeration")
        ->check(CLI::Range(kOracleVertexLimitMin, kOracleVertexLimitMax));
    en->add_flag("--porcelain", en_args.porcelain, "machine-readable output");

    CheckOptimalArgs co_args;
    auto* co = app.add_subcommand("check-optimal",
                                  "sufficient conditions and witness search for cost 3t");
    co->add_option("-i,--input", co_args.input, "edge-list file")->required();
    co->add_option("--r", co_args.r, "new vertex count")->required()->check(CLI::PositiveNumber);
    co->add_option("--k", co_args.k, "degree of each new vertex")->required()
        ->check(CLI::PositiveNumber);
    co->add_flag("--porcelain", co_args.porcelain, "machine-readable output");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify-extension", "validate an extension and report cost");
    verify->add_option("-g,--graph", verify_args.graph_file, "base graph file")->required();
    verify->add_option("-x,--extension", verify_args.extension_file, "candidate extension file")
        ->required();
    verify->add_option("--r", verify_args.r, "new vertex count")->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--k", verify_args.k, "degree of each new vertex")->required()
        ->check(CLI::PositiveNumber);
    verify->add_flag("--porcelain", verify_args.porcelain, "machine-readable output");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "exhaustive edit-number evaluation");
    oracle->add_option("-i,--input", oracle_args.input, "edge-list file")->required();
    oracle->add_option("--r", oracle_args.r, "new vertex count")->required()
        ->check(CLI::PositiveNumber);
    oracle->add_option("--k", oracle_args.k, "degree of each new vertex")->required()
        ->check(CLI::PositiveNumber);
    oracle->add_option("--oracle-limit", oracle_args.oracle_limit, "max n+r for enumeration")
        ->check(CLI::Range(kOracleVertexLimitMin, kOracleVertexLimitMax));
    oracle->add_flag("--porcelain", oracle_args.porcelain, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen_regular(gen_args, out);
        if (extend->parsed()) return run_extend(extend_args, out, err);
        if (en->parsed()) return run_edit_number(en_args, out);
        if (co->parsed()) return run_check_optimal(co_args, out);
        if (verify->parsed()) return run_verify(verify_args, out);
        if (oracle->parsed()) return run_oracle(oracle_args, out);
    } catch (const UsageFailure& f) {
        err << "error: " << f.message << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace graft
