// Acceptance suite: end-to-end checks of the toolkit's guarantees, one
// criterion per run, each with a wall-clock budget. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "graft/cli.hpp"
#include "graft/edge_list.hpp"
#include "graft/edit_number.hpp"
#include "graft/regular.hpp"
#include "graft/subgraph.hpp"
#include "test_support.hpp"

using namespace graft;
using namespace graft::testsupport;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& message) {
        if (!condition && ok) {
            ok = false;
            detail << message;
        }
    }
};

std::string scratch_file(const std::string& name, const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "graft-acceptance";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path.string();
}

bool output_has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string current;
    while (std::getline(in, current))
        if (current == line) return true;
    return false;
}

// --- 1: the single-edge worked example -----------------------------------

void criterion_worked_example(Check& c) {
    const Graph g(2, {{1, 2}});

    auto a = edit_number(g, 1, 2);
    c.require(a.finite() && a.finite()->value == 3, "edit number (1,2) of a single edge is not 3");
    c.require(a.witness && a.witness->h == Graph(3, {{1, 3}, {2, 3}}),
              "witness for (1,2) is not {(1,3),(2,3)}");

    auto b = edit_number(g, 2, 1);
    c.require(b.finite() && b.finite()->value == 0, "edit number (2,1) of a single edge is not 0");
    c.require(b.witness && b.witness->cross_edges.empty(), "witness for (2,1) has cross edges");

    // the same answers through the command-line surface
    std::string input = scratch_file("single.edges", "n 2\n1 2\n");
    std::ostringstream out1, err1;
    int code1 = run({"edit-number", "-i", input, "--r", "1", "--k", "2", "--porcelain"}, out1,
                    err1);
    c.require(code1 == 0 && output_has_line(out1.str(), "value=3") &&
                  output_has_line(out1.str(), "witness_edges=1-3,2-3"),
              "CLI does not report value 3 with witness {(1,3),(2,3)}");
    std::ostringstream out2, err2;
    int code2 = run({"edit-number", "-i", input, "--r", "2", "--k", "1", "--porcelain"}, out2,
                    err2);
    c.require(code2 == 0 && output_has_line(out2.str(), "value=0"),
              "CLI does not report value 0 for (2,1)");
}

// --- 2: regular generator sweep -------------------------------------------

void criterion_regular_sweep(Check& c) {
    for (int k : {2, 4, 6}) {
        for (int n = k + 1; n <= 40; ++n) {
            Graph g = generate({n, k, RegularMode::ExactlyRegular});
            c.require(g.vertex_count() == n, "wrong vertex count");
            for (int v = 1; v <= n; ++v)
                c.require(g.degree(v) == k, "degree defect in even sweep at n=" + std::to_string(n));
            c.require(is_connected(g), "disconnected output in even sweep");
        }
    }
    for (int k : {3, 5}) {
        for (int n = k + 1; n <= 40; ++n) {
            if (n % 2 != 0) continue;
            Graph g = generate({n, k, RegularMode::ExactlyRegular});
            for (int v = 1; v <= n; ++v)
                c.require(g.degree(v) == k, "degree defect in odd sweep at n=" + std::to_string(n));
            c.require(is_connected(g), "disconnected output in odd sweep");
        }
        for (int n = k + 2; n <= 41; n += 2) {
            Graph g = generate({n, k, RegularMode::NearlyRegular});
            c.require(g.degree(n) == k - 1, "vertex n does not have degree k-1");
            for (int v = 1; v < n; ++v)
                c.require(g.degree(v) == k,
                          "degree defect in nearly sweep at n=" + std::to_string(n));
            c.require(is_connected(g), "disconnected output in nearly sweep");
        }
    }
}

// --- 3: oracle-vs-theory census -------------------------------------------

void criterion_census(Check& c) {
    const std::vector<std::pair<int, int>> rk = {{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}, {1, 4}};
    long long instances = 0;
    for (int n = 2; n <= 4; ++n) {
        std::vector<Edge> pairs;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) edges.push_back(pairs[i]);
            Graph g(n, edges);
            for (auto [r, k] : rk) {
                if (n + r > kOracleVertexLimit) continue;
                ++instances;
                auto oracle = exact_oracle(g, r, k);
                std::string tag = "n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                                  " r=" + std::to_string(r) + " k=" + std::to_string(k);
                if (k <= r - 1) {
                    c.require(!oracle.infinite() && *oracle.value == 0,
                              "trivial case is not 0 at " + tag);
                    continue;
                }
                const int t = r * (k - r + 1) / 2;
                auto search = find_rt_subgraph(g, r, t);
                c.require(search.exact, "census search not exact at " + tag);
                if (search.found()) {
                    c.require(!oracle.infinite() && *oracle.value == 3 * t,
                              "witness exists but oracle != 3t at " + tag);
                } else {
                    c.require(oracle.infinite() || *oracle.value > 3 * t,
                              "no witness but oracle <= 3t at " + tag);
                }
            }
        }
    }
    c.require(instances > 400, "census unexpectedly small");
}

// --- 4: constructive cost identities --------------------------------------

void criterion_cost_identities(Check& c) {
    const std::vector<std::pair<int, int>> rk = {{1, 2}, {1, 4}, {2, 2}, {2, 3}, {3, 4}};
    std::mt19937 rng(1009);
    int graphs = 0;
    int constructed = 0;
    while (graphs < 220) {
        int n = 4 + static_cast<int>(rng() % 27);  // up to 30
        double density = 0.05 + 0.9 * (graphs % 10) / 10.0;
        Graph g = random_graph(rng, n, density);
        ++graphs;
        for (auto [r, k] : rk) {
            const int t = r * (k - r + 1) / 2;
            auto search = find_rt_subgraph(g, r, t);
            if (!search.found()) continue;
            ++constructed;
            Extension ext = optimal_extension(ExtensionProblem(g, r, k), *search.witness);
            c.require(static_cast<int>(ext.removed.size()) == t, "removed != t");
            c.require(static_cast<int>(ext.added.size()) == 2 * t, "added != 2t");
            c.require(edit_cost(g, ext) == 3 * t, "cost != 3t");
            c.require(ext.h.vertex_count() == g.vertex_count() + r, "wrong vertex count");
            for (int v = 1; v <= g.vertex_count(); ++v)
                c.require(ext.h.degree(v) == g.degree(v), "base degree changed");
            for (int j = 1; j <= r; ++j)
                c.require(ext.h.degree(g.vertex_count() + j) == k, "new vertex degree != k");
        }
    }
    c.require(constructed >= 200, "fewer than 200 constructions exercised");
}

// --- 5: corollary soundness ------------------------------------------------

void criterion_corollary_soundness(Check& c) {
    const std::vector<std::pair<int, int>> rk = {{1, 2}, {1, 4}, {2, 2}, {2, 3}, {3, 4}};
    std::mt19937 rng(1013);
    int graphs = 0;
    int fired = 0;
    while (graphs < 260) {
        int n = 2 + static_cast<int>(rng() % 11);  // up to 12
        Graph g = random_graph_m(rng, n, static_cast<int>(rng() % 25));
        if (g.edge_count() > kSubgraphExhaustiveEdgeLimit) continue;
        ++graphs;
        for (auto [r, k] : rk) {
            auto which = check_corollary(g, r, k);
            if (!which) continue;
            ++fired;
            const int t = r * (k - r + 1) / 2;
            auto search = find_rt_subgraph(g, r, t);
            std::string tag = " (case " + std::to_string(*which) + ", r=" + std::to_string(r) +
                              ", k=" + std::to_string(k) + ")";
            c.require(search.exact && search.found(),
                      "corollary fired without an exact witness" + tag);
            if (search.found())
                c.require(is_degree_bounded_subgraph(g, *search.witness),
                          "witness fails validation" + tag);
            auto res = edit_number(g, r, k);
            c.require(res.finite() && res.finite()->value == 3 * t,
                      "corollary fired but edit number != 3t" + tag);
        }
    }
    c.require(fired >= 200, "fewer than 200 corollary firings observed");
}

// --- 6: parity and infeasibility guards ------------------------------------

void criterion_guards(Check& c) {
    auto expect_parity = [&](std::function<void()> f, const std::string& what) {
        try {
            f();
            c.require(false, what + " accepted an odd r*k");
        } catch (const ParityViolation&) {
        }
    };
    const Graph g(2, {{1, 2}});
    expect_parity([&] { (void)lower_bound(3, 1); }, "lower_bound");
    expect_parity([&] { (void)edit_number(g, 1, 3); }, "edit_number");
    expect_parity([&] { (void)exact_oracle(g, 3, 3); }, "exact_oracle");
    expect_parity([&] { (void)check_corollary(g, 1, 1); }, "check_corollary");
    expect_parity([&] { ExtensionProblem p(g, 5, 1); }, "ExtensionProblem");

    std::string input = scratch_file("guard.edges", "n 2\n1 2\n");
    for (const char* sub : {"edit-number", "check-optimal", "oracle", "extend"}) {
        std::ostringstream out, err;
        int code = run({sub, "-i", input, "--r", "3", "--k", "1"}, out, err);
        c.require(code == 1 && err.str().find("parity") != std::string::npos,
                  std::string(sub) + " did not reject an odd r*k request");
    }

    c.require(exact_oracle(Graph(2), 1, 2).infinite(),
              "oracle on the empty 2-vertex graph with (1,2) is not infinite");
}

// --- 7: determinism and round-trip -----------------------------------------

void criterion_determinism(Check& c) {
    std::mt19937 rng(1021);
    for (int it = 0; it < 1000; ++it) {
        int n = 1 + static_cast<int>(rng() % 40);
        Graph g = random_graph(rng, n, 0.02 + 0.03 * (it % 25));
        std::string doc = serialize_edge_list(g);
        c.require(parse_edge_list(doc) == g, "round-trip mismatch");
    }

    std::vector<std::vector<std::string>> invocations = {
        {"gen-regular", "--n", "24", "--k", "5"},
        {"gen-regular", "--n", "31", "--k", "4"},
    };
    for (const auto& args : invocations) {
        std::ostringstream out1, err1, out2, err2;
        int c1 = run(args, out1, err1);
        int c2 = run(args, out2, err2);
        c.require(c1 == 0 && c2 == 0, "generator invocation failed");
        c.require(out1.str() == out2.str() && err1.str() == err2.str(),
                  "repeated invocation output differs");
    }
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<void(Check&)> body;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "single-edge worked example", 1.0, criterion_worked_example},
        {2, "regular generator sweep", 5.0, criterion_regular_sweep},
        {3, "oracle-vs-theory census", 300.0, criterion_census},
        {4, "constructive cost identities", 10.0, criterion_cost_identities},
        {5, "corollary soundness", 60.0, criterion_corollary_soundness},
        {6, "parity and infeasibility guards", 10.0, criterion_guards},
        {7, "determinism and round-trip", 30.0, criterion_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        criterion.body(check);
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        if (elapsed > criterion.budget_seconds) {
            check.ok = false;
            check.detail << " exceeded budget of " << criterion.budget_seconds << "s";
        }
        std::ostringstream line;
        line << (check.ok ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
             << criterion.name << " [" << elapsed << "s]";
        if (!check.ok) line << " -- " << check.detail.str();
        std::cout << line.str() << "\n";
        if (!check.ok) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failures;
}
