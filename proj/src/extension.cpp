#include "graft/extension.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

#include "graft/regular.hpp"

namespace graft {

ExtensionProblem::ExtensionProblem(Graph g_, int r_, int k_) : g(std::move(g_)), r(r_), k(k_) {
    if (r < 1 || k < 1) throw InvalidArgument("r and k must be at least 1");
    if ((static_cast<long long>(r) * k) % 2 != 0) throw ParityViolation(r, k);
}

Extension validate_extension(const Graph& g, const Graph& h, int r, int k) {
    if (r < 0) throw InvalidArgument("r must be non-negative");
    const int n = g.vertex_count();
    if (h.vertex_count() != n + r) throw WrongVertexCount(n + r, h.vertex_count());
    for (int v = 1; v <= n; ++v)
        if (h.degree(v) != g.degree(v)) throw DegreeMismatch(v, g.degree(v), h.degree(v));
    for (int j = 1; j <= r; ++j)
        if (h.degree(n + j) != k) throw DegreeMismatch(n + j, k, h.degree(n + j));

    Extension ext;
    ext.h = h;
    ext.base_n = n;
    for (const Edge& e : h.edges()) {
        if (e.u > n) continue;  // internal to the new vertices
        ext.e1.push_back(e);
        if (e.v > n) ext.cross_edges.push_back(e);
        if (!g.has_edge(e.u, e.v)) ext.added.push_back(e);
    }
    for (const Edge& e : g.edges())
        if (!h.has_edge(e.u, e.v)) ext.removed.push_back(e);
    return ext;
}

int edit_cost(const Graph& g, const Extension& ext) {
    const int n = g.vertex_count();
    int cost = 0;
    for (const Edge& e : g.edges())
        if (!ext.h.has_edge(e.u, e.v)) ++cost;
    for (const Edge& e : ext.h.edges())
        if (e.u <= n && !g.has_edge(e.u, e.v)) ++cost;
    return cost;
}

Extension trivial_extension(const ExtensionProblem& problem) {
    const int r = problem.r;
    const int k = problem.k;
    if (k > r - 1)
        throw InfeasibleTrivial("no k-regular graph on r vertices when k > r-1 (r=" +
                                std::to_string(r) + ", k=" + std::to_string(k) + ")");
    const int n = problem.g.vertex_count();

    std::vector<Edge> edges = problem.g.edges();
    if (k == 1) {
        // 1-regular graph on the new vertices: a perfect matching (r is even
        // because r*k is).
        for (int j = 1; j <= r; j += 2) edges.emplace_back(n + j, n + j + 1);
    } else {
        Graph f = generate({r, k, RegularMode::ExactlyRegular});
        for (const Edge& e : f.edges()) edges.emplace_back(n + e.u, n + e.v);
    }
    return validate_extension(problem.g, Graph(n + r, edges), r, k);
}

ConnectionPlan build_connection_plan(const DegreeBoundedSubgraph& w, int r, int k, int n) {
    if (r < 1 || k < r) throw InvalidArgument("need k >= r >= 1");
    if ((static_cast<long long>(r) * k) % 2 != 0) throw ParityViolation(r, k);
    const long long t = static_cast<long long>(r) * (k - r + 1) / 2;

    if (w.degree_cap != r)
        throw BadWitness("witness degree cap " + std::to_string(w.degree_cap) +
                         " does not match r=" + std::to_string(r));
    if (static_cast<long long>(w.edges.size()) != t)
        throw BadWitness("witness has " + std::to_string(w.edges.size()) + " edges, expected t=" +
                         std::to_string(t));

    std::vector<Edge> sorted = w.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw BadWitness("witness contains a duplicate edge");

    // Per-vertex incidence within the witness; also enforces the cap.
    std::vector<int> incidence(n + 1, 0);
    for (const Edge& e : w.edges) {
        if (e.u < 1 || e.v > n) throw BadWitness("witness edge endpoint outside 1..n");
        if (++incidence[e.u] > r || ++incidence[e.v] > r)
            throw BadWitness("witness vertex incident to more than r member edges");
    }

    ConnectionPlan plan;
    for (int v = 1; v <= n; ++v)
        for (int copy = 0; copy < incidence[v]; ++copy) plan.endpoint_slots.push_back(v);
    for (std::size_t j = 0; j < plan.endpoint_slots.size(); ++j)
        plan.new_vertex_for_slot.push_back(n + 1 + static_cast<int>(j % r));
    return plan;
}

Extension optimal_extension(const ExtensionProblem& problem, const DegreeBoundedSubgraph& w,
                            std::ostream* trace) {
    const Graph& g = problem.g;
    const int r = problem.r;
    const int k = problem.k;
    if (k < r) throw InvalidArgument("optimal construction needs k >= r");
    const int n = g.vertex_count();

    for (const Edge& e : w.edges)
        if (!g.has_edge(e.u, e.v)) throw BadWitness("witness edge not present in the base graph");
    ConnectionPlan plan = build_connection_plan(w, r, k, n);

    // Stage 1: drop the witness edges, add the clique on the new vertices.
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (std::find(w.edges.begin(), w.edges.end(), e) == w.edges.end()) edges.push_back(e);
    for (int a = 1; a <= r; ++a)
        for (int b = a + 1; b <= r; ++b) edges.emplace_back(n + a, n + b);
    if (trace) {
        *trace << "intermediate stage: " << edges.size() << " edges\n";
        for (const Edge& e : edges) *trace << "  " << e.u << " " << e.v << "\n";
    }

    // Stage 2: one cross edge per endpoint slot.
    for (std::size_t j = 0; j < plan.endpoint_slots.size(); ++j)
        edges.emplace_back(plan.endpoint_slots[j], plan.new_vertex_for_slot[j]);

    Extension ext = validate_extension(g, Graph(n + r, edges), r, k);
    assert(static_cast<long long>(ext.removed.size()) ==
           static_cast<long long>(r) * (k - r + 1) / 2);
    assert(ext.added.size() == 2 * ext.removed.size());
    return ext;
}

}  // namespace graft
