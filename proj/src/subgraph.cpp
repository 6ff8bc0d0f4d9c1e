#include "graft/subgraph.hpp"

#include <algorithm>

namespace graft {

bool is_degree_bounded_subgraph(const Graph& host, const DegreeBoundedSubgraph& w) {
    std::vector<Edge> sorted = w.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    std::vector<int> incident(host.vertex_count() + 1, 0);
    for (const Edge& e : sorted) {
        if (!host.has_edge(e.u, e.v)) return false;
        if (++incident[e.u] > w.degree_cap) return false;
        if (++incident[e.v] > w.degree_cap) return false;
    }
    return true;
}

namespace {

// Include/exclude branch-and-bound over the lexicographic edge order.
// Prunes on the per-vertex cap, on remaining edge count, and on the total
// residual degree capacity (each extra edge consumes two capacity units).
struct CapSearch {
    const std::vector<Edge>& edges;
    int cap;
    std::vector<int> incident{};
    long long residual = 0;  // sum over vertices of (cap - incident)
    int chosen = 0;
    int best = 0;
    std::vector<char> in_current{};
    std::vector<char> in_best{};

    void dfs(std::size_t idx) {
        const int m = static_cast<int>(edges.size());
        long long bound = chosen + std::min<long long>(m - idx, residual / 2);
        if (bound <= best) return;
        if (idx == edges.size()) return;

        const Edge& e = edges[idx];
        if (incident[e.u] < cap && incident[e.v] < cap) {
            ++incident[e.u];
            ++incident[e.v];
            residual -= 2;
            ++chosen;
            in_current[idx] = 1;
            if (chosen > best) {
                best = chosen;
                in_best = in_current;
            }
            dfs(idx + 1);
            in_current[idx] = 0;
            --chosen;
            residual += 2;
            --incident[e.u];
            --incident[e.v];
        }
        dfs(idx + 1);
    }
};

}  // namespace

MaxEdgesResult max_degree_bounded_edges(const Graph& g, int p) {
    if (p < 1) throw InvalidArgument("degree cap must be at least 1");
    MaxEdgesResult result;
    result.exact = g.edge_count() <= kSubgraphExhaustiveEdgeLimit;
    const auto& edges = g.edges();

    if (result.exact) {
        CapSearch search{edges, p};
        search.incident.assign(g.vertex_count() + 1, 0);
        search.residual = static_cast<long long>(g.vertex_count()) * p;
        search.in_current.assign(edges.size(), 0);
        search.in_best.assign(edges.size(), 0);
        search.dfs(0);
        result.count = search.best;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (search.in_best[i]) result.witness.push_back(edges[i]);
        return result;
    }

    // Greedy lower bound: insert edges in lexicographic order while the cap
    // allows.
    std::vector<int> incident(g.vertex_count() + 1, 0);
    for (const Edge& e : edges) {
        if (incident[e.u] < p && incident[e.v] < p) {
            ++incident[e.u];
            ++incident[e.v];
            result.witness.push_back(e);
        }
    }
    result.count = static_cast<int>(result.witness.size());
    return result;
}

RtSubgraphResult find_rt_subgraph(const Graph& g, int r, int t) {
    if (r < 1 || t < 1) throw InvalidArgument("r and t must be at least 1");
    MaxEdgesResult max = max_degree_bounded_edges(g, r);
    RtSubgraphResult result;
    result.exact = max.exact;
    if (max.count < t) return result;
    // Any t edges of the witness still respect the cap; keep the
    // lexicographically smallest ones.
    DegreeBoundedSubgraph w;
    w.degree_cap = r;
    w.edges.assign(max.witness.begin(), max.witness.begin() + t);
    result.witness = std::move(w);
    return result;
}

}  // namespace graft
