#include "graft/edit_number.hpp"

#include <algorithm>
#include <cassert>

#include "graft/subgraph.hpp"

namespace graft {

namespace {

void check_parity(int r, int k) {
    if (r < 1 || k < 1) throw InvalidArgument("r and k must be at least 1");
    if ((static_cast<long long>(r) * k) % 2 != 0) throw ParityViolation(r, k);
}

int t_of(int r, int k) { return static_cast<int>(static_cast<long long>(r) * (k - r + 1) / 2); }

}  // namespace

int lower_bound(int r, int k) {
    check_parity(r, k);
    if (k <= r - 1) return 0;
    return 3 * t_of(r, k);
}

int upper_bound_generic(const Graph& g, int r, int k) {
    check_parity(r, k);
    return 2 * g.edge_count() + r * k / 2;
}

namespace {

// Depth-first enumeration over the candidate edges of {1..n+r} in
// lexicographic order. Prunes on degree overflow, on endpoints whose
// remaining incident candidates cannot reach their target, and on partial
// cost once an incumbent exists. Cost counts only decisions about edges
// with a base endpoint: including a non-base edge or excluding a base edge
// costs one each.
struct OracleSearch {
    const Graph& g;
    int total;                     // n + r
    std::vector<Edge> candidates{};  // all pairs, lex order
    std::vector<int> target{};       // required degree per vertex
    std::vector<int> deg{};          // degree so far
    std::vector<int> rem{};          // candidate edges at index >= current per vertex
    std::vector<char> chosen{};
    int cost = 0;
    int best_cost = -1;  // -1: nothing found yet
    std::vector<char> best_chosen{};

    void run() {
        rem.assign(total + 1, 0);
        for (const Edge& e : candidates) {
            ++rem[e.u];
            ++rem[e.v];
        }
        deg.assign(total + 1, 0);
        chosen.assign(candidates.size(), 0);
        // Feasibility must hold at the root: the include branch preserves
        // deg+rem and the exclude branch re-checks its endpoints, so by
        // induction every leaf then meets its targets exactly.
        for (int v = 1; v <= total; ++v)
            if (rem[v] < target[v]) return;
        dfs(0);
    }

    bool feasible(int v) const { return deg[v] + rem[v] >= target[v]; }

    void dfs(std::size_t idx) {
        if (best_cost >= 0 && cost >= best_cost) return;
        if (idx == candidates.size()) {
            for (int v = 1; v <= total; ++v) assert(deg[v] == target[v]);
            best_cost = cost;
            best_chosen = chosen;
            return;
        }
        const Edge& e = candidates[idx];
        const int n = g.vertex_count();
        --rem[e.u];
        --rem[e.v];

        // Include.
        if (deg[e.u] < target[e.u] && deg[e.v] < target[e.v]) {
            int delta = (e.u <= n && !g.has_edge(e.u, e.v)) ? 1 : 0;
            ++deg[e.u];
            ++deg[e.v];
            cost += delta;
            chosen[idx] = 1;
            dfs(idx + 1);
            chosen[idx] = 0;
            cost -= delta;
            --deg[e.u];
            --deg[e.v];
        }

        // Exclude.
        if (feasible(e.u) && feasible(e.v)) {
            int delta = (e.u <= n && g.has_edge(e.u, e.v)) ? 1 : 0;
            cost += delta;
            dfs(idx + 1);
            cost -= delta;
        }

        ++rem[e.u];
        ++rem[e.v];
    }
};

}  // namespace

OracleResult exact_oracle(const Graph& g, int r, int k, int vertex_limit) {
    check_parity(r, k);
    const int n = g.vertex_count();
    const int total = n + r;
    if (total > vertex_limit)
        throw TooLarge("oracle handles at most " + std::to_string(vertex_limit) +
                       " vertices, got " + std::to_string(total));

    OracleSearch search{g, total};
    for (int u = 1; u <= total; ++u)
        for (int v = u + 1; v <= total; ++v) search.candidates.emplace_back(u, v);
    search.target.assign(total + 1, 0);
    for (int v = 1; v <= n; ++v) search.target[v] = g.degree(v);
    for (int j = 1; j <= r; ++j) search.target[n + j] = k;
    search.run();

    OracleResult result;
    if (search.best_cost < 0) return result;  // not extendable
    result.value = search.best_cost;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < search.candidates.size(); ++i)
        if (search.best_chosen[i]) edges.push_back(search.candidates[i]);
    result.best = Graph(total, edges);
    return result;
}

EditNumberResult edit_number(const Graph& g, int r, int k, bool allow_oracle, int oracle_limit) {
    check_parity(r, k);
    EditNumberResult result;

    if (k <= r - 1) {
        result.value = EditNumberResult::Finite{0};
        result.witness = trivial_extension(ExtensionProblem(g, r, k));
        result.method = EditNumberResult::Method::Theorem1Case1;
        return result;
    }

    const int t = t_of(r, k);
    RtSubgraphResult search = find_rt_subgraph(g, r, t);
    if (search.found()) {
        result.value = EditNumberResult::Finite{3 * t};
        result.witness = optimal_extension(ExtensionProblem(g, r, k), *search.witness);
        result.method = EditNumberResult::Method::Theorem1Case2Equality;
        return result;
    }

    if (search.exact && allow_oracle && g.vertex_count() + r <= oracle_limit) {
        OracleResult oracle = exact_oracle(g, r, k, oracle_limit);
        result.method = EditNumberResult::Method::Oracle;
        if (oracle.infinite()) {
            result.value = EditNumberResult::Infinite{};
        } else {
            result.value = EditNumberResult::Finite{*oracle.value};
            result.witness = validate_extension(g, *oracle.best, r, k);
        }
        return result;
    }

    // No witness and no oracle: an exact miss proves the value is strictly
    // above 3t; a heuristic miss leaves 3t possible. No finite upper bound
    // is known without deciding extendability.
    EditNumberResult::Interval interval;
    interval.lo = search.exact ? 3 * t + 1 : 3 * t;
    interval.hi = std::nullopt;
    result.value = interval;
    result.method = EditNumberResult::Method::BoundOnly;
    return result;
}

std::optional<int> check_corollary(const Graph& g, int r, int k) {
    check_parity(r, k);
    if (k < r) return std::nullopt;  // covered by the zero-cost trivial case

    // (2): k = r even, any k/2 edges qualify.
    if (k == r && k % 2 == 0 && g.edge_count() >= k / 2) return 2;

    // (5): minimum degree k certifies (1,k) for even k and (2,k) for odd k.
    if (g.vertex_count() >= 1) {
        bool all_at_least_k = true;
        for (int v = 1; v <= g.vertex_count() && all_at_least_k; ++v)
            if (g.degree(v) < k) all_at_least_k = false;
        if (all_at_least_k && ((k % 2 == 0 && r == 1) || (k % 2 == 1 && r == 2))) return 5;
    }

    // (1): r = 1, k even, a k/2-matching.
    if (r == 1 && k % 2 == 0 && find_disjoint_matchings(g, 1, k / 2).found) return 1;

    // (3): k-r odd, r disjoint ((k-r+1)/2)-matchings.
    if (k - r >= 1 && (k - r) % 2 == 1 && find_disjoint_matchings(g, r, (k - r + 1) / 2).found)
        return 3;

    // (4): k-r even, r disjoint matchings of size (k-r)/2 + 1.
    if (k - r >= 1 && (k - r) % 2 == 0 && find_disjoint_matchings(g, r, (k - r) / 2 + 1).found)
        return 4;

    return std::nullopt;
}

}  // namespace graft
