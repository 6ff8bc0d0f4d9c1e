#include "graft/regular.hpp"

#include <cassert>
#include <set>

namespace graft {

namespace {

void require_connected_regular(const Graph& g, int k) {
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) != k)
            throw InputNotRegular("vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(g.degree(v)) + ", expected " + std::to_string(k));
    if (!is_connected(g)) throw InputNotConnected("input graph is not connected");
}

// First k edges of a minimum-degree path. On a connected k-regular input
// the greedy path has at least k edges (a stuck endpoint sees all its k
// neighbours on the path).
std::vector<int> path_prefix(const Graph& g, int k) {
    Path p = find_min_degree_path(g);
    if (p.edge_count() < k) throw Error("internal: path shorter than the minimum degree");
    const auto& vs = p.vertices();
    return std::vector<int>(vs.begin(), vs.begin() + k + 1);
}

Graph rebuild(int n, std::set<Edge> edges) {
    Graph result(n, std::vector<Edge>(edges.begin(), edges.end()));
    assert(is_connected(result));
    return result;
}

}  // namespace

Graph complete_graph(int m) {
    if (m < 1) throw InvalidArgument("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) edges.emplace_back(u, v);
    return Graph(m, edges);
}

Graph grow_even(const Graph& g, int k) {
    if (k < 2 || k % 2 != 0) throw InvalidSpec("grow_even requires even k >= 2");
    require_connected_regular(g, k);
    const int n = g.vertex_count();

    auto removed = alternate_disjoint_edges(Path(path_prefix(g, k)), k / 2);
    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    for (const Edge& e : removed) {
        edges.erase(e);
        edges.insert(Edge(n + 1, e.u));
        edges.insert(Edge(n + 1, e.v));
    }
    return rebuild(n + 1, std::move(edges));
}

Graph grow_odd_pair(const Graph& g, int k) {
    if (k < 3 || k % 2 == 0) throw InvalidSpec("grow_odd_pair requires odd k >= 3");
    require_connected_regular(g, k);
    const int n = g.vertex_count();

    auto q = path_prefix(g, k);  // q[0..k], edges (q[j-1], q[j])
    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    for (int j = 1; j <= k - 1; ++j) {
        edges.erase(Edge(q[j - 1], q[j]));
        int anchor = (j % 2 == 1) ? n + 1 : n + 2;
        edges.insert(Edge(anchor, q[j - 1]));
        edges.insert(Edge(anchor, q[j]));
    }
    edges.insert(Edge(n + 1, n + 2));
    return rebuild(n + 2, std::move(edges));
}

Graph attach_nearly(const Graph& g, int k) {
    if (k < 3 || k % 2 == 0) throw InvalidSpec("attach_nearly requires odd k >= 3");
    require_connected_regular(g, k);
    const int n = g.vertex_count() + 1;

    auto removed = alternate_disjoint_edges(Path(path_prefix(g, k)), (k - 1) / 2);
    std::set<Edge> edges(g.edges().begin(), g.edges().end());
    for (const Edge& e : removed) {
        edges.erase(e);
        edges.insert(Edge(n, e.u));
        edges.insert(Edge(n, e.v));
    }
    return rebuild(n, std::move(edges));
}

Graph generate(const RegularSpec& spec) {
    if (spec.k < 2) throw InvalidSpec("degree k must be at least 2");
    if (spec.n < spec.k + 1) throw InvalidSpec("need n >= k+1 vertices");
    if (spec.mode == RegularMode::ExactlyRegular) {
        if (spec.n % 2 != 0 && spec.k % 2 != 0)
            throw InvalidSpec("k-regular graph on n vertices needs n*k even");
    } else {
        if (spec.k % 2 == 0) throw InvalidSpec("nearly regular mode requires odd k");
        if (spec.n % 2 == 0) throw InvalidSpec("nearly regular mode requires odd n");
    }

    if (spec.mode == RegularMode::NearlyRegular) {
        Graph even = generate({spec.n - 1, spec.k, RegularMode::ExactlyRegular});
        return attach_nearly(even, spec.k);
    }

    Graph g = complete_graph(spec.k + 1);
    if (spec.k % 2 == 0) {
        while (g.vertex_count() < spec.n) g = grow_even(g, spec.k);
    } else {
        while (g.vertex_count() < spec.n) g = grow_odd_pair(g, spec.k);
    }
    return g;
}

}  // namespace graft
