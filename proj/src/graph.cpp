#include "graft/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace graft {

namespace {

std::uint64_t edge_key(int u, int v) {
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InvalidArgument("vertex count must be non-negative");
    adj_.resize(n + 1);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (e.u < 1 || e.v > n_)
            throw InvalidGraph("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               ") out of range 1.." + std::to_string(n_));
        if (!keys_.insert(edge_key(e.u, e.v)).second)
            throw InvalidGraph("duplicate edge (" + std::to_string(e.u) + "," +
                               std::to_string(e.v) + ")");
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        edges_.push_back(e);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    std::sort(edges_.begin(), edges_.end());
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return keys_.count(edge_key(u, v)) > 0;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : deg_(std::move(degrees)) {
    long long s = 0;
    for (int d : deg_) {
        if (d < 0) throw InvalidArgument("negative degree");
        s += d;
    }
    if (s % 2 != 0) throw InvalidArgument("degree sum must be even");
}

int DegreeSequence::of(int v) const {
    if (v < 1 || v > vertex_count()) throw InvalidArgument("vertex out of range");
    return deg_[v - 1];
}

long long DegreeSequence::sum() const {
    long long s = 0;
    for (int d : deg_) s += d;
    return s;
}

Path::Path(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidArgument("path must contain at least one vertex");
    std::vector<int> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("path vertices must be distinct");
}

std::vector<Edge> Path::edges() const {
    std::vector<Edge> result;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        result.emplace_back(vertices_[i], vertices_[i + 1]);
    return result;
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::vector<int> endpoints;
    for (const Edge& e : edges_) {
        endpoints.push_back(e.u);
        endpoints.push_back(e.v);
    }
    std::sort(endpoints.begin(), endpoints.end());
    if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end())
        throw InvalidArgument("matching edges share an endpoint");
    std::sort(edges_.begin(), edges_.end());
}

DegreeSequence degree_sequence(const Graph& g) {
    std::vector<int> deg(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) deg[v - 1] = g.degree(v);
    return DegreeSequence(std::move(deg));
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n + 1, 0);
    std::queue<int> queue;
    queue.push(1);
    seen[1] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
        }
    }
    return reached == n;
}

bool is_path_of(const Path& p, const Graph& g) {
    const auto& vs = p.vertices();
    for (int v : vs)
        if (v < 1 || v > g.vertex_count()) return false;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[i + 1])) return false;
    return true;
}

Path find_min_degree_path(const Graph& g) {
    int start = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.degree(v) > 0) {
            start = v;
            break;
        }
    }
    if (start == 0) throw EmptyGraph("graph has no edges");

    std::vector<char> on_path(g.vertex_count() + 1, 0);
    std::deque<int> path{start};
    on_path[start] = 1;

    auto next_off_path = [&](int v) {
        for (int w : g.neighbors(v))
            if (!on_path[w]) return w;
        return 0;
    };

    // Extend at the back until stuck, then at the front. Once the back is
    // stuck its neighbours all lie on the path, and the path only grows, so
    // it stays stuck. When both ends are stuck each endpoint sees all its
    // neighbours on the path, forcing at least delta+1 vertices.
    while (int w = next_off_path(path.back())) {
        path.push_back(w);
        on_path[w] = 1;
    }
    while (int w = next_off_path(path.front())) {
        path.push_front(w);
        on_path[w] = 1;
    }

    std::vector<int> vs(path.begin(), path.end());
    if (vs.back() < vs.front()) std::reverse(vs.begin(), vs.end());
    return Path(std::move(vs));
}

std::vector<Edge> alternate_disjoint_edges(const Path& p, int count) {
    if (count < 1) throw InvalidArgument("count must be at least 1");
    if (p.edge_count() < 2 * count - 1)
        throw PathTooShort("path has " + std::to_string(p.edge_count()) + " edges, need " +
                           std::to_string(2 * count - 1));
    const auto& vs = p.vertices();
    std::vector<Edge> result;
    for (int i = 0; i < count; ++i) result.emplace_back(vs[2 * i], vs[2 * i + 1]);
    return result;
}

namespace {

bool shares_vertex(const std::vector<Edge>& es, const Edge& e) {
    for (const Edge& f : es)
        if (f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v) return true;
    return false;
}

// Exhaustive backtracking over edge-disjoint matchings. Matchings are chosen
// in increasing order of their smallest edge index (a valid symmetry break,
// since edge-disjoint matchings have distinct smallest edges); edges within
// a matching in increasing index order.
struct DisjointMatchingSearch {
    const std::vector<Edge>& edges;
    int count;
    int size;
    std::vector<char> used{};
    std::vector<std::vector<Edge>> chosen{};

    bool solve(int mi, int after) {
        if (mi == count) return true;
        const int m = static_cast<int>(edges.size());
        for (int i = after + 1; i < m; ++i) {
            if (used[i]) continue;
            used[i] = 1;
            chosen[mi].push_back(edges[i]);
            if (extend(mi, i, i + 1)) return true;
            chosen[mi].pop_back();
            used[i] = 0;
        }
        return false;
    }

    bool extend(int mi, int first, int from) {
        if (static_cast<int>(chosen[mi].size()) == size) return solve(mi + 1, first);
        const int m = static_cast<int>(edges.size());
        const int needed = size - static_cast<int>(chosen[mi].size());
        for (int i = from; i + needed <= m; ++i) {
            if (used[i] || shares_vertex(chosen[mi], edges[i])) continue;
            used[i] = 1;
            chosen[mi].push_back(edges[i]);
            if (extend(mi, first, i + 1)) return true;
            chosen[mi].pop_back();
            used[i] = 0;
        }
        return false;
    }
};

}  // namespace

MatchingSearch find_disjoint_matchings(const Graph& g, int count, int size) {
    if (count < 1 || size < 1) throw InvalidArgument("count and size must be at least 1");
    MatchingSearch result;
    result.exact = g.edge_count() <= kMatchingExhaustiveEdgeLimit;

    if (result.exact) {
        DisjointMatchingSearch search{g.edges(), count, size};
        search.used.assign(g.edges().size(), 0);
        search.chosen.assign(count, {});
        if (search.solve(0, -1)) {
            result.found = true;
            for (auto& es : search.chosen) result.matchings.emplace_back(std::move(es));
        }
        return result;
    }

    // Greedy above the exhaustive limit: fill each matching with the
    // lowest-index unused admissible edge. A miss here is not a proof.
    std::vector<char> used(g.edges().size(), 0);
    std::vector<Matching> greedy;
    for (int mi = 0; mi < count; ++mi) {
        std::vector<Edge> current;
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            if (used[i]) continue;
            if (shares_vertex(current, g.edges()[i])) continue;
            used[i] = 1;
            current.push_back(g.edges()[i]);
            if (static_cast<int>(current.size()) == size) break;
        }
        if (static_cast<int>(current.size()) < size) return result;
        greedy.emplace_back(std::move(current));
    }
    result.found = true;
    result.matchings = std::move(greedy);
    return result;
}

}  // namespace graft
