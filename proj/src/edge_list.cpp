#include "graft/edge_list.hpp"

#include <algorithm>
#include <sstream>

namespace graft {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

// Splits into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

int parse_int(const std::string& tok, int line_no) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw SyntaxError(line_no, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw SyntaxError(line_no, "expected an integer, got '" + tok + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto toks = tokens_of(line);

        if (n < 0) {
            if (toks.size() != 2 || toks[0] != "n")
                throw SyntaxError(line_no, "expected header 'n <N>'");
            n = parse_int(toks[1], line_no);
            if (n < 0) throw SyntaxError(line_no, "vertex count must be non-negative");
            continue;
        }

        if (toks.size() != 2) throw SyntaxError(line_no, "expected an edge '<u> <v>'");
        int u = parse_int(toks[0], line_no);
        int v = parse_int(toks[1], line_no);
        if (u == v) throw SelfLoop(line_no, "self-loop at vertex " + std::to_string(u));
        if (u < 1 || u > n || v < 1 || v > n)
            throw VertexOutOfRange(line_no, "edge (" + std::to_string(u) + "," +
                                                std::to_string(v) + ") outside 1.." +
                                                std::to_string(n));
        if (u > v) std::swap(u, v);
        if (std::find(seen.begin(), seen.end(), std::make_pair(u, v)) != seen.end())
            throw DuplicateEdge(line_no,
                                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") listed twice");
        seen.emplace_back(u, v);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw SyntaxError(line_no + 1, "missing header 'n <N>'");
    return Graph(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

}  // namespace graft
