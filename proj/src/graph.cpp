#include "cbsep/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "cbsep/errors.hpp"

namespace cbsep {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (n > 31) throw std::invalid_argument("graph too large for this library (n <= 31)");
    adj_.assign(n_, 0u);
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
    }
}

Graph Graph::complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return (adj_[u] >> v) & 1u;
}

int Graph::degree(int u) const { return std::popcount(adj_[u]); }

Graph Graph::complement() const {
    std::vector<Edge> edges;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (!has_edge(i, j)) edges.emplace_back(i, j);
    return Graph(n_, std::move(edges));
}

bool Graph::connected() const {
    return connected_components(*this).size() == 1;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<char> seen(g.n(), 0);
    std::vector<VertexSet> comps;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v = 0; v < g.n(); ++v)
                if (g.has_edge(u, v) && !seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // BFS seeds run in ascending order, so components are already sorted by
    // their smallest member.
    return comps;
}

std::vector<VertexSet> complement_components(const Graph& g) {
    return connected_components(g.complement());
}

bool satisfies_triangle_binary(const Graph& g) {
    return !triangle_violation(g).has_value();
}

std::optional<std::array<int, 3>> triangle_violation(const Graph& g) {
    const int n = g.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const int zik = g.has_edge(i, k) ? 1 : 0;
                const int zij = g.has_edge(i, j) ? 1 : 0;
                const int zjk = g.has_edge(j, k) ? 1 : 0;
                // Report the violated pair first, then the witness vertex:
                // z(i,k) > z(i,j) + z(j,k).
                if (zik > zij + zjk) return std::array<int, 3>{i, k, j};
            }
        }
    return std::nullopt;
}

std::optional<std::pair<VertexSet, VertexSet>> is_complete_bipartite(const Graph& g) {
    const int n = g.n();
    if (g.edge_count() == 0) {
        VertexSet all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return std::make_pair(all, VertexSet{});
    }
    // A spanning complete bipartite graph with two nonempty sides is
    // connected, so a 2-coloring from vertex 0 must reach everything.
    std::vector<int> color(n, -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            if (color[v] == -1) {
                color[v] = 1 - color[u];
                q.push(v);
                ++reached;
            } else if (color[v] == color[u]) {
                return std::nullopt;  // odd cycle
            }
        }
    }
    if (reached < n) return std::nullopt;
    VertexSet s1, s2;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? s1 : s2).push_back(v);
    // 2-colorable means every edge crosses; completeness then reduces to the
    // edge count matching |S1|*|S2|.
    if (g.edge_count() != static_cast<int>(s1.size() * s2.size())) return std::nullopt;
    return std::make_pair(s1, s2);
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    std::vector<int> index(g.n(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

namespace {

// Strict token-level line parse: exactly `count` integers, nothing else.
std::vector<long> parse_ints(const std::string& line, int count, int lineno) {
    std::istringstream ss(line);
    std::vector<long> out;
    long x;
    while (ss >> x) out.push_back(x);
    std::string rest;
    if (ss.fail() && !ss.eof()) throw ParseError(lineno, "expected integers, got '" + line + "'");
    if (static_cast<int>(out.size()) != count)
        throw ParseError(lineno, "expected " + std::to_string(count) + " integers, got '" + line + "'");
    return out;
}

std::string next_content_line(std::istream& in, int& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    throw ParseError(lineno + 1, "unexpected end of input");
}

}  // namespace

Graph parse_graph(std::istream& in) {
    int lineno = 0;
    const auto header = parse_ints(next_content_line(in, lineno), 2, lineno);
    const long n = header[0], m = header[1];
    if (n < 1) throw ParseError(lineno, "vertex count must be >= 1");
    if (m < 0) throw ParseError(lineno, "edge count must be >= 0");
    std::vector<Edge> edges;
    for (long e = 0; e < m; ++e) {
        const auto uv = parse_ints(next_content_line(in, lineno), 2, lineno);
        const long u = uv[0], v = uv[1];
        if (u == v) throw ParseError(lineno, "self-loop " + std::to_string(u) + "-" + std::to_string(v));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "endpoint out of range in '" + std::to_string(u) + " " + std::to_string(v) + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace cbsep
