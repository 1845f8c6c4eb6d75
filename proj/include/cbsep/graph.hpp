#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cbsep {

using Edge = std::pair<int, int>;         // always stored with first < second
using VertexSet = std::vector<int>;       // always sorted ascending

/// Simple undirected graph on labeled vertices 0..n-1.  No self-loops, no
/// multi-edges.  Vertex counts stay small (everything downstream is
/// enumeration at desk scale), so adjacency is kept as per-vertex bitmasks.
class Graph {
public:
    explicit Graph(int n, std::vector<Edge> edges = {});

    static Graph complete(int n);
    static Graph empty(int n) { return Graph(n); }

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }   // sorted lexicographically
    bool has_edge(int u, int v) const;
    std::uint32_t adjacency_mask(int u) const { return adj_[u]; }
    int degree(int u) const;

    Graph complement() const;
    bool connected() const;   // isolated vertices count as separate components

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> adj_;
};

/// Connected components of g, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Components of the complement graph, same ordering convention.
std::vector<VertexSet> complement_components(const Graph& g);

/// Treats the adjacency matrix as a 0/1 metric candidate and checks
/// z_ik <= z_ij + z_jk for all ordered triples of distinct vertices.
bool satisfies_triangle_binary(const Graph& g);

/// First violating triple in lexicographic order, as (i, j, k) meaning the
/// inequality z_ik <= z_ij + z_jk fails: edge {i,k} present while both
/// {i,j} and {j,k} are absent.  Empty when no violation exists.
std::optional<std::array<int, 3>> triangle_violation(const Graph& g);

/// Decides whether g is a *spanning* complete bipartite graph: a bipartition
/// S1 ∪ S2 = V with edge set exactly S1 x S2.  The edgeless graph qualifies
/// with an empty second side.  S1 is the side containing vertex 0.
std::optional<std::pair<VertexSet, VertexSet>> is_complete_bipartite(const Graph& g);

/// Subgraph induced on `vertices` (sorted), relabeled to 0..k-1 in that order.
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Text format: first line "n m", then m lines "u v".  Rejects self-loops,
/// out-of-range endpoints, and malformed lines, naming the offending line.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

}  // namespace cbsep
