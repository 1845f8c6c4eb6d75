#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cbsep/graph.hpp"

namespace cbsep {

/// Hard cap on enumeration size; n = 9 already yields 21147 removal families.
inline constexpr int kDefaultEnumerationLimit = 9;

/// A complete graph with a family of pairwise-disjoint vertex cliques
/// deleted.  Canonical form: every removed set has size >= 2 (deleting a
/// single vertex's "clique" removes nothing), sets are sorted internally and
/// ordered by smallest member.
class PartialClique {
public:
    PartialClique(int n, std::vector<VertexSet> removed_sets);

    int n() const { return n_; }
    const std::vector<VertexSet>& removed_sets() const { return removed_; }

    Graph derived_graph() const;
    int derived_edge_count() const;

    /// True when the removed sets cover every vertex.
    bool is_multi_clique() const;

    bool operator==(const PartialClique& other) const {
        return n_ == other.n_ && removed_ == other.removed_;
    }
    bool operator!=(const PartialClique& other) const { return !(*this == other); }

private:
    int n_ = 0;
    std::vector<VertexSet> removed_;
};

/// Recognition: g is a partial-clique exactly when every component of its
/// complement induces a clique in the complement.  Returns the canonical
/// decomposition, or nothing if some complement component is not a clique.
std::optional<PartialClique> as_partial_clique(const Graph& g);

/// A partial-clique whose derived graph, restricted to its non-isolated
/// vertices, is a spanning complete bipartite graph.  The edgeless derived
/// graph qualifies degenerately.
bool is_biclique(const PartialClique& p);

/// Given a connected g and a set of edges to keep, builds the canonical
/// partial-clique that contains every keep edge and omits every other edge
/// of g: components of (V, E \ keep) become the removed cliques.  Returns
/// nothing when some keep edge falls inside such a component (then no
/// removal family at all can separate keep from the rest).  Among all valid
/// partial-cliques this one has the maximum edge set.
///
/// Throws std::invalid_argument when g is disconnected or keep is not a
/// subset of g's edges.
std::optional<PartialClique> unique_partial_clique_completion(const Graph& g,
                                                              const std::vector<Edge>& keep);

/// Visits every family of pairwise-disjoint removed sets (sizes >= 2) on n
/// vertices exactly once, in lexicographic order of the family's ascending
/// block-bitmask sequence; the empty family comes first.
void for_each_partial_clique(int n, const std::function<void(const PartialClique&)>& fn);

/// Materialized enumeration; throws std::invalid_argument when n exceeds
/// `limit` (the count grows like the Bell numbers).
std::vector<PartialClique> enumerate_partial_cliques(int n, int limit = kDefaultEnumerationLimit);

}  // namespace cbsep
