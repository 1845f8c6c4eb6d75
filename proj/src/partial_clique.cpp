#include "cbsep/partial_clique.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cbsep {

PartialClique::PartialClique(int n, std::vector<VertexSet> removed_sets) : n_(n) {
    if (n < 1) throw std::invalid_argument("partial-clique needs at least one vertex");
    std::uint32_t used = 0;
    for (auto& s : removed_sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.size() < 2) throw std::invalid_argument("removed set needs at least two vertices");
        for (int v : s) {
            if (v < 0 || v >= n) throw std::invalid_argument("removed-set vertex out of range");
            if ((used >> v) & 1u) throw std::invalid_argument("removed sets must be pairwise disjoint");
            used |= 1u << v;
        }
    }
    std::sort(removed_sets.begin(), removed_sets.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    removed_ = std::move(removed_sets);
}

Graph PartialClique::derived_graph() const {
    std::vector<int> block(n_, -1);
    for (std::size_t b = 0; b < removed_.size(); ++b)
        for (int v : removed_[b]) block[v] = static_cast<int>(b);
    std::vector<Edge> edges;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (block[i] == -1 || block[i] != block[j]) edges.emplace_back(i, j);
    return Graph(n_, std::move(edges));
}

int PartialClique::derived_edge_count() const {
    int count = n_ * (n_ - 1) / 2;
    for (const auto& s : removed_) {
        const int k = static_cast<int>(s.size());
        count -= k * (k - 1) / 2;
    }
    return count;
}

bool PartialClique::is_multi_clique() const {
    std::size_t covered = 0;
    for (const auto& s : removed_) covered += s.size();
    return covered == static_cast<std::size_t>(n_);
}

std::optional<PartialClique> as_partial_clique(const Graph& g) {
    const Graph comp = g.complement();
    std::vector<VertexSet> removed;
    for (const auto& component : connected_components(comp)) {
        if (component.size() < 2) continue;
        // The component must induce a clique in the complement, i.e. all its
        // pairs are non-edges of g.
        for (std::size_t a = 0; a < component.size(); ++a)
            for (std::size_t b = a + 1; b < component.size(); ++b)
                if (g.has_edge(component[a], component[b])) return std::nullopt;
        removed.push_back(component);
    }
    return PartialClique(g.n(), std::move(removed));
}

bool is_biclique(const PartialClique& p) {
    const Graph d = p.derived_graph();
    VertexSet support;
    for (int v = 0; v < d.n(); ++v)
        if (d.degree(v) > 0) support.push_back(v);
    if (support.empty()) return true;
    return is_complete_bipartite(induced_subgraph(d, support)).has_value();
}

std::optional<PartialClique> unique_partial_clique_completion(const Graph& g,
                                                              const std::vector<Edge>& keep) {
    if (!g.connected()) throw std::invalid_argument("completion requires a connected graph");
    for (auto [u, v] : keep) {
        if (u > v) std::swap(u, v);
        if (!g.has_edge(u, v))
            throw std::invalid_argument("keep edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " is not an edge of the graph");
    }
    // Graph of the discarded edges; its components are forced to become
    // removed cliques, because adjacent discarded edges must share a block.
    std::vector<Edge> discarded;
    std::vector<char> kept(g.n() * g.n(), 0);
    for (auto [u, v] : keep) {
        if (u > v) std::swap(u, v);
        kept[u * g.n() + v] = 1;
    }
    for (const auto& [u, v] : g.edges())
        if (!kept[u * g.n() + v]) discarded.emplace_back(u, v);

    const Graph residue(g.n(), discarded);
    std::vector<int> comp_of(g.n(), -1);
    std::vector<VertexSet> removed;
    {
        const auto comps = connected_components(residue);
        for (const auto& c : comps) {
            for (int v : c) comp_of[v] = static_cast<int>(removed.size());
            if (c.size() >= 2) removed.push_back(c);
            else
                for (int v : c) comp_of[v] = -1;
        }
    }
    // A keep edge inside one component would be deleted by that clique; by
    // the forcing argument above no removal family can avoid this, so the
    // completion does not exist.
    for (auto [u, v] : keep)
        if (comp_of[u] != -1 && comp_of[u] == comp_of[v]) return std::nullopt;
    PartialClique result(g.n(), std::move(removed));
    // Discarded edges lie inside their component's clique by construction;
    // keep this cheap re-check as a guard on the reasoning above.
    const Graph derived = result.derived_graph();
    for (const auto& [u, v] : discarded)
        if (derived.has_edge(u, v)) throw std::logic_error("completion retained a discarded edge");
    return result;
}

namespace {

void emit_family(int n, std::uint32_t used, std::uint32_t min_mask,
                 std::vector<VertexSet>& blocks,
                 const std::function<void(const PartialClique&)>& fn) {
    fn(PartialClique(n, blocks));
    const std::uint32_t full = (n >= 31) ? 0x7fffffffu : ((1u << n) - 1u);
    for (std::uint32_t mask = min_mask; mask <= full; ++mask) {
        if (std::popcount(mask) < 2 || (mask & used)) continue;
        VertexSet block;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) block.push_back(v);
        blocks.push_back(std::move(block));
        emit_family(n, used | mask, mask + 1, blocks, fn);
        blocks.pop_back();
    }
}

}  // namespace

void for_each_partial_clique(int n, const std::function<void(const PartialClique&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    std::vector<VertexSet> blocks;
    emit_family(n, 0u, 0u, blocks, fn);
}

std::vector<PartialClique> enumerate_partial_cliques(int n, int limit) {
    if (n > limit)
        throw std::invalid_argument("partial-clique enumeration limited to n <= " + std::to_string(limit) +
                                    " (got n = " + std::to_string(n) + "); raise the limit explicitly to override");
    std::vector<PartialClique> out;
    for_each_partial_clique(n, [&](const PartialClique& p) { out.push_back(p); });
    return out;
}

}  // namespace cbsep
