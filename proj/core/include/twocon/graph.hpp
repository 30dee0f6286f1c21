#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace twocon {

/// Simple undirected graph on vertices 0..n-1, adjacency as bitmask rows.
/// No loops, no multiple edges. Capped at 16 vertices, far above the
/// exhaustive-search scale used here.
struct SimpleGraph {
    int n = 0;
    std::vector<uint32_t> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int n_) : n(n_), adj(static_cast<size_t>(n_), 0) {}

    static SimpleGraph complete(int n);
    static SimpleGraph cycle(int n);
    static SimpleGraph path(int n);
    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    /// Two K5 blocks sharing the edge 0-1 (19 edges); m_star drops that edge.
    static SimpleGraph m_graph();
    static SimpleGraph m_star_graph();

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj[static_cast<size_t>(u)] >> v) & 1u; }
    int degree(int v) const { return __builtin_popcount(adj[static_cast<size_t>(v)]); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    /// Induced subgraph on the given vertices, relabelled 0..k-1 in order.
    SimpleGraph induced(const std::vector<int>& verts) const;

    bool is_connected() const { return is_connected_excluding(0); }
    /// Connectivity of the graph restricted to vertices outside `removed`
    /// (bitmask). An empty rest counts as disconnected, a single vertex as
    /// connected.
    bool is_connected_excluding(uint32_t removed) const;

    bool operator==(const SimpleGraph& o) const { return n == o.n && adj == o.adj; }
    std::string str() const;
};

using Perm = std::vector<uint8_t>;

/// All automorphisms of g, optionally with forced images for some vertices.
std::vector<Perm> automorphisms(const SimpleGraph& g, const std::vector<std::pair<int, int>>& forced = {});

/// Two-pole network: graph on internal_count + 2 vertices with distinguished
/// poles; the graph plus the pole-pole edge must be 2-connected.
struct Network {
    SimpleGraph g;
    int pole0 = 0;
    int pole1 = 1;

    int internal_count() const { return g.n - 2; }
    /// g with the 01 edge added (if absent).
    SimpleGraph closure() const;
    bool is_valid() const;

    /// Poles at 0 and 1, internal vertices 2..; edges over all vertices.
    static Network make(int internal_count, const std::vector<std::pair<int, int>>& edges);
};

}  // namespace twocon
