#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "twocon/graph.hpp"
#include "twocon/index_series.hpp"

namespace twocon::oracle {

constexpr int kMaxVertices = 9;

struct GraphClass {
    SimpleGraph graph;
    std::vector<Perm> autos;
};

/// One representative per isomorphism class on n vertices passing the filter,
/// each with its full automorphism group, in a deterministic order. Orderly
/// generation: a graph is kept iff its colex adjacency word is maximal over
/// relabellings, and canonical words on n vertices extend canonical words on
/// n-1 vertices.
std::vector<GraphClass> enumerate_graphs(int n, const std::function<bool(const SimpleGraph&)>& filter = {});

/// Vertex k-connectivity by exhaustive small-cutset deletion, with the usual
/// conventions: K2 counts as 2-connected, a k-connected graph must have more
/// than k vertices otherwise.
bool is_k_connected(const SimpleGraph& g, int k);

/// Kuratowski test on a small graph: planar iff no K5 and no K3,3
/// subdivision.
bool kuratowski_planar(const SimpleGraph& g);
bool has_k4_subdivision(const SimpleGraph& g);

/// The 3-decomposition tree of a 2-connected graph: white nodes are the
/// 3-components (3-connected components or maximal polygons, virtual edges
/// included in their edge sets), black nodes the bonds (essential separating
/// pairs, with a flag for the original edge).
struct TcTree {
    struct Component {
        bool is_polygon;
        std::vector<int> vertices;                 // host ids, ascending
        std::vector<std::pair<int, int>> edges;    // host-id pairs, normalized
        int polygon_length() const { return static_cast<int>(vertices.size()); }
    };
    struct Bond {
        int x, y;
        bool edge_present;
    };
    std::vector<Component> components;
    std::vector<Bond> bonds;
    std::vector<std::pair<int, int>> incidences;  // (component index, bond index)

    bool same_decomposition(const TcTree& o) const;
    /// Tree checks: connected, acyclic, white leaves, no bond joining exactly
    /// two polygons without the original edge.
    bool well_formed() const;
};

/// Recursive splitting at separating pairs with virtual-edge bookkeeping and
/// maximal-polygon merging. split_seed permutes the splitting choices; the
/// result is independent of it.
TcTree tc_decompose(const SimpleGraph& g, uint64_t split_seed = 0);

enum class GraphFamily { SeriesParallel, Planar, K33Free, All };

/// Membership of a 2-connected graph in a family, decided on the
/// 3-components: series-parallel means all polygons, planar means all
/// components planar, K33-free means planar or K5.
bool classify(const SimpleGraph& g, GraphFamily family);

enum class OracleFamily {
    TwoConnectedSeriesParallel,
    TwoConnectedPlanar,
    TwoConnectedK33Free,
    TwoConnectedAll,
    ThreeConnectedAll,
    ThreeConnectedPlanar,
};

/// Sum of graph_index_series over every class with 2 <= vertices <= n_hi
/// (3-connected families start at 4).
IndexSeries oracle_index_series(OracleFamily family, int n_hi, Truncation t);

/// Unlabelled class count for a family at exactly n vertices, by (n, m).
std::vector<std::pair<int, Integer>> class_counts(OracleFamily family, int n);
/// Labelled count at exactly n vertices: sum of n!/|Aut| over classes.
Integer labelled_count(OracleFamily family, int n);
/// Labelled count by scanning all 2^C(n,2) graphs on [n]; small n only.
Integer labelled_count_direct(GraphFamily family, int n);

struct DissymmetryReport {
    int graphs_checked = 0;
    int failures = 0;
    bool ok() const { return failures == 0 && graphs_checked > 0; }
};

/// Per-graph counting form of the dissymmetry identity on every 2-connected
/// class with 3..n vertices: #components + #bonds = 1 + #incidences, plus
/// tree well-formedness.
DissymmetryReport dissymmetry_check(int n);

struct NetworkClass {
    Network net;
    int edge_count;
    bool tau_symmetric;
    long aut_plus;  // pole-preserving automorphism count
};

/// All pole-labelled networks with the given number of internal vertices up
/// to pole-preserving isomorphism, non-trivial, optionally filtered by a
/// predicate on the closure graph.
std::vector<NetworkClass> enumerate_networks(int internal_count,
                                             const std::function<bool(const SimpleGraph&)>& closure_filter = {});

}  // namespace twocon::oracle
