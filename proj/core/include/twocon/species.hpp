#pragma once

#include <utility>

#include "twocon/algebra.hpp"
#include "twocon/graph.hpp"
#include "twocon/index_series.hpp"

namespace twocon {

/// Edge index series of a single graph: (1/|Aut G|) * sum over automorphisms
/// of the cycle monomial a-profile times the induced edge-cycle profile,
/// cylindrical cycles in b, Moebius cycles in c.
IndexSeries graph_index_series(const SimpleGraph& g, Truncation t);

/// Cycle monomial of one (graph, automorphism) pair.
CycleMonomial automorphism_weight(const SimpleGraph& g, const Perm& sigma);

struct NetworkSeries {
    IndexSeries plus;
    IndexSeries minus;
};

/// W+ over pole-preserving automorphisms (pole fixed points divided out as
/// a_1^2), W- over pole-reversing graph automorphisms (pole 2-cycle divided
/// out as a_2); W- is zero when the network is not tau-symmetric.
NetworkSeries network_index_series(const Network& net, Truncation t);

/// Closed form for the edge index series of the unoriented n-cycle.
IndexSeries cycle_index_series(int n, Truncation t);
/// Sum over 3 <= n <= t.n_max (zero series when t.n_max < 3).
IndexSeries cycle_species_series(Truncation t);

struct B01Series {
    IndexSeries plus01;     // W+ of B_{0,1}
    IndexSeries minus01;    // W- of B_{0,1}
    IndexSeries net_plus;   // W+ of (1+y)B_{0,1} - 1
    IndexSeries net_minus;  // W- of (1+y)B_{0,1} - 1
};

/// Network series of a 2-connected class B with K2 in B:
/// W+ = (2/a1^2) dW_B/db1, W- = (2/a2) dW_B/dc1, then the (1+b1)/(1+c1)
/// forms minus one. Throws when a differentiated monomial lacks the required
/// a1^2 or a2 factor, or when the K2 term is missing.
B01Series b01_from_b(const IndexSeries& wB);

/// Only the two derivative forms, with no K2 requirement (used for classes
/// of 3-connected cores).
std::pair<IndexSeries, IndexSeries> derivative_network_series(const IndexSeries& wB);

/// Adds the 01 edge to all networks: (b1 * plus, c1 * minus).
std::pair<IndexSeries, IndexSeries> y_multiply(const IndexSeries& plus, const IndexSeries& minus);

/// s-networks of a class closed under series composition/decomposition:
/// sigma+ = a1 rho+^2 / (1 + a1 rho+),
/// sigma- = (a1 + a2 rho-) rho+_2 / (1 + a2 rho+_2).
std::pair<IndexSeries, IndexSeries> s_network_series(const IndexSeries& rho_plus, const IndexSeries& rho_minus);

/// Parallel compositions E(N) of a class with non-adjacent poles:
/// W+ = exp(sum_m f+_m / m),
/// W- = exp(sum_{m even} f+_m / m + sum_{m odd} f-_m / m).
std::pair<IndexSeries, IndexSeries> parallel_series(const IndexSeries& f_plus, const IndexSeries& f_minus);

/// Two-element parallel compositions:
/// W+ = ((W+)^2 + W+_2)/2, W- = ((W-)^2 + W+_2)/2.
std::pair<IndexSeries, IndexSeries> e2_series(const IndexSeries& w_plus, const IndexSeries& w_minus);

}  // namespace twocon
