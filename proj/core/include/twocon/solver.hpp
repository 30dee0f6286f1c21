#pragma once

#include <utility>
#include <vector>

#include "twocon/algebra.hpp"
#include "twocon/species.hpp"

namespace twocon {

/// The six edge index series of the network classes attached to a class of
/// 3-connected cores: rho = all networks, sigma = s-networks, eta =
/// h-networks, each with the pole-preserving (+) and pole-reversing (-)
/// variants.
struct NetworkSystem {
    Truncation trunc;
    IndexSeries rho_plus, rho_minus;
    IndexSeries sigma_plus, sigma_minus;
    IndexSeries eta_plus, eta_minus;
};

/// Grade-by-grade solution of the network functional equations
///   rho+ = (1+b1) exp( sum_i (eta+_i + sigma+_i)/i ) - 1
///   rho- = (1+c1) exp( sum_{i even} (eta+_i+sigma+_i)/i
///                      + sum_{i odd} (eta-_i+sigma-_i)/i ) - 1
///   eta+- = W+-_{F01}[a1; rho+; rho-]
///   sigma+ = a1 rho+^2/(1+a1 rho+),
///   sigma- = (a1+a2 rho-) rho+_2/(1+a2 rho+_2)
/// in one pass over vertex degrees. The inputs must have vertex degree >= 2
/// in every term (cores have at least four vertices), which makes the system
/// triangular; violations throw.
NetworkSystem solve_network_system(const IndexSeries& f01_plus, const IndexSeries& f01_minus, Truncation t);

/// Substitutes a solved system back into its defining equations.
bool network_system_residual_ok(const NetworkSystem& sys, const IndexSeries& f01_plus,
                                const IndexSeries& f01_minus);

/// Dissymmetry assembly of the 2-connected class:
///   W_B = W_F[a1;rho+;rho-] + W_C[a1;rho+-sigma+;rho--sigma-]
///       + (a1^2/2)(rho+ - (eta+ + sigma+)(rho+ + 1) - (sigma+_2 - sigma+^2)/2)
///       + (a2/2) (rho- - (eta- + sigma-)(rho- + 1) - (sigma+_2 - sigma-^2)/2)
IndexSeries two_connected_series(const IndexSeries& w_f, const NetworkSystem& sys, Truncation graph_trunc);

/// Tilde counterparts (ordinary generating functions of isomorphism classes).
struct TildeNetworkSystem {
    Truncation trunc;
    BiSeries r, r_tau;  // networks
    BiSeries s, s_tau;  // s-networks
    BiSeries h, h_tau;  // h-networks
};

TildeNetworkSystem solve_tilde_networks(const IndexSeries& f01_plus, const IndexSeries& f01_minus,
                                        Truncation t);
BiSeries tilde_two_connected(const IndexSeries& w_f, const TildeNetworkSystem& sys, Truncation graph_trunc);

/// Labelled pipeline: fixed point of
///   R(x,y) = (1+y) exp( F01(x, R(x,y)) + x R^2/(1+xR) ) - 1
/// and the antiderivative form B(x,y) = (x^2/2) Int (1+R)/(1+y) dy.
BiSeries solve_labelled_networks(const BiSeries& f01_egf, Truncation t);
/// Same series through the compositional-inverse route: with
/// g(x,y) = F01(x,y) + x y^2/(1+xy), the inverse of R in y is
/// zeta = (1+y) exp(-g(x,y)) - 1, and R is recovered by Lagrange inversion.
BiSeries lagrange_labelled_networks(const BiSeries& f01_egf, Truncation t);
BiSeries labelled_two_connected(const BiSeries& r_egf, Truncation graph_trunc);

/// Inverse of the pipeline: recovers the 3-connected core series from the
/// edge index series of a 2-connected class (all 3-components of which then
/// lie in the result). Throws when the input is not such a series.
IndexSeries extract_three_connected(const IndexSeries& w_b);

/// The unique series with rho+-[x, beta, gamma] = y for series-parallel
/// networks, as explicit infinite products.
std::pair<BiSeries, BiSeries> beta_gamma(Truncation t);

/// Closed form of the series-parallel graph series under [x; beta; gamma]:
/// -x^2 y^2 + x y (x + x y (1-x)) / (1 - x^4 y^4).
BiSeries gsp_bracket_closed_form(Truncation t);

/// Tilde series of homeomorphically irreducible cores of a class B
/// containing the series-parallel graphs: (W_B - W_Bsp)[x; beta; gamma].
BiSeries irreducible_series(const IndexSeries& w_b, const IndexSeries& w_bsp, Truncation t);

/// Cores for edge substitution compositions. The toroidal crown class has no
/// closed-form edge index series here and is rejected.
enum class CoreGraph { K5, MGraph, MStarGraph, ToroidalCrown };

/// Tilde series of (sum of cores) with each edge carrying a network of the
/// symmetric class described by (n_tilde, n_tau_tilde).
BiSeries compose_cores_tilde(const std::vector<CoreGraph>& cores, const BiSeries& n_tilde,
                             const BiSeries& n_tau_tilde, Truncation out);
/// Labelled counterpart through M(x, N(x,y)).
BiSeries compose_cores_egf(const std::vector<CoreGraph>& cores, const BiSeries& n_egf, Truncation out);

}  // namespace twocon
