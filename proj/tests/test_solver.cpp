#include <doctest.h>

#include <map>

#include "twocon/oracle.hpp"
#include "twocon/pipelines.hpp"
#include "twocon/solver.hpp"

using namespace twocon;

namespace {

CycleMonomial mono_b(int k, int e = 1) { return CycleMonomial::var(Var::B, k, e); }
CycleMonomial mono_c(int k, int e = 1) { return CycleMonomial::var(Var::C, k, e); }

NetworkSystem sp_system(Truncation t) { return solve_network_system(IndexSeries(t), IndexSeries(t), t); }

std::vector<Integer> row_sums(const BiSeries& s, int hi) {
    std::vector<Integer> v;
    for (int n = 0; n <= hi; ++n) v.push_back(to_integer(s.row_sum(n)));
    return v;
}

}  // namespace

TEST_CASE("series-parallel networks: first grades and published prefixes") {
    Truncation t = Truncation::for_networks(6);
    NetworkSystem sys = sp_system(t);
    CHECK(sys.rho_plus.vdeg_slice(0) == IndexSeries::monomial(t, mono_b(1), 1));
    CHECK(sys.rho_minus.vdeg_slice(0) == IndexSeries::monomial(t, mono_c(1), 1));
    CHECK(sys.eta_plus.is_zero());
    BiSeries r = to_tilde(sys.rho_plus);
    BiSeries rt = to_tilde(sys.rho_minus);
    CHECK(row_sums(r, 6) == std::vector<Integer>{1, 2, 8, 38, 208, 1220, 7592});
    CHECK(row_sums(rt, 6) == std::vector<Integer>{1, 2, 4, 10, 24, 64, 168});
}

TEST_CASE("series-parallel network system satisfies its defining equations") {
    Truncation t = Truncation::for_networks(5);
    NetworkSystem sys = sp_system(t);
    CHECK(network_system_residual_ok(sys, IndexSeries(t), IndexSeries(t)));
}

TEST_CASE("network counts refined by edges match direct enumeration") {
    Truncation t = Truncation::for_networks(4);
    NetworkSystem sys = sp_system(t);
    BiSeries r = to_tilde(sys.rho_plus), rt = to_tilde(sys.rho_minus);
    BiSeries egf = to_egf(sys.rho_plus);
    for (int v = 0; v <= 4; ++v) {
        std::map<int, Integer> by_m, by_m_tau, labelled_by_m;
        auto classes = oracle::enumerate_networks(v, [](const SimpleGraph& closure) {
            return oracle::classify(closure, oracle::GraphFamily::SeriesParallel);
        });
        Integer vf = factorial(static_cast<unsigned>(v));
        for (const auto& c : classes) {
            by_m[c.edge_count] += 1;
            if (c.tau_symmetric) by_m_tau[c.edge_count] += 1;
            labelled_by_m[c.edge_count] += vf / Integer(c.aut_plus);
        }
        for (int m = 0; m <= t.m_max; ++m) {
            CHECK(r.coeff(v, m) == Rational(by_m.count(m) ? by_m[m] : Integer(0)));
            CHECK(rt.coeff(v, m) == Rational(by_m_tau.count(m) ? by_m_tau[m] : Integer(0)));
            // labelled networks: EGF coefficient times v!
            CHECK(egf.coeff(v, m) * Rational(vf) ==
                  Rational(labelled_by_m.count(m) ? labelled_by_m[m] : Integer(0)));
        }
    }
}

TEST_CASE("all-networks system against direct enumeration") {
    Truncation tg = Truncation::for_graphs(6);
    pipelines::FamilyInput in = pipelines::family_input(pipelines::Family::All, tg, pipelines::CoreSource::oracle());
    Truncation tn = pipelines::network_trunc(tg);
    NetworkSystem sys = solve_network_system(in.f01_plus, in.f01_minus, tn);
    CHECK(network_system_residual_ok(sys, in.f01_plus, in.f01_minus));
    BiSeries r = to_tilde(sys.rho_plus), rt = to_tilde(sys.rho_minus);
    for (int v = 0; v <= 4; ++v) {
        Integer want = 0, want_tau = 0;
        for (const auto& c : oracle::enumerate_networks(v)) {
            want += 1;
            if (c.tau_symmetric) want_tau += 1;
        }
        CHECK(to_integer(r.row_sum(v)) == want);
        CHECK(to_integer(rt.row_sum(v)) == want_tau);
    }
}

TEST_CASE("series-parallel two-connected assembly") {
    Truncation tg = Truncation::for_graphs(8);
    pipelines::FamilyInput in{IndexSeries(tg), IndexSeries(), IndexSeries()};
    IndexSeries w_b = pipelines::run_index_pipeline(in, tg).w_b;
    BiSeries tilde = to_tilde(w_b);
    CHECK(row_sums(tilde, 8) == std::vector<Integer>{0, 0, 1, 1, 2, 5, 15, 51, 230});
    // the K2 term comes out of the assembly itself
    CHECK(tilde.coeff(2, 1) == 1);
    // agreement with the oracle class counts refined by edges
    for (int n = 2; n <= 7; ++n) {
        std::map<int, Integer> want;
        for (auto& [m, c] : oracle::class_counts(oracle::OracleFamily::TwoConnectedSeriesParallel, n)) want[m] = c;
        for (int m = 0; m <= tg.m_max; ++m)
            CHECK(tilde.coeff(n, m) == Rational(want.count(m) ? want[m] : Integer(0)));
    }
}

TEST_CASE("planar pipeline at six vertices matches the oracle tables") {
    Truncation tg = Truncation::for_graphs(6);
    pipelines::FamilyInput in = pipelines::family_input(pipelines::Family::Planar, tg, pipelines::CoreSource::oracle());
    auto [sys, w_b] = pipelines::run_index_pipeline(in, tg);
    BiSeries tilde = to_tilde(w_b);
    CHECK(row_sums(tilde, 6) == std::vector<Integer>{0, 0, 1, 1, 3, 9, 44});
    // the n = 6 row refined by edge count: 1,3,9,13,11,5,2 for m = 6..12
    const Integer row6[] = {1, 3, 9, 13, 11, 5, 2};
    for (int m = 6; m <= 12; ++m) CHECK(tilde.coeff(6, m) == Rational(row6[m - 6]));
    for (int n = 2; n <= 6; ++n) {
        std::map<int, Integer> want;
        for (auto& [m, c] : oracle::class_counts(oracle::OracleFamily::TwoConnectedPlanar, n)) want[m] = c;
        for (int m = 0; m <= tg.m_max; ++m)
            CHECK(tilde.coeff(n, m) == Rational(want.count(m) ? want[m] : Integer(0)));
    }
}

TEST_CASE("pipeline equivalence: tilde route equals the index route") {
    for (auto fam : {pipelines::Family::SeriesParallel, pipelines::Family::Planar, pipelines::Family::K33Free}) {
        Truncation tg = Truncation::for_graphs(6);
        pipelines::FamilyInput in = pipelines::family_input(fam, tg, pipelines::CoreSource::oracle());
        BiSeries from_index = to_tilde(pipelines::run_index_pipeline(in, tg).w_b);
        BiSeries from_tilde = pipelines::run_tilde_pipeline(in, tg).b_tilde;
        CHECK(from_index == from_tilde);
    }
}

TEST_CASE("pipeline equivalence: labelled route equals the index route") {
    for (auto fam : {pipelines::Family::SeriesParallel, pipelines::Family::Planar}) {
        Truncation tg = Truncation::for_graphs(6);
        pipelines::FamilyInput in = pipelines::family_input(fam, tg, pipelines::CoreSource::oracle());
        BiSeries from_index = to_egf(pipelines::run_index_pipeline(in, tg).w_b);
        BiSeries from_labelled = pipelines::run_labelled_pipeline(in, tg).b_egf;
        CHECK(from_index == from_labelled);
    }
}

TEST_CASE("labelled networks start at R(0,y) = y") {
    Truncation t = Truncation::for_networks(5);
    BiSeries r = solve_labelled_networks(BiSeries(t), t);
    for (int m = 0; m <= t.m_max; ++m) CHECK(r.coeff(0, m) == (m == 1 ? Rational(1) : Rational(0)));
}

TEST_CASE("labelled series-parallel graphs on four vertices") {
    // oracle: 3 labellings of C4 plus 6 of K4 minus an edge
    Integer oracle_count = oracle::labelled_count(oracle::OracleFamily::TwoConnectedSeriesParallel, 4);
    CHECK(oracle_count == 9);
    Truncation tg = Truncation::for_graphs(5);
    pipelines::FamilyInput in{IndexSeries(tg), IndexSeries(), IndexSeries()};
    BiSeries b = pipelines::run_labelled_pipeline(in, tg).b_egf;
    CHECK(b.row_sum(4) * Rational(factorial(4)) == Rational(oracle_count));
}

TEST_CASE("Lagrange inversion agrees with the fixed point") {
    SUBCASE("series-parallel") {
        Truncation t = Truncation::for_networks(6);
        CHECK(solve_labelled_networks(BiSeries(t), t) == lagrange_labelled_networks(BiSeries(t), t));
    }
    SUBCASE("K5 cores only") {
        Truncation tg = Truncation::for_graphs(8);
        IndexSeries w_f = graph_index_series(SimpleGraph::complete(5), tg);
        auto [p01, m01] = derivative_network_series(w_f);
        Truncation tn = pipelines::network_trunc(tg);
        BiSeries f01 = to_egf(p01);
        CHECK(solve_labelled_networks(f01, tn) == lagrange_labelled_networks(f01, tn));
    }
    SUBCASE("planar cores to six vertices") {
        Truncation tg = Truncation::for_graphs(6);
        pipelines::FamilyInput in =
            pipelines::family_input(pipelines::Family::Planar, tg, pipelines::CoreSource::oracle());
        Truncation tn = pipelines::network_trunc(tg);
        BiSeries f01 = to_egf(in.f01_plus);
        CHECK(solve_labelled_networks(f01, tn) == lagrange_labelled_networks(f01, tn));
    }
}

TEST_CASE("extraction of 3-connected cores") {
    SUBCASE("K4 is the unique core on four vertices") {
        Truncation t = Truncation::for_graphs(4);
        IndexSeries w_b = oracle::oracle_index_series(oracle::OracleFamily::TwoConnectedAll, 4, t);
        CHECK(extract_three_connected(w_b) == graph_index_series(SimpleGraph::complete(4), t));
    }
    SUBCASE("series-parallel classes have no cores") {
        Truncation tg = Truncation::for_graphs(6);
        pipelines::FamilyInput in{IndexSeries(tg), IndexSeries(), IndexSeries()};
        IndexSeries w_b = pipelines::run_index_pipeline(in, tg).w_b;
        CHECK(extract_three_connected(w_b).is_zero());
    }
    SUBCASE("all 2-connected classes to six vertices") {
        Truncation t = Truncation::for_graphs(6);
        IndexSeries w_b = oracle::oracle_index_series(oracle::OracleFamily::TwoConnectedAll, 6, t);
        CHECK(extract_three_connected(w_b) ==
              oracle::oracle_index_series(oracle::OracleFamily::ThreeConnectedAll, 6, t));
    }
    SUBCASE("round trip through the assembly") {
        Truncation tg = Truncation::for_graphs(6);
        pipelines::FamilyInput in =
            pipelines::family_input(pipelines::Family::K33Free, tg, pipelines::CoreSource::oracle());
        IndexSeries w_b = pipelines::run_index_pipeline(in, tg).w_b;
        CHECK(extract_three_connected(w_b) == in.w_f);
    }
}

TEST_CASE("beta and gamma invert the series-parallel networks") {
    Truncation t(8, 9);
    auto [beta, gamma] = beta_gamma(t);
    // frozen prefix of the product expansion
    CHECK(beta.coeff(0, 1) == 1);
    CHECK(beta.coeff(1, 2) == Rational(-1));
    CHECK(beta.coeff(1, 3) == Rational(-1));
    CHECK(beta.coeff(2, 3) == 1);
    CHECK(beta.coeff(2, 4) == 1);
    CHECK(beta.coeff(3, 4) == Rational(-1));
    CHECK(beta.coeff(3, 5) == Rational(-2));
    CHECK(beta.coeff(3, 6) == Rational(-1));
    CHECK(beta.coeff(0, 0) == 0);
    NetworkSystem sys = sp_system(t);
    CHECK(bracket_xy(sys.rho_plus, BiSeries::x(t), beta, gamma, t) == BiSeries::y(t));
    CHECK(bracket_xy(sys.rho_minus, BiSeries::x(t), beta, gamma, t) == BiSeries::y(t));
    // sigma+ [x; beta; gamma] = x y^2 / (1 + x y)
    BiSeries xy = mul(BiSeries::x(t), BiSeries::y(t));
    BiSeries expected = mul(mul(xy, BiSeries::y(t)), reciprocal(BiSeries::one(t) + xy));
    CHECK(bracket_xy(sys.sigma_plus, BiSeries::x(t), beta, gamma, t) == expected);
}

TEST_CASE("series-parallel closed form under beta/gamma") {
    Truncation t(10, 11);
    Truncation tg = Truncation::for_graphs(10);
    pipelines::FamilyInput in{IndexSeries(tg), IndexSeries(), IndexSeries()};
    IndexSeries w_gsp = pipelines::run_index_pipeline(in, tg).w_b;
    auto [beta, gamma] = beta_gamma(t);
    CHECK(bracket_xy(w_gsp, BiSeries::x(t), beta, gamma, t) == gsp_bracket_closed_form(t));
}

TEST_CASE("irreducible cores") {
    Truncation tg = Truncation::for_graphs(6);
    pipelines::FamilyInput sp{IndexSeries(tg), IndexSeries(), IndexSeries()};
    IndexSeries w_sp = pipelines::run_index_pipeline(sp, tg).w_b;
    SUBCASE("of the series-parallel class itself: none") {
        Truncation t(6, 8);
        CHECK(irreducible_series(w_sp, w_sp, t).is_zero());
    }
    SUBCASE("of the planar class: starts at K4") {
        pipelines::FamilyInput planar =
            pipelines::family_input(pipelines::Family::Planar, tg, pipelines::CoreSource::oracle());
        IndexSeries w_p = pipelines::run_index_pipeline(planar, tg).w_b;
        Truncation t(5, 7);
        BiSeries irr = irreducible_series(w_p, w_sp, t);
        CHECK(irr.coeff(4, 6) == 1);  // K4
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= t.m_max; ++m) CHECK(irr.coeff(n, m) == 0);
        for (int m = 0; m < 6; ++m) CHECK(irr.coeff(4, m) == 0);
    }
}

TEST_CASE("irreducible cores of the projective-planar composition") {
    // the [x; beta; gamma] specialization commutes with edge substitution:
    // bracketing the composed index series equals composing the bracketed
    // network slots into the core
    Truncation t(8, 12);
    Truncation tg = Truncation::for_graphs(7);
    pipelines::FamilyInput in =
        pipelines::family_input(pipelines::Family::Planar, tg, pipelines::CoreSource::oracle());
    Truncation tn = pipelines::network_trunc(tg);
    NetworkSystem nets = solve_network_system(in.f01_plus, in.f01_minus, tn);
    auto [beta, gamma] = beta_gamma(t);

    IndexSeries w_k5 = graph_index_series(SimpleGraph::complete(5), Truncation(5, 10));
    IndexSeries a1 = IndexSeries::monomial(t, CycleMonomial::var(Var::A, 1), 1);
    IndexSeries w_pp = bracket_subst(w_k5, a1, nets.rho_plus, nets.rho_minus, Truncation(t.n_max, 28));
    BiSeries route1 = bracket_xy(w_pp, BiSeries::x(t), beta, gamma, t);

    BiSeries slot_p = bracket_xy(nets.rho_plus, BiSeries::x(t), beta, gamma, t);
    BiSeries slot_m = bracket_xy(nets.rho_minus, BiSeries::x(t), beta, gamma, t);
    BiSeries route2 = bracket_xy(w_k5, BiSeries::x(t), slot_p, slot_m, t);
    CHECK(route1 == route2);
    require_count_series(route1, "irreducible projective-planar cores");
    CHECK(route1.coeff(5, 10) == 1);  // K5 itself is irreducible
}

TEST_CASE("core compositions") {
    Truncation t(10, 20);
    BiSeries y = BiSeries::y(t);
    CHECK(compose_cores_tilde({CoreGraph::K5}, y, y, t) == BiSeries::monomial(t, 5, 10, 1));
    CHECK(compose_cores_tilde({CoreGraph::MGraph}, y, y, t) == BiSeries::monomial(t, 8, 19, 1));
    CHECK(compose_cores_tilde({CoreGraph::MStarGraph}, y, y, t) == BiSeries::monomial(t, 8, 18, 1));
    CHECK_THROWS_WITH_AS(compose_cores_tilde({CoreGraph::ToroidalCrown}, y, y, t),
                         "unsupported: crown index series", std::invalid_argument);
}

TEST_CASE("species input variants") {
    Truncation t = Truncation::for_graphs(5);
    CHECK(pipelines::SpeciesInput::empty().resolve(t).is_zero());
    auto k5 = pipelines::SpeciesInput::graph_list({SimpleGraph::complete(5)});
    CHECK(k5.resolve(t) == graph_index_series(SimpleGraph::complete(5), t));
    // union sums class-disjoint parts
    auto u = pipelines::SpeciesInput::union_of(
        {pipelines::SpeciesInput::data(graph_index_series(SimpleGraph::complete(4), t)),
         pipelines::SpeciesInput::graph_list({SimpleGraph::complete(5)})});
    CHECK(u.resolve(t) ==
          graph_index_series(SimpleGraph::complete(4), t) + graph_index_series(SimpleGraph::complete(5), t));
    // members must be 3-connected on at least 4 vertices
    CHECK_THROWS_AS(pipelines::SpeciesInput::graph_list({SimpleGraph::cycle(5)}), std::invalid_argument);
    CHECK_THROWS_AS(pipelines::SpeciesInput::graph_list({SimpleGraph::complete(3)}), std::invalid_argument);
}

TEST_CASE("solver rejects cores of low vertex degree") {
    Truncation t(4, 6);
    IndexSeries bad = IndexSeries::monomial(t, CycleMonomial::var(Var::A, 1).times(mono_b(1)), 1);
    CHECK_THROWS_AS(solve_network_system(bad, IndexSeries(t), t), std::invalid_argument);
}
