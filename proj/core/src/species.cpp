#include "twocon/species.hpp"

#include <stdexcept>

namespace twocon {

CycleMonomial automorphism_weight(const SimpleGraph& g, const Perm& sigma) {
    CycleMonomial w;
    const int n = g.n;
    uint32_t seen = 0;
    for (int v = 0; v < n; ++v) {
        if ((seen >> v) & 1u) continue;
        int u = v, len = 0;
        do {
            seen |= 1u << u;
            u = sigma[static_cast<size_t>(u)];
            ++len;
        } while (u != v);
        w.mul_var(Var::A, len, 1);
    }
    auto edge_list = g.edges();
    std::vector<std::vector<int>> edge_id(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (size_t i = 0; i < edge_list.size(); ++i) {
        auto [u, v] = edge_list[i];
        edge_id[static_cast<size_t>(u)][static_cast<size_t>(v)] = static_cast<int>(i);
        edge_id[static_cast<size_t>(v)][static_cast<size_t>(u)] = static_cast<int>(i);
    }
    std::vector<bool> visited(edge_list.size(), false);
    for (size_t i = 0; i < edge_list.size(); ++i) {
        if (visited[i]) continue;
        auto [u0, v0] = edge_list[i];
        int cu = u0, cv = v0, len = 0;
        do {
            visited[static_cast<size_t>(edge_id[static_cast<size_t>(cu)][static_cast<size_t>(cv)])] = true;
            cu = sigma[static_cast<size_t>(cu)];
            cv = sigma[static_cast<size_t>(cv)];
            ++len;
        } while (!((cu == u0 && cv == v0) || (cu == v0 && cv == u0)));
        // after len steps the edge returns as a set; fixed endpoints make the
        // cycle cylindrical, swapped endpoints make it a Moebius cycle
        w.mul_var(cu == u0 ? Var::B : Var::C, len, 1);
    }
    return w;
}

IndexSeries graph_index_series(const SimpleGraph& g, Truncation t) {
    if (g.n == 0) throw std::invalid_argument("graph_index_series: empty graph");
    IndexSeries r(t);
    if (g.n > t.n_max || g.edge_count() > t.m_max) return r;
    auto autos = automorphisms(g);
    Rational inv(1, static_cast<unsigned long>(autos.size()));
    for (const auto& sigma : autos) r.add_term(automorphism_weight(g, sigma), inv);
    return r;
}

NetworkSeries network_index_series(const Network& net, Truncation t) {
    if (!net.is_valid()) throw std::invalid_argument("network_index_series: invalid network");
    NetworkSeries out{IndexSeries(t), IndexSeries(t)};
    const SimpleGraph& hat = net.g;
    auto plus = automorphisms(hat, {{net.pole0, net.pole0}, {net.pole1, net.pole1}});
    Rational invp(1, static_cast<unsigned long>(plus.size()));
    for (const auto& sigma : plus) {
        CycleMonomial w = automorphism_weight(hat, sigma);
        w.div_var(Var::A, 1, 2);
        out.plus.add_term(w, invp);
    }
    auto minus = automorphisms(hat, {{net.pole0, net.pole1}, {net.pole1, net.pole0}});
    if (!minus.empty()) {
        Rational invm(1, static_cast<unsigned long>(minus.size()));
        for (const auto& sigma : minus) {
            CycleMonomial w = automorphism_weight(hat, sigma);
            w.div_var(Var::A, 2, 1);
            out.minus.add_term(w, invm);
        }
    }
    return out;
}

namespace {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace

IndexSeries cycle_index_series(int n, Truncation t) {
    if (n < 3) throw std::invalid_argument("cycle_index_series: need n >= 3");
    IndexSeries r(t);
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        CycleMonomial m;
        m.mul_var(Var::A, d, n / d).mul_var(Var::B, d, n / d);
        r.add_term(m, ratio(euler_phi(d), 2l * n));
    }
    if (n % 2) {
        CycleMonomial m;
        m.mul_var(Var::A, 1, 1).mul_var(Var::A, 2, (n - 1) / 2);
        m.mul_var(Var::B, 2, (n - 1) / 2).mul_var(Var::C, 1, 1);
        r.add_term(m, Rational(1, 2));
    } else {
        CycleMonomial m1;
        m1.mul_var(Var::A, 2, n / 2).mul_var(Var::B, 2, (n - 2) / 2).mul_var(Var::C, 1, 2);
        r.add_term(m1, Rational(1, 4));
        CycleMonomial m2;
        m2.mul_var(Var::A, 1, 2).mul_var(Var::A, 2, (n - 2) / 2).mul_var(Var::B, 2, n / 2);
        r.add_term(m2, Rational(1, 4));
    }
    return r;
}

IndexSeries cycle_species_series(Truncation t) {
    IndexSeries r(t);
    for (int n = 3; n <= t.n_max; ++n) r += cycle_index_series(n, t);
    return r;
}

std::pair<IndexSeries, IndexSeries> derivative_network_series(const IndexSeries& wB) {
    Truncation tB = wB.trunc();
    Truncation tN(std::max(tB.n_max - 2, 0), std::max(tB.m_max - 1, 0));
    IndexSeries p01(tN), m01(tN);
    for (const auto& [mono, c] : wB.terms()) {
        int eb = mono.exponent(Var::B, 1);
        if (eb >= 1) {
            CycleMonomial m = mono;
            m.div_var(Var::B, 1, 1);
            if (m.exponent(Var::A, 1) < 2)
                throw std::domain_error("derivative_network_series: term " + mono.str() +
                                        " lacks the a1^2 factor of an edge-rooted 2-connected graph");
            m.div_var(Var::A, 1, 2);
            p01.add_term(m, c * Rational(2 * eb));
        }
        int ec = mono.exponent(Var::C, 1);
        if (ec >= 1) {
            CycleMonomial m = mono;
            m.div_var(Var::C, 1, 1);
            if (m.exponent(Var::A, 2) < 1)
                throw std::domain_error("derivative_network_series: term " + mono.str() +
                                        " lacks the a2 factor of a pole-swapped rooting");
            m.div_var(Var::A, 2, 1);
            m01.add_term(m, c * Rational(2 * ec));
        }
    }
    return {std::move(p01), std::move(m01)};
}

B01Series b01_from_b(const IndexSeries& wB) {
    auto [p01, m01] = derivative_network_series(wB);
    if (p01.constant_term() != 1 || m01.constant_term() != 1)
        throw std::invalid_argument("b01_from_b: the class must contain K2 (constant term of B_{0,1} is 1)");
    // adding back the 01 edge restores the full edge-degree bound of wB
    Truncation tNet(p01.trunc().n_max, wB.trunc().m_max);
    IndexSeries net_plus = p01.truncated(tNet) + times_monomial(p01, CycleMonomial::var(Var::B, 1), 1, tNet);
    net_plus.add_term(CycleMonomial::one(), -1);
    IndexSeries net_minus = m01.truncated(tNet) + times_monomial(m01, CycleMonomial::var(Var::C, 1), 1, tNet);
    net_minus.add_term(CycleMonomial::one(), -1);
    return {std::move(p01), std::move(m01), std::move(net_plus), std::move(net_minus)};
}

std::pair<IndexSeries, IndexSeries> y_multiply(const IndexSeries& plus, const IndexSeries& minus) {
    Truncation tp(plus.trunc().n_max, plus.trunc().m_max + 1);
    Truncation tm(minus.trunc().n_max, minus.trunc().m_max + 1);
    return {times_monomial(plus, CycleMonomial::var(Var::B, 1), 1, tp),
            times_monomial(minus, CycleMonomial::var(Var::C, 1), 1, tm)};
}

std::pair<IndexSeries, IndexSeries> s_network_series(const IndexSeries& rho_plus, const IndexSeries& rho_minus) {
    if (rho_plus.has_constant_term() || rho_minus.has_constant_term())
        throw std::invalid_argument("s_network_series: rho must have no constant term");
    Truncation t = rho_plus.trunc().meet(rho_minus.trunc());
    const CycleMonomial a1 = CycleMonomial::var(Var::A, 1);
    const CycleMonomial a2 = CycleMonomial::var(Var::A, 2);

    IndexSeries u = times_monomial(rho_plus, a1, 1, t);  // a1 rho+
    IndexSeries one_plus_u = IndexSeries::one(t) + u;
    IndexSeries sigma_plus = mul_capped(mul_capped(u, rho_plus, t), reciprocal(one_plus_u), t);

    IndexSeries rho2 = pleth_scale(rho_plus, 2).truncated(t);
    IndexSeries v = times_monomial(rho2, a2, 1, t);  // a2 rho+_2
    IndexSeries lead = IndexSeries::monomial(t, a1, 1) + times_monomial(rho_minus, a2, 1, t);
    IndexSeries sigma_minus = mul_capped(mul_capped(lead, rho2, t), reciprocal(IndexSeries::one(t) + v), t);
    return {std::move(sigma_plus), std::move(sigma_minus)};
}

std::pair<IndexSeries, IndexSeries> parallel_series(const IndexSeries& f_plus, const IndexSeries& f_minus) {
    if (f_plus.has_constant_term() || f_minus.has_constant_term())
        throw std::invalid_argument("parallel_series: inputs must have no constant term");
    Truncation t = f_plus.trunc().meet(f_minus.trunc());
    IndexSeries arg_plus(t), arg_minus(t);
    const int m_top = t.n_max + t.m_max;  // beyond this every plethysm truncates to zero
    for (int m = 1; m <= m_top; ++m) {
        IndexSeries fp = pleth_scale(f_plus, m).truncated(t);
        IndexSeries fm = (m % 2) ? pleth_scale(f_minus, m).truncated(t) : IndexSeries(t);
        if (!fp.is_zero()) arg_plus += fp * Rational(1, static_cast<unsigned long>(m));
        if (m % 2 == 0 && !fp.is_zero()) arg_minus += fp * Rational(1, static_cast<unsigned long>(m));
        if (m % 2 == 1 && !fm.is_zero()) arg_minus += fm * Rational(1, static_cast<unsigned long>(m));
    }
    return {exp_series(arg_plus), exp_series(arg_minus)};
}

std::pair<IndexSeries, IndexSeries> e2_series(const IndexSeries& w_plus, const IndexSeries& w_minus) {
    if (w_plus.has_constant_term() || w_minus.has_constant_term())
        throw std::invalid_argument("e2_series: inputs must have no constant term");
    Truncation t = w_plus.trunc().meet(w_minus.trunc());
    IndexSeries p2 = pleth_scale(w_plus, 2).truncated(t);
    IndexSeries plus = (mul_capped(w_plus, w_plus, t) + p2) * Rational(1, 2);
    IndexSeries minus = (mul_capped(w_minus, w_minus, t) + p2) * Rational(1, 2);
    return {std::move(plus), std::move(minus)};
}

}  // namespace twocon
