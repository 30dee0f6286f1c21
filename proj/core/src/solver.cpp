#include "twocon/solver.hpp"

#include <stdexcept>

#include "twocon/graph.hpp"

namespace twocon {

namespace {

const CycleMonomial kA1 = CycleMonomial::var(Var::A, 1);
const CycleMonomial kA2 = CycleMonomial::var(Var::A, 2);
const CycleMonomial kB1 = CycleMonomial::var(Var::B, 1);
const CycleMonomial kC1 = CycleMonomial::var(Var::C, 1);

using Graded = std::vector<IndexSeries>;  // [v] = homogeneous slice of vertex degree v

Graded make_graded(Truncation t) {
    return Graded(static_cast<size_t>(t.n_max) + 1, IndexSeries(t));
}

IndexSeries graded_sum(const Graded& g) {
    IndexSeries r(g.empty() ? Truncation() : g[0].trunc());
    for (const auto& s : g) r += s;
    return r;
}

// sum_{j} a[j] * b[n-j]
IndexSeries convolve_at(const Graded& a, const Graded& b, int n, Truncation t) {
    IndexSeries r(t);
    for (int j = 0; j <= n; ++j) {
        if (a[static_cast<size_t>(j)].is_zero() || b[static_cast<size_t>(n - j)].is_zero()) continue;
        r += mul_capped(a[static_cast<size_t>(j)], b[static_cast<size_t>(n - j)], t);
    }
    return r;
}

void check_core_grading(const IndexSeries& s, const char* name) {
    for (const auto& [m, c] : s.terms())
        if (m.vertex_degree() < 2)
            throw std::invalid_argument(std::string("solve_network_system: ") + name + " has term " + m.str() +
                                        " of vertex degree < 2; not a 3-connected core class");
}

}  // namespace

NetworkSystem solve_network_system(const IndexSeries& f01_plus_in, const IndexSeries& f01_minus_in, Truncation t) {
    check_core_grading(f01_plus_in, "W+ input");
    check_core_grading(f01_minus_in, "W- input");
    IndexSeries f01p = f01_plus_in.truncated(t);
    IndexSeries f01m = f01_minus_in.truncated(t);
    const bool have_cores = !f01p.is_zero() || !f01m.is_zero();
    const IndexSeries a1_slot = IndexSeries::monomial(t, kA1, 1);

    const int top = t.n_max;
    Graded rho_p = make_graded(t), rho_m = make_graded(t);
    Graded sig_p = make_graded(t), sig_m = make_graded(t);
    Graded eta_p = make_graded(t), eta_m = make_graded(t);
    Graded up = make_graded(t);      // a1 rho+
    Graded inv_p = make_graded(t);   // 1/(1 + a1 rho+)
    Graded tp = make_graded(t);      // a1 rho+^2
    Graded rho2 = make_graded(t);    // rho+_2
    Graded vm = make_graded(t);      // a2 rho+_2
    Graded inv_m = make_graded(t);   // 1/(1 + a2 rho+_2)
    Graded lead = make_graded(t);    // a1 + a2 rho-
    Graded tm = make_graded(t);      // (a1 + a2 rho-) rho+_2
    Graded arg_p = make_graded(t);   // sum_i (eta+ + sigma+)_i / i
    Graded arg_m = make_graded(t);
    Graded exp_p = make_graded(t), exp_m = make_graded(t);

    rho_p[0] = IndexSeries::monomial(t, kB1, 1);
    rho_m[0] = IndexSeries::monomial(t, kC1, 1);
    rho2[0] = pleth_scale(rho_p[0], 2).truncated(t);
    inv_p[0] = IndexSeries::one(t);
    inv_m[0] = IndexSeries::one(t);
    exp_p[0] = IndexSeries::one(t);
    exp_m[0] = IndexSeries::one(t);
    if (top >= 1) lead[1] = IndexSeries::monomial(t, kA1, 1);

    IndexSeries rho_p_full = rho_p[0];
    IndexSeries rho_m_full = rho_m[0];

    for (int n = 1; n <= top; ++n) {
        const auto sn = static_cast<size_t>(n);
        // sigma+ at grade n: uses rho+ up to n-1
        up[sn] = times_monomial(rho_p[sn - 1], kA1, 1, t);
        {
            IndexSeries acc(t);
            for (int j = 1; j <= n; ++j) acc -= mul_capped(up[static_cast<size_t>(j)], inv_p[static_cast<size_t>(n - j)], t);
            inv_p[sn] = std::move(acc);
        }
        tp[sn] = convolve_at(up, rho_p, n, t);
        sig_p[sn] = convolve_at(tp, inv_p, n, t);
        // sigma- at grade n
        if (n % 2 == 0) rho2[sn] = pleth_scale(rho_p[sn / 2], 2).truncated(t);
        if (n >= 2) vm[sn] = times_monomial(rho2[sn - 2], kA2, 1, t);
        {
            IndexSeries acc(t);
            for (int j = 2; j <= n; ++j) acc -= mul_capped(vm[static_cast<size_t>(j)], inv_m[static_cast<size_t>(n - j)], t);
            inv_m[sn] = std::move(acc);
        }
        if (n >= 2) lead[sn] = times_monomial(rho_m[sn - 2], kA2, 1, t);
        tm[sn] = convolve_at(lead, rho2, n, t);
        sig_m[sn] = convolve_at(tm, inv_m, n, t);
        // eta at grade n: substitute into the core series; slots are final up
        // to grade n-1 and only grades <= n-2 can contribute here
        if (have_cores) {
            Truncation cap(n, t.m_max);
            eta_p[sn] = bracket_subst(f01p, a1_slot, rho_p_full, rho_m_full, cap).vdeg_slice(n).truncated(t);
            eta_m[sn] = bracket_subst(f01m, a1_slot, rho_p_full, rho_m_full, cap).vdeg_slice(n).truncated(t);
        }
        // exp arguments at grade n
        {
            IndexSeries ap = eta_p[sn] + sig_p[sn];
            IndexSeries am(t);
            for (int i = 2; i <= n; ++i) {
                if (n % i) continue;
                IndexSeries base = eta_p[static_cast<size_t>(n / i)] + sig_p[static_cast<size_t>(n / i)];
                if (!base.is_zero()) {
                    IndexSeries scaled = pleth_scale(base, i).truncated(t) * Rational(1, static_cast<unsigned long>(i));
                    if (i % 2 == 0) am += scaled;
                    ap += scaled;
                }
                if (i % 2 == 1) {
                    IndexSeries base_m = eta_m[static_cast<size_t>(n / i)] + sig_m[static_cast<size_t>(n / i)];
                    if (!base_m.is_zero())
                        am += pleth_scale(base_m, i).truncated(t) * Rational(1, static_cast<unsigned long>(i));
                }
            }
            am += eta_m[sn] + sig_m[sn];  // the i = 1 term
            arg_p[sn] = std::move(ap);
            arg_m[sn] = std::move(am);
        }
        // exp slices: E_n = (1/n) sum_j j A_j E_{n-j}
        {
            IndexSeries acc(t);
            for (int j = 1; j <= n; ++j) {
                if (arg_p[static_cast<size_t>(j)].is_zero() || exp_p[static_cast<size_t>(n - j)].is_zero()) continue;
                acc += mul_capped(arg_p[static_cast<size_t>(j)], exp_p[static_cast<size_t>(n - j)], t) * Rational(j);
            }
            exp_p[sn] = acc * Rational(1, static_cast<unsigned long>(n));
            acc = IndexSeries(t);
            for (int j = 1; j <= n; ++j) {
                if (arg_m[static_cast<size_t>(j)].is_zero() || exp_m[static_cast<size_t>(n - j)].is_zero()) continue;
                acc += mul_capped(arg_m[static_cast<size_t>(j)], exp_m[static_cast<size_t>(n - j)], t) * Rational(j);
            }
            exp_m[sn] = acc * Rational(1, static_cast<unsigned long>(n));
        }
        rho_p[sn] = exp_p[sn] + times_monomial(exp_p[sn], kB1, 1, t);
        rho_m[sn] = exp_m[sn] + times_monomial(exp_m[sn], kC1, 1, t);
        rho_p_full += rho_p[sn];
        rho_m_full += rho_m[sn];
    }

    NetworkSystem sys{t,
                      std::move(rho_p_full),
                      std::move(rho_m_full),
                      graded_sum(sig_p),
                      graded_sum(sig_m),
                      graded_sum(eta_p),
                      graded_sum(eta_m)};
    return sys;
}

bool network_system_residual_ok(const NetworkSystem& sys, const IndexSeries& f01_plus,
                                const IndexSeries& f01_minus) {
    const Truncation t = sys.trunc;
    auto [sp, sm] = s_network_series(sys.rho_plus, sys.rho_minus);
    if (!(sp == sys.sigma_plus) || !(sm == sys.sigma_minus)) return false;
    const IndexSeries a1_slot = IndexSeries::monomial(t, kA1, 1);
    IndexSeries ep = bracket_subst(f01_plus.truncated(t), a1_slot, sys.rho_plus, sys.rho_minus, t);
    IndexSeries em = bracket_subst(f01_minus.truncated(t), a1_slot, sys.rho_plus, sys.rho_minus, t);
    if (!(ep == sys.eta_plus) || !(em == sys.eta_minus)) return false;
    auto [pp, pm] = parallel_series(sys.eta_plus + sys.sigma_plus, sys.eta_minus + sys.sigma_minus);
    IndexSeries rp = pp + times_monomial(pp, kB1, 1, t);
    rp.add_term(CycleMonomial::one(), -1);
    IndexSeries rm = pm + times_monomial(pm, kC1, 1, t);
    rm.add_term(CycleMonomial::one(), -1);
    return rp == sys.rho_plus && rm == sys.rho_minus;
}

IndexSeries two_connected_series(const IndexSeries& w_f, const NetworkSystem& sys, Truncation graph_trunc) {
    const Truncation tg = graph_trunc;
    const Truncation ti(std::max(tg.n_max - 2, 0), tg.m_max);  // inside the a1^2/2, a2/2 blocks
    const IndexSeries a1_slot = IndexSeries::monomial(tg, kA1, 1);

    IndexSeries result = bracket_subst(w_f.truncated(tg), a1_slot, sys.rho_plus, sys.rho_minus, tg);
    result += bracket_subst(cycle_species_series(tg), a1_slot, sys.rho_plus - sys.sigma_plus,
                            sys.rho_minus - sys.sigma_minus, tg);

    IndexSeries sigma_p2 = pleth_scale(sys.sigma_plus, 2).truncated(ti);
    IndexSeries rho_p1 = sys.rho_plus.truncated(ti);
    rho_p1.add_term(CycleMonomial::one(), 1);
    IndexSeries block_p = sys.rho_plus.truncated(ti);
    block_p -= mul_capped(sys.eta_plus + sys.sigma_plus, rho_p1, ti);
    block_p -= (sigma_p2 - mul_capped(sys.sigma_plus, sys.sigma_plus, ti)) * Rational(1, 2);
    result += times_monomial(block_p, CycleMonomial::var(Var::A, 1, 2), Rational(1, 2), tg);

    IndexSeries rho_m1 = sys.rho_minus.truncated(ti);
    rho_m1.add_term(CycleMonomial::one(), 1);
    IndexSeries block_m = sys.rho_minus.truncated(ti);
    block_m -= mul_capped(sys.eta_minus + sys.sigma_minus, rho_m1, ti);
    block_m -= (sigma_p2 - mul_capped(sys.sigma_minus, sys.sigma_minus, ti)) * Rational(1, 2);
    result += times_monomial(block_m, kA2, Rational(1, 2), tg);
    return result;
}

// ---- tilde pipeline -----------------------------------------------------------

namespace {

BiSeries one_plus_y_times(const BiSeries& f, Truncation t) {
    BiSeries r = f.truncated(t);
    for (int n = 0; n <= t.n_max; ++n)
        for (int m = 0; m + 1 <= t.m_max; ++m) r.add(n, m + 1, f.coeff(n, m));
    return r;
}

BiSeries tilde_s(const BiSeries& r, Truncation t) {
    BiSeries xr = mul_capped(BiSeries::x(t), r, t);
    return mul_capped(mul_capped(xr, r, t), reciprocal(BiSeries::one(t) + xr), t);
}

BiSeries tilde_s_tau(const BiSeries& r, const BiSeries& r_tau, Truncation t) {
    BiSeries r2 = r.pleth(2);
    BiSeries x2r2 = mul_capped(mul_capped(BiSeries::x(t), BiSeries::x(t), t), r2, t);
    BiSeries lead = BiSeries::x(t) + mul_capped(mul_capped(BiSeries::x(t), BiSeries::x(t), t), r_tau, t);
    return mul_capped(mul_capped(lead, r2, t), reciprocal(BiSeries::one(t) + x2r2), t);
}

}  // namespace

TildeNetworkSystem solve_tilde_networks(const IndexSeries& f01_plus, const IndexSeries& f01_minus,
                                        Truncation t) {
    check_core_grading(f01_plus, "W+ input");
    check_core_grading(f01_minus, "W- input");
    // source terms of vertex degree v only reach x-degrees >= v
    const IndexSeries f01p = f01_plus.truncated(t);
    const IndexSeries f01m = f01_minus.truncated(t);
    const BiSeries xs = BiSeries::x(t);

    BiSeries r = BiSeries::y(t), r_tau = BiSeries::y(t);
    BiSeries s(t), s_tau(t), h(t), h_tau(t);
    bool stationary = false;
    for (int round = 0; round <= t.n_max + 2 && !stationary; ++round) {
        s = tilde_s(r, t);
        s_tau = tilde_s_tau(r, r_tau, t);
        h = bracket_xy(f01p, xs, r, r_tau, t);
        h_tau = bracket_xy(f01m, xs, r, r_tau, t);
        BiSeries hs = h + s;
        BiSeries hs_tau = h_tau + s_tau;
        BiSeries arg_p(t), arg_m(t);
        for (int i = 1; i <= t.n_max + t.m_max; ++i) {
            BiSeries pi = hs.pleth(i);
            if (!pi.is_zero()) {
                arg_p += pi * Rational(1, static_cast<unsigned long>(i));
                if (i % 2 == 0) arg_m += pi * Rational(1, static_cast<unsigned long>(i));
            }
            if (i % 2 == 1) {
                BiSeries pt = hs_tau.pleth(i);
                if (!pt.is_zero()) arg_m += pt * Rational(1, static_cast<unsigned long>(i));
            }
        }
        BiSeries r_new = one_plus_y_times(exp_series(arg_p), t);
        r_new.add(0, 0, -1);
        BiSeries rt_new = one_plus_y_times(exp_series(arg_m), t);
        rt_new.add(0, 0, -1);
        stationary = r_new == r && rt_new == r_tau;
        r = std::move(r_new);
        r_tau = std::move(rt_new);
    }
    if (!stationary)
        throw std::logic_error("solve_tilde_networks: no fixed point; input grading violated");
    return TildeNetworkSystem{t, r, r_tau, s, s_tau, h, h_tau};
}

BiSeries tilde_two_connected(const IndexSeries& w_f, const TildeNetworkSystem& sys, Truncation graph_trunc) {
    const Truncation tg = graph_trunc;
    const Truncation ti(std::max(tg.n_max - 2, 0), tg.m_max);
    const BiSeries xs = BiSeries::x(tg);

    BiSeries result = bracket_xy(w_f.truncated(tg), xs, sys.r, sys.r_tau, tg);
    result += bracket_xy(cycle_species_series(tg), xs, sys.r - sys.s, sys.r_tau - sys.s_tau, tg);

    BiSeries x2(tg);
    x2.set(2, 0, Rational(1, 2));

    BiSeries block = sys.r.truncated(ti);
    block -= mul_capped(sys.h + sys.s, BiSeries::one(ti) + sys.r.truncated(ti), ti);
    block -= sys.s.pleth(2).truncated(ti);
    block += mul_capped(sys.s, sys.s, ti) * Rational(1, 2);
    result += mul_capped(x2, block, tg);

    BiSeries block_tau = sys.r_tau.truncated(ti);
    block_tau -= mul_capped(sys.h_tau + sys.s_tau, BiSeries::one(ti) + sys.r_tau.truncated(ti), ti);
    block_tau += mul_capped(sys.s_tau, sys.s_tau, ti) * Rational(1, 2);
    result += mul_capped(x2, block_tau, tg);
    return result;
}

// ---- labelled pipeline --------------------------------------------------------

namespace {

void check_egf_grading(const BiSeries& f01) {
    for (int n = 0; n < 2; ++n)
        for (int m = 0; m <= f01.trunc().m_max; ++m)
            if (sgn(f01.coeff(n, m)) != 0)
                throw std::invalid_argument("labelled pipeline: core network series has x-degree < 2");
}

}  // namespace

BiSeries solve_labelled_networks(const BiSeries& f01_egf, Truncation t) {
    check_egf_grading(f01_egf);
    const BiSeries f01 = f01_egf.truncated(t);
    BiSeries r = BiSeries::y(t);
    bool stationary = false;
    for (int round = 0; round <= t.n_max + 2 && !stationary; ++round) {
        BiSeries xr = mul_capped(BiSeries::x(t), r, t);
        BiSeries g = f01.subst_y(r).truncated(t);
        g += mul_capped(mul_capped(xr, r, t), reciprocal(BiSeries::one(t) + xr), t);
        BiSeries r_new = one_plus_y_times(exp_series(g), t);
        r_new.add(0, 0, -1);
        stationary = r_new == r;
        r = std::move(r_new);
    }
    if (!stationary) throw std::logic_error("solve_labelled_networks: no fixed point");
    return r;
}

BiSeries lagrange_labelled_networks(const BiSeries& f01_egf, Truncation t) {
    check_egf_grading(f01_egf);
    // g(x,y) = F01(x,y) + x y^2 / (1 + x y)
    BiSeries xy = mul_capped(BiSeries::x(t), BiSeries::y(t), t);
    BiSeries g = f01_egf.truncated(t);
    g += mul_capped(mul_capped(xy, BiSeries::y(t), t), reciprocal(BiSeries::one(t) + xy), t);
    BiSeries zeta = one_plus_y_times(exp_series(BiSeries::zero(t) - g), t);
    zeta.add(0, 0, -1);
    return compositional_inverse_y(zeta);
}

BiSeries labelled_two_connected(const BiSeries& r_egf, Truncation graph_trunc) {
    const Truncation tg = graph_trunc;
    BiSeries integrand = mul_capped(BiSeries::one(tg) + r_egf.truncated(tg),
                                    reciprocal(BiSeries::one(tg) + BiSeries::y(tg)), tg);
    BiSeries b = integrand.antiderivative_y();
    BiSeries x2(tg);
    x2.set(2, 0, Rational(1, 2));
    return mul_capped(x2, b, tg);
}

// ---- inverse extraction --------------------------------------------------------

IndexSeries extract_three_connected(const IndexSeries& w_b) {
    const Truncation tb = w_b.trunc();
    B01Series nets = b01_from_b(w_b);
    const Truncation tn = nets.net_plus.trunc();
    const IndexSeries& rho_p = nets.net_plus;
    const IndexSeries& rho_m = nets.net_minus;
    auto [sig_p, sig_m] = s_network_series(rho_p, rho_m);

    // eta from the parallel relations, grade by grade:
    //   log((1+rho+)/(1+b1)) = sum_i (eta+ + sigma+)_i / i
    IndexSeries lp = log_series(IndexSeries::one(tn) + rho_p) -
                     log_series(IndexSeries::one(tn) + IndexSeries::monomial(tn, kB1, 1));
    IndexSeries lm = log_series(IndexSeries::one(tn) + rho_m) -
                     log_series(IndexSeries::one(tn) + IndexSeries::monomial(tn, kC1, 1));
    Graded eta_p = make_graded(tn), eta_m = make_graded(tn);
    Graded hs_p = make_graded(tn), hs_m = make_graded(tn);  // eta + sigma slices
    for (int n = 0; n <= tn.n_max; ++n) {
        const auto sn = static_cast<size_t>(n);
        IndexSeries acc_p = lp.vdeg_slice(n) - sig_p.vdeg_slice(n);
        IndexSeries acc_m = lm.vdeg_slice(n) - sig_m.vdeg_slice(n);
        for (int i = 2; i <= n; ++i) {
            if (n % i) continue;
            const IndexSeries& base_p = hs_p[static_cast<size_t>(n / i)];
            if (!base_p.is_zero()) {
                IndexSeries scaled = pleth_scale(base_p, i).truncated(tn) * Rational(1, static_cast<unsigned long>(i));
                acc_p -= scaled;
                if (i % 2 == 0) acc_m -= scaled;
            }
            if (i % 2 == 1) {
                const IndexSeries& base_m = hs_m[static_cast<size_t>(n / i)];
                if (!base_m.is_zero())
                    acc_m -= pleth_scale(base_m, i).truncated(tn) * Rational(1, static_cast<unsigned long>(i));
            }
        }
        eta_p[sn] = std::move(acc_p);
        eta_m[sn] = std::move(acc_m);
        hs_p[sn] = eta_p[sn] + sig_p.vdeg_slice(n);
        hs_m[sn] = eta_m[sn] + sig_m.vdeg_slice(n);
    }

    NetworkSystem sys{tn, rho_p, rho_m, sig_p, sig_m, graded_sum(eta_p), graded_sum(eta_m)};
    // remove every non-core part of the dissymmetry identity, then invert the
    // remaining bracket W_F[a1; rho+; rho-] grade by grade (it is triangular:
    // rho = b1/c1 + higher vertex degree)
    IndexSeries rhs = w_b - two_connected_series(IndexSeries(tb), sys, tb);
    const IndexSeries a1_slot = IndexSeries::monomial(tb, kA1, 1);
    IndexSeries w_f(tb);
    for (int n = 0; n <= tb.n_max; ++n) {
        IndexSeries image = bracket_subst(w_f, a1_slot, rho_p, rho_m, Truncation(n, tb.m_max));
        IndexSeries slice = rhs.vdeg_slice(n) - image.vdeg_slice(n).truncated(tb);
        if (n < 4 && !slice.is_zero())
            throw std::invalid_argument(
                "extract_three_connected: residue of vertex degree < 4; input is not the series of a "
                "2-connected class with prescribed cores");
        w_f += slice;
    }
    return w_f;
}

// ---- beta/gamma and irreducible cores -------------------------------------------

std::pair<BiSeries, BiSeries> beta_gamma(Truncation t) {
    auto factor = [&](int xe, int ye, int sign) {  // 1 + sign x^xe y^ye
        BiSeries f = BiSeries::one(t);
        f.add(xe, ye, Rational(sign));
        return f;
    };
    BiSeries beta = BiSeries::one(t);
    for (int j = 1; 2 * j - 1 <= t.n_max; ++j) beta = mul_capped(beta, factor(2 * j - 1, 2 * j, -1), t);
    for (int j = 1; 2 * j <= t.n_max; ++j) beta = mul_capped(beta, reciprocal(factor(2 * j, 2 * j + 1, -1)), t);
    beta = one_plus_y_times(beta, t);
    beta.add(0, 0, -1);

    BiSeries gamma = BiSeries::one(t);
    for (int j = 1; 4 * j - 3 <= t.n_max; ++j) gamma = mul_capped(gamma, factor(4 * j - 3, 4 * j - 2, -1), t);
    for (int j = 1; 4 * j - 1 <= t.n_max; ++j) gamma = mul_capped(gamma, factor(4 * j - 1, 4 * j, +1), t);
    for (int j = 1; 4 * j - 2 <= t.n_max; ++j) gamma = mul_capped(gamma, reciprocal(factor(4 * j - 2, 4 * j - 1, +1)), t);
    for (int j = 1; 4 * j <= t.n_max; ++j) gamma = mul_capped(gamma, reciprocal(factor(4 * j, 4 * j + 1, -1)), t);
    gamma = one_plus_y_times(gamma, t);
    gamma.add(0, 0, -1);
    return {std::move(beta), std::move(gamma)};
}

BiSeries gsp_bracket_closed_form(Truncation t) {
    BiSeries xs = BiSeries::x(t), ys = BiSeries::y(t);
    BiSeries xy = mul_capped(xs, ys, t);
    BiSeries inner = xs + mul_capped(xy, BiSeries::one(t) - xs, t);  // x + xy(1-x)
    BiSeries x4y4(t);
    x4y4.set(4, 4, -1);
    BiSeries result = mul_capped(mul_capped(xy, inner, t), reciprocal(BiSeries::one(t) + x4y4), t);
    result.add(2, 2, -1);
    return result;
}

BiSeries irreducible_series(const IndexSeries& w_b, const IndexSeries& w_bsp, Truncation t) {
    auto [beta, gamma] = beta_gamma(t);
    BiSeries r = bracket_xy(w_b - w_bsp, BiSeries::x(t), beta, gamma, t);
    require_count_series(r, "irreducible_series");
    return r;
}

// ---- core compositions -----------------------------------------------------------

namespace {

IndexSeries core_sum(const std::vector<CoreGraph>& cores) {
    Truncation t(8, 19);  // the largest core is the M graph
    IndexSeries w(t);
    for (CoreGraph c : cores) {
        switch (c) {
            case CoreGraph::K5: w += graph_index_series(SimpleGraph::complete(5), t); break;
            case CoreGraph::MGraph: w += graph_index_series(SimpleGraph::m_graph(), t); break;
            case CoreGraph::MStarGraph: w += graph_index_series(SimpleGraph::m_star_graph(), t); break;
            case CoreGraph::ToroidalCrown:
                throw std::invalid_argument("unsupported: crown index series");
        }
    }
    return w;
}

}  // namespace

BiSeries compose_cores_tilde(const std::vector<CoreGraph>& cores, const BiSeries& n_tilde,
                             const BiSeries& n_tau_tilde, Truncation out) {
    return bracket_xy(core_sum(cores), BiSeries::x(out), n_tilde, n_tau_tilde, out);
}

BiSeries compose_cores_egf(const std::vector<CoreGraph>& cores, const BiSeries& n_egf, Truncation out) {
    return to_egf(core_sum(cores)).truncated(out).subst_y(n_egf.truncated(out));
}

}  // namespace twocon
