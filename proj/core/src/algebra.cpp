#include "twocon/algebra.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace twocon {

namespace {
constexpr int kTruncCap = 1 << 20;
int scaled_bound(int b, int k) {
    long v = static_cast<long>(b) * k + (k - 1);
    return v > kTruncCap ? kTruncCap : static_cast<int>(v);
}
}  // namespace

IndexSeries pleth_scale(const IndexSeries& f, int k) {
    if (k < 1) throw std::invalid_argument("pleth_scale: k must be >= 1");
    if (k == 1) return f;
    Truncation t(scaled_bound(f.trunc().n_max, k), scaled_bound(f.trunc().m_max, k));
    IndexSeries r(t);
    for (const auto& [m, c] : f.terms()) r.add_term(m.scale_indices(k), c);
    return r;
}

namespace {

// min vertex/edge degree over terms; (0,0) for the zero series
std::pair<int, int> min_degrees(const IndexSeries& s) {
    int mv = -1, me = -1;
    for (const auto& [m, c] : s.terms()) {
        int v = m.vertex_degree(), e = m.edge_degree();
        if (mv < 0 || v < mv) mv = v;
        if (me < 0 || e < me) me = e;
    }
    return {mv < 0 ? 0 : mv, me < 0 ? 0 : me};
}

struct SlotPowers {
    const IndexSeries* base;
    std::vector<IndexSeries> powers;  // powers[e-1] = base^e
};

}  // namespace

namespace {

// Per-(family, index) slot data. When the vertex-degree-0 part of the slot is
// a single monomial with coefficient 1 (the typical b_k + higher shape of a
// network series), powers are expanded binomially so that high exponents of
// the degree-0 variable never force large intermediate products.
struct SlotData {
    IndexSeries series;                 // pleth-scaled, truncated
    bool binomial = false;
    CycleMonomial lead;                 // the vdeg-0 monomial in binomial mode
    IndexSeries rest;                   // series - lead
    std::vector<IndexSeries> powers;    // plain mode: series^e, e = 1,2,...
    std::vector<IndexSeries> rest_pow;  // binomial mode: rest^j, j = 1,2,...
    std::map<int, IndexSeries> factor_cache;
};

Rational binom(int n, int k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace

IndexSeries bracket_subst(const IndexSeries& l, const IndexSeries& f, const IndexSeries& g,
                          const IndexSeries& h, std::optional<Truncation> out_opt) {
    for (const auto& [m, c] : f.terms())
        if (m.vertex_degree() == 0)
            throw std::invalid_argument("bracket_subst: a-slot has a term of vertex degree 0");
    if (g.has_constant_term() || h.has_constant_term())
        throw std::invalid_argument("bracket_subst: b/c-slot has a constant term");

    Truncation out = out_opt ? *out_opt : l.trunc();
    const IndexSeries* slots[3] = {&f, &g, &h};
    std::pair<int, int> slot_min[3] = {min_degrees(f), min_degrees(g), min_degrees(h)};

    std::map<std::pair<int, int>, SlotData> cache;
    auto slot_data = [&](Var fam, int k) -> SlotData& {
        auto key = std::make_pair(static_cast<int>(fam), k);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        SlotData d;
        d.series = pleth_scale(*slots[static_cast<int>(fam)], k).truncated(out);
        IndexSeries zero_part(out), rest(out);
        for (const auto& [m, c] : d.series.terms())
            (m.vertex_degree() == 0 ? zero_part : rest).add_term(m, c);
        if (zero_part.term_count() == 1 && zero_part.terms().begin()->second == 1) {
            d.binomial = true;
            d.lead = zero_part.terms().begin()->first;
            d.rest = std::move(rest);
        }
        return cache.emplace(key, std::move(d)).first->second;
    };
    auto rest_power = [&](SlotData& d, int j) -> const IndexSeries& {
        while (static_cast<int>(d.rest_pow.size()) < j) {
            if (d.rest_pow.empty())
                d.rest_pow.push_back(d.rest);
            else
                d.rest_pow.push_back(mul_capped(d.rest_pow.back(), d.rest, out));
        }
        return d.rest_pow[static_cast<size_t>(j) - 1];
    };
    auto plain_power = [&](SlotData& d, int e) -> const IndexSeries& {
        while (static_cast<int>(d.powers.size()) < e) {
            if (d.powers.empty())
                d.powers.push_back(d.series);
            else
                d.powers.push_back(mul_capped(d.powers.back(), d.series, out));
        }
        return d.powers[static_cast<size_t>(e) - 1];
    };
    // (lead + rest)^e expanded binomially; rest has positive vertex degree,
    // so only j <= out.n_max summands survive truncation.
    auto binomial_factor = [&](SlotData& d, int e) -> const IndexSeries& {
        auto hit = d.factor_cache.find(e);
        if (hit != d.factor_cache.end()) return hit->second;
        IndexSeries factor(out);
        for (int j = 0; j <= e; ++j) {
            CycleMonomial leadpow = CycleMonomial::one();
            for (int i = 0; i < e - j; ++i) leadpow = leadpow.times(d.lead);
            if (leadpow.edge_degree() > out.m_max || leadpow.vertex_degree() > out.n_max) continue;
            if (j == 0) {
                factor.add_term(leadpow, binom(e, j));
            } else {
                if (d.rest.is_zero()) break;
                const IndexSeries& rp = rest_power(d, j);
                if (rp.is_zero()) break;
                factor += times_monomial(rp, leadpow, binom(e, j), out);
            }
        }
        return d.factor_cache.emplace(e, std::move(factor)).first->second;
    };

    IndexSeries result(out);
    for (const auto& [mono, coeff] : l.terms()) {
        // cheap lower bound on the image degrees
        int lo_v = 0, lo_e = 0;
        mono.for_each([&](Var fam, int k, int e) {
            lo_v += slot_min[static_cast<int>(fam)].first * k * e;
            lo_e += slot_min[static_cast<int>(fam)].second * k * e;
        });
        if (lo_v > out.n_max || lo_e > out.m_max) continue;

        IndexSeries acc = IndexSeries::monomial(out, CycleMonomial::one(), coeff);
        mono.for_each([&](Var fam, int k, int e) {
            if (acc.is_zero()) return;
            SlotData& d = slot_data(fam, k);
            if (d.binomial)
                acc = mul_capped(acc, binomial_factor(d, e), out);
            else
                acc = mul_capped(acc, plain_power(d, e), out);
        });
        result += acc;
    }
    return result;
}

BiSeries specialize(const IndexSeries& l, const std::function<BiSeries(Var, int)>& slot, Truncation out) {
    std::map<std::pair<int, int>, std::vector<BiSeries>> cache;  // slot powers
    auto power = [&](Var f, int k, int e) -> const BiSeries& {
        auto key = std::make_pair(static_cast<int>(f), k);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, std::vector<BiSeries>{slot(f, k).truncated(out)}).first;
        auto& pw = it->second;
        while (static_cast<int>(pw.size()) < e) pw.push_back(mul_capped(pw.back(), pw.front(), out));
        return pw[static_cast<size_t>(e) - 1];
    };
    BiSeries result(out);
    for (const auto& [mono, coeff] : l.terms()) {
        BiSeries acc = BiSeries::monomial(out, 0, 0, coeff);
        mono.for_each([&](Var f, int k, int e) {
            if (acc.is_zero()) return;
            acc = mul_capped(acc, power(f, k, e), out);
        });
        result += acc;
    }
    return result;
}

BiSeries bracket_xy(const IndexSeries& l, const BiSeries& alpha, const BiSeries& beta,
                    const BiSeries& gamma, Truncation out) {
    if (sgn(alpha.coeff(0, 0)) != 0 || sgn(beta.coeff(0, 0)) != 0 || sgn(gamma.coeff(0, 0)) != 0)
        throw std::invalid_argument("bracket_xy: slot has a constant term");
    return specialize(
        l,
        [&](Var f, int k) {
            switch (f) {
                case Var::A: return alpha.pleth(k);
                case Var::B: return beta.pleth(k);
                default: return gamma.pleth(k);
            }
        },
        out);
}

BiSeries to_egf(const IndexSeries& w) {
    BiSeries r(w.trunc());
    for (const auto& [m, c] : w.terms()) {
        if (!m.a_vars_linear_only()) continue;
        r.add(m.exponent(Var::A, 1), m.edge_degree(), c);
    }
    return r;
}

BiSeries to_egf_via_specialize(const IndexSeries& w) {
    Truncation out = w.trunc();
    return specialize(
        w,
        [&](Var f, int k) {
            if (f == Var::A) return k == 1 ? BiSeries::x(out) : BiSeries::zero(out);
            return BiSeries::monomial(out, 0, k, 1);
        },
        out);
}

BiSeries to_tilde_unchecked(const IndexSeries& w) {
    BiSeries r(w.trunc());
    for (const auto& [m, c] : w.terms()) r.add(m.vertex_degree(), m.edge_degree(), c);
    return r;
}

void require_count_series(const BiSeries& s, const char* what) {
    for (int n = 0; n <= s.trunc().n_max; ++n)
        for (int m = 0; m <= s.trunc().m_max; ++m) {
            Rational c = s.coeff(n, m);
            if (sgn(c) < 0 || !is_integer(c))
                throw IntegrityError(std::string(what) + ": coefficient at x^" + std::to_string(n) + " y^" +
                                     std::to_string(m) + " is " + c.get_str() +
                                     ", expected a non-negative integer");
        }
}

BiSeries to_tilde(const IndexSeries& w) {
    BiSeries r = to_tilde_unchecked(w);
    require_count_series(r, "to_tilde");
    return r;
}

}  // namespace twocon
