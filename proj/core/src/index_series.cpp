#include "twocon/index_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace twocon {

IndexSeries IndexSeries::one(Truncation t) { return monomial(t, CycleMonomial::one(), 1); }

IndexSeries IndexSeries::monomial(Truncation t, const CycleMonomial& m, const Rational& c) {
    IndexSeries s(t);
    s.add_term(m, c);
    return s;
}

void IndexSeries::add_term(const CycleMonomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    if (!trunc_.admits(m.vertex_degree(), m.edge_degree())) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational IndexSeries::coeff(const CycleMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int IndexSeries::min_vertex_degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
        int v = m.vertex_degree();
        if (best < 0 || v < best) best = v;
    }
    return best;
}

IndexSeries& IndexSeries::operator+=(const IndexSeries& o) {
    trunc_ = trunc_.meet(o.trunc_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    // re-truncate our own terms in case the meet tightened the bounds
    if (!(trunc_ == o.trunc_)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (!trunc_.admits(it->first.vertex_degree(), it->first.edge_degree()))
                it = terms_.erase(it);
            else
                ++it;
        }
    }
    return *this;
}

IndexSeries& IndexSeries::operator-=(const IndexSeries& o) {
    trunc_ = trunc_.meet(o.trunc_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    if (!(trunc_ == o.trunc_)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (!trunc_.admits(it->first.vertex_degree(), it->first.edge_degree()))
                it = terms_.erase(it);
            else
                ++it;
        }
    }
    return *this;
}

IndexSeries& IndexSeries::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

IndexSeries IndexSeries::truncated(Truncation t) const {
    IndexSeries r(t);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

IndexSeries IndexSeries::vdeg_slice(int v) const {
    IndexSeries r(trunc_);
    for (const auto& [m, c] : terms_)
        if (m.vertex_degree() == v) r.add_term(m, c);
    return r;
}

std::vector<std::pair<CycleMonomial, Rational>> IndexSeries::sorted_terms() const {
    std::vector<std::pair<CycleMonomial, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return CycleMonomial::canonical_less(a.first, b.first); });
    return v;
}

namespace {

struct FlatTerm {
    const CycleMonomial* m;
    const Rational* c;
    int vdeg, edeg;
};

std::vector<FlatTerm> flatten(const IndexSeries& s) {
    std::vector<FlatTerm> v;
    v.reserve(s.term_count());
    for (const auto& [m, c] : s.terms()) v.push_back({&m, &c, m.vertex_degree(), m.edge_degree()});
    return v;
}

}  // namespace

IndexSeries mul_capped(const IndexSeries& f, const IndexSeries& g, Truncation out) {
    IndexSeries r(out);
    if (f.is_zero() || g.is_zero()) return r;
    auto ft = flatten(f);
    auto gt = flatten(g);
    // iterate the smaller operand outermost
    if (ft.size() > gt.size()) std::swap(ft, gt);
    std::sort(gt.begin(), gt.end(), [](const FlatTerm& a, const FlatTerm& b) {
        return a.vdeg != b.vdeg ? a.vdeg < b.vdeg : a.edeg < b.edeg;
    });
    Rational prod;
    for (const auto& a : ft) {
        const int vcap = out.n_max - a.vdeg;
        const int ecap = out.m_max - a.edeg;
        if (vcap < 0 || ecap < 0) continue;
        for (const auto& b : gt) {
            if (b.vdeg > vcap) break;
            if (b.edeg > ecap) continue;
            prod = *a.c * *b.c;
            r.add_term(a.m->times(*b.m), prod);
        }
    }
    return r;
}

IndexSeries mul(const IndexSeries& f, const IndexSeries& g) {
    return mul_capped(f, g, f.trunc().meet(g.trunc()));
}

IndexSeries times_monomial(const IndexSeries& f, const CycleMonomial& m, const Rational& c, Truncation out) {
    IndexSeries r(out);
    if (sgn(c) == 0) return r;
    for (const auto& [fm, fc] : f.terms()) r.add_term(fm.times(m), fc * c);
    return r;
}

namespace {

// Slices a series by combined grade vdeg+edeg; grade 0 holds the constant.
std::vector<IndexSeries> grade_slices(const IndexSeries& s, int top) {
    std::vector<IndexSeries> v(static_cast<size_t>(top) + 1, IndexSeries(s.trunc()));
    for (const auto& [m, c] : s.terms()) {
        int t = m.vertex_degree() + m.edge_degree();
        if (t <= top) v[static_cast<size_t>(t)].add_term(m, c);
    }
    return v;
}

}  // namespace

IndexSeries exp_series(const IndexSeries& f) {
    if (f.has_constant_term()) throw std::invalid_argument("exp_series: nonzero constant term");
    const Truncation t = f.trunc();
    const int top = t.n_max + t.m_max;
    auto a = grade_slices(f, top);
    std::vector<IndexSeries> e(static_cast<size_t>(top) + 1, IndexSeries(t));
    e[0] = IndexSeries::one(t);
    IndexSeries result = e[0];
    for (int k = 1; k <= top; ++k) {
        IndexSeries acc(t);
        for (int s = 1; s <= k; ++s) {
            if (a[static_cast<size_t>(s)].is_zero() || e[static_cast<size_t>(k - s)].is_zero()) continue;
            acc += mul(a[static_cast<size_t>(s)], e[static_cast<size_t>(k - s)]) * Rational(s);
        }
        acc *= Rational(1, static_cast<unsigned long>(k));
        e[static_cast<size_t>(k)] = std::move(acc);
        result += e[static_cast<size_t>(k)];
    }
    return result;
}

IndexSeries log_series(const IndexSeries& f) {
    if (f.constant_term() != 1) throw std::invalid_argument("log_series: constant term must be 1");
    const Truncation t = f.trunc();
    const int top = t.n_max + t.m_max;
    IndexSeries g = f;
    g.add_term(CycleMonomial::one(), -1);
    auto gs = grade_slices(g, top);
    std::vector<IndexSeries> l(static_cast<size_t>(top) + 1, IndexSeries(t));
    IndexSeries result(t);
    for (int k = 1; k <= top; ++k) {
        IndexSeries acc = gs[static_cast<size_t>(k)];
        IndexSeries corr(t);
        for (int s = 1; s < k; ++s) {
            if (l[static_cast<size_t>(s)].is_zero() || gs[static_cast<size_t>(k - s)].is_zero()) continue;
            corr += mul(l[static_cast<size_t>(s)], gs[static_cast<size_t>(k - s)]) * Rational(s);
        }
        corr *= Rational(1, static_cast<unsigned long>(k));
        acc -= corr;
        l[static_cast<size_t>(k)] = std::move(acc);
        result += l[static_cast<size_t>(k)];
    }
    return result;
}

IndexSeries reciprocal(const IndexSeries& f) {
    if (f.constant_term() != 1) throw std::invalid_argument("reciprocal: constant term must be 1");
    const Truncation t = f.trunc();
    const int top = t.n_max + t.m_max;
    IndexSeries u = f;
    u.add_term(CycleMonomial::one(), -1);
    auto us = grade_slices(u, top);
    std::vector<IndexSeries> r(static_cast<size_t>(top) + 1, IndexSeries(t));
    r[0] = IndexSeries::one(t);
    IndexSeries result = r[0];
    for (int k = 1; k <= top; ++k) {
        IndexSeries acc(t);
        for (int s = 1; s <= k; ++s) {
            if (us[static_cast<size_t>(s)].is_zero() || r[static_cast<size_t>(k - s)].is_zero()) continue;
            acc -= mul(us[static_cast<size_t>(s)], r[static_cast<size_t>(k - s)]);
        }
        r[static_cast<size_t>(k)] = std::move(acc);
        result += r[static_cast<size_t>(k)];
    }
    return result;
}

}  // namespace twocon
