#include "twocon/bi_series.hpp"

#include <stdexcept>

namespace twocon {

BiSeries::BiSeries(Truncation t) : trunc_(t) {
    c_.resize(static_cast<size_t>(t.n_max + 1) * (t.m_max + 1));
}

BiSeries BiSeries::monomial(Truncation t, int n, int m, const Rational& c) {
    BiSeries s(t);
    s.set(n, m, c);
    return s;
}

Rational BiSeries::coeff(int n, int m) const {
    if (n < 0 || m < 0 || n > trunc_.n_max || m > trunc_.m_max) return Rational(0);
    return c_[idx(n, m)];
}

void BiSeries::set(int n, int m, const Rational& c) {
    if (n < 0 || m < 0) throw std::invalid_argument("BiSeries::set: negative exponent");
    if (n > trunc_.n_max || m > trunc_.m_max) return;
    c_[idx(n, m)] = c;
}

void BiSeries::add(int n, int m, const Rational& c) {
    if (n < 0 || m < 0 || n > trunc_.n_max || m > trunc_.m_max) return;
    c_[idx(n, m)] += c;
}

bool BiSeries::is_zero() const {
    for (const auto& v : c_)
        if (sgn(v) != 0) return false;
    return true;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    if (!(o.trunc_ == trunc_)) {
        BiSeries r = truncated(trunc_.meet(o.trunc_));
        for (int n = 0; n <= r.trunc_.n_max; ++n)
            for (int m = 0; m <= r.trunc_.m_max; ++m) r.c_[r.idx(n, m)] += o.coeff(n, m);
        return *this = std::move(r);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
    if (!(o.trunc_ == trunc_)) {
        BiSeries r = truncated(trunc_.meet(o.trunc_));
        for (int n = 0; n <= r.trunc_.n_max; ++n)
            for (int m = 0; m <= r.trunc_.m_max; ++m) r.c_[r.idx(n, m)] -= o.coeff(n, m);
        return *this = std::move(r);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

BiSeries& BiSeries::operator*=(const Rational& c) {
    for (auto& v : c_) v *= c;
    return *this;
}

bool BiSeries::operator==(const BiSeries& o) const {
    Truncation t = trunc_.meet(o.trunc_);
    if (!(trunc_ == o.trunc_)) {
        // compare on the common grid only when bounds match; otherwise strict
        for (int n = 0; n <= t.n_max; ++n)
            for (int m = 0; m <= t.m_max; ++m)
                if (coeff(n, m) != o.coeff(n, m)) return false;
        return true;
    }
    return c_ == o.c_;
}

BiSeries BiSeries::truncated(Truncation t) const {
    BiSeries r(t);
    for (int n = 0; n <= t.n_max; ++n)
        for (int m = 0; m <= t.m_max; ++m) r.c_[r.idx(n, m)] = coeff(n, m);
    return r;
}

BiSeries BiSeries::pleth(int k) const {
    BiSeries r(trunc_);
    for (int n = 0; n * k <= trunc_.n_max; ++n)
        for (int m = 0; m * k <= trunc_.m_max; ++m) r.c_[r.idx(n * k, m * k)] = coeff(n, m);
    return r;
}

BiSeries BiSeries::antiderivative_y() const {
    BiSeries r(trunc_);
    for (int n = 0; n <= trunc_.n_max; ++n)
        for (int m = 0; m + 1 <= trunc_.m_max; ++m) {
            const Rational& v = c_[idx(n, m)];
            if (sgn(v) != 0) r.c_[r.idx(n, m + 1)] = v / Rational(m + 1);
        }
    return r;
}

BiSeries BiSeries::derivative_y() const {
    BiSeries r(trunc_);
    for (int n = 0; n <= trunc_.n_max; ++n)
        for (int m = 1; m <= trunc_.m_max; ++m) {
            const Rational& v = c_[idx(n, m)];
            if (sgn(v) != 0) r.c_[r.idx(n, m - 1)] = v * Rational(m);
        }
    return r;
}

Rational BiSeries::row_sum(int n) const {
    Rational s = 0;
    for (int m = 0; m <= trunc_.m_max; ++m) s += coeff(n, m);
    return s;
}

bool BiSeries::all_coeffs_nonneg_integers() const {
    for (const auto& v : c_)
        if (sgn(v) < 0 || !is_integer(v)) return false;
    return true;
}

namespace {

struct GridCell {
    int n, m;
    const Rational* c;
};

std::vector<GridCell> nonzero_cells(const BiSeries& s, Truncation bound) {
    std::vector<GridCell> v;
    for (int n = 0; n <= std::min(s.trunc().n_max, bound.n_max); ++n)
        for (int m = 0; m <= std::min(s.trunc().m_max, bound.m_max); ++m) {
            const Rational& c = s.coeff_ref(n, m);
            if (sgn(c) != 0) v.push_back({n, m, &c});
        }
    return v;  // sorted by (n, m) by construction
}

}  // namespace

BiSeries mul_capped(const BiSeries& f, const BiSeries& g, Truncation out) {
    BiSeries r(out);
    auto fc = nonzero_cells(f, out);
    auto gc = nonzero_cells(g, out);
    if (fc.size() > gc.size()) std::swap(fc, gc);
    Rational prod;
    for (const auto& a : fc) {
        const int ncap = out.n_max - a.n, mcap = out.m_max - a.m;
        for (const auto& b : gc) {
            if (b.n > ncap) break;
            if (b.m > mcap) continue;
            prod = *a.c * *b.c;
            r.add(a.n + b.n, a.m + b.m, prod);
        }
    }
    return r;
}

BiSeries mul(const BiSeries& f, const BiSeries& g) { return mul_capped(f, g, f.trunc().meet(g.trunc())); }

BiSeries BiSeries::subst_y(const BiSeries& r) const {
    if (sgn(r.coeff(0, 0)) != 0) throw std::invalid_argument("subst_y: substituted series has a constant term");
    Truncation out = trunc_.meet(r.trunc());
    BiSeries acc(out);
    // Horner-free: accumulate r^m incrementally
    BiSeries pw = BiSeries::one(out);
    for (int m = 0; m <= trunc_.m_max; ++m) {
        if (m > 0) {
            pw = mul_capped(pw, r, out);
            if (pw.is_zero()) break;
        }
        for (int n = 0; n <= trunc_.n_max; ++n) {
            Rational a = coeff(n, m);
            if (sgn(a) == 0) continue;
            // multiply pw by a*x^n and accumulate
            for (int pn = 0; pn + n <= out.n_max; ++pn)
                for (int pm = 0; pm <= out.m_max; ++pm) {
                    Rational b = pw.coeff(pn, pm);
                    if (sgn(b) != 0) acc.add(pn + n, pm, a * b);
                }
        }
    }
    return acc;
}

namespace {

struct Cell {
    int n, m;
    Rational c;
};

// nonzero cells grouped by total degree n+m
std::vector<std::vector<Cell>> cells_by_degree(const BiSeries& s, int top) {
    std::vector<std::vector<Cell>> v(static_cast<size_t>(top) + 1);
    for (int n = 0; n <= s.trunc().n_max; ++n)
        for (int m = 0; m <= s.trunc().m_max; ++m) {
            Rational c = s.coeff(n, m);
            if (sgn(c) != 0 && n + m <= top) v[static_cast<size_t>(n + m)].push_back({n, m, std::move(c)});
        }
    return v;
}

}  // namespace

BiSeries exp_series(const BiSeries& f) {
    if (sgn(f.coeff(0, 0)) != 0) throw std::invalid_argument("exp_series: nonzero constant term");
    const Truncation t = f.trunc();
    const int top = t.n_max + t.m_max;
    auto a = cells_by_degree(f, top);
    std::vector<std::vector<Cell>> e(static_cast<size_t>(top) + 1);
    e[0].push_back({0, 0, Rational(1)});
    BiSeries result = BiSeries::one(t);
    Rational prod;
    for (int k = 1; k <= top; ++k) {
        BiSeries acc(t);
        for (int s = 1; s <= k; ++s) {
            const auto& as = a[static_cast<size_t>(s)];
            const auto& es = e[static_cast<size_t>(k - s)];
            if (as.empty() || es.empty()) continue;
            for (const Cell& x : as)
                for (const Cell& y : es) {
                    if (x.n + y.n > t.n_max || x.m + y.m > t.m_max) continue;
                    prod = x.c * y.c;
                    prod *= s;
                    acc.add(x.n + y.n, x.m + y.m, prod);
                }
        }
        acc *= Rational(1, static_cast<unsigned long>(k));
        auto& ek = e[static_cast<size_t>(k)];
        for (int n = 0; n <= std::min(k, t.n_max); ++n) {
            int m = k - n;
            if (m > t.m_max) continue;
            Rational c = acc.coeff(n, m);
            if (sgn(c) != 0) {
                result.add(n, m, c);
                ek.push_back({n, m, std::move(c)});
            }
        }
    }
    return result;
}

BiSeries log_series(const BiSeries& f) {
    if (f.coeff(0, 0) != 1) throw std::invalid_argument("log_series: constant term must be 1");
    const Truncation t = f.trunc();
    const int top = t.n_max + t.m_max;
    BiSeries g = f;
    g.add(0, 0, -1);
    auto gs = cells_by_degree(g, top);
    std::vector<std::vector<Cell>> l(static_cast<size_t>(top) + 1);
    BiSeries result(t);
    Rational prod;
    for (int k = 1; k <= top; ++k) {
        BiSeries acc(t);
        for (const Cell& x : gs[static_cast<size_t>(k)]) acc.add(x.n, x.m, x.c * Rational(k));
        for (int s = 1; s < k; ++s) {
            const auto& ls = l[static_cast<size_t>(s)];
            const auto& grest = gs[static_cast<size_t>(k - s)];
            if (ls.empty() || grest.empty()) continue;
            for (const Cell& x : ls)
                for (const Cell& y : grest) {
                    if (x.n + y.n > t.n_max || x.m + y.m > t.m_max) continue;
                    prod = x.c * y.c;
                    prod *= -s;
                    acc.add(x.n + y.n, x.m + y.m, prod);
                }
        }
        acc *= Rational(1, static_cast<unsigned long>(k));
        auto& lk = l[static_cast<size_t>(k)];
        for (int n = 0; n <= std::min(k, t.n_max); ++n) {
            int m = k - n;
            if (m > t.m_max) continue;
            Rational c = acc.coeff(n, m);
            if (sgn(c) != 0) {
                result.add(n, m, c);
                lk.push_back({n, m, std::move(c)});
            }
        }
    }
    return result;
}

BiSeries reciprocal(const BiSeries& f) {
    if (f.coeff(0, 0) != 1) throw std::invalid_argument("reciprocal: constant term must be 1");
    const Truncation t = f.trunc();
    const int top = t.n_max + t.m_max;
    BiSeries u = f;
    u.add(0, 0, -1);
    auto us = cells_by_degree(u, top);
    std::vector<std::vector<Cell>> r(static_cast<size_t>(top) + 1);
    r[0].push_back({0, 0, Rational(1)});
    BiSeries result = BiSeries::one(t);
    Rational prod;
    for (int k = 1; k <= top; ++k) {
        BiSeries acc(t);
        for (int s = 1; s <= k; ++s) {
            const auto& uss = us[static_cast<size_t>(s)];
            const auto& rs = r[static_cast<size_t>(k - s)];
            if (uss.empty() || rs.empty()) continue;
            for (const Cell& x : uss)
                for (const Cell& y : rs) {
                    if (x.n + y.n > t.n_max || x.m + y.m > t.m_max) continue;
                    prod = x.c * y.c;
                    acc.add(x.n + y.n, x.m + y.m, -prod);
                }
        }
        auto& rk = r[static_cast<size_t>(k)];
        for (int n = 0; n <= std::min(k, t.n_max); ++n) {
            int m = k - n;
            if (m > t.m_max) continue;
            Rational c = acc.coeff(n, m);
            if (sgn(c) != 0) {
                result.add(n, m, c);
                rk.push_back({n, m, std::move(c)});
            }
        }
    }
    return result;
}

BiSeries compositional_inverse_y(const BiSeries& f) {
    if (sgn(f.coeff(0, 0)) != 0) throw std::invalid_argument("compositional_inverse_y: [y^0] must vanish");
    const Truncation t = f.trunc();
    // phi = t / f(t) as a series in (x, t): shift f's m-index down by one
    BiSeries shifted(t);
    for (int n = 0; n <= t.n_max; ++n)
        for (int m = 1; m <= t.m_max; ++m) shifted.set(n, m - 1, f.coeff(n, m));
    if (shifted.coeff(0, 0) != 1) throw std::invalid_argument("compositional_inverse_y: [y^1] must be 1");
    BiSeries phi = reciprocal(shifted);
    BiSeries inv(t);
    BiSeries pw = phi;  // phi^k
    for (int k = 1; k <= t.m_max; ++k) {
        if (k > 1) pw = mul(pw, phi);
        for (int n = 0; n <= t.n_max; ++n) {
            Rational c = pw.coeff(n, k - 1);
            if (sgn(c) != 0) inv.set(n, k, c / Rational(k));
        }
    }
    return inv;
}

}  // namespace twocon
