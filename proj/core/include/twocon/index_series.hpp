#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "twocon/monomial.hpp"
#include "twocon/rational.hpp"
#include "twocon/truncation.hpp"

namespace twocon {

/// Truncated formal sum of cycle-index monomials with exact rational
/// coefficients. Stored terms always respect the truncation bounds and zero
/// coefficients are pruned on write, so equality is map equality.
class IndexSeries {
public:
    using TermMap = std::unordered_map<CycleMonomial, Rational, MonomialHash>;

    explicit IndexSeries(Truncation t = Truncation()) : trunc_(t) {}

    static IndexSeries zero(Truncation t) { return IndexSeries(t); }
    static IndexSeries one(Truncation t);
    static IndexSeries monomial(Truncation t, const CycleMonomial& m, const Rational& c = 1);

    const Truncation& trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * m, dropping over-truncation terms and pruning zeros.
    void add_term(const CycleMonomial& m, const Rational& c);
    Rational coeff(const CycleMonomial& m) const;
    Rational constant_term() const { return coeff(CycleMonomial::one()); }
    /// True when some term has vertex degree 0 and edge degree 0.
    bool has_constant_term() const { return terms_.find(CycleMonomial::one()) != terms_.end(); }
    int min_vertex_degree() const;  // -1 when zero

    IndexSeries& operator+=(const IndexSeries& o);
    IndexSeries& operator-=(const IndexSeries& o);
    IndexSeries& operator*=(const Rational& c);
    friend IndexSeries operator+(IndexSeries a, const IndexSeries& b) { return a += b; }
    friend IndexSeries operator-(IndexSeries a, const IndexSeries& b) { return a -= b; }
    friend IndexSeries operator*(IndexSeries a, const Rational& c) { return a *= c; }
    friend IndexSeries operator*(const Rational& c, IndexSeries a) { return a *= c; }

    bool operator==(const IndexSeries& o) const { return terms_ == o.terms_; }

    IndexSeries truncated(Truncation t) const;
    /// Homogeneous part of the given vertex degree (same truncation).
    IndexSeries vdeg_slice(int v) const;
    /// Terms in canonical monomial order, for deterministic output.
    std::vector<std::pair<CycleMonomial, Rational>> sorted_terms() const;

private:
    Truncation trunc_;
    TermMap terms_;
};

/// Exact product; operands' truncations are met bound-wise.
IndexSeries mul(const IndexSeries& f, const IndexSeries& g);
/// Product truncated to an explicit output bound (used when a later factor
/// shifts the grading, so the blind meet would be too conservative).
IndexSeries mul_capped(const IndexSeries& f, const IndexSeries& g, Truncation out);
/// f * (c * m), with the output truncation widened by the degree of m.
IndexSeries times_monomial(const IndexSeries& f, const CycleMonomial& m, const Rational& c, Truncation out);

/// exp of a series with zero constant term, exact to truncation.
IndexSeries exp_series(const IndexSeries& f);
/// log of a series with constant term 1; inverse of exp_series.
IndexSeries log_series(const IndexSeries& f);
/// 1/f for f with constant term 1 (geometric series).
IndexSeries reciprocal(const IndexSeries& f);

}  // namespace twocon
