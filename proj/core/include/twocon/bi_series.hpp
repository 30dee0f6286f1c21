#pragma once

#include <vector>

#include "twocon/rational.hpp"
#include "twocon/truncation.hpp"

namespace twocon {

/// Truncated bivariate series in x (vertices) and y (edges) with exact
/// rational coefficients, stored densely on the (n_max+1) x (m_max+1) grid.
class BiSeries {
public:
    explicit BiSeries(Truncation t = Truncation());

    static BiSeries zero(Truncation t) { return BiSeries(t); }
    static BiSeries one(Truncation t) { return monomial(t, 0, 0, 1); }
    static BiSeries x(Truncation t) { return monomial(t, 1, 0, 1); }
    static BiSeries y(Truncation t) { return monomial(t, 0, 1, 1); }
    static BiSeries monomial(Truncation t, int n, int m, const Rational& c);

    const Truncation& trunc() const { return trunc_; }
    Rational coeff(int n, int m) const;
    /// In-bounds access without a copy; (n, m) must be within the truncation.
    const Rational& coeff_ref(int n, int m) const { return c_[idx(n, m)]; }
    void set(int n, int m, const Rational& c);
    void add(int n, int m, const Rational& c);
    bool is_zero() const;

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    BiSeries& operator*=(const Rational& c);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(BiSeries a, const Rational& c) { return a *= c; }
    friend BiSeries operator*(const Rational& c, BiSeries a) { return a *= c; }
    bool operator==(const BiSeries& o) const;

    BiSeries truncated(Truncation t) const;
    /// (x,y) -> (x^k, y^k).
    BiSeries pleth(int k) const;
    /// Substitutes y <- r(x,y); this series must have x-degree-graded
    /// dependence making the result exact to the common truncation.
    BiSeries subst_y(const BiSeries& r) const;
    /// Formal antiderivative in y with integration constant 0.
    BiSeries antiderivative_y() const;
    BiSeries derivative_y() const;
    /// Coefficient list of x^n after setting y = 1 (exact row sums).
    Rational row_sum(int n) const;

    bool all_coeffs_nonneg_integers() const;

private:
    size_t idx(int n, int m) const { return static_cast<size_t>(n) * (trunc_.m_max + 1) + m; }
    Truncation trunc_;
    std::vector<Rational> c_;
};

BiSeries mul(const BiSeries& f, const BiSeries& g);
BiSeries mul_capped(const BiSeries& f, const BiSeries& g, Truncation out);
BiSeries exp_series(const BiSeries& f);
BiSeries log_series(const BiSeries& f);
BiSeries reciprocal(const BiSeries& f);
/// Compositional inverse in y of a series with [y^0]=0 and [y^1]=1,
/// by Lagrange inversion: [y^n] inv = (1/n) [t^(n-1)] (t/f(t))^n.
BiSeries compositional_inverse_y(const BiSeries& f);

}  // namespace twocon
