#pragma once

#include <functional>
#include <optional>

#include "twocon/bi_series.hpp"
#include "twocon/index_series.hpp"

namespace twocon {

/// Thrown by the non-negative-integrality tripwire on counting series.
struct IntegrityError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Plethystic index scaling f_k: every variable index multiplied by k.
IndexSeries pleth_scale(const IndexSeries& f, int k);

/// Bracket substitution l[f; g; h]: a_k <- f_k, b_k <- g_k, c_k <- h_k.
/// f must have positive vertex degree in every term; g and h must have no
/// constant term (otherwise a truncation grade would depend on infinitely
/// many dropped terms of l).
IndexSeries bracket_subst(const IndexSeries& l, const IndexSeries& f, const IndexSeries& g,
                          const IndexSeries& h, std::optional<Truncation> out = std::nullopt);

/// Bracket substitution with bivariate slots:
/// a_k <- alpha(x^k,y^k), b_k <- beta(x^k,y^k), c_k <- gamma(x^k,y^k).
BiSeries bracket_xy(const IndexSeries& l, const BiSeries& alpha, const BiSeries& beta,
                    const BiSeries& gamma, Truncation out);

/// Fully general specialization: slot(family, k) supplies the bivariate
/// series substituted for each variable. Reference path for the two
/// specializations below.
BiSeries specialize(const IndexSeries& l, const std::function<BiSeries(Var, int)>& slot, Truncation out);

/// Exponential generating function: a_1 <- x, a_k <- 0 (k>=2), b_k,c_k <- y^k.
BiSeries to_egf(const IndexSeries& w);
/// Reference implementation of to_egf through the generic specialize engine.
BiSeries to_egf_via_specialize(const IndexSeries& w);

/// Tilde (isomorphism-class) generating function: a_k <- x^k, b_k,c_k <- y^k.
/// Unchecked variant; to_tilde additionally enforces that every coefficient
/// is a non-negative integer and throws IntegrityError otherwise.
BiSeries to_tilde_unchecked(const IndexSeries& w);
BiSeries to_tilde(const IndexSeries& w);

/// Throws IntegrityError unless every coefficient is a non-negative integer.
void require_count_series(const BiSeries& s, const char* what);

}  // namespace twocon
