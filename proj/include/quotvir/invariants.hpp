// Closed-form generating series for virtual tautological integrals over Quot
// schemes of a surface: topological Euler series, virtual Euler series,
// top-Euler-class series, and the line-bundle virtual Segre series.
//
// Exponents may be numeric or symbolic: every constructor is generic over
// the coefficient ring R (rational or poly), with the exponent an R value.
#ifndef QUOTVIR_INVARIANTS_HPP
#define QUOTVIR_INVARIANTS_HPP

#include "rational.hpp"
#include "series.hpp"
#include "setup.hpp"
#include "unipoly.hpp"

namespace quotvir {

// 1 - q at the given order.
template <typename R>
series<R> one_minus_q(int order)
{
    series<R> s = series<R>::one(order);
    if (order >= 1)
        s.coeff(1) = R(-1);
    return s;
}

// Partition generating series prod_{m>=1} (1-q^m)^{-1} raised to r*chi_top.
// The exponent may be symbolic.
template <typename R>
series<R> gottsche_series(int rank, const R& chi_top, int order)
{
    if (rank < 1)
        throw error("gottsche_series: rank must be >= 1");
    series<R> base = series<R>::one(order);
    for (int m = 1; m <= order; ++m) {
        series<R> factor = series<R>::one(order);
        factor.coeff(m) = R(-1);
        base *= invert(factor);
    }
    return pow(base, R(rank) * chi_top);
}

inline series<rational> gottsche_series(const quot_setup& setup)
{
    return gottsche_series<rational>(setup.rank, setup.pairing("chiTop"), setup.order);
}

namespace detail {

// x^r - q(x-1)^r as a polynomial in x with coefficients in Q[q]; its leading
// coefficient is 1 - q.
inline unipoly<unipoly<rational>> root_polynomial(int rank)
{
    using qpoly = unipoly<rational>;
    using xpoly = unipoly<qpoly>;
    xpoly xr = pow(xpoly::variable(), rank);
    xpoly xm1r = shift(xr, qpoly(rational(-1)));
    return xr - qpoly::variable() * xm1r;
}

inline series<rational> qpoly_to_series(const unipoly<rational>& p, int order)
{
    series<rational> s(order);
    for (int i = 0; i <= std::min(order, p.degree()); ++i)
        s.coeff(i) = p.coeff(i);
    return s;
}

} // namespace detail

// Series expansion of prod_{i<j} (1 - (x_i - x_j)^2), where x_1..x_r are the
// roots of x^r - q(x-1)^r = 0. Evaluated without root extraction: with
// f = x^r - q(x-1)^r,
//   prod_{i<j}(1 - (x_i-x_j)^2) = (-1)^r (1-q)^{-2r} Res_x(f(x), f(x-1)),
// the resultant being an exact polynomial in q; the division by (1-q)^{2r}
// happens as a series expansion at the very end. The overall sign is the one
// that makes r = 1 give the empty product 1.
inline series<rational> pairwise_shift_product(int rank, int order)
{
    if (rank < 1)
        throw error("pairwise_shift_product: rank must be >= 1");
    using qpoly = unipoly<rational>;
    auto f = detail::root_polynomial(rank);
    auto g = shift(f, qpoly(rational(-1)));
    qpoly res = resultant(f, g);
    series<rational> s = detail::qpoly_to_series(res, order);
    series<rational> den = pow(invert(one_minus_q<rational>(order)), static_cast<long>(2 * rank));
    s = s * den;
    if (rank % 2 != 0)
        s = -s;
    return s;
}

// Base of the virtual Euler series:
//   (1-q)^{2r} (1-2^r q)^{-r} prod_{i<j}(1 - (x_i-x_j)^2).
inline series<rational> chi_vir_base(int rank, int order)
{
    if (rank < 1)
        throw error("chi_vir_base: rank must be >= 1");
    series<rational> num = pow(one_minus_q<rational>(order), static_cast<long>(2 * rank));
    series<rational> den = series<rational>::one(order);
    if (order >= 1)
        den.coeff(1) = -pow(rational(2), rank);
    series<rational> base = num * pow(invert(den), static_cast<long>(rank));
    return base * pairwise_shift_product(rank, order);
}

// Virtual Euler characteristic series: chi_vir_base(r)^{K2}. Depends on E
// only through its rank.
template <typename R>
series<R> chi_vir_series(int rank, const R& k2, int order)
{
    return pow(convert_series<R>(chi_vir_base(rank, order)), k2);
}

inline series<rational> chi_vir_series(const quot_setup& setup)
{
    return chi_vir_series<rational>(setup.rank, setup.pairing("K2"), setup.order);
}

// Top-intersection series of e(L^[l])^r: (1-q)^{-m} with m = c1(E⊗L)c1(S);
// the q^l coefficient is binomial(m+l-1, l).
template <typename R>
series<R> euler_top_series(const R& m, int order)
{
    return pow(invert(one_minus_q<R>(order)), m);
}

inline series<rational> euler_top_series(const quot_setup& setup)
{
    return euler_top_series<rational>(setup.pairing("c1EL.K"), setup.order);
}

// The classical change of variable q = (-1)^{r+1} p(1+p)^r as a series in p.
inline series<rational> segre_substitution(int rank, int order)
{
    if (rank < 1)
        throw error("segre_substitution: rank must be >= 1");
    series<rational> p = series<rational>::monomial(rational(1), 1, order);
    series<rational> s = p * pow(series<rational>::one(order) + p, static_cast<long>(rank));
    if (rank % 2 == 0)
        s = -s;
    return s;
}

namespace detail {

// Unsigned change of variable q = p(1+p)^r: the sign under which the series
// below matches the l=1 projective-bundle integral (chow.hpp) for every r.
// The signed classical substitution agrees with it for odd r.
inline series<rational> segre_substitution_resolved(int rank, int order)
{
    series<rational> p = series<rational>::monomial(rational(1), 1, order);
    return p * pow(series<rational>::one(order) + p, static_cast<long>(rank));
}

} // namespace detail

// The p-side closed form (1+p)^a ((1+(r+1)p)/(1+p)^{r+1})^{K2}.
template <typename R>
series<R> segre_line_p_series(int rank, const R& a, const R& k2, int order)
{
    series<R> p = series<R>::monomial(R(1), 1, order);
    series<R> one = series<R>::one(order);
    series<R> first = pow(one + p, a);
    series<R> frac = (one + R(rank + 1) * p) * pow(invert(one + p), static_cast<long>(rank + 1));
    return first * pow(frac, k2);
}

// Virtual Segre series of a line bundle L:
//   sum_l (-1)^{lr} q^l * (integral of s(L^[l]) against the length-l virtual
//   class), with a = c1(E⊗L)c1(S).
// Computed as the p-side closed form composed with p(q) = revert(p(1+p)^r).
// The sign of the change of variable is pinned by the l=1 projective-bundle
// oracle: the q^1 coefficient must equal a (the unweighted l=1 integral is
// (-1)^r a), which forces the unsigned substitution for every r.
template <typename R>
series<R> segre_line_series(int rank, const R& a, const R& k2, int order)
{
    if (rank < 1)
        throw error("segre_line_series: rank must be >= 1");
    series<R> pq = convert_series<R>(revert(detail::segre_substitution_resolved(rank, order)));
    return compose(segre_line_p_series(rank, a, k2, order), pq);
}

inline series<rational> segre_line_series(const quot_setup& setup)
{
    return segre_line_series<rational>(setup.rank, setup.pairing("c1EL.K"),
                                       setup.pairing("K2"), setup.order);
}

// Transfer between smooth curve-side integrals and surface-side virtual
// integrals at length l: a factor (-1)^l.
template <typename T>
T curve_reduction_sign(long l, const T& curve_value)
{
    if (l < 0)
        throw error("curve_reduction_sign: negative length");
    return l % 2 == 0 ? curve_value : -curve_value;
}

enum class hilb_series_kind { chi_vir, euler_top };

// r = 1 consistency entry point used by the oracle suite: the Hilbert-scheme
// specialization of the series above.
inline series<rational> hilb_virtual_series_r1(const quot_setup& setup, hilb_series_kind kind)
{
    if (setup.rank != 1)
        throw error("hilb_virtual_series_r1: rank must be 1");
    switch (kind) {
    case hilb_series_kind::chi_vir:
        return chi_vir_series(setup);
    case hilb_series_kind::euler_top: {
        rational m = setup.pairings.count("c1EL.K") ? setup.pairing("c1EL.K")
                                                    : setup.pairing("c1L.K");
        return euler_top_series<rational>(m, setup.order);
    }
    }
    throw error("hilb_virtual_series_r1: unknown kind");
}

} // namespace quotvir

#endif
