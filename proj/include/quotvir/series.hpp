// Truncated power series in q over a commutative coefficient ring.
//
// A series of order N carries exact coefficients for q^0..q^N and nothing
// beyond; binary operations truncate to the smaller order and never extend
// precision. Two series compare equal iff they agree up to the smaller of
// the two orders.
//
// The coefficient ring R must provide: construction from long and from
// rational, +, -, *, ==, and ADL-visible is_zero(R) and inverse(R) (the
// latter throwing quotvir::error on non-units). rational and poly qualify.
#ifndef QUOTVIR_SERIES_HPP
#define QUOTVIR_SERIES_HPP

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

#include "rational.hpp"

namespace quotvir {

template <typename R>
class series {
  public:
    // Zero series of the given truncation order.
    explicit series(int order) : c_(static_cast<size_t>(check_order(order)) + 1, R(0)) {}

    static series constant(const R& value, int order)
    {
        series s(order);
        s.c_[0] = value;
        return s;
    }

    static series one(int order) { return constant(R(1), order); }

    // c * q^k
    static series monomial(const R& c, int k, int order)
    {
        series s(order);
        if (k < 0)
            throw error("series: negative power");
        if (k <= order)
            s.c_[k] = c;
        return s;
    }

    static series from_coefficients(std::vector<R> coeffs)
    {
        if (coeffs.empty())
            throw error("series: empty coefficient list");
        series s(static_cast<int>(coeffs.size()) - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const R& operator[](int l) const
    {
        if (l < 0 || l > order())
            throw error("series: coefficient index out of range");
        return c_[static_cast<size_t>(l)];
    }

    R& coeff(int l)
    {
        if (l < 0 || l > order())
            throw error("series: coefficient index out of range");
        return c_[static_cast<size_t>(l)];
    }

    const std::vector<R>& coefficients() const { return c_; }

    friend series operator+(const series& a, const series& b)
    {
        series r(std::min(a.order(), b.order()));
        for (int l = 0; l <= r.order(); ++l)
            r.c_[l] = a.c_[l] + b.c_[l];
        return r;
    }

    friend series operator-(const series& a, const series& b)
    {
        series r(std::min(a.order(), b.order()));
        for (int l = 0; l <= r.order(); ++l)
            r.c_[l] = a.c_[l] - b.c_[l];
        return r;
    }

    series operator-() const
    {
        series r(order());
        for (int l = 0; l <= order(); ++l)
            r.c_[l] = R(0) - c_[l];
        return r;
    }

    // Exact Cauchy product truncated to the smaller order.
    friend series operator*(const series& a, const series& b)
    {
        series r(std::min(a.order(), b.order()));
        for (int l = 0; l <= r.order(); ++l) {
            R acc(0);
            for (int k = 0; k <= l; ++k)
                acc = acc + a.c_[k] * b.c_[l - k];
            r.c_[l] = acc;
        }
        return r;
    }

    friend series operator*(const R& s, const series& a)
    {
        series r(a.order());
        for (int l = 0; l <= a.order(); ++l)
            r.c_[l] = s * a.c_[l];
        return r;
    }

    series& operator+=(const series& o) { return *this = *this + o; }
    series& operator-=(const series& o) { return *this = *this - o; }
    series& operator*=(const series& o) { return *this = *this * o; }

    // Equality up to the smaller truncation order.
    friend bool operator==(const series& a, const series& b)
    {
        int n = std::min(a.order(), b.order());
        for (int l = 0; l <= n; ++l)
            if (!(a.c_[l] == b.c_[l]))
                return false;
        return true;
    }
    friend bool operator!=(const series& a, const series& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const series& s)
    {
        bool first = true;
        for (int l = 0; l <= s.order(); ++l) {
            if (is_zero(s.c_[l]))
                continue;
            os << (first ? "" : " + ") << "(" << s.c_[l] << ")";
            if (l > 0)
                os << "*q^" << l;
            first = false;
        }
        if (first)
            os << "0";
        os << " + O(q^" << s.order() + 1 << ")";
        return os;
    }

    std::string str() const
    {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

  private:
    static int check_order(int order)
    {
        if (order < 0)
            throw error("series: negative truncation order");
        return order;
    }

    std::vector<R> c_;
};

// Lower the truncation order (never extends).
template <typename R>
series<R> truncate(const series<R>& a, int order)
{
    if (order > a.order())
        throw error("series: truncate cannot extend precision");
    series<R> r(order);
    for (int l = 0; l <= order; ++l)
        r.coeff(l) = a[l];
    return r;
}

template <typename R, typename S, typename Fn>
series<S> map_coefficients(const series<R>& a, Fn fn)
{
    series<S> r(a.order());
    for (int l = 0; l <= a.order(); ++l)
        r.coeff(l) = fn(a[l]);
    return r;
}

// Coefficient-wise ring change via S(R) conversion, e.g. rational -> poly.
template <typename S, typename R>
series<S> convert_series(const series<R>& a)
{
    return map_coefficients<R, S>(a, [](const R& c) { return S(c); });
}

// Multiplicative inverse; requires a unit constant term.
template <typename R>
series<R> invert(const series<R>& a)
{
    R c0inv = [&] {
        try {
            return inverse(a[0]);
        } catch (const error&) {
            throw error("series: invert requires a unit constant term");
        }
    }();
    series<R> r(a.order());
    r.coeff(0) = c0inv;
    for (int l = 1; l <= a.order(); ++l) {
        R acc(0);
        for (int k = 1; k <= l; ++k)
            acc = acc + a[k] * r[l - k];
        r.coeff(l) = R(0) - c0inv * acc;
    }
    return r;
}

// d/dq, one order lower.
template <typename R>
series<R> derivative(const series<R>& a)
{
    if (a.order() == 0)
        return series<R>(0);
    series<R> r(a.order() - 1);
    for (int l = 1; l <= a.order(); ++l)
        r.coeff(l - 1) = R(l) * a[l];
    return r;
}

// Antiderivative with zero constant term, one order higher. The coefficient
// ring must contain the rationals.
template <typename R>
series<R> integral(const series<R>& a)
{
    series<R> r(a.order() + 1);
    for (int l = 0; l <= a.order(); ++l)
        r.coeff(l + 1) = a[l] * inverse(R(l + 1));
    return r;
}

// exp of a series with zero constant term.
template <typename R>
series<R> exp(const series<R>& a)
{
    if (!is_zero(a[0]))
        throw error("series: exp requires zero constant term");
    series<R> r(a.order());
    r.coeff(0) = R(1);
    // n*b_n = sum_{k=1..n} k*a_k*b_{n-k}
    for (int n = 1; n <= a.order(); ++n) {
        R acc(0);
        for (int k = 1; k <= n; ++k)
            acc = acc + R(k) * a[k] * r[n - k];
        r.coeff(n) = acc * inverse(R(n));
    }
    return r;
}

// log of a series with constant term 1.
template <typename R>
series<R> log(const series<R>& a)
{
    if (!(a[0] == R(1)))
        throw error("series: log requires constant term 1");
    if (a.order() == 0)
        return series<R>(0);
    // log(a) = integral(a'/a); exact and order-preserving.
    series<R> d = derivative(a) * invert(truncate(a, a.order() - 1));
    return integral(d);
}

// base^exponent for a ring-element exponent, defined as exp(exponent*log(base));
// requires constant term 1.
template <typename R>
series<R> pow(const series<R>& base, const R& exponent)
{
    if (!(base[0] == R(1)))
        throw error("series: pow requires constant term 1");
    return exp(exponent * log(base));
}

// Integer power by repeated multiplication; negative exponents invert.
// Requires only a unit constant term.
template <typename R>
series<R> pow(const series<R>& base, long exponent)
{
    if (exponent < 0)
        return pow(invert(base), -exponent);
    series<R> acc = series<R>::one(base.order());
    series<R> b = base;
    for (long k = exponent; k > 0; k >>= 1) {
        if (k & 1)
            acc *= b;
        b *= b;
    }
    return acc;
}

// Substitution outer(inner); inner must have zero constant term.
template <typename R>
series<R> compose(const series<R>& outer, const series<R>& inner)
{
    if (!is_zero(inner[0]))
        throw error("series: compose requires inner constant term 0");
    int n = std::min(outer.order(), inner.order());
    series<R> in = truncate(inner, n);
    // Horner: r = (((out_n)*in + out_{n-1})*in + ...) + out_0
    series<R> r = series<R>::constant(outer[n], n);
    for (int k = n - 1; k >= 0; --k)
        r = r * in + series<R>::constant(outer[k], n);
    return r;
}

// Compositional inverse by Lagrange inversion: for s with s(0)=0 and unit
// q^1 coefficient, returns g with compose(g, s) = q up to truncation.
//   [q^n] g = (1/n) [x^(n-1)] (x/s(x))^n
template <typename R>
series<R> revert(const series<R>& s)
{
    if (!is_zero(s[0]))
        throw error("series: revert requires zero constant term");
    if (s.order() < 1)
        throw error("series: revert needs order >= 1");
    R lead = s[1];
    try {
        (void)inverse(lead);
    } catch (const error&) {
        throw error("series: revert requires a unit q^1 coefficient");
    }
    int n = s.order();
    // h = s/x, known to order n-1
    series<R> h(n - 1);
    for (int l = 0; l <= n - 1; ++l)
        h.coeff(l) = s[l + 1];
    series<R> hinv = invert(h);
    series<R> g(n);
    series<R> p = hinv; // hinv^k at step k
    for (int k = 1; k <= n; ++k) {
        g.coeff(k) = p[k - 1] * inverse(R(k));
        if (k < n)
            p *= hinv;
    }
    return g;
}

} // namespace quotvir

#endif
