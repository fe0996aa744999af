// Univariate polynomials over a commutative coefficient ring, and Sylvester
// resultants. The coefficient ring only needs +, -, *, == and is_zero; no
// division is ever performed, so polynomial coefficient rings (e.g.
// unipoly<rational> itself) are fine.
//
// Resultant sign convention: det of the Sylvester matrix whose first deg(g)
// rows carry the coefficients of f. Under it
//   resultant(f, g) = lc(f)^deg(g) * prod_{f(x_i)=0} g(x_i),
// so resultant(x - a, x - b) = a - b.
#ifndef QUOTVIR_UNIPOLY_HPP
#define QUOTVIR_UNIPOLY_HPP

#include <cstdint>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "rational.hpp"

namespace quotvir {

template <typename R>
class unipoly {
  public:
    unipoly() = default; // zero polynomial
    unipoly(const R& c)
    {
        if (!is_zero(c))
            c_.push_back(c);
    }
    unipoly(long n) : unipoly(R(n)) {}

    static unipoly variable()
    {
        unipoly p;
        p.c_ = {R(0), R(1)};
        return p;
    }

    static unipoly from_coefficients(std::vector<R> coeffs)
    {
        unipoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }

    // Coefficient of x^i, zero beyond the degree.
    R coeff(int i) const
    {
        if (i < 0 || i > degree())
            return R(0);
        return c_[static_cast<size_t>(i)];
    }

    R leading() const
    {
        if (is_zero_poly())
            throw error("unipoly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend unipoly operator+(const unipoly& a, const unipoly& b)
    {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return from_coefficients(std::move(c));
    }

    friend unipoly operator-(const unipoly& a, const unipoly& b)
    {
        std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
        for (size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return from_coefficients(std::move(c));
    }

    unipoly operator-() const
    {
        unipoly r = *this;
        for (auto& c : r.c_)
            c = R(0) - c;
        return r;
    }

    friend unipoly operator*(const unipoly& a, const unipoly& b)
    {
        if (a.is_zero_poly() || b.is_zero_poly())
            return unipoly();
        std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return from_coefficients(std::move(c));
    }

    friend unipoly operator*(const R& s, const unipoly& a)
    {
        std::vector<R> c(a.c_);
        for (auto& x : c)
            x = s * x;
        return from_coefficients(std::move(c));
    }

    unipoly& operator+=(const unipoly& o) { return *this = *this + o; }
    unipoly& operator-=(const unipoly& o) { return *this = *this - o; }
    unipoly& operator*=(const unipoly& o) { return *this = *this * o; }

    friend bool operator==(const unipoly& a, const unipoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const unipoly& a, const unipoly& b) { return !(a == b); }

    R evaluate(const R& x) const
    {
        R acc(0);
        for (int i = degree(); i >= 0; --i)
            acc = acc * x + c_[static_cast<size_t>(i)];
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const unipoly& p)
    {
        if (p.is_zero_poly())
            return os << "0";
        bool first = true;
        for (int i = 0; i <= p.degree(); ++i) {
            if (is_zero(p.coeff(i)))
                continue;
            os << (first ? "" : " + ") << "(" << p.coeff(i) << ")";
            if (i > 0)
                os << "*x^" << i;
            first = false;
        }
        return os;
    }

  private:
    void trim()
    {
        while (!c_.empty() && is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<R> c_;
};

template <typename R>
bool is_zero(const unipoly<R>& p)
{
    return p.is_zero_poly();
}

// Substitution x -> x + c by exact binomial expansion.
template <typename R>
unipoly<R> shift(const unipoly<R>& f, const R& c)
{
    unipoly<R> r;
    unipoly<R> xc = unipoly<R>::variable() + unipoly<R>(c);
    unipoly<R> p(R(1));
    for (int i = 0; i <= f.degree(); ++i) {
        r += f.coeff(i) * p;
        if (i < f.degree())
            p *= xc;
    }
    return r;
}

template <typename R>
unipoly<R> pow(const unipoly<R>& base, long e)
{
    if (e < 0)
        throw error("unipoly: negative power");
    unipoly<R> acc(R(1)), b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1)
            acc *= b;
        b *= b;
    }
    return acc;
}

namespace detail {

// Determinant by expansion along rows with memoization on the set of unused
// columns; O(2^n * n) ring multiplications, no division.
template <typename R>
R det(const std::vector<std::vector<R>>& m)
{
    const int n = static_cast<int>(m.size());
    if (n == 0)
        return R(1);
    std::unordered_map<std::uint32_t, R> memo;
    auto rec = [&](auto&& self, std::uint32_t cols) -> R {
        // row index = number of columns already consumed
        int row = n - __builtin_popcount(cols);
        if (row == n)
            return R(1);
        auto it = memo.find(cols);
        if (it != memo.end())
            return it->second;
        R acc(0);
        int pos = 0; // index of c among the still-unused columns
        for (int c = 0; c < n; ++c) {
            if (!(cols & (1u << c)))
                continue;
            if (!is_zero(m[row][c])) {
                R sub = self(self, cols & ~(1u << c));
                R term = m[row][c] * sub;
                acc = (pos % 2 == 0) ? acc + term : acc - term;
            }
            ++pos;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return rec(rec, (n >= 32 ? ~0u : (1u << n) - 1u));
}

} // namespace detail

// Sylvester resultant of f and g; both must have degree >= 1.
template <typename R>
R resultant(const unipoly<R>& f, const unipoly<R>& g)
{
    const int n = f.degree(), m = g.degree();
    if (n < 1 || m < 1)
        throw error("resultant: both polynomials must have degree >= 1");
    const int size = n + m;
    if (size > 24)
        throw error("resultant: degree too large");
    std::vector<std::vector<R>> s(static_cast<size_t>(size),
                                  std::vector<R>(static_cast<size_t>(size), R(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[i][i + j] = f.coeff(n - j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s[m + i][i + j] = g.coeff(m - j);
    return detail::det(s);
}

} // namespace quotvir

#endif
