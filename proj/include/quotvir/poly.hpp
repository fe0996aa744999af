// Multivariate polynomials over exact rationals in named symbols.
// The symbols stand for intersection numbers and ranks; a polynomial is a
// unit iff it is a nonzero constant.
#ifndef QUOTVIR_POLY_HPP
#define QUOTVIR_POLY_HPP

#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "rational.hpp"

namespace quotvir {

// Monomial: symbol name -> positive exponent. Empty map = 1.
using monomial = std::map<std::string, int>;

class poly {
  public:
    poly() = default;
    poly(int n) : poly(rational(n)) {}
    poly(long n) : poly(rational(n)) {}
    poly(const rational& c)
    {
        if (!quotvir::is_zero(c))
            terms_[monomial{}] = c;
    }

    static poly variable(const std::string& name, int exponent = 1)
    {
        poly p;
        if (exponent < 0)
            throw error("poly: negative exponent");
        if (exponent == 0)
            return poly(1);
        p.terms_[monomial{{name, exponent}}] = rational(1);
        return p;
    }

    const std::map<monomial, rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    rational constant_value() const
    {
        if (!is_constant())
            throw error("poly: not a constant: " + str());
        return terms_.empty() ? rational(0) : terms_.begin()->second;
    }

    // Coefficient of a given monomial (zero if absent).
    rational coeff(const monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? rational(0) : it->second;
    }

    int total_degree() const
    {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int t = 0;
            for (const auto& [name, e] : m)
                t += e;
            d = std::max(d, t);
        }
        return d;
    }

    friend poly operator+(const poly& a, const poly& b)
    {
        poly r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, c);
        return r;
    }

    friend poly operator-(const poly& a, const poly& b)
    {
        poly r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, -c);
        return r;
    }

    poly operator-() const
    {
        poly r;
        for (const auto& [m, c] : terms_)
            r.terms_[m] = -c;
        return r;
    }

    friend poly operator*(const poly& a, const poly& b)
    {
        poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                monomial m = ma;
                for (const auto& [name, e] : mb)
                    m[name] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }

    poly& operator+=(const poly& o) { return *this = *this + o; }
    poly& operator-=(const poly& o) { return *this = *this - o; }
    poly& operator*=(const poly& o) { return *this = *this * o; }

    friend bool operator==(const poly& a, const poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const poly& a, const poly& b) { return !(a == b); }

    // Simultaneous substitution of variables by polynomials; variables not
    // mentioned are kept.
    poly substitute(const std::map<std::string, poly>& repl) const
    {
        poly r;
        for (const auto& [m, c] : terms_) {
            poly t(c);
            for (const auto& [name, e] : m) {
                auto it = repl.find(name);
                poly base = it == repl.end() ? variable(name) : it->second;
                for (int i = 0; i < e; ++i)
                    t *= base;
            }
            r += t;
        }
        return r;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            rational a = c;
            if (s.empty()) {
                if (a.sign() < 0) {
                    s += "-";
                    a = -a;
                }
            } else {
                s += a.sign() < 0 ? " - " : " + ";
                if (a.sign() < 0)
                    a = -a;
            }
            std::string vars;
            for (const auto& [name, e] : m) {
                if (!vars.empty())
                    vars += "*";
                vars += name;
                if (e > 1)
                    vars += "^" + std::to_string(e);
            }
            if (vars.empty())
                s += a.str();
            else if (a == rational(1))
                s += vars;
            else
                s += a.str() + "*" + vars;
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const poly& p) { return os << p.str(); }

  private:
    void add_term(const monomial& m, const rational& c)
    {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!quotvir::is_zero(c))
                terms_[m] = c;
            return;
        }
        it->second += c;
        if (quotvir::is_zero(it->second))
            terms_.erase(it);
    }

    std::map<monomial, rational> terms_;
};

inline bool is_zero(const poly& p) { return p.is_zero(); }

// Units of the polynomial ring are the nonzero constants.
inline poly inverse(const poly& p)
{
    if (!p.is_constant() || p.is_zero())
        throw error("poly: not a unit: " + p.str());
    return poly(inverse(p.constant_value()));
}

inline poly pow(const poly& base, long e)
{
    if (e < 0)
        return pow(inverse(base), -e);
    poly acc(1), b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1)
            acc *= b;
        b *= b;
    }
    return acc;
}

// Falling-factorial binomial: binomial(x, k) = x(x-1)...(x-k+1)/k! for a
// polynomial upper argument.
inline poly binomial(const poly& x, long k)
{
    if (k < 0)
        return poly(0);
    poly acc(1);
    for (long i = 0; i < k; ++i)
        acc *= (x - poly(i));
    return acc * poly(inverse(factorial(k)));
}

} // namespace quotvir

#endif
