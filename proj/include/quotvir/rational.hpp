// Exact rational scalar: the base field for every computation in quotvir.
#ifndef QUOTVIR_RATIONAL_HPP
#define QUOTVIR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quotvir {

// Thrown for every data-level failure: bad preconditions, missing pairings,
// non-unit inversions, malformed input.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using bigint = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Arithmetic is exact; there is no conversion that rounds
// except the explicit to_double().
class rational {
  public:
    rational() = default;
    rational(int n) : v_(n) {}
    rational(long n) : v_(n) {}
    rational(long long n) : v_(n) {}
    rational(const bigint& n) : v_(n) {}

    rational(const bigint& num, const bigint& den)
    {
        if (den == 0)
            throw error("rational: zero denominator");
        v_ = boost::multiprecision::cpp_rational(num);
        v_ /= boost::multiprecision::cpp_rational(den);
    }

    bigint num() const { return numerator(v_); }
    bigint den() const { return denominator(v_); }

    bool is_integer() const { return denominator(v_) == 1; }

    friend rational operator+(const rational& a, const rational& b) { return rational(a.v_ + b.v_); }
    friend rational operator-(const rational& a, const rational& b) { return rational(a.v_ - b.v_); }
    friend rational operator*(const rational& a, const rational& b) { return rational(a.v_ * b.v_); }
    friend rational operator/(const rational& a, const rational& b)
    {
        if (b.v_ == 0)
            throw error("rational: division by zero");
        return rational(a.v_ / b.v_);
    }
    rational operator-() const { return rational(-v_); }

    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
    rational& operator/=(const rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

    int sign() const { return v_.sign(); }

    double to_double() const { return v_.convert_to<double>(); }

    // "num" or "num/den"
    std::string str() const
    {
        std::string s = numerator(v_).str();
        if (denominator(v_) != 1)
            s += "/" + denominator(v_).str();
        return s;
    }

    // Accepts "num" or "num/den" with optional leading '-'.
    static rational parse(std::string_view text)
    {
        auto bad = [&] { return error("rational: cannot parse '" + std::string(text) + "'"); };
        if (text.empty())
            throw bad();
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return rational(bigint(std::string(text)));
            bigint num{std::string(text.substr(0, slash))};
            bigint den{std::string(text.substr(slash + 1))};
            return rational(num, den);
        } catch (const std::runtime_error&) {
            throw bad();
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

  private:
    explicit rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline bool is_zero(const rational& r) { return r == rational(0); }

// Multiplicative inverse; every nonzero rational is a unit.
inline rational inverse(const rational& r)
{
    if (is_zero(r))
        throw error("rational: not a unit (zero)");
    return rational(1) / r;
}

inline rational pow(const rational& base, long e)
{
    if (e < 0)
        return pow(inverse(base), -e);
    rational acc(1), b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1)
            acc *= b;
        b *= b;
    }
    return acc;
}

inline rational abs(const rational& r) { return r.sign() < 0 ? -r : r; }

// Generalized binomial n(n-1)...(n-k+1)/k!; in particular binomial(n, 0) = 1
// for every n, and 0 <= n < k gives 0. The symbolic-upper-argument version is
// in poly.hpp.
inline rational binomial(long n, long k)
{
    if (k < 0)
        return rational(0);
    rational acc(1);
    for (long i = 0; i < k; ++i)
        acc = acc * rational(n - i) / rational(i + 1);
    return acc;
}

inline rational factorial(long n)
{
    rational acc(1);
    for (long i = 2; i <= n; ++i)
        acc *= rational(i);
    return acc;
}

} // namespace quotvir

#endif
