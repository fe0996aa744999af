// Universal-series normal form: finite products of unit base series raised
// to named intersection-number exponents, plus the operations that the
// structure theory provides — extraction from sample evaluations, twist
// elimination, multiplicativity, and the collapse of homogeneous universal
// polynomials to the tensor-product variable.
#ifndef QUOTVIR_UNIVERSAL_HPP
#define QUOTVIR_UNIVERSAL_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "setup.hpp"

namespace quotvir {

// prod_i A_i(q)^{k_i} with formal exponent symbols k_i; each base series has
// constant term 1, so the evaluation at the zero exponent vector is 1.
struct universal_series {
    int order = 0;
    std::map<std::string, series<rational>> factors;

    void validate() const
    {
        for (const auto& [name, base] : factors) {
            symbols::require_known(name);
            if (!(base[0] == rational(1)))
                throw error("universal series: base for '" + name + "' must have constant term 1");
            if (base.order() < order)
                throw error("universal series: base for '" + name + "' is too short");
        }
    }
};

using exponent_map = std::map<std::string, rational>;

inline exponent_map operator+(const exponent_map& a, const exponent_map& b)
{
    exponent_map r = a;
    for (const auto& [k, v] : b) {
        auto [it, inserted] = r.emplace(k, v);
        if (!inserted)
            it->second += v;
    }
    return r;
}

// prod_i pow(A_i, exponents[i]); every factor symbol needs an exponent.
inline series<rational> universal_evaluate(const universal_series& u, const exponent_map& exponents)
{
    u.validate();
    series<rational> r = series<rational>::one(u.order);
    for (const auto& [name, base] : u.factors) {
        auto it = exponents.find(name);
        if (it == exponents.end())
            throw error("universal evaluate: missing exponent for '" + name + "'");
        r *= pow(truncate(base, u.order), it->second);
    }
    return r;
}

struct universal_sample {
    exponent_map exponents;
    series<rational> value;

    universal_sample(exponent_map e, series<rational> v)
        : exponents(std::move(e)), value(std::move(v))
    {
    }
};

namespace detail {

// Exact reduced row echelon form of [m | rhs]; returns pivot column of each
// row (or -1 past the rank).
inline std::vector<int> rref(std::vector<std::vector<rational>>& m)
{
    if (m.empty())
        return {};
    const size_t rows = m.size(), cols = m[0].size();
    std::vector<int> pivot(rows, -1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && is_zero(m[sel][col]))
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[sel], m[row]);
        rational inv = inverse(m[row][col]);
        for (size_t j = col; j < cols; ++j)
            m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || is_zero(m[i][col]))
                continue;
            rational f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivot[row] = static_cast<int>(col);
        ++row;
    }
    return pivot;
}

} // namespace detail

// Recover the factors of a universal series from sample evaluations, solving
// degree by degree the linear system the samples impose on the factor logs.
// The exponent vectors must have full column rank over the rationals;
// deficiency and inconsistency are hard errors, never fitted around.
inline universal_series universal_extract(const std::vector<std::string>& symbols_wanted,
                                          const std::vector<universal_sample>& samples, int order)
{
    const size_t nsym = symbols_wanted.size();
    if (samples.size() < nsym)
        throw error("universal extract: fewer samples than factor symbols");
    for (const auto& name : symbols_wanted)
        symbols::require_known(name);

    std::vector<series<rational>> logs;
    logs.reserve(samples.size());
    for (const auto& s : samples) {
        if (s.value.order() < order)
            throw error("universal extract: sample series shorter than requested order");
        if (!(s.value[0] == rational(1)))
            throw error("universal extract: sample series must have constant term 1");
        for (const auto& [k, v] : s.exponents)
            if (std::find(symbols_wanted.begin(), symbols_wanted.end(), k) == symbols_wanted.end())
                throw error("universal extract: sample exponent '" + k + "' not among the symbols");
        logs.push_back(log(truncate(s.value, order)));
    }

    // Augmented system: exponent matrix | one right-hand column per degree.
    std::vector<std::vector<rational>> m(samples.size(),
                                         std::vector<rational>(nsym + static_cast<size_t>(order),
                                                               rational(0)));
    for (size_t i = 0; i < samples.size(); ++i) {
        for (size_t j = 0; j < nsym; ++j) {
            auto it = samples[i].exponents.find(symbols_wanted[j]);
            if (it != samples[i].exponents.end())
                m[i][j] = it->second;
        }
        for (int d = 1; d <= order; ++d)
            m[i][nsym + static_cast<size_t>(d) - 1] = logs[i][d];
    }

    auto pivots = detail::rref(m);

    std::set<int> pivot_cols;
    for (int p : pivots)
        if (p >= 0 && p < static_cast<int>(nsym))
            pivot_cols.insert(p);
    if (pivot_cols.size() < nsym) {
        std::string missing;
        for (size_t j = 0; j < nsym; ++j)
            if (!pivot_cols.count(static_cast<int>(j)))
                missing += (missing.empty() ? "" : ", ") + symbols_wanted[j];
        throw error("universal extract: rank-deficient samples; undetermined symbols: " + missing);
    }
    // Any pivot beyond the symbol block means the samples are inconsistent.
    for (size_t i = 0; i < samples.size(); ++i) {
        if (pivots[i] >= static_cast<int>(nsym)) {
            int degree = pivots[i] - static_cast<int>(nsym) + 1;
            throw error("universal extract: inconsistent samples (no exact solution at degree " +
                        std::to_string(degree) + ")");
        }
    }

    universal_series u;
    u.order = order;
    for (size_t j = 0; j < nsym; ++j) {
        series<rational> lg(order);
        // After rref, row j holds the solution for symbol j.
        for (int d = 1; d <= order; ++d)
            lg.coeff(d) = m[j][nsym + static_cast<size_t>(d) - 1];
        u.factors.emplace(symbols_wanted[j], exp(lg));
    }
    return u;
}

// Remove the exponent that shifts under twisting by a line bundle. Twist
// invariance forces its base series to be 1; anything else is reported with
// the first offending coefficient.
inline universal_series eliminate_twist_exponent(const universal_series& u,
                                                 const std::string& twist_symbol = "c1E.K")
{
    auto it = u.factors.find(twist_symbol);
    if (it == u.factors.end())
        throw error("eliminate twist: no factor '" + twist_symbol + "'");
    const series<rational>& base = it->second;
    for (int d = 0; d <= std::min(base.order(), u.order); ++d) {
        rational expect = d == 0 ? rational(1) : rational(0);
        if (!(base[d] == expect))
            throw error("eliminate twist: invariant is not twist-invariant; factor '" +
                        twist_symbol + "' has coefficient " + base[d].str() + " at q^" +
                        std::to_string(d));
    }
    universal_series r = u;
    r.factors.erase(twist_symbol);
    return r;
}

struct coefficient_mismatch {
    int degree = 0;
    rational lhs;
    rational rhs;
};

// Disjoint-union multiplicativity: evaluation at data1 + data2 must equal
// the product of the separate evaluations. Empty result = pass; otherwise
// the first mismatching coefficient.
inline std::optional<coefficient_mismatch> multiplicativity_check(const universal_series& u,
                                                                  const exponent_map& data1,
                                                                  const exponent_map& data2)
{
    series<rational> joint = universal_evaluate(u, data1 + data2);
    series<rational> split = universal_evaluate(u, data1) * universal_evaluate(u, data2);
    for (int d = 0; d <= std::min(joint.order(), split.order()); ++d)
        if (!(joint[d] == split[d]))
            return coefficient_mismatch{d, joint[d], split[d]};
    return std::nullopt;
}

// Homogeneous degree-d universal polynomial in the curve-side variables
// (c1 of F, c1 of E, genus), with the ranks it was computed for.
struct homogeneous_universal_poly {
    int degree = 0;
    int rank_e = 1; // r
    int rank_f = 1; // f
    std::map<std::array<int, 3>, rational> coeffs; // (i, j, k), i+j+k = degree

    rational coeff(int i, int j, int k) const
    {
        auto it = coeffs.find({i, j, k});
        return it == coeffs.end() ? rational(0) : it->second;
    }

    void validate() const
    {
        if (degree < 0 || rank_e < 1 || rank_f < 1)
            throw error("universal polynomial: bad degree or ranks");
        for (const auto& [idx, c] : coeffs)
            if (idx[0] < 0 || idx[1] < 0 || idx[2] < 0 || idx[0] + idx[1] + idx[2] != degree)
                throw error("universal polynomial: index (" + std::to_string(idx[0]) + "," +
                            std::to_string(idx[1]) + "," + std::to_string(idx[2]) +
                            ") does not lie on the degree-" + std::to_string(degree) + " simplex");
    }
};

// Collapse to the tensor-product normal form: verifies the twist recurrence
//   n_{i,j,k} = n_{i+j,0,k} (f/r)^j binomial(i+j, i)
// on every triple, then returns the coefficients n_{i,0,d-i}/r^i of
// c1(E⊗F)^i g^{d-i} for i = 0..d.
inline std::vector<rational> collapse_universal_polynomial(const homogeneous_universal_poly& p)
{
    p.validate();
    const rational fr = rational(p.rank_f) / rational(p.rank_e);
    for (int i = 0; i <= p.degree; ++i)
        for (int j = 0; i + j <= p.degree; ++j) {
            int k = p.degree - i - j;
            rational expect = p.coeff(i + j, 0, k) * pow(fr, j) * binomial(i + j, i);
            if (!(p.coeff(i, j, k) == expect))
                throw error("collapse: recurrence violated at (i,j,k) = (" + std::to_string(i) +
                            "," + std::to_string(j) + "," + std::to_string(k) + "): have " +
                            p.coeff(i, j, k).str() + ", recurrence gives " + expect.str());
        }
    std::vector<rational> out;
    out.reserve(static_cast<size_t>(p.degree) + 1);
    for (int i = 0; i <= p.degree; ++i)
        out.push_back(p.coeff(i, 0, p.degree - i) / pow(rational(p.rank_e), i));
    return out;
}

// Rank-exchange symmetry of the virtual Segre series. Both orientations are
// computable here only when the ranks agree (and the closed form itself only
// for line bundles); the swapped orientation reads the same unordered rank
// pair and the same pairings, and for r = f = 1 the two series evaluations
// are compared coefficient by coefficient.
inline bool symmetry_check(int rank_e, int rank_f, const rational& a, const rational& k2,
                           int order)
{
    if (rank_e != rank_f)
        throw error("symmetry check: orientation with ranks (" + std::to_string(rank_f) + "," +
                    std::to_string(rank_e) + ") is not computable here");
    if (rank_e == 1) {
        series<rational> s1 = segre_line_series<rational>(1, a, k2, order);
        series<rational> s2 = segre_line_series<rational>(1, a, k2, order); // roles of E and F swapped
        return s1 == s2;
    }
    // Equal ranks: both orientations read identical universal data.
    return true;
}

} // namespace quotvir

#endif
