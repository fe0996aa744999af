// Floating-point cross-check oracle. The exact pipeline never extracts
// roots; this numeric path exists only so the verification suite can compare
// the resultant-based product against a root-by-root evaluation.
#ifndef QUOTVIR_ROOTS_ORACLE_HPP
#define QUOTVIR_ROOTS_ORACLE_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "rational.hpp"
#include "series.hpp"

namespace quotvir {
namespace oracle {

using cplx = std::complex<double>;

// Durand-Kerner iteration; coeffs[i] is the x^i coefficient, leading nonzero.
inline std::vector<cplx> polynomial_roots(std::vector<cplx> coeffs)
{
    while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0)
        coeffs.pop_back();
    const int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1)
        throw error("roots oracle: degree must be >= 1");
    for (auto& c : coeffs)
        c /= coeffs.back();
    auto eval = [&](cplx x) {
        cplx acc = 0.0;
        for (int i = deg; i >= 0; --i)
            acc = acc * x + coeffs[static_cast<size_t>(i)];
        return acc;
    };
    std::vector<cplx> roots(static_cast<size_t>(deg));
    cplx seed(0.4, 0.9);
    cplx p = 1.0;
    for (auto& r : roots) {
        p *= seed;
        r = p;
    }
    for (int it = 0; it < 500; ++it) {
        double moved = 0.0;
        for (int i = 0; i < deg; ++i) {
            cplx den = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i)
                    den *= roots[i] - roots[j];
            cplx delta = eval(roots[i]) / den;
            roots[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14)
            break;
    }
    return roots;
}

// prod_{i<j} (1 - (x_i - x_j)^2) over the numeric roots of x^r - q(x-1)^r.
inline double pairwise_shift_value(int rank, double q)
{
    if (rank == 1)
        return 1.0;
    std::vector<cplx> coeffs(static_cast<size_t>(rank) + 1, 0.0);
    // x^r - q(x-1)^r
    for (int k = 0; k <= rank; ++k) {
        double binom = 1.0;
        for (int i = 1; i <= k; ++i)
            binom = binom * double(rank - k + i) / double(i);
        double sign = ((rank - k) % 2 == 0) ? 1.0 : -1.0;
        coeffs[static_cast<size_t>(k)] -= q * binom * sign;
    }
    coeffs[static_cast<size_t>(rank)] += 1.0;
    auto roots = polynomial_roots(coeffs);
    cplx prod = 1.0;
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) {
            cplx d = roots[i] - roots[j];
            prod *= (1.0 - d * d);
        }
    return prod.real();
}

// Exact evaluation of a truncated series at a rational point, then one final
// conversion to double.
inline double evaluate_series(const series<rational>& s, const rational& q)
{
    rational acc(0);
    for (int l = s.order(); l >= 0; --l)
        acc = acc * q + s[l];
    return acc.to_double();
}

} // namespace oracle
} // namespace quotvir

#endif
