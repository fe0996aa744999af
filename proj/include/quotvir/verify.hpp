// End-to-end verification suite: every closed form is checked against an
// independent evaluation path (naive coefficient arithmetic, floating-point
// roots, or the length-1 projective-bundle oracle). Used both by the
// acceptance test binary and by the `verify` CLI command.
#ifndef QUOTVIR_VERIFY_HPP
#define QUOTVIR_VERIFY_HPP

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "chow.hpp"
#include "invariants.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "roots_oracle.hpp"
#include "series.hpp"
#include "universal.hpp"

namespace quotvir {
namespace verify {

struct criterion_result {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

namespace naive {

// Independent coefficient arithmetic on raw vectors; deliberately not the
// series class.
using coeffs = std::vector<rational>;

inline coeffs mul(const coeffs& a, const coeffs& b, int order)
{
    coeffs r(static_cast<size_t>(order) + 1, rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (i + j <= static_cast<size_t>(order))
                r[i + j] += a[i] * b[j];
    return r;
}

// num/den by long division; den[0] must be nonzero.
inline coeffs div(const coeffs& num, const coeffs& den, int order)
{
    coeffs r(static_cast<size_t>(order) + 1, rational(0));
    rational lead = inverse(den.at(0));
    for (int l = 0; l <= order; ++l) {
        rational acc = l < static_cast<int>(num.size()) ? num[static_cast<size_t>(l)] : rational(0);
        for (int k = 1; k <= l && k < static_cast<int>(den.size()); ++k)
            acc -= den[static_cast<size_t>(k)] * r[static_cast<size_t>(l - k)];
        r[static_cast<size_t>(l)] = acc * lead;
    }
    return r;
}

inline coeffs pow(coeffs base, long e, int order)
{
    coeffs acc{rational(1)};
    for (long k = 0; k < e; ++k)
        acc = mul(acc, base, order);
    return acc;
}

// Partition numbers by direct expansion of prod_m (1 + q^m + q^{2m} + ...).
inline coeffs partition_numbers(int order)
{
    coeffs acc{rational(1)};
    for (int m = 1; m <= order; ++m) {
        coeffs geo(static_cast<size_t>(order) + 1, rational(0));
        for (int k = 0; m * k <= order; ++k)
            geo[static_cast<size_t>(m * k)] = rational(1);
        acc = mul(acc, geo, order);
    }
    acc.resize(static_cast<size_t>(order) + 1, rational(0));
    return acc;
}

} // namespace naive

namespace detail {

inline bool series_matches(const series<rational>& s, const naive::coeffs& expect)
{
    for (size_t l = 0; l < expect.size(); ++l)
        if (!(s[static_cast<int>(l)] == expect[l]))
            return false;
    return true;
}

inline criterion_result run(const std::string& name, const std::function<std::string()>& body)
{
    criterion_result r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.detail = body();
        r.passed = true;
    } catch (const std::exception& e) {
        r.detail = e.what();
        r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

[[noreturn]] inline void fail(const std::string& msg) { throw error(msg); }

} // namespace detail

// ---- criterion 1: partition numbers ---------------------------------------

inline criterion_result check_gottsche()
{
    return detail::run("gottsche r=1 chi=1 partition numbers", [] {
        const std::vector<long> expect = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
        series<rational> s = gottsche_series<rational>(1, rational(1), 10);
        for (int l = 0; l <= 10; ++l)
            if (!(s[l] == rational(expect[static_cast<size_t>(l)])))
                detail::fail("coefficient q^" + std::to_string(l) + " is " + s[l].str());
        naive::coeffs oracle = naive::partition_numbers(10);
        if (!detail::series_matches(s, oracle))
            detail::fail("mismatch against direct product expansion");
        return std::string("first 11 coefficients equal the partition numbers, "
                           "independently expanded");
    });
}

// ---- criterion 2: chi-vir at r=1 -------------------------------------------

inline criterion_result check_chi_vir_r1()
{
    return detail::run("chi-vir r=1 equals ((1-q)^2/(1-2q))^K2", [] {
        const int order = 10;
        for (long k2 = 0; k2 <= 3; ++k2) {
            naive::coeffs num = naive::pow({rational(1), rational(-1)}, 2 * k2, order);
            naive::coeffs den = naive::pow({rational(1), rational(-2)}, k2, order);
            naive::coeffs expect = naive::div(num, den, order);
            series<rational> s = chi_vir_series<rational>(1, rational(k2), order);
            if (!detail::series_matches(s, expect))
                detail::fail("mismatch at K2 = " + std::to_string(k2));
        }
        return std::string("exact match for K2 in {0,1,2,3}, N=10");
    });
}

// ---- criterion 3: resultant product vs floating-point roots ----------------

inline criterion_result check_shift_product_roots()
{
    return detail::run("shift product matches floating-point root oracle", [] {
        const int order = 20;
        std::ostringstream os;
        os.precision(3);
        for (int r : {2, 3}) {
            series<rational> s = pairwise_shift_product(r, order);
            for (auto q : {rational(1, 100), rational(1, 20)}) {
                double exact = oracle::evaluate_series(s, q);
                double numeric = oracle::pairwise_shift_value(r, q.to_double());
                double diff = std::abs(exact - numeric);
                if (!(diff < 1e-8))
                    detail::fail("r=" + std::to_string(r) + ", q=" + q.str() +
                                 ": |series - root product| = " + std::to_string(diff));
                os << " r=" << r << ",q=" << q.str() << ":|diff|=" << diff;
            }
        }
        return "within 1e-8:" + os.str();
    });
}

// ---- criterion 4: closed r=2 base ------------------------------------------

inline criterion_result check_r2_base()
{
    return detail::run("r=2 base equals (1-q)^2(1-6q+q^2)/(1-4q)^2", [] {
        const int order = 10;
        naive::coeffs num = naive::mul(naive::pow({rational(1), rational(-1)}, 2, order),
                                       {rational(1), rational(-6), rational(1)}, order);
        naive::coeffs den = naive::pow({rational(1), rational(-4)}, 2, order);
        naive::coeffs expect = naive::div(num, den, order);
        if (!detail::series_matches(chi_vir_base(2, order), expect))
            detail::fail("resultant route disagrees with the hand-eliminated closed form");
        return std::string("exact match, N=10");
    });
}

// ---- criterion 5: Euler top intersections ----------------------------------

inline criterion_result check_euler_top()
{
    return detail::run("euler-top coefficients are binomial(m+l-1, l)", [] {
        for (long m = 0; m <= 5; ++m) {
            series<rational> s = euler_top_series<rational>(rational(m), 10);
            for (long l = 0; l <= 10; ++l)
                if (!(s[static_cast<int>(l)] == binomial(m + l - 1, l)))
                    detail::fail("m=" + std::to_string(m) + ", l=" + std::to_string(l));
        }
        poly m = poly::variable("m");
        series<poly> sym = euler_top_series<poly>(m, 4);
        for (long l = 0; l <= 4; ++l)
            if (!(sym[static_cast<int>(l)] == binomial(m + poly(l - 1), l)))
                detail::fail("symbolic coefficient at l=" + std::to_string(l));
        return std::string("exact for 0<=m<=5, 0<=l<=10 and symbolically for l<=4");
    });
}

// ---- criterion 6: l=1 oracle closure ----------------------------------------

inline criterion_result check_l1_oracle()
{
    return detail::run("length-1 projective-bundle oracle closure", [] {
        pairing_table table = pairing_table::symbolic();
        for (int r = 1; r <= 4; ++r) {
            quot_geometry g = quot_geometry::symbolic("E", r);
            poly got = quot1_virtual_integral(
                instantiate(integrand_euler_line_pow{surface_class::divisor("c1L"), r}, g), table);
            poly expect = poly::variable(product_key("c1E", surface_c1)) +
                          poly(r) * poly::variable(product_key("c1L", surface_c1));
            if (!(got == expect))
                detail::fail("e(L^[1])^r at r=" + std::to_string(r) + ": oracle gives " +
                             got.str());
        }
        for (int r = 1; r <= 3; ++r) {
            quot_geometry g = quot_geometry::symbolic("E", r);
            poly got = quot1_virtual_integral(instantiate(integrand_chern_tvir{}, g), table);
            poly series_q1 = chi_vir_series<poly>(r, poly::variable("K2"), 1)[1];
            poly expect = series_q1.substitute(
                {{"K2", poly::variable(product_key(surface_c1, surface_c1))}});
            if (!(got == expect))
                detail::fail("c(T^vir) at r=" + std::to_string(r) + ": oracle " + got.str() +
                             " vs series " + expect.str());
        }
        return std::string("e(L^[1])^r = c1(E⊗L)c1(S) for r<=4; c(T^vir) matches the q^1 "
                           "chi-vir coefficient for r<=3");
    });
}

// ---- criterion 7: rank reduction at l=1 --------------------------------------

inline criterion_result check_rank_reduction()
{
    return detail::run("rank reduction identity at length 1", [] {
        pairing_table table = pairing_table::symbolic();
        surface_class c1L = surface_class::divisor("c1L");
        for (auto [rp, rpp] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
            quot_geometry sub = quot_geometry::symbolic("Ep", rp);
            quot_geometry quotient = quot_geometry::symbolic("Epp", rpp);
            quot_geometry total;
            total.rank = rp + rpp;
            total.c1 = sub.c1 + quotient.c1;
            total.c2 = (sub.c2 + quotient.c2 + sub.c1 * quotient.c1).truncated(2);
            for (const integrand_expr& e :
                 {integrand_expr(integrand_one{}), integrand_expr(integrand_euler_line_pow{c1L, rpp})}) {
                auto check = verify_rank_reduction_l1(sub, total, quotient, e, table);
                if (!check.ok)
                    detail::fail("splitting (" + std::to_string(rp) + "," + std::to_string(rpp) +
                                 "): lhs " + check.lhs.str() + " vs rhs " + check.rhs.str());
            }
        }
        return std::string("identical in symbols for all splittings with r <= 3, "
                           "integrands {1, e(L^[1])^r''}");
    });
}

// ---- criterion 8: Segre substitution, symmetry, sign convention --------------

inline criterion_result check_segre()
{
    return detail::run("Segre substitution roundtrip and sign convention", [] {
        const int order = 12;
        series<rational> q = series<rational>::monomial(rational(1), 1, order);
        for (int r = 1; r <= 3; ++r) {
            series<rational> s = segre_substitution(r, order);
            series<rational> g = revert(s);
            if (!(compose(g, s) == q && compose(s, g) == q))
                detail::fail("reversion roundtrip fails at r=" + std::to_string(r));
        }
        if (!symmetry_check(1, 1, rational(3), rational(2), order))
            detail::fail("symmetry check fails at r=f=1");
        // Sign resolution against the l=1 oracle, symbolically in the pairings.
        pairing_table table = pairing_table::symbolic();
        for (int r = 1; r <= 3; ++r) {
            quot_geometry g = quot_geometry::symbolic("E", r);
            poly unweighted =
                quot1_virtual_integral(instantiate(integrand_segre_line{surface_class::divisor("c1L")}, g), table);
            poly weighted = (r % 2 == 0) ? unweighted : -unweighted; // (-1)^{1*r}
            poly a_chow = poly::variable(product_key("c1E", surface_c1)) +
                          poly(r) * poly::variable(product_key("c1L", surface_c1));
            poly series_q1 = segre_line_series<poly>(r, poly::variable("a"), poly::variable("K2"), 1)[1]
                                 .substitute({{"a", a_chow}});
            if (!(series_q1 == weighted))
                detail::fail("q^1 of the Segre series disagrees with the oracle at r=" +
                             std::to_string(r) + ": series " + series_q1.str() + " vs oracle " +
                             weighted.str());
        }
        return std::string(
            "reversion roundtrips exactly for r in {1,2,3} at N=12; r=f=1 symmetry holds; "
            "sign convention: the series weights the length-l integral by (-1)^{lr}, and the "
            "change of variable is q = p(1+p)^r -- pinned by the l=1 oracle, whose unweighted "
            "integral of s(L^[1]) is (-1)^r c1(E⊗L)c1(S)");
    });
}

// ---- criterion 9: universal calculus -----------------------------------------

inline criterion_result check_universal()
{
    return detail::run("universal extraction, twist elimination, collapse", [] {
        const int order = 8;
        // Planted two-factor model.
        universal_series planted;
        planted.order = order;
        planted.factors.emplace("c1EL.K", invert(one_minus_q<rational>(order)));
        series<rational> b = series<rational>::one(order);
        for (int l = 1; l <= order; ++l)
            b.coeff(l) = rational(l * l + 1, l + 2);
        planted.factors.emplace("K2", b);
        std::vector<universal_sample> samples;
        for (auto [e1, e2] : {std::pair{1L, 0L}, std::pair{0L, 1L}, std::pair{2L, 3L}}) {
            exponent_map e{{"c1EL.K", rational(e1)}, {"K2", rational(e2)}};
            samples.emplace_back(e, universal_evaluate(planted, e));
        }
        universal_series got = universal_extract({"c1EL.K", "K2"}, samples, order);
        for (const auto& [name, base] : planted.factors)
            if (!(got.factors.at(name).coefficients() == base.coefficients()))
                detail::fail("extraction does not recover the planted factor '" + name + "'");

        // Multiplicativity on constructed invariants.
        for (auto [d1, d2] : {std::pair{2L, 3L}, std::pair{1L, 1L}, std::pair{0L, 4L}}) {
            auto bad = multiplicativity_check(got, {{"c1EL.K", rational(d1)}, {"K2", rational(1)}},
                                              {{"c1EL.K", rational(d2)}, {"K2", rational(2)}});
            if (bad)
                detail::fail("multiplicativity fails at degree " + std::to_string(bad->degree));
        }

        // Twist elimination on a chi-vir sample family with varying c1E.K.
        std::vector<universal_sample> twist_samples;
        for (auto [ce, k2] : {std::pair{0L, 0L}, std::pair{1L, 0L}, std::pair{2L, 1L}}) {
            exponent_map e{{"c1E.K", rational(ce)}, {"K2", rational(k2)}};
            twist_samples.emplace_back(e, chi_vir_series<rational>(2, rational(k2), order));
        }
        universal_series twisted = universal_extract({"c1E.K", "K2"}, twist_samples, order);
        universal_series reduced = eliminate_twist_exponent(twisted, "c1E.K");
        if (reduced.factors.count("c1E.K") || !reduced.factors.count("K2"))
            detail::fail("twist elimination did not remove exactly the twist factor");
        if (!(reduced.factors.at("K2") == truncate(chi_vir_base(2, order), order)))
            detail::fail("twist elimination: surviving factor is not the r=2 base series");

        // Collapse recovers planted seeds, recurrence filled one step at a time.
        for (int d = 1; d <= 4; ++d)
            for (int r = 1; r <= 3; ++r)
                for (int f = 1; f <= 3; ++f) {
                    homogeneous_universal_poly p;
                    p.degree = d;
                    p.rank_e = r;
                    p.rank_f = f;
                    for (int s = 0; s <= d; ++s)
                        for (int k = 0; s + k <= d; ++k)
                            if (s + k == d)
                                p.coeffs[{s, 0, k}] = rational(3 * s + 2 * k + 1, s + k + 1);
                    rational fr = rational(f) / rational(r);
                    for (int j = 1; j <= d; ++j)
                        for (int i = 0; i + j <= d; ++i) {
                            int k = d - i - j;
                            // n_{i,j,k} = n_{i+1,j-1,k} * (f/r) * (i+1)/j
                            p.coeffs[{i, j, k}] =
                                p.coeff(i + 1, j - 1, k) * fr * rational(i + 1) / rational(j);
                        }
                    std::vector<rational> collapsed = collapse_universal_polynomial(p);
                    for (int i = 0; i <= d; ++i) {
                        rational expect = p.coeff(i, 0, d - i) / pow(rational(r), i);
                        if (!(collapsed[static_cast<size_t>(i)] == expect))
                            detail::fail("collapse mismatch at d=" + std::to_string(d) +
                                         ", r=" + std::to_string(r) + ", f=" + std::to_string(f));
                    }
                }
        return std::string("extraction, multiplicativity, twist elimination (A=1), and "
                           "collapse all exact");
    });
}

inline std::vector<criterion_result> run_all()
{
    return {
        check_gottsche(),       check_chi_vir_r1(), check_shift_product_roots(),
        check_r2_base(),        check_euler_top(),  check_l1_oracle(),
        check_rank_reduction(), check_segre(),      check_universal(),
    };
}

} // namespace verify
} // namespace quotvir

#endif
