#include <catch2/catch_amalgamated.hpp>

#include <quotvir/chow.hpp>
#include <quotvir/invariants.hpp>

using namespace quotvir;

namespace {

poly var(const std::string& name) { return poly::variable(name); }
poly pair_var(const std::string& a, const std::string& b) { return var(product_key(a, b)); }

} // namespace

TEST_CASE("surface classes are graded and truncate above degree 2")
{
    surface_class one(1);
    surface_class d = surface_class::divisor("c1E");
    surface_class k = surface_class::divisor("c1S");
    surface_class p = (d * k);
    CHECK(p.point_part().count("c1E*c1S") == 1);
    CHECK((p * d).is_zero()); // degree 3 vanishes
    CHECK((d * k) == (k * d));
    CHECK(((one + d) * (one - d)) == one - d * d);
    CHECK(surface_class::point_class("c2E") * surface_class(2) ==
          surface_class::point_class("c2E", rational(2)));
}

TEST_CASE("pairing table: numeric mode rejects missing monomials")
{
    pairing_table t = pairing_table::numeric_values({{"c1E*c1S", rational(3)}});
    surface_class c = surface_class::divisor("c1E") * surface_class::divisor("c1S");
    CHECK(integrate(c, t) == poly(3));
    surface_class missing = surface_class::divisor("c1L") * surface_class::divisor("c1S");
    CHECK_THROWS_AS(integrate(missing, t), error);
    // degree 0 and 1 parts never contribute
    CHECK(integrate(surface_class(7) + surface_class::divisor("c1L"), t).is_zero());
}

TEST_CASE("pushforward follows the Segre-class rules")
{
    for (int r = 1; r <= 4; ++r) {
        quot_geometry g = quot_geometry::symbolic("E", r);
        // zeta^{r-1} -> 1
        CHECK(pe_pushforward(pe_class::zeta(g, r - 1)) == surface_class(1));
        // zeta^{r-2} -> 0 (degree reasons)
        if (r >= 2)
            CHECK(pe_pushforward(pe_class::zeta(g, r - 2)).is_zero());
        // zeta^r -> c1(E)
        CHECK(pe_pushforward(pe_class::zeta(g, r)) == g.c1);
        // zeta^{r+1} -> c1(E)^2 - c2(E)
        CHECK(pe_pushforward(pe_class::zeta(g, r + 1)) == (g.c1 * g.c1 - g.c2).truncated(2));
    }
}

TEST_CASE("pushforward is linear over pulled-back classes")
{
    quot_geometry g = quot_geometry::symbolic("E", 2);
    surface_class alpha = surface_class::divisor("c1L", rational(3));
    pe_class c = pe_class::zeta(g, 1) + pe_class::zeta(g, 2);
    surface_class lhs = pe_pushforward(pe_class::from_surface(g, alpha) * c);
    surface_class rhs = (alpha * pe_pushforward(c)).truncated(2);
    CHECK(lhs == rhs);
}

TEST_CASE("classes on different bundles do not mix")
{
    quot_geometry g2 = quot_geometry::symbolic("E", 2);
    quot_geometry g3 = quot_geometry::symbolic("E", 3);
    CHECK_THROWS_AS(pe_class::one(g2) * pe_class::one(g3), error);
}

TEST_CASE("length-1 integral of e(L^[1])^r is c1(E⊗L)c1(S)")
{
    pairing_table t = pairing_table::symbolic();
    for (int r = 1; r <= 4; ++r) {
        quot_geometry g = quot_geometry::symbolic("E", r);
        poly got = quot1_virtual_integral(
            instantiate(integrand_euler_line_pow{surface_class::divisor("c1L"), r}, g), t);
        poly expect = pair_var("c1E", "c1S") + poly(r) * pair_var("c1L", "c1S");
        CHECK(got == expect);
    }
}

TEST_CASE("length-1 chi-vir integral vanishes and matches the series")
{
    pairing_table t = pairing_table::symbolic();
    for (int r = 1; r <= 3; ++r) {
        quot_geometry g = quot_geometry::symbolic("E", r);
        poly got = quot1_virtual_integral(instantiate(integrand_chern_tvir{}, g), t);
        poly series_q1 = chi_vir_series<poly>(r, var("K2"), 1)[1];
        CHECK(got == series_q1.substitute({{"K2", pair_var("c1S", "c1S")}}));
        CHECK(got.is_zero());
    }
}

TEST_CASE("low-degree integrands integrate to zero")
{
    pairing_table t = pairing_table::symbolic();
    for (int r = 2; r <= 4; ++r) {
        quot_geometry g = quot_geometry::symbolic("E", r);
        CHECK(quot1_virtual_integral(pe_class::one(g), t).is_zero());
    }
}

TEST_CASE("r=1 virtual class pairs degree-1 classes against c1(S)")
{
    // at r=1 the length-1 space is the surface itself and integrals of
    // pulled-back divisors gamma equal gamma.c1(S), i.e. -gamma.K
    quot_geometry g = quot_geometry::symbolic("E", 1);
    pairing_table t = pairing_table::symbolic();
    poly got = quot1_virtual_integral(
        pe_class::from_surface(g, surface_class::divisor("c1L")), t);
    CHECK(got == pair_var("c1L", "c1S"));
}

TEST_CASE("numeric evaluation goes through the pairing table")
{
    quot_geometry g = quot_geometry::symbolic("E", 2);
    pairing_table t = pairing_table::numeric_values({
        {"c1E*c1S", rational(4)},
        {"c1L*c1S", rational(-1)},
    });
    poly got = quot1_virtual_integral(
        instantiate(integrand_euler_line_pow{surface_class::divisor("c1L"), 2}, g), t);
    CHECK(got == poly(rational(4) + rational(2) * rational(-1)));
}

TEST_CASE("rank reduction at length 1")
{
    pairing_table t = pairing_table::symbolic();
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
            auto check = verify_rank_reduction_l1(sub, total, quotient, e, t);
            CHECK(check.ok);
        }
    }
}

TEST_CASE("rank reduction: r=2 -> r''=1 gives c1(E''⊗L)c1(S) on both sides")
{
    pairing_table t = pairing_table::symbolic();
    quot_geometry sub = quot_geometry::symbolic("Ep", 1);
    quot_geometry quotient = quot_geometry::symbolic("Epp", 1);
    quot_geometry total;
    total.rank = 2;
    total.c1 = sub.c1 + quotient.c1;
    total.c2 = (sub.c1 * quotient.c1).truncated(2);
    auto check = verify_rank_reduction_l1(
        sub, total, quotient, integrand_euler_line_pow{surface_class::divisor("c1L"), 1}, t);
    CHECK(check.ok);
    CHECK(check.lhs == pair_var("c1Epp", "c1S") + pair_var("c1L", "c1S"));
}

TEST_CASE("rank reduction: trivial kernel")
{
    pairing_table t = pairing_table::symbolic();
    quot_geometry quotient = quot_geometry::symbolic("E", 2);
    quot_geometry sub; // rank 0, no Chern classes
    sub.rank = 0;
    auto check = verify_rank_reduction_l1(sub, quotient, quotient,
                                          integrand_euler_line_pow{surface_class::divisor("c1L"), 2}, t);
    CHECK(check.ok);
    CHECK(check.lhs == check.rhs);
}

TEST_CASE("rank reduction rejects inconsistent Chern data")
{
    pairing_table t = pairing_table::symbolic();
    quot_geometry sub = quot_geometry::symbolic("Ep", 1);
    quot_geometry quotient = quot_geometry::symbolic("Epp", 1);
    quot_geometry total = quot_geometry::symbolic("E", 2); // unrelated classes
    CHECK_THROWS_AS(verify_rank_reduction_l1(sub, total, quotient, integrand_one{}, t), error);
    quot_geometry bad_rank = quot_geometry::symbolic("E", 3);
    CHECK_THROWS_AS(verify_rank_reduction_l1(sub, bad_rank, quotient, integrand_one{}, t), error);
}

TEST_CASE("unweighted Segre integrand at length 1 is (-1)^r c1(E⊗L)c1(S)")
{
    pairing_table t = pairing_table::symbolic();
    for (int r = 1; r <= 3; ++r) {
        quot_geometry g = quot_geometry::symbolic("E", r);
        poly got = quot1_virtual_integral(
            instantiate(integrand_segre_line{surface_class::divisor("c1L")}, g), t);
        poly a = pair_var("c1E", "c1S") + poly(r) * pair_var("c1L", "c1S");
        poly expect = (r % 2 == 0) ? a : -a;
        CHECK(got == expect);
    }
}
