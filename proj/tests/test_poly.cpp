#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <quotvir/poly.hpp>
#include <quotvir/unipoly.hpp>

using namespace quotvir;
using qpoly = unipoly<rational>;

namespace {

qpoly random_unipoly(std::mt19937& rng, int degree)
{
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::vector<rational> c(static_cast<size_t>(degree) + 1);
    for (auto& x : c)
        x = rational(coeff(rng));
    if (is_zero(c.back()))
        c.back() = rational(1);
    return qpoly::from_coefficients(std::move(c));
}

} // namespace

TEST_CASE("multivariate polynomial basics")
{
    poly x = poly::variable("K2"), y = poly::variable("g");
    poly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.coeff({{"K2", 2}}) == rational(1));
    CHECK(p.coeff({{"g", 2}}) == rational(-1));
    CHECK(p.coeff({{"K2", 1}, {"g", 1}}) == rational(0));
    CHECK((p - p).is_zero());
    CHECK(poly(3).is_constant());
    CHECK_FALSE(x.is_constant());
    CHECK_THROWS_AS(x.constant_value(), error);
    CHECK(inverse(poly(rational(bigint(2), bigint(3)))) == poly(rational(bigint(3), bigint(2))));
    CHECK_THROWS_AS(inverse(x), error);
    CHECK_THROWS_AS(inverse(poly(0)), error);
}

TEST_CASE("polynomial substitution")
{
    poly x = poly::variable("x"), y = poly::variable("y");
    poly p = x * x + poly(2) * x * y;
    poly q = p.substitute({{"x", y + poly(1)}});
    CHECK(q == (y + poly(1)) * (y + poly(1)) + poly(2) * (y + poly(1)) * y);
    CHECK(p.substitute({}) == p);
    CHECK(p.substitute({{"x", poly(0)}}).is_zero());
}

TEST_CASE("polynomial printing is stable")
{
    poly p = poly(2) * poly::variable("K2") - poly::variable("g", 2) * poly(rational(bigint(1), bigint(2)));
    CHECK(p.str() == "2*K2 - 1/2*g^2");
    CHECK(poly(0).str() == "0");
}

TEST_CASE("unipoly arithmetic and shift")
{
    qpoly x = qpoly::variable();
    // shift of x^2 by -1: (x-1)^2 = x^2 - 2x + 1
    qpoly shifted = shift(x * x, rational(-1));
    CHECK(shifted == qpoly::from_coefficients({rational(1), rational(-2), rational(1)}));
    // shift of a constant is itself
    CHECK(shift(qpoly(rational(5)), rational(-1)) == qpoly(rational(5)));
    // degree bookkeeping: (x+1) - x has degree 0
    CHECK(((x + qpoly(1)) - x).degree() == 0);
    CHECK(qpoly().degree() == -1);
    CHECK(x.evaluate(rational(3)) == rational(3));
}

TEST_CASE("shift of the root polynomial matches direct expansion")
{
    // x^2 - q(x-1)^2 shifted by -1 must equal (x-1)^2 - q(x-2)^2
    using xpoly = unipoly<qpoly>;
    qpoly q = qpoly::variable();
    xpoly x = xpoly::variable();
    xpoly xm1 = x - xpoly(qpoly(rational(1)));
    xpoly xm2 = x - xpoly(qpoly(rational(2)));
    xpoly f = x * x - q * (xm1 * xm1);
    CHECK(shift(f, qpoly(rational(-1))) == xm1 * xm1 - q * (xm2 * xm2));
}

TEST_CASE("shift is a ring homomorphism")
{
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        qpoly f = random_unipoly(rng, 3);
        qpoly g = random_unipoly(rng, 2);
        rational c(bigint(t - 10), bigint(3));
        CHECK(shift(f * g, c) == shift(f, c) * shift(g, c));
        CHECK(shift(f + g, c) == shift(f, c) + shift(g, c));
    }
}

TEST_CASE("resultant: linear and shared-root cases")
{
    qpoly x = qpoly::variable();
    rational a(2), b(5);
    // our convention: resultant(x-a, x-b) = a - b
    CHECK(resultant(x - qpoly(a), x - qpoly(b)) == a - b);
    CHECK(resultant(x * x - qpoly(1), x - qpoly(1)) == rational(0));
    CHECK_THROWS_AS(resultant(qpoly(rational(1)), x), error);
    CHECK_THROWS_AS(resultant(qpoly(), x), error);
}

TEST_CASE("resultant: 2x2 determinant with series-ring coefficients")
{
    // Res((1-q)x + q, (1-q)x + (2q-1)) = -(1-q)^2
    using xpoly = unipoly<qpoly>;
    qpoly q = qpoly::variable();
    qpoly one_minus_q = qpoly(rational(1)) - q;
    xpoly x = xpoly::variable();
    xpoly f = one_minus_q * x + xpoly(q);
    xpoly g = one_minus_q * x + xpoly(qpoly(rational(-1)) + rational(2) * q);
    CHECK(resultant(f, g) == -(one_minus_q * one_minus_q));
}

TEST_CASE("resultant is multiplicative in the second argument")
{
    std::mt19937 rng(19);
    for (int t = 0; t < 15; ++t) {
        qpoly f = random_unipoly(rng, 3);
        qpoly g = random_unipoly(rng, 2);
        qpoly h = random_unipoly(rng, 2);
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
}

TEST_CASE("resultant vanishes exactly on shared roots")
{
    qpoly x = qpoly::variable();
    std::mt19937 rng(29);
    std::uniform_int_distribution<long> root(-5, 5);
    for (int t = 0; t < 15; ++t) {
        rational r1(root(rng)), r2(root(rng)), r3(root(rng));
        qpoly f = (x - qpoly(r1)) * (x - qpoly(r2));
        qpoly g_shared = (x - qpoly(r1)) * (x - qpoly(r3));
        CHECK(resultant(f, g_shared) == rational(0));
        // shift both roots past the sampling range so none can coincide
        qpoly g_apart = (x - qpoly(r1 + rational(20))) * (x - qpoly(r2 + rational(40)));
        CHECK_FALSE(resultant(f, g_apart) == rational(0));
    }
}

TEST_CASE("resultant equals lc(f)^deg(g) times product of g over roots of f")
{
    qpoly x = qpoly::variable();
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> root(-4, 4);
    std::uniform_int_distribution<long> lead(1, 3);
    for (int t = 0; t < 10; ++t) {
        rational r1(root(rng)), r2(root(rng)), c(lead(rng));
        qpoly f = c * ((x - qpoly(r1)) * (x - qpoly(r2)));
        qpoly g = random_unipoly(rng, 3);
        CHECK(resultant(f, g) == pow(c, g.degree()) * g.evaluate(r1) * g.evaluate(r2));
    }
}
