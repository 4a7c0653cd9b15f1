#include "oracles.hpp"
#include "support.hpp"

#include "mckay/arith/determinant.hpp"
#include "mckay/arith/modular.hpp"

#include <doctest.h>

#include <random>

using namespace mckay;

TEST_CASE("cyclotomic arithmetic")
{
    const auto i = Cyclotomic::zeta(4);
    CHECK(i * i == Cyclotomic(-1L));

    const auto w = Cyclotomic::zeta(3);
    CHECK(w + w * w == Cyclotomic(-1L));

    const auto z5 = Cyclotomic::zeta(5);
    const auto c = z5.conj();
    CHECK(c == Cyclotomic::zeta(5, 4));
    CHECK(c.conductor() == 5);
    // zeta_5^4 = -1 - z - z^2 - z^3 in the power basis
    CHECK(c.coefficients() == std::vector<Rational>{-1, -1, -1, -1});

    SUBCASE("mixed conductors lift to the lcm")
    {
        const auto s = i + w;
        CHECK(s.conductor() == 12);
        CHECK(s - w == i);
        CHECK(Cyclotomic::zeta(12, 3) == i);
        CHECK(Cyclotomic::zeta(12, 4) == w);
    }

    SUBCASE("inverse and division")
    {
        const auto a = Cyclotomic(2L) + z5 - Cyclotomic(Rational(1, 3)) * z5 * z5;
        CHECK(a * a.inverse() == Cyclotomic(1L));
        CHECK((a / a) == Cyclotomic(1L));
        CHECK_THROWS_AS(Cyclotomic().inverse(), ArithmeticError);
        CHECK_THROWS_AS(a / Cyclotomic(0L), ArithmeticError);
    }

    SUBCASE("square roots used by the catalog")
    {
        const auto sqrt5 = Cyclotomic(1L) + Cyclotomic(2L) * z5 + Cyclotomic(2L) * Cyclotomic::zeta(5, 4);
        CHECK(sqrt5 * sqrt5 == Cyclotomic(5L));
        const auto sqrt_m3 = Cyclotomic(2L) * w + Cyclotomic(1L);
        CHECK(sqrt_m3 * sqrt_m3 == Cyclotomic(-3L));
    }

    SUBCASE("rational detection, norm and galois")
    {
        CHECK(Cyclotomic(Rational(3, 7)).is_rational());
        CHECK((z5 + z5.conj()).galois(2) == Cyclotomic::zeta(5, 2) + Cyclotomic::zeta(5, 3));
        CHECK(Cyclotomic(Rational(-2)).norm() == -2);
        CHECK(Cyclotomic(Rational(-2)).lifted(5).norm() == 16);
        CHECK((Cyclotomic(1L) - z5).norm() == 5);
    }
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == ip({-1, 1}));
    CHECK(cyclotomic_polynomial(4) == ip({1, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == ip({1, 0, -1, 0, 1}));
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
}

TEST_CASE("property: product of Phi_d over d | N is x^N - 1")
{
    for (int n = 1; n <= 60; ++n) {
        IntPoly prod(BigInt(1));
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic_polynomial(d);
        CHECK_MESSAGE(prod == -one_minus_t_pow(static_cast<unsigned>(n)), "N = " << n);
        CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));
    }
}

TEST_CASE("property: a * conj(a) is real in Q(zeta_12)")
{
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> v(4);
        for (auto& x : v) x = Rational(coeff(rng), 1 + (coeff(rng) + 9) % 5);
        const auto a = Cyclotomic::from_coefficients(12, v);
        const auto n = a * conj(a);
        CHECK(conj(n) == n);
        CHECK(conj(conj(a)) == a);
    }
}

TEST_CASE("polynomial basics")
{
    const auto& t = t_var();
    CHECK(IntPoly().degree() == -1);
    CHECK((t - t).is_zero());
    CHECK(pow(IntPoly(BigInt(1)) - t, 3) == ip({1, -3, 3, -1}));
    CHECK(ip({1, 2}).substitute_power(3) == ip({1, 0, 0, 2}));
    CHECK(to_string(ip({1, -2, 0, 1})) == "1 - 2*t + t^3");
    CHECK(to_string(IntPoly()) == "0");
    CHECK(gcd(ip({-1, 0, 1}), ip({-1, 1})) == ip({-1, 1}));
    CHECK(gcd(ip({1, 1}), ip({1, 0, 1})) == ip({1}));
    CHECK(divide_exact(one_minus_t_pow(6), one_minus_t_pow(2)) == ip({1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(divide_exact(ip({1, 0, 1}), ip({1, 1})), ArithmeticError);
    CHECK(reversed(ip({1, 2, 3}), 3) == ip({3, 2, 1}));
}

TEST_CASE("rational functions")
{
    const RationalFunction a(one_minus_t_pow(2), one_minus_t_pow(1));
    CHECK(a.is_polynomial());
    CHECK(a.to_polynomial() == ip({1, 1}));
    CHECK(rational_eq(a, RationalFunction(ip({1, 1}), ip({1}))));
    CHECK_FALSE(rational_eq(RationalFunction(ip({1, -1}), ip({1})), RationalFunction(ip({1, 1}), ip({1}))));
    CHECK_THROWS_AS(RationalFunction(ip({1}), IntPoly()), ArithmeticError);

    const RationalFunction neg(ip({1}), ip({1, -1}));
    CHECK(neg.denominator() == ip({-1, 1}));
    CHECK(neg.numerator() == ip({-1}));

    const auto f = cyclotomic_factor_product({{4, 1}, {1, -1}, {2, -2}});
    CHECK(rational_eq(f, RationalFunction(one_minus_t_pow(4), one_minus_t_pow(1) * pow(one_minus_t_pow(2), 2))));
    CHECK(rational_eq(pow(f, -1) * f, RationalFunction(ip({1}), ip({1}))));
}

TEST_CASE("series expansion")
{
    const auto geo = series_expand(RationalFunction(ip({1}), one_minus_t_pow(1)), 4);
    CHECK(geo == PowerSeries(std::vector<Rational>{1, 1, 1, 1, 1}));

    const auto den = one_minus_t_pow(2) * one_minus_t_pow(3) * one_minus_t_pow(4) * one_minus_t_pow(6);
    const auto molien_t = series_expand(RationalFunction(one_minus_t_pow(12), den), 6);
    const auto counts = oracle::count_weighted_monomials({2, 3, 4, 6}, 6);
    CHECK(molien_t == PowerSeries(std::vector<Rational>{1, 0, 1, 1, 2, 1, 4}));
    for (std::size_t k = 0; k <= 6; ++k) CHECK(molien_t[k] == Rational(counts[k]));

    const RationalFunction g(one_minus_t_pow(4), one_minus_t_pow(1) * pow(one_minus_t_pow(2), 2));
    const auto s = series_expand(g, 4);
    // (1 + t^2) / ((1 - t)(1 - t^2))
    CHECK(s == PowerSeries(std::vector<Rational>{1, 1, 3, 3, 5}));
    const auto ld = oracle::long_division_series(g.numerator(), g.denominator(), 4);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(s[k] == Rational(ld[k]));

    CHECK_THROWS_AS(series_expand(RationalFunction(ip({1}), t_var()), 3), ArithmeticError);
    CHECK(s.is_natural());
}

TEST_CASE("property: expansion of a product is the Cauchy product")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        auto random_poly = [&](bool unit_constant) {
            std::vector<BigInt> v(4);
            for (auto& x : v) x = coeff(rng);
            if (unit_constant) v[0] = 1;
            return IntPoly(std::move(v));
        };
        const RationalFunction f(random_poly(false), random_poly(true));
        const RationalFunction g(random_poly(false), random_poly(true));
        CHECK(series_expand(f * g, 12) == series_expand(f, 12) * series_expand(g, 12));
    }
}

TEST_CASE("polynomial matrix determinants")
{
    CHECK(poly_matrix_det(PolyMatrix::Identity(3, 3)) == ip({1}));

    PolyMatrix d(2, 2);
    d << ip({1, -1}), IntPoly(), IntPoly(), ip({1, 1});
    CHECK(poly_matrix_det(d) == ip({1, 0, -1}));
    CHECK(bareiss_det(d) == ip({1, 0, -1}));

    PolyMatrix singular(2, 2);
    singular << ip({1, 1}), ip({2, 2}), ip({0, 1}), ip({0, 2});
    CHECK(poly_matrix_det(singular).is_zero());
    CHECK(poly_matrix_det(PolyMatrix(0, 0)) == ip({1}));

    DenseMatrix<BigInt> z(3, 3);
    z << 0, 2, 1, 3, 0, 4, 5, 6, 0;
    CHECK(bareiss_det(z) == oracle::leibniz_det(z));
    CHECK(laplace_det(z) == oracle::leibniz_det(z));
}

TEST_CASE("property: poly_matrix_det equals the Leibniz expansion")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
            PolyMatrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = ip({coeff(rng), coeff(rng), coeff(rng)});
            const auto expected = oracle::leibniz_det(m);
            CHECK(poly_matrix_det(m) == expected);
            CHECK(bareiss_det(m) == expected);
        }
    }
}

TEST_CASE("interpolation nodes and exactness")
{
    const auto nodes = interpolation_nodes(5);
    CHECK(nodes == std::vector<BigInt>{0, 1, -1, 2, -2});
    // values of t^2 / 2 are not integral polynomial values everywhere
    CHECK_THROWS_AS(interpolate({0, 1, -1}, {0, 1, 0}), ConsistencyError);
}

TEST_CASE("modular helpers")
{
    using namespace mckay::modular;
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(2147483649ULL));
    const auto p = next_prime_congruent_one(12, 100);
    CHECK(p % 12 == 1);
    CHECK(p > 100);
    CHECK(is_prime(p));
    const auto r = root_of_unity(12, p);
    CHECK(pow(r, 12, p) == 1);
    CHECK(pow(r, 6, p) != 1);
    CHECK(pow(r, 4, p) != 1);
    CHECK(mul(inverse(7, p), 7, p) == 1);
    CHECK_THROWS_AS(inverse(0, p), ArithmeticError);
    CHECK(symmetric_lift(p - 1, p) == -1);
}
