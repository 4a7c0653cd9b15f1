#include "oracles.hpp"
#include "support.hpp"

#include "mckay/coxeter/coxeter.hpp"

#include <doctest.h>

using namespace mckay;

namespace {

IntPoly plain_times(std::initializer_list<unsigned> exps, int one_minus_t_power)
{
    RationalFunction r(IntPoly(BigInt(1)), IntPoly(BigInt(1)));
    for (unsigned e : exps) r = r * RationalFunction(one_minus_t_pow(e), IntPoly(BigInt(1)));
    r = r * pow(RationalFunction(one_minus_t_pow(1), IntPoly(BigInt(1))), one_minus_t_power);
    return r.to_polynomial();
}

bool palindromic_up_to_sign(const IntPoly& p)
{
    const auto r = reversed(p, p.size());
    return r == p || r == -p;
}

}  // namespace

TEST_CASE("diagram construction")
{
    const auto e6 = build_diagram(DiagramVariant::minus, {2, 3, 3});
    CHECK(e6.rank() == 6);
    CHECK(e6.gram.diagonal() == IntVector::Constant(6, -2));
    CHECK(e6.gram == e6.gram.transpose());
    // a tree: 5 edges
    CHECK((e6.gram.array() == 1).count() == 10);

    const auto p1 = build_diagram(DiagramVariant::plain, {1});
    REQUIRE(p1.rank() == 2);
    IntMatrix expected(2, 2);
    expected << -2, -2, -2, -2;
    CHECK(p1.gram == expected);

    CHECK(build_diagram(DiagramVariant::plus, {2, 3, 7}).rank() == 12);
    CHECK_THROWS_AS(build_diagram(DiagramVariant::plain, {2, 0}), Error);

    const auto t = build_diagram(DiagramVariant::plus, {2, 2});
    CHECK((t.gram.array() == -2).count() == static_cast<long>(t.rank()) + 2);
}

TEST_CASE("Coxeter elements")
{
    const auto a1 = build_ade_diagram("A1", false);
    const auto tau_a1 = coxeter_element(a1);
    CHECK(tau_a1(0, 0) == -1);
    CHECK(char_poly_coxeter(tau_a1) == ip({1, 1}));

    const auto p1 = coxeter_element(build_diagram(DiagramVariant::plain, {1}));
    IntMatrix expected(2, 2);
    expected << 3, 2, -2, -1;
    CHECK(p1 == expected);
    CHECK(char_poly_coxeter(p1) == ip({1, -2, 1}));

    CHECK(char_poly_coxeter(coxeter_element(build_diagram(DiagramVariant::minus, {2, 3, 3}))) ==
          ip({1, 1, 0, -1, 0, 1, 1}));
    CHECK(char_poly_coxeter(IntMatrix(0, 0)) == ip({1}));
}

TEST_CASE("Coxeter elements agree with explicit reflection matrices")
{
    for (const auto& d : {build_diagram(DiagramVariant::minus, {2, 3, 5}), build_diagram(DiagramVariant::plain, {2, 2, 3, 3}),
                          build_diagram(DiagramVariant::plus, {2, 3, 7}), build_ade_diagram("D5", true),
                          build_ade_diagram("A3", true)}) {
        const auto tau = coxeter_element(d);
        CHECK(tau == oracle::explicit_reflection_product(d.gram));
        CHECK((tau * coxeter_element_inverse(d)).isIdentity());
        CHECK(tau.transpose() * d.gram * tau == d.gram);
    }
}

TEST_CASE("closed forms")
{
    CHECK(closed_form_delta(DiagramVariant::plain, {2, 3, 5}) == plain_times({2, 3, 5}, -1));
    CHECK(closed_form_delta(DiagramVariant::plain, {2, 2, 3, 3}) == pow(ip({1, 1}), 2) * pow(one_minus_t_pow(3), 2));
    for (int a = 1; a <= 9; ++a)
        CHECK(closed_form_delta(DiagramVariant::minus, {a}) ==
              divide_exact(one_minus_t_pow(static_cast<unsigned>(a + 1)), one_minus_t_pow(1)));
    CHECK(closed_form_delta(DiagramVariant::plain, {1}) == pow(one_minus_t_pow(1), 2));
}

TEST_CASE("lattice Coxeter polynomials match the closed forms")
{
    const std::vector<std::vector<int>> tuples = {{2, 3, 3}, {2, 3, 4}, {2, 3, 5}, {3, 3, 4}, {2, 2, 2, 2, 2, 2}, {2, 3, 8},
                                                  {2, 2, 2, 4}, {2, 2, 4, 4}, {4, 4, 4}, {2, 3, 3, 3}, {2, 3, 7}, {2, 2, 2, 5},
                                                  {2, 4, 7}, {2, 4, 5}, {2, 2, 5}, {3, 3}, {1}, {5}, {1, 1, 4}};
    for (const auto& a : tuples)
        for (auto v : {DiagramVariant::minus, DiagramVariant::plain, DiagramVariant::plus}) {
            const auto d = build_diagram(v, a);
            const auto tau = coxeter_element(d);
            const auto delta = char_poly_coxeter(tau);
            CHECK_MESSAGE(delta == closed_form_delta(v, a), d.label);
            CHECK(delta == char_poly_coxeter(coxeter_element_inverse(d)));
            CHECK(palindromic_up_to_sign(delta));
        }
}

TEST_CASE("braid-equivalence corollaries")
{
    CHECK(closed_form_delta(DiagramVariant::plain, {2, 3, 3}) == closed_form_delta(DiagramVariant::minus, {3, 3, 3}));
    CHECK(closed_form_delta(DiagramVariant::plain, {2, 3, 4}) == closed_form_delta(DiagramVariant::minus, {2, 4, 4}));
    CHECK(closed_form_delta(DiagramVariant::plain, {2, 3, 5}) == closed_form_delta(DiagramVariant::minus, {2, 3, 6}));
    for (int n = 2; n <= 6; ++n)
        CHECK(closed_form_delta(DiagramVariant::plain, {2, 2, n}) == ade_coxeter_polys("D" + std::to_string(n + 2), true));
}

TEST_CASE("ADE Coxeter polynomials")
{
    CHECK(ade_coxeter_polys("A1", false) == ip({1, 1}));
    CHECK(ade_coxeter_polys("E8", false) == closed_form_delta(DiagramVariant::minus, {2, 3, 5}));
    // alternating order on the 4-cycle: eigenvalues 1, 1, -1, -1
    CHECK(ade_coxeter_polys("A3", true) == pow(one_minus_t_pow(2), 2));
    CHECK(ade_coxeter_polys("A1", true) == pow(one_minus_t_pow(1), 2));
    for (int n = 1; n <= 6; ++n)
        CHECK(ade_coxeter_polys("A" + std::to_string(2 * n - 1), true) == pow(one_minus_t_pow(static_cast<unsigned>(n)), 2));
    CHECK(build_ade_diagram("D4", true).rank() == 5);
    CHECK(build_ade_diagram("E7", true).rank() == 8);
    CHECK_THROWS_AS(build_ade_diagram("F4", false), Error);
}
