#include "group_fixtures.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include "mckay/core/mckay.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace mckay;
using namespace mckay::fixture;

namespace {

struct Setup {
    MatrixGroup group;
    ConjugacyClasses classes;
    CharacterTable table;
    McKayMatrices mm;
};

Setup setup(const std::vector<GroupElement>& gens, std::size_t bound, int dim = 0)
{
    Setup s;
    s.group = generate_group(gens, bound, dim);
    s.classes = conjugacy_classes(s.group);
    s.table = character_table(s.group, s.classes);
    s.mm = mckay_matrices(s.table, natural_character(s.group, s.classes), s.classes, s.group.order());
    return s;
}

Cyclotomic trace_of(const GroupElement& g)
{
    Cyclotomic s;
    for (Eigen::Index i = 0; i < g.rows(); ++i) s += g(i, i);
    return s;
}

// Multiplicities from a sum over all elements (not classes), with traces read
// directly off the matrices.
IntMatrix elementwise_B(const Setup& s, bool dual)
{
    const std::size_t k = s.table.size();
    const auto order = static_cast<long>(s.group.order());
    IntMatrix b(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Cyclotomic acc;
            for (std::size_t g = 0; g < s.group.order(); ++g) {
                const std::size_t c = s.classes.class_of[g];
                Cyclotomic chi = trace_of(s.group.element(static_cast<MatrixGroup::Index>(g)));
                if (dual) chi = conj(chi);
                acc += chi * s.table.rows[j][c] * conj(s.table.rows[i][c]);
            }
            const Rational v = (acc / Cyclotomic(order)).rational_value();
            REQUIRE(v.get_den() == 1);
            b(i, j) = v.get_num().get_si();
        }
    return b;
}

// Symmetric-power characters by Newton's identity m h_m = sum_k p_k h_{m-k},
// with p_k = trace(g^k); then multiplicities by inner products.
std::vector<std::vector<Rational>> newton_multiplicities(const Setup& s, std::size_t order)
{
    const std::size_t k = s.table.size();
    const std::size_t ncls = s.classes.count();
    std::vector<std::vector<Cyclotomic>> h(ncls, std::vector<Cyclotomic>(order + 1));
    for (std::size_t c = 0; c < ncls; ++c) {
        const auto rep = s.classes.representatives[c];
        std::vector<Cyclotomic> p(order + 1);
        for (std::size_t e = 1; e <= order; ++e)
            p[e] = trace_of(s.group.element(s.group.power(rep, static_cast<long>(e))));
        h[c][0] = Cyclotomic(1L);
        for (std::size_t m = 1; m <= order; ++m) {
            Cyclotomic acc;
            for (std::size_t e = 1; e <= m; ++e) acc += p[e] * h[c][m - e];
            h[c][m] = acc / Cyclotomic(static_cast<long>(m));
        }
    }
    std::vector<std::vector<Rational>> v(k, std::vector<Rational>(order + 1));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t m = 0; m <= order; ++m) {
            Cyclotomic acc;
            for (std::size_t c = 0; c < ncls; ++c)
                acc += Cyclotomic(static_cast<long>(s.classes.sizes[c])) * h[c][m] * conj(s.table.rows[i][c]);
            v[i][m] = (acc / Cyclotomic(static_cast<long>(s.group.order()))).rational_value();
        }
    return v;
}

// det M by Leibniz expansion over Z[t].
IntPoly leibniz_det_M(const MMatrices& m) { return oracle::leibniz_det(m.M); }

// Number of monomials x^a y^b of degree m fixed by diag(z, z^-1), z of order l.
std::vector<BigInt> cyclic_invariant_count(int l, std::size_t order)
{
    std::vector<BigInt> out(order + 1);
    for (std::size_t m = 0; m <= order; ++m)
        for (std::size_t a = 0; a <= m; ++a)
            if ((static_cast<long>(a) - static_cast<long>(m - a)) % l == 0) out[m] += 1;
    return out;
}

std::vector<int> arm_lengths_of_tree(const IntMatrix& adj)
{
    const Eigen::Index n = adj.rows();
    Eigen::Index branch = -1;
    for (Eigen::Index v = 0; v < n; ++v)
        if (adj.row(v).sum() == 3) branch = v;
    REQUIRE(branch >= 0);
    std::vector<int> arms;
    for (Eigen::Index start = 0; start < n; ++start) {
        if (adj(branch, start) == 0) continue;
        int len = 0;
        Eigen::Index prev = branch, cur = start;
        while (true) {
            ++len;
            Eigen::Index next = -1;
            for (Eigen::Index w = 0; w < n; ++w)
                if (adj(cur, w) && w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
}

}  // namespace

TEST_CASE("trivial group in dimension 3")
{
    const auto s = setup({}, 4, 3);
    CHECK(s.mm.B == IntMatrix::Constant(1, 1, 3));
    CHECK(s.mm.Bstar == IntMatrix::Constant(1, 1, 3));
    const auto m = build_M(s.mm, 3);
    CHECK(m.M(0, 0) == pow(ip({1, -1}), 3U));
    CHECK(m.M0(0, 0) == ip({1}));
    CHECK(det_M_class_product(s.group, s.classes) == pow(ip({1, -1}), 3U));
    CHECK(molien_series(s.group, s.classes) == RationalFunction(ip({1}), pow(ip({1, -1}), 3U)));

    const auto x = solve_P_by_linear_system(s.mm, 3, 10);
    const auto expected = oracle::long_division_series(ip({1}), pow(ip({1, -1}), 3U), 10);
    for (std::size_t i = 0; i <= 10; ++i) CHECK(x[0][i] == Rational(expected[i]));
}

TEST_CASE("C2 = {+-I} in SL2")
{
    const auto s = setup(cyclic_sl2(2), 10);
    CHECK(det_M_class_product(s.group, s.classes) == pow(ip({1, 0, -1}), 2U));
    const auto m = build_M(s.mm, 2);
    CHECK(poly_matrix_det(m.M) == pow(ip({1, 0, -1}), 2U));
}

TEST_CASE("McKay matrices agree with element-wise inner products")
{
    for (const auto& gens : {delta3(2), delta6(2), delta3(4), binary_icosahedral(), binary_dihedral(3)}) {
        const auto s = setup(gens, 200);
        CHECK(s.mm.B == elementwise_B(s, false));
        CHECK(s.mm.Bstar == elementwise_B(s, true));
        CHECK(s.mm.Bstar == s.mm.B.transpose());
        CHECK((s.mm.B.array() >= 0).all());
    }
}

TEST_CASE("binary icosahedral B is the adjacency matrix of extended E8")
{
    const auto s = setup(binary_icosahedral(), 200);
    const IntMatrix& b = s.mm.B;
    CHECK(b == b.transpose());
    CHECK((b.diagonal().array() == 0).all());
    CHECK(((b.array() == 0) || (b.array() == 1)).all());
    CHECK(b.sum() == 2 * 8);  // 9 vertices, a tree
    CHECK(arm_lengths_of_tree(b) == std::vector<int>{1, 2, 5});
}

TEST_CASE("Delta(3*2^2): determinants and Molien series")
{
    const auto s = setup(delta3(2), 100);
    const auto m = build_M(s.mm, 3);
    const IntPoly det = poly_matrix_det(m.M);
    CHECK(det == leibniz_det_M(m));
    CHECK(oracle::leibniz_det(m.M0) == poly_matrix_det(m.M0));
    // (1-t)^4 (1+t)^2 (1-t^3)^2
    const IntPoly expected = pow(ip({1, -1}), 4U) * pow(ip({1, 1}), 2U) * pow(ip({1, 0, 0, -1}), 2U);
    CHECK(det == expected);
    CHECK(det_M_class_product(s.group, s.classes) == expected);
    CHECK(det.degree() == 3 * static_cast<int>(s.table.size()));
    CHECK(poly_matrix_det(m.M0).degree() <= det.degree() - 3);

    const RationalFunction molien = molien_series(s.group, s.classes);
    const RationalFunction expected_molien(one_minus_t_pow(12), one_minus_t_pow(2) * one_minus_t_pow(3) *
                                                                    one_minus_t_pow(4) * one_minus_t_pow(6));
    CHECK(molien == expected_molien);
    CHECK(rational_eq(RationalFunction(poly_matrix_det(m.M0), det), molien));

    const auto x = solve_P_by_linear_system(s.mm, 3, 50);
    CHECK(x[0] == series_expand(molien, 50));
}

TEST_CASE("binary icosahedral Molien series")
{
    const auto s = setup(binary_icosahedral(), 200);
    const RationalFunction expected(one_minus_t_pow(60),
                                    one_minus_t_pow(12) * one_minus_t_pow(20) * one_minus_t_pow(30));
    CHECK(molien_series(s.group, s.classes) == expected);
}

TEST_CASE("cyclic Molien series counts invariant monomials")
{
    for (int l : {2, 3, 5, 6}) {
        const auto s = setup(cyclic_sl2(l), 20);
        const PowerSeries series = series_expand(molien_series(s.group, s.classes), 40);
        const auto count = cyclic_invariant_count(l, 40);
        for (std::size_t m = 0; m <= 40; ++m) CHECK(series[m] == Rational(count[m]));
    }
}

TEST_CASE("symmetric powers: Molien averaging against Newton's identity")
{
    for (const auto& gens : {delta3(2), delta6(3), binary_dihedral(4), binary_icosahedral()}) {
        const auto s = setup(gens, 200);
        const std::size_t order = 20;
        const auto v = symmetric_power_vector(s.group, s.classes, s.table, order);
        const auto newton = newton_multiplicities(s, order);
        REQUIRE(v.size() == newton.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t m = 0; m <= order; ++m) CHECK(v[i][m] == newton[i][m]);
    }
}

TEST_CASE("v_0 and v_1")
{
    const auto s = setup(delta3(2), 100);
    const auto v = symmetric_power_vector(s.group, s.classes, s.table, 5);
    const auto chi = natural_character(s.group, s.classes);
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i][0] == Rational(i == 0 ? 1 : 0));
        CHECK(v[i][1] == Rational(s.table.rows[i] == chi ? 1 : 0));
    }
    // S^2 of C^3 is 6-dimensional.
    Rational dim2;
    for (std::size_t i = 0; i < v.size(); ++i) dim2 += v[i][2] * s.table.degrees[i];
    CHECK(dim2 == 6);
}

TEST_CASE("Delta(6*4^2): linear system equals symmetric powers to order 30")
{
    const auto s = setup(delta6(4), 200);
    const auto v = symmetric_power_vector(s.group, s.classes, s.table, 30);
    const auto x = solve_P_by_linear_system(s.mm, 3, 30);
    REQUIRE(v.size() == x.size());
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == x[i]);
    CHECK(check_cg_recursion(v, s.mm, 3));
    CHECK(check_dimension_count(v, s.table.degrees, 3));
    for (const auto& comp : v) CHECK(comp.is_natural());
}

TEST_CASE("Clebsch-Gordan recursion detects a perturbed coefficient")
{
    const auto s = setup(delta3(2), 100);
    auto v = symmetric_power_vector(s.group, s.classes, s.table, 30);
    CHECK(check_cg_recursion(v, s.mm, 3));
    v[1][7] += 1;
    CHECK_FALSE(check_cg_recursion(v, s.mm, 3));
    CHECK_FALSE(check_dimension_count(v, s.table.degrees, 3));

    const auto s2 = setup(binary_dihedral(3), 100);
    auto w = symmetric_power_vector(s2.group, s2.classes, s2.table, 30);
    CHECK(check_cg_recursion(w, s2.mm, 2));
    CHECK(check_dimension_count(w, s2.table.degrees, 2));
    w[0][4] += 1;
    CHECK_FALSE(check_cg_recursion(w, s2.mm, 2));
}

TEST_CASE("characteristic factor")
{
    const GroupElement g = mat(3, {q(0), q(1), q(0), q(0), q(0), q(1), q(1), q(0), q(0)});
    CHECK(to_int_poly(characteristic_factor(g)) == ip({1, 0, 0, -1}));
    const GroupElement d = mat(2, {z(4), q(0), q(0), z(4, -1)});
    CHECK(to_int_poly(characteristic_factor(d)) == ip({1, 0, 1}));
}

TEST_CASE("mckay_matrices rejects a class function that is not a character")
{
    const auto g = generate_group(delta3(2), 100);
    const auto cc = conjugacy_classes(g);
    const auto t = character_table(g, cc);
    ClassFunction half(cc.count(), Cyclotomic(Rational(1, 2)));
    CHECK_THROWS_AS(mckay_matrices(t, half, cc, g.order()), ConsistencyError);
}
