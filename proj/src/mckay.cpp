#include "mckay/core/mckay.hpp"

#include <map>
#include <numeric>

namespace mckay {

namespace {

std::int64_t as_multiplicity(const Cyclotomic& value, const char* what)
{
    if (!value.is_rational()) throw ConsistencyError(std::string(what) + " is not rational: " + value.to_string());
    const Rational r = value.rational_value();
    if (r.get_den() != 1 || r < 0 || !r.get_num().fits_slong_p())
        throw ConsistencyError(std::string(what) + " is not a non-negative integer: " + r.get_str());
    return r.get_num().get_si();
}

Cyclotomic trace(const GroupElement& g)
{
    Cyclotomic s;
    for (Eigen::Index i = 0; i < g.rows(); ++i) s += g(i, i);
    return s;
}

// Elementary symmetric functions e_0..e_n of the eigenvalues.
std::vector<Cyclotomic> elementary_symmetric(const GroupElement& g)
{
    const Eigen::Index n = g.rows();
    std::vector<Cyclotomic> e(static_cast<std::size_t>(n) + 1);
    e[0] = Cyclotomic(1L);
    if (n >= 1) e[1] = trace(g);
    if (n >= 2) {
        Cyclotomic minors;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = i + 1; j < n; ++j) minors += g(i, i) * g(j, j) - g(i, j) * g(j, i);
        e[2] = minors;
    }
    if (n == 3) e[3] = laplace_det(g);
    if (n > 3) throw ArithmeticError("characteristic factors are implemented for size at most 3");
    return e;
}

// h_0..h_order: complete homogeneous symmetric functions of the eigenvalues,
// i.e. the trace of g on the symmetric powers.
std::vector<Cyclotomic> symmetric_power_traces(const GroupElement& g, std::size_t order)
{
    const auto e = elementary_symmetric(g);
    const std::size_t n = e.size() - 1;
    std::vector<Cyclotomic> h(order + 1);
    h[0] = Cyclotomic(1L);
    for (std::size_t m = 1; m <= order; ++m) {
        Cyclotomic acc;
        for (std::size_t k = 1; k <= n && k <= m; ++k) {
            if (k % 2 == 1)
                acc += e[k] * h[m - k];
            else
                acc -= e[k] * h[m - k];
        }
        h[m] = std::move(acc);
    }
    return h;
}

// Multiplicity of each primitive root order d among the eigenvalues of g.
std::map<int, int> eigenvalue_orders(const MatrixGroup& group, MatrixGroup::Index rep)
{
    const int o = group.element_order(rep);
    std::vector<Cyclotomic> traces(static_cast<std::size_t>(o));
    for (int k = 0; k < o; ++k) traces[k] = trace(group.element(group.power(rep, k)));
    std::map<int, int> out;
    int total = 0;
    for (int l = 0; l < o; ++l) {
        Cyclotomic acc;
        for (int k = 0; k < o; ++k) acc += traces[k] * Cyclotomic::zeta(o, -static_cast<long>(k) * l);
        acc = acc * Cyclotomic(Rational(1, o));
        const auto m = as_multiplicity(acc, "eigenvalue multiplicity");
        if (m == 0) continue;
        out[o / std::gcd(o, l)] += static_cast<int>(m);
        total += static_cast<int>(m);
    }
    if (total != group.dimension()) throw ConsistencyError("eigenvalue multiplicities do not add up to the dimension");
    return out;
}

}  // namespace

McKayMatrices mckay_matrices(const CharacterTable& table, const ClassFunction& chi_gamma,
                             const ConjugacyClasses& classes, std::size_t group_order)
{
    const auto k = static_cast<Eigen::Index>(table.size());
    McKayMatrices mm{IntMatrix(k, k), IntMatrix(k, k)};
    ClassFunction chi_dual(chi_gamma.size());
    for (std::size_t c = 0; c < chi_gamma.size(); ++c) chi_dual[c] = chi_gamma[c].conj();
    for (Eigen::Index j = 0; j < k; ++j) {
        ClassFunction prod(classes.count());
        ClassFunction prod_dual(classes.count());
        for (std::size_t c = 0; c < classes.count(); ++c) {
            prod[c] = chi_gamma[c] * table.rows[j][c];
            prod_dual[c] = chi_dual[c] * table.rows[j][c];
        }
        for (Eigen::Index i = 0; i < k; ++i) {
            mm.B(i, j) = as_multiplicity(inner_product(prod, table.rows[i], classes, group_order), "tensor multiplicity");
            mm.Bstar(i, j) = as_multiplicity(inner_product(prod_dual, table.rows[i], classes, group_order),
                                             "dual tensor multiplicity");
        }
    }
    return mm;
}

MMatrices build_M(const McKayMatrices& mm, int n)
{
    if (n != 2 && n != 3) throw ArithmeticError("build_M: dimension must be 2 or 3");
    const Eigen::Index k = mm.B.rows();
    MMatrices out{PolyMatrix(k, k), PolyMatrix(k, k)};
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) {
            std::vector<BigInt> c(4, BigInt(0));
            if (i == j) {
                c[0] = 1;
                if (n == 2)
                    c[2] = 1;
                else
                    c[3] = -1;
            }
            c[1] = -mm.B(i, j);
            if (n == 3) c[2] = mm.Bstar(i, j);
            out.M(i, j) = IntPoly(std::move(c));
        }
    out.M0 = out.M;
    for (Eigen::Index i = 0; i < k; ++i) out.M0(i, 0) = IntPoly(BigInt(i == 0 ? 1 : 0));
    return out;
}

CycloPoly characteristic_factor(const GroupElement& g)
{
    auto e = elementary_symmetric(g);
    for (std::size_t k = 1; k < e.size(); k += 2) e[k] = -e[k];
    return CycloPoly(std::move(e));
}

IntPoly det_M_class_product(const MatrixGroup& group, const ConjugacyClasses& classes)
{
    CycloPoly product(Cyclotomic(1L));
    for (const auto rep : classes.representatives) product *= characteristic_factor(group.element(rep));
    return to_int_poly(product);
}

RationalFunction molien_series(const MatrixGroup& group, const ConjugacyClasses& classes)
{
    // Common denominator: prod_d Phi_d^{k_d}, k_d the largest number of
    // eigenvalues of exact order d over all elements.
    std::map<int, int> worst;
    for (const auto rep : classes.representatives)
        for (const auto& [d, count] : eigenvalue_orders(group, rep)) worst[d] = std::max(worst[d], count);
    IntPoly denominator(BigInt(1));
    for (const auto& [d, count] : worst) {
        const IntPoly factor = d == 1 ? one_minus_t_pow(1) : cyclotomic_polynomial(d);
        denominator *= pow(factor, static_cast<unsigned>(count));
    }

    const auto n = static_cast<std::size_t>(group.dimension());
    const auto top = static_cast<std::size_t>(denominator.degree());
    const std::size_t order = top + n;
    std::vector<Cyclotomic> sum(order + 1);
    for (std::size_t c = 0; c < classes.count(); ++c) {
        const auto h = symmetric_power_traces(group.element(classes.representatives[c]), order);
        const Cyclotomic weight(static_cast<long>(classes.sizes[c]));
        for (std::size_t m = 0; m <= order; ++m) sum[m] += weight * h[m];
    }
    PowerSeries series(order);
    const Rational inv_order(1, static_cast<unsigned long>(group.order()));
    for (std::size_t m = 0; m <= order; ++m) {
        if (!sum[m].is_rational()) throw ConsistencyError("Molien coefficient is not rational");
        series[m] = sum[m].rational_value() * inv_order;
    }

    const auto product = series_expand(denominator, order) * series;
    std::vector<BigInt> numerator;
    for (std::size_t m = 0; m <= order; ++m) {
        const Rational& c = product[m];
        if (c.get_den() != 1) throw ConsistencyError("Molien numerator is not integral");
        if (m + n > top) {
            if (sgn(c) != 0) throw ConsistencyError("Molien numerator exceeds its degree bound");
            continue;
        }
        numerator.push_back(c.get_num());
    }
    return {IntPoly(std::move(numerator)), denominator};
}

SeriesVector symmetric_power_vector(const MatrixGroup& group, const ConjugacyClasses& classes,
                                    const CharacterTable& table, std::size_t order)
{
    std::vector<std::vector<Cyclotomic>> h;
    h.reserve(classes.count());
    for (const auto rep : classes.representatives) h.push_back(symmetric_power_traces(group.element(rep), order));

    SeriesVector out;
    for (const auto& row : table.rows) {
        PowerSeries s(order);
        for (std::size_t m = 0; m <= order; ++m) {
            ClassFunction trace_m(classes.count());
            for (std::size_t c = 0; c < classes.count(); ++c) trace_m[c] = h[c][m];
            s[m] = Rational(as_multiplicity(inner_product(trace_m, row, classes, group.order()), "symmetric power multiplicity"));
        }
        out.push_back(std::move(s));
    }
    return out;
}

SeriesVector solve_P_by_linear_system(const McKayMatrices& mm, int n, std::size_t order)
{
    if (n != 2 && n != 3) throw ArithmeticError("solve_P_by_linear_system: dimension must be 2 or 3");
    const Eigen::Index k = mm.B.rows();
    std::vector<DenseVector<BigInt>> x;
    auto at = [&x, k](long m) {
        if (m < 0) return DenseVector<BigInt>(DenseVector<BigInt>::Constant(k, BigInt(0)));
        return x[static_cast<std::size_t>(m)];
    };
    const DenseMatrix<BigInt> B = mm.B.cast<BigInt>();
    const DenseMatrix<BigInt> Bs = mm.Bstar.cast<BigInt>();
    auto apply = [k](const DenseMatrix<BigInt>& a, const DenseVector<BigInt>& v) {
        DenseVector<BigInt> r(k);
        for (Eigen::Index i = 0; i < k; ++i) {
            BigInt s = 0;
            for (Eigen::Index j = 0; j < k; ++j) s += a(i, j) * v(j);
            r(i) = s;
        }
        return r;
    };
    for (std::size_t m = 0; m <= order; ++m) {
        const long mm_ = static_cast<long>(m);
        DenseVector<BigInt> next = apply(B, at(mm_ - 1));
        if (n == 3) {
            const auto b2 = apply(Bs, at(mm_ - 2));
            const auto x3 = at(mm_ - 3);
            for (Eigen::Index i = 0; i < k; ++i) next(i) += x3(i) - b2(i);
        } else {
            const auto x2 = at(mm_ - 2);
            for (Eigen::Index i = 0; i < k; ++i) next(i) -= x2(i);
        }
        if (m == 0) next(0) += 1;
        x.push_back(std::move(next));
    }
    SeriesVector out;
    for (Eigen::Index i = 0; i < k; ++i) {
        PowerSeries s(order);
        for (std::size_t m = 0; m <= order; ++m) s[m] = Rational(x[m](i));
        out.push_back(std::move(s));
    }
    return out;
}

bool check_cg_recursion(const SeriesVector& v, const McKayMatrices& mm, int n)
{
    if (v.empty()) return false;
    const auto k = static_cast<Eigen::Index>(v.size());
    if (mm.B.rows() != k) return false;
    const std::size_t order = v.front().order();
    auto value = [&v](Eigen::Index i, long m) { return m < 0 ? Rational(0) : v[i][static_cast<std::size_t>(m)]; };
    for (long m = 0; m + (n == 3 ? 2 : 1) <= static_cast<long>(order); ++m) {
        for (Eigen::Index i = 0; i < k; ++i) {
            Rational bv = 0;
            Rational bsv = 0;
            for (Eigen::Index j = 0; j < k; ++j) {
                if (n == 3) {
                    bv += mm.B(i, j) * value(j, m + 1);
                    bsv += mm.Bstar(i, j) * value(j, m);
                } else {
                    bv += mm.B(i, j) * value(j, m);
                }
            }
            if (n == 3) {
                if (value(i, m + 2) != bv - bsv + value(i, m - 1)) return false;
            } else if (bv != value(i, m + 1) + value(i, m - 1)) {
                return false;
            }
        }
    }
    return true;
}

bool check_dimension_count(const SeriesVector& v, const std::vector<int>& degrees, int n)
{
    if (v.size() != degrees.size() || v.empty()) return false;
    for (std::size_t m = 0; m <= v.front().order(); ++m) {
        Rational total = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Rational& c = v[i][m];
            if (c.get_den() != 1 || c < 0) return false;
            total += c * degrees[i];
        }
        BigInt expected;
        mpz_bin_uiui(expected.get_mpz_t(), m + static_cast<unsigned long>(n) - 1, static_cast<unsigned long>(n) - 1);
        if (total != Rational(expected)) return false;
    }
    return true;
}

}  // namespace mckay
