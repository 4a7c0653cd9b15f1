#include "mckay/arith/determinant.hpp"

namespace mckay {

std::vector<BigInt> interpolation_nodes(std::size_t count)
{
    std::vector<BigInt> nodes;
    nodes.reserve(count);
    for (long k = 0; nodes.size() < count; ++k) {
        if (k == 0) {
            nodes.emplace_back(0);
            continue;
        }
        nodes.emplace_back(k);
        if (nodes.size() < count) nodes.emplace_back(-k);
    }
    return nodes;
}

IntPoly interpolate(const std::vector<BigInt>& nodes, const std::vector<BigInt>& values)
{
    const std::size_t n = nodes.size();
    if (n != values.size()) throw ArithmeticError("interpolate: nodes and values differ in length");
    if (n == 0) return {};

    // Newton divided differences, in place.
    std::vector<Rational> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    }

    // Horner on the Newton form.
    RatPoly p(dd[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        p = p * RatPoly(std::vector<Rational>{Rational(-nodes[k]), Rational(1)}) + RatPoly(dd[k]);
    }
    try {
        return to_int_poly(p);
    } catch (const ArithmeticError& e) {
        throw ConsistencyError(std::string("interpolation produced a non-integer polynomial: ") + e.what());
    }
}

IntPoly poly_matrix_det(const PolyMatrix& m)
{
    const Eigen::Index n = m.rows();
    if (n != m.cols()) throw ArithmeticError("determinant of a non-square matrix");
    if (n == 0) return IntPoly(BigInt(1));

    int max_degree = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) max_degree = std::max(max_degree, m(i, j).degree());

    const auto nodes = interpolation_nodes(static_cast<std::size_t>(n * max_degree) + 1);
    std::vector<BigInt> values;
    values.reserve(nodes.size());
    DenseMatrix<BigInt> at(n, n);
    for (const auto& x : nodes) {
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) at(i, j) = m(i, j).evaluate(x);
        values.push_back(bareiss_det(at));
    }
    return interpolate(nodes, values);
}

}  // namespace mckay
