#pragma once

// Exact determinants. bareiss_det works over any integral domain scalar that
// provides exact_div; poly_matrix_det reduces polynomial determinants to
// integer ones by evaluation at small integer nodes and interpolates back.

#include "mckay/arith/numeric.hpp"
#include "mckay/arith/polynomial.hpp"

#include <utility>
#include <vector>

namespace mckay {

using PolyMatrix = DenseMatrix<IntPoly>;

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact.
template <typename Derived>
typename Derived::Scalar bareiss_det(const Eigen::MatrixBase<Derived>& input)
{
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> a = input;
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw ArithmeticError("determinant of a non-square matrix");
    if (n == 0) return Scalar(1L);

    Scalar previous(1L);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (detail::coeff_is_zero(a(k, k))) {
            Eigen::Index swap_row = k + 1;
            while (swap_row < n && detail::coeff_is_zero(a(swap_row, k))) ++swap_row;
            if (swap_row == n) return Scalar(0L);
            a.row(k).swap(a.row(swap_row));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Scalar cross = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = exact_div(cross, previous);
            }
        }
        previous = a(k, k);
    }
    Scalar det = a(n - 1, n - 1);
    return negate ? Scalar(-det) : det;
}

/// Cofactor (Laplace) expansion along the first row; meant for n <= 4.
template <typename Derived>
typename Derived::Scalar laplace_det(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = m.rows();
    if (n == 0) return Scalar(1L);
    if (n == 1) return m(0, 0);
    if (n == 2) return Scalar(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    Scalar acc(0L);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (detail::coeff_is_zero(m(0, j))) continue;
        DenseMatrix<Scalar> minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        Scalar term = m(0, j) * laplace_det(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

/// Interpolation nodes 0, 1, -1, 2, -2, ...
std::vector<BigInt> interpolation_nodes(std::size_t count);

/// The unique polynomial of degree < nodes.size() through (nodes[i], values[i]);
/// throws ConsistencyError if it does not have integer coefficients.
IntPoly interpolate(const std::vector<BigInt>& nodes, const std::vector<BigInt>& values);

/// Determinant of a square polynomial matrix by evaluation at
/// n * (max entry degree) + 1 integer nodes followed by exact interpolation.
IntPoly poly_matrix_det(const PolyMatrix& m);

}  // namespace mckay
