#pragma once

// Tensor-product multiplicity matrices B, B* of the natural representation,
// the polynomial matrices M(t), M0(t), Molien series and the decomposition
// vectors v_m of the symmetric powers.

#include "mckay/arith/determinant.hpp"
#include "mckay/arith/power_series.hpp"
#include "mckay/groups/character_table.hpp"

#include <vector>

namespace mckay {

struct McKayMatrices {
    /// B(i, j): multiplicity of irreducible i in (irreducible j) x gamma.
    IntMatrix B;
    /// Same with the contragredient of gamma.
    IntMatrix Bstar;
};

/// Throws ConsistencyError when a multiplicity is not a non-negative integer.
McKayMatrices mckay_matrices(const CharacterTable& table, const ClassFunction& chi_gamma,
                             const ConjugacyClasses& classes, std::size_t group_order);

struct MMatrices {
    PolyMatrix M;
    PolyMatrix M0;
};

/// n = 2: M = (1 + t^2) I - t B.  n = 3: M = (1 - t^3) I - t B + t^2 B*.
/// M0 is M with its first column replaced by the first unit vector.
MMatrices build_M(const McKayMatrices& mm, int n);

/// det(I - t g) = 1 - e1 t + e2 t^2 - ... for a matrix of size at most 3.
CycloPoly characteristic_factor(const GroupElement& g);

/// Product over class representatives of det(I - t g_c).
IntPoly det_M_class_product(const MatrixGroup& group, const ConjugacyClasses& classes);

/// Molien series (1/|G|) sum_g 1/det(I - t g) as a reduced rational function.
RationalFunction molien_series(const MatrixGroup& group, const ConjugacyClasses& classes);

/// One truncated series per irreducible; component i holds v_{mi}.
using SeriesVector = std::vector<PowerSeries>;

/// v_m by averaging 1/det(I - t g) against each irreducible character.
/// Throws ConsistencyError on a non-integral or negative multiplicity.
SeriesVector symmetric_power_vector(const MatrixGroup& group, const ConjugacyClasses& classes,
                                    const CharacterTable& table, std::size_t order);

/// Solves M(t) x = v0 coefficient by coefficient.
SeriesVector solve_P_by_linear_system(const McKayMatrices& mm, int n, std::size_t order);

/// n = 3: v_{m+2} = B v_{m+1} - B* v_m + v_{m-1}.  n = 2: B v_m = v_{m+1} + v_{m-1}.
/// Checked for every m the truncation allows, with v_{-1} = 0.
bool check_cg_recursion(const SeriesVector& v, const McKayMatrices& mm, int n);

/// sum_i v_{mi} deg_i = binomial(m + n - 1, n - 1) for every m in range.
bool check_dimension_count(const SeriesVector& v, const std::vector<int>& degrees, int n);

}  // namespace mckay
