#pragma once

// Lattices spanned by roots of square -2, their Coxeter elements and the
// characteristic polynomials Delta(t) = det(I - t tau).

#include "mckay/arith/polynomial.hpp"

#include <string>
#include <vector>

namespace mckay {

enum class DiagramVariant { minus, plain, plus };

std::string to_string(DiagramVariant v);
/// Accepts "minus", "plain", "plus"; throws Error otherwise.
DiagramVariant parse_variant(const std::string& s);

struct CoxeterDiagram {
    std::string label;
    /// Vertex names in the order the reflections are multiplied.
    std::vector<std::string> vertices;
    /// Symmetric intersection matrix, -2 on the diagonal.
    IntMatrix gram;

    [[nodiscard]] std::size_t rank() const { return vertices.size(); }
};

/// T^-, T or T^+ for the arm lengths alphas (each >= 1). Vertex order: the
/// arms from the tip inwards, then delta_0, delta_1, delta_2.
CoxeterDiagram build_diagram(DiagramVariant variant, const std::vector<int>& alphas);

/// Dynkin diagrams "A<k>", "D<k>", "E6", "E7", "E8"; with affine = true the
/// extended diagram. Affine A uses the alternating two-colour order.
CoxeterDiagram build_ade_diagram(const std::string& label, bool affine);

/// Product of the reflections s_e(x) = x + <x, e> e in vertex order, as a
/// matrix acting on coordinate columns. Throws ConsistencyError unless
/// tau^T G tau = G.
IntMatrix coxeter_element(const CoxeterDiagram& d);

/// Product of the same reflections in reverse order, which is tau^-1.
IntMatrix coxeter_element_inverse(const CoxeterDiagram& d);

/// det(I - t tau).
IntPoly char_poly_coxeter(const IntMatrix& tau);

/// det(t^2 I - tau).
IntPoly char_poly_coxeter_t2(const IntMatrix& tau);

/// The closed-form polynomial for T^-, T, T^+; throws ArithmeticError if
/// the expression does not clear to a polynomial.
IntPoly closed_form_delta(DiagramVariant variant, const std::vector<int>& alphas);

/// det(I - t tau) for an (extended) Dynkin diagram.
IntPoly ade_coxeter_polys(const std::string& label, bool affine);

}  // namespace mckay
