#include "mckay/coxeter/coxeter.hpp"

#include "mckay/arith/determinant.hpp"
#include "mckay/arith/rational_function.hpp"

#include <regex>

namespace mckay {

namespace {

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Reflections applied in the given vertex order: tau = s_{order[0]} ... s_{order[n-1]}.
IntMatrix reflection_product(const IntMatrix& gram, const std::vector<Eigen::Index>& order)
{
    const Eigen::Index n = gram.rows();
    IntMatrix tau = IntMatrix::Identity(n, n);
    // Right multiplication by S_v = I + e_v G_{v,:} adds column v times row v of G.
    for (const auto v : order) tau += tau.col(v).eval() * gram.row(v);
    return tau;
}

void add_edge(IntMatrix& g, Eigen::Index a, Eigen::Index b, std::int64_t w = 1)
{
    g(a, b) = w;
    g(b, a) = w;
}

CoxeterDiagram affine_d(int k)
{
    CoxeterDiagram d;
    d.label = "D~" + std::to_string(k);
    const int chain = k - 3;
    d.vertices = {"a1", "a2"};
    for (int i = 1; i <= chain; ++i) d.vertices.push_back("c" + std::to_string(i));
    d.vertices.push_back("b1");
    d.vertices.push_back("b2");
    const auto n = static_cast<Eigen::Index>(d.vertices.size());
    d.gram = IntMatrix::Constant(n, n, 0);
    d.gram.diagonal().setConstant(-2);
    const Eigen::Index first = 2;
    const Eigen::Index last = 2 + chain - 1;
    add_edge(d.gram, 0, first);
    add_edge(d.gram, 1, first);
    for (Eigen::Index i = first; i < last; ++i) add_edge(d.gram, i, i + 1);
    add_edge(d.gram, n - 2, last);
    add_edge(d.gram, n - 1, last);
    return d;
}

CoxeterDiagram affine_a(int k)
{
    CoxeterDiagram d;
    d.label = "A~" + std::to_string(k);
    const int size = k + 1;
    std::vector<int> cycle_order;
    for (int i = 0; i < size; i += 2) cycle_order.push_back(i);
    for (int i = 1; i < size; i += 2) cycle_order.push_back(i);
    for (int i : cycle_order) d.vertices.push_back("v" + std::to_string(i));
    std::vector<Eigen::Index> position(size);
    for (int p = 0; p < size; ++p) position[cycle_order[p]] = p;
    d.gram = IntMatrix::Constant(size, size, 0);
    d.gram.diagonal().setConstant(-2);
    if (size == 2) {
        add_edge(d.gram, 0, 1, 2);
        return d;
    }
    for (int i = 0; i < size; ++i) add_edge(d.gram, position[i], position[(i + 1) % size]);
    return d;
}

RationalFunction arm_product(const std::vector<int>& alphas, std::size_t skip, bool skip_any)
{
    RationalFunction r(IntPoly(BigInt(1)), IntPoly(BigInt(1)));
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        if (skip_any && j == skip) continue;
        r = r * RationalFunction(one_minus_t_pow(static_cast<unsigned>(alphas[j])), one_minus_t_pow(1));
    }
    return r;
}

}  // namespace

std::string to_string(DiagramVariant v)
{
    switch (v) {
    case DiagramVariant::minus:
        return "minus";
    case DiagramVariant::plain:
        return "plain";
    case DiagramVariant::plus:
        return "plus";
    }
    return "?";
}

DiagramVariant parse_variant(const std::string& s)
{
    if (s == "minus") return DiagramVariant::minus;
    if (s == "plain") return DiagramVariant::plain;
    if (s == "plus") return DiagramVariant::plus;
    throw Error("unknown diagram variant '" + s + "'");
}

CoxeterDiagram build_diagram(DiagramVariant variant, const std::vector<int>& alphas)
{
    if (alphas.empty()) throw Error("diagram needs at least one arm");
    for (int a : alphas)
        if (a < 1) throw Error("arm lengths must be at least 1");

    CoxeterDiagram d;
    static const char* prefix[] = {"T-", "T", "T+"};
    d.label = std::string(prefix[static_cast<int>(variant)]) + "_" + join(alphas);

    std::vector<Eigen::Index> arm_tops;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        for (int j = 1; j < alphas[i]; ++j)
            d.vertices.push_back("arm" + std::to_string(i + 1) + "_" + std::to_string(j));
        if (alphas[i] > 1) arm_tops.push_back(static_cast<Eigen::Index>(d.vertices.size()) - 1);
    }
    const auto delta0 = static_cast<Eigen::Index>(d.vertices.size());
    d.vertices.push_back("delta0");
    if (variant != DiagramVariant::minus) d.vertices.push_back("delta1");
    if (variant == DiagramVariant::plus) d.vertices.push_back("delta2");

    const auto n = static_cast<Eigen::Index>(d.vertices.size());
    d.gram = IntMatrix::Constant(n, n, 0);
    d.gram.diagonal().setConstant(-2);
    Eigen::Index cursor = 0;
    for (int a : alphas) {
        for (int j = 1; j + 1 < a; ++j) add_edge(d.gram, cursor + j - 1, cursor + j);
        cursor += a - 1;
    }
    for (auto top : arm_tops) add_edge(d.gram, top, delta0);
    if (variant != DiagramVariant::minus) {
        const Eigen::Index delta1 = delta0 + 1;
        add_edge(d.gram, delta0, delta1, -2);
        for (auto top : arm_tops) add_edge(d.gram, top, delta1);
        if (variant == DiagramVariant::plus) add_edge(d.gram, delta1, delta1 + 1);
    }
    return d;
}

CoxeterDiagram build_ade_diagram(const std::string& label, bool affine)
{
    static const std::regex pattern("([ADE])([0-9]+)");
    std::smatch m;
    if (!std::regex_match(label, m, pattern)) throw Error("unknown Dynkin label '" + label + "'");
    const char type = m[1].str()[0];
    const int k = std::stoi(m[2].str());

    CoxeterDiagram d;
    switch (type) {
    case 'A':
        if (k < 1) throw Error("A_k needs k >= 1");
        if (affine) return affine_a(k);
        d = build_diagram(DiagramVariant::minus, {k});
        break;
    case 'D':
        if (k < 4) throw Error("D_k needs k >= 4");
        if (affine) return affine_d(k);
        d = build_diagram(DiagramVariant::minus, {2, 2, k - 2});
        break;
    case 'E':
        if (k < 6 || k > 8) throw Error("E_k needs 6 <= k <= 8");
        if (affine) {
            static const std::vector<int> extended[] = {{3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
            d = build_diagram(DiagramVariant::minus, extended[k - 6]);
        } else {
            d = build_diagram(DiagramVariant::minus, {2, 3, k - 3});
        }
        break;
    default:
        break;
    }
    d.label = std::string(1, type) + (affine ? "~" : "") + std::to_string(k);
    return d;
}

IntMatrix coxeter_element(const CoxeterDiagram& d)
{
    const auto n = static_cast<Eigen::Index>(d.rank());
    std::vector<Eigen::Index> order(n);
    for (Eigen::Index i = 0; i < n; ++i) order[i] = i;
    IntMatrix tau = reflection_product(d.gram, order);
    if (tau.transpose() * d.gram * tau != d.gram)
        throw ConsistencyError("Coxeter element does not preserve the form of " + d.label);
    return tau;
}

IntMatrix coxeter_element_inverse(const CoxeterDiagram& d)
{
    const auto n = static_cast<Eigen::Index>(d.rank());
    std::vector<Eigen::Index> order(n);
    for (Eigen::Index i = 0; i < n; ++i) order[i] = n - 1 - i;
    return reflection_product(d.gram, order);
}

IntPoly char_poly_coxeter(const IntMatrix& tau)
{
    const Eigen::Index n = tau.rows();
    PolyMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = IntPoly(std::vector<BigInt>{BigInt(i == j ? 1 : 0), BigInt(static_cast<long>(-tau(i, j)))});
    return poly_matrix_det(m);
}

IntPoly char_poly_coxeter_t2(const IntMatrix& tau)
{
    const Eigen::Index n = tau.rows();
    PolyMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = IntPoly(std::vector<BigInt>{BigInt(static_cast<long>(-tau(i, j))), BigInt(0), BigInt(i == j ? 1 : 0)});
    return poly_matrix_det(m);
}

IntPoly closed_form_delta(DiagramVariant variant, const std::vector<int>& alphas)
{
    if (alphas.empty()) throw Error("closed form needs at least one arm");
    for (int a : alphas)
        if (a < 1) throw Error("arm lengths must be at least 1");
    const auto m = static_cast<int>(alphas.size());

    RationalFunction result;
    if (variant == DiagramVariant::plain) {
        result = pow(RationalFunction(one_minus_t_pow(1), IntPoly(BigInt(1))), 2 - m);
        for (int a : alphas) result = result * RationalFunction(one_minus_t_pow(static_cast<unsigned>(a)), IntPoly(BigInt(1)));
    } else {
        RationalFunction sum;
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            const RationalFunction head(one_minus_t_pow(static_cast<unsigned>(alphas[i] - 1)), one_minus_t_pow(1));
            sum = sum + head * arm_product(alphas, i, true);
        }
        const IntPoly t2 = IntPoly::monomial(BigInt(1), 2);
        const IntPoly t1 = IntPoly::variable();
        if (variant == DiagramVariant::minus) {
            const IntPoly lead = IntPoly(BigInt(1)) + t1;
            result = RationalFunction(lead, IntPoly(BigInt(1))) * arm_product(alphas, 0, false) -
                     RationalFunction(t1, IntPoly(BigInt(1))) * sum;
        } else {
            const IntPoly lead(std::vector<BigInt>{1, -2, -2, 1});
            result = RationalFunction(lead, IntPoly(BigInt(1))) * arm_product(alphas, 0, false) +
                     RationalFunction(t2, IntPoly(BigInt(1))) * sum;
        }
    }
    if (!result.is_polynomial())
        throw ArithmeticError("closed form for " + to_string(variant) + "_" + join(alphas) + " is not a polynomial");
    return result.to_polynomial();
}

IntPoly ade_coxeter_polys(const std::string& label, bool affine)
{
    return char_poly_coxeter(coxeter_element(build_ade_diagram(label, affine)));
}

}  // namespace mckay
