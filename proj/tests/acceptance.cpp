// Acceptance run: one line per criterion, "criterion N: PASS|FAIL  detail".
// With an argument N only that criterion runs; the exit status is nonzero
// iff a selected criterion fails.

#include "mckay/verify/verifier.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace mckay;

namespace {

const std::vector<CatalogEntry>& catalog()
{
    static const auto c = load_catalog(MCKAY_TEST_CATALOG_DIR);
    return c;
}

const Analysis& analysis_of(const CatalogEntry& e)
{
    static std::map<std::string, Analysis> cache;
    auto it = cache.find(e.id);
    if (it == cache.end()) it = cache.emplace(e.id, analyze(e)).first;
    return it->second;
}

bool is_odd_cyclic(const CatalogEntry& e) { return e.ade_family == "cyclic" && e.expected_order % 2 == 1; }

IntPoly lattice(DiagramVariant v, const std::vector<int>& a)
{
    return char_poly_coxeter(coxeter_element(build_diagram(v, a)));
}

struct Tally {
    int passed = 0;
    int total = 0;
    std::vector<std::string> failures;

    void record(bool ok, const std::string& what)
    {
        ++total;
        if (ok)
            ++passed;
        else
            failures.push_back(what);
    }

    void guarded(const std::string& what, const std::function<bool()>& body)
    {
        try {
            record(body(), what);
        } catch (const std::exception& e) {
            record(false, what + " (" + e.what() + ")");
        }
    }

    [[nodiscard]] std::string summary() const
    {
        std::ostringstream out;
        out << passed << "/" << total << " identities";
        if (!failures.empty()) {
            out << "; failing:";
            for (const auto& f : failures) out << " " << f;
        }
        return out.str();
    }
};

// 1. det M0 and det M against the tabulated factorizations, all SL3 groups.
Tally criterion1()
{
    Tally t;
    for (const auto& e : catalog()) {
        if (e.dimension != 3) continue;
        t.guarded(e.id + ":detM0", [&] {
            return rational_eq(RationalFunction(analysis_of(e).det_M0), expected_det_expression(*e.det_M0));
        });
        t.guarded(e.id + ":detM", [&] {
            return rational_eq(RationalFunction(analysis_of(e).det_M), expected_det_expression(*e.det_M));
        });
    }
    return t;
}

// 2. det M0 / det M = Molien series = p_f(t^c_G)[/(1 - t^deg w)].
Tally criterion2()
{
    Tally t;
    for (const auto& e : catalog()) {
        if (is_odd_cyclic(e)) continue;
        t.guarded(e.id, [&] {
            const auto& a = analysis_of(e);
            const RationalFunction molien = molien_series(a.group, a.classes);
            return rational_eq(RationalFunction(a.det_M0, a.det_M), molien) && rational_eq(molien, expected_pG(e));
        });
    }
    return t;
}

// 3. p_f = Delta_{T-}/Delta_T (Kleinian) and Delta_{T+}/Delta_T (Fuchsian).
Tally criterion3()
{
    Tally t;
    const std::vector<std::string> kleinian = {"BT", "BO", "BI", "D2", "D3", "D4", "D5", "C4", "C6", "C8"};
    for (const auto& id : kleinian) {
        const auto& e = find_entry(catalog(), id);
        t.guarded(e.singularity, [&] {
            return rational_eq(RationalFunction(lattice(DiagramVariant::minus, e.dolgachev),
                                                lattice(DiagramVariant::plain, e.dolgachev)),
                               poincare_from_weights(e.weights));
        });
    }
    int fuchsian = 0;
    for (const auto& e : catalog()) {
        if (e.singularity_variant != SingularityVariant::fuchsian) continue;
        ++fuchsian;
        t.guarded(e.singularity, [&] {
            return rational_eq(RationalFunction(lattice(DiagramVariant::plus, e.dolgachev),
                                                lattice(DiagramVariant::plain, e.dolgachev)),
                               poincare_from_weights(e.weights));
        });
    }
    t.record(fuchsian == 11, "fuchsian-count");
    return t;
}

// 4. SL2: det M0 = det(t^2 I - tau), det M = det(t^2 I - tau_a); cyclic det M = (1 - t^|G|)^2.
Tally criterion4()
{
    Tally t;
    for (const auto& e : catalog()) {
        if (e.dimension != 2) continue;
        const auto& a = analysis_of(e);
        if (e.ade_family == "tree") {
            t.guarded(e.id + ":detM0", [&] {
                return a.det_M0 == char_poly_coxeter_t2(coxeter_element(build_ade_diagram(e.ade_label, false)));
            });
            t.guarded(e.id + ":detM", [&] {
                return a.det_M == char_poly_coxeter_t2(coxeter_element(build_ade_diagram(e.ade_label, true)));
            });
        } else {
            t.guarded(e.id + ":detM", [&] {
                return a.det_M == pow(one_minus_t_pow(static_cast<unsigned>(a.group.order())), 2U);
            });
        }
    }
    return t;
}

// 5. Class-product oracle, linear system vs symmetric powers, recursion.
Tally criterion5()
{
    Tally t;
    for (const auto& e : catalog()) {
        const auto& a = analysis_of(e);
        t.guarded(e.id + ":class-product", [&] { return a.det_M == det_M_class_product(a.group, a.classes); });
        const auto v = symmetric_power_vector(a.group, a.classes, a.table, 30);
        t.guarded(e.id + ":linear-system", [&] {
            const auto x = solve_P_by_linear_system(a.mm, e.dimension, 30);
            return x == v;
        });
        t.guarded(e.id + ":recursion", [&] { return check_cg_recursion(v, a.mm, e.dimension); });
    }
    return t;
}

// 6. Lattice vs closed form for every diagram in the catalog, plus the braid corollaries.
Tally criterion6()
{
    Tally t;
    std::vector<std::pair<DiagramVariant, std::vector<int>>> pairs;
    auto add = [&](DiagramVariant v, const std::vector<int>& a) {
        if (std::find(pairs.begin(), pairs.end(), std::make_pair(v, a)) == pairs.end()) pairs.emplace_back(v, a);
    };
    for (const auto& e : catalog()) {
        if (e.singularity_variant != SingularityVariant::excluded) {
            add(e.singularity_variant == SingularityVariant::kleinian ? DiagramVariant::minus : DiagramVariant::plus,
                e.dolgachev);
            add(DiagramVariant::plain, e.dolgachev);
        }
        if (e.det_M0) add(e.det_M0->variant, e.det_M0->alphas);
        if (e.det_M) add(e.det_M->variant, e.det_M->alphas);
    }
    for (const auto& [v, a] : pairs) {
        std::string label = to_string(v) + "_";
        for (std::size_t i = 0; i < a.size(); ++i) label += (i ? "," : "") + std::to_string(a[i]);
        t.guarded(label, [&] { return lattice(v, a) == closed_form_delta(v, a); });
    }
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> braid = {
        {{2, 3, 3}, {3, 3, 3}}, {{2, 3, 4}, {2, 4, 4}}, {{2, 3, 5}, {2, 3, 6}}};
    for (const auto& [plain, minus] : braid)
        t.guarded("braid", [&] { return lattice(DiagramVariant::plain, plain) == lattice(DiagramVariant::minus, minus); });
    return t;
}

// 7. Structural invariants.
Tally criterion7()
{
    Tally t;
    for (const auto& e : catalog()) {
        const auto& a = analysis_of(e);
        const int n = e.dimension;
        const std::size_t k = a.table.size();
        const std::size_t order = a.group.order();
        t.record(a.mm.Bstar == a.mm.B.transpose(), e.id + ":Bstar");
        if (n == 2) t.record(a.mm.B == a.mm.B.transpose(), e.id + ":B-symmetric");
        t.guarded(e.id + ":orthogonality", [&] {
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (inner_product(a.table.rows[i], a.table.rows[j], a.classes, order) != Cyclotomic(i == j ? 1L : 0L))
                        return false;
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t d = 0; d < k; ++d) {
                    Cyclotomic s;
                    for (std::size_t i = 0; i < k; ++i) s += a.table.rows[i][c] * conj(a.table.rows[i][d]);
                    if (s != Cyclotomic(c == d ? static_cast<long>(order / a.classes.sizes[c]) : 0L)) return false;
                }
            return true;
        });
        t.record(a.det_M.degree() == n * static_cast<int>(k), e.id + ":deg-detM");
        t.guarded(e.id + ":v_m", [&] {
            const auto v = symmetric_power_vector(a.group, a.classes, a.table, 30);
            for (const auto& s : v)
                if (!s.is_natural()) return false;
            return check_dimension_count(v, a.table.degrees, n);
        });
    }
    return t;
}

// 8. Single perturbations flip the corresponding check.
Tally criterion8()
{
    Tally t;
    const auto& T = find_entry(catalog(), "T");
    t.guarded("control", [&] { return verify_entry(T).passed(); });

    VerifyOptions bump;
    bump.perturb_B = [](McKayMatrices& mm) { mm.B(0, 0) += 1; };
    t.guarded("B", [&] { return !verify_entry(T, bump).check("table4_detM").pass; });

    t.guarded("alpha", [&] {
        CatalogEntry e = T;
        e.det_M0->alphas = {2, 3, 4};
        return !verify_entry(e).check("table4_detM0").pass;
    });
    t.guarded("dolgachev", [&] {
        CatalogEntry e = T;
        e.dolgachev = {2, 3, 4};
        return !verify_entry(e).check("singularity_theorem").pass;
    });
    t.guarded("q-exponent", [&] {
        CatalogEntry e = T;
        e.det_M->factors[0].second += 1;
        return !verify_entry(e).check("table4_detM").pass;
    });
    return t;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<std::function<Tally()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8};
    std::vector<int> selected;
    if (argc > 1) {
        const int n = std::atoi(argv[1]);
        if (n < 1 || n > static_cast<int>(criteria.size())) {
            std::cerr << "usage: acceptance [1-8]\n";
            return 2;
        }
        selected.push_back(n);
    } else {
        for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
    }

    bool ok = true;
    for (int n : selected) {
        Tally t;
        try {
            t = criteria[n - 1]();
        } catch (const std::exception& e) {
            t.record(false, std::string("setup (") + e.what() + ")");
        }
        const bool pass = t.failures.empty() && t.total > 0;
        ok = ok && pass;
        std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << "  " << t.summary() << std::endl;
    }
    return ok ? 0 : 1;
}
