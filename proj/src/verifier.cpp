#include "mckay/verify/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace mckay {

using nlohmann::json;

namespace {

std::string str(const IntPoly& p) { return to_string(p); }
std::string str(const RationalFunction& f) { return f.to_string(); }

std::string list(const std::vector<int>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

std::string series_head(const PowerSeries& s, std::size_t shown = 12)
{
    std::string out;
    for (std::size_t i = 0; i <= std::min(shown, s.order()); ++i) out += (i ? "," : "") + s[i].get_str();
    if (s.order() > shown) out += ",...";
    return out;
}

IntPoly lattice_delta(DiagramVariant v, const std::vector<int>& alphas)
{
    return char_poly_coxeter(coxeter_element(build_diagram(v, alphas)));
}

IntPoly ade_t2(const std::string& label, bool affine)
{
    return char_poly_coxeter_t2(coxeter_element(build_ade_diagram(label, affine)));
}

bool spec_matches(const IntPoly& computed, const FactorSpec& spec)
{
    return rational_eq(RationalFunction(computed), expected_det_expression(spec));
}

std::string pair_label(DiagramVariant v, const std::vector<int>& alphas)
{
    return to_string(v) + list(alphas);
}

// Every (variant, arms) pair the entry refers to, without repeats.
std::vector<std::pair<DiagramVariant, std::vector<int>>> diagrams_of(const CatalogEntry& e)
{
    std::vector<std::pair<DiagramVariant, std::vector<int>>> out;
    auto add = [&](DiagramVariant v, std::vector<int> a) {
        std::pair<DiagramVariant, std::vector<int>> p{v, std::move(a)};
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };
    if (e.singularity_variant != SingularityVariant::excluded) {
        add(e.singularity_variant == SingularityVariant::kleinian ? DiagramVariant::minus : DiagramVariant::plus,
            e.dolgachev);
        add(DiagramVariant::plain, e.dolgachev);
    }
    for (const auto* s : {&e.det_M0, &e.det_M})
        if (*s) add((*s)->variant, (*s)->alphas);
    return out;
}

bool is_tree(const CatalogEntry& e) { return e.dimension == 2 && e.ade_family == "tree" && e.sl2_mckay_applicable; }
bool is_cyclic(const CatalogEntry& e) { return e.dimension == 2 && e.ade_family == "cyclic"; }

std::string column(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

}  // namespace

Analysis analyze(const CatalogEntry& entry, const BPerturbation& perturb)
{
    Analysis a;
    a.group = generate_group(entry.generators, std::max<std::size_t>(2 * entry.expected_order, 8), entry.dimension);
    a.classes = conjugacy_classes(a.group);
    a.table = character_table(a.group, a.classes);
    a.chi = natural_character(a.group, a.classes);
    a.mm = mckay_matrices(a.table, a.chi, a.classes, a.group.order());
    if (perturb) perturb(a.mm);
    a.mats = build_M(a.mm, entry.dimension);
    a.det_M = poly_matrix_det(a.mats.M);
    a.det_M0 = poly_matrix_det(a.mats.M0);
    return a;
}

bool EntryReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult& EntryReport::check(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw Error("entry " + id + " has no check '" + name + "'");
}

std::size_t Report::check_count() const
{
    std::size_t n = 0;
    for (const auto& e : entries) n += e.checks.size();
    return n;
}

std::size_t Report::failed_count() const
{
    std::size_t n = 0;
    for (const auto& e : entries)
        n += static_cast<std::size_t>(std::count_if(e.checks.begin(), e.checks.end(),
                                                    [](const CheckResult& c) { return !c.pass; }));
    return n;
}

std::vector<std::string> applicable_checks(const CatalogEntry& entry)
{
    std::vector<std::string> names = {"group_order", "character_table", "bstar_transpose"};
    if (entry.dimension == 2) names.emplace_back("b_symmetric");
    names.insert(names.end(), {"detM_class_product", "detM_degree", "cramer_molien", "molien_expected_pG", "c_G_gcd"});
    if (entry.singularity_variant != SingularityVariant::excluded) names.emplace_back("singularity_theorem");
    names.emplace_back("coxeter_closed_forms");
    if (entry.det_M0) names.emplace_back("table4_detM0");
    if (entry.det_M) names.insert(names.end(), {"table4_detM", "table4_degree"});
    if (entry.theorem) names.emplace_back("theorem_consistency");
    if (is_tree(entry)) names.insert(names.end(), {"sl2_detM0_coxeter", "sl2_detM_affine_coxeter"});
    if (is_cyclic(entry)) names.emplace_back("cyclic_detM");
    names.insert(names.end(), {"linear_system_molien", "linear_system_symmetric_powers", "cg_recursion",
                               "dimension_count"});
    return names;
}

EntryReport verify_entry(const CatalogEntry& entry, const VerifyOptions& options)
{
    std::shared_ptr<const Analysis> analysis;
    std::string failure;
    try {
        analysis = std::make_shared<const Analysis>(analyze(entry, options.perturb_B));
    } catch (const std::exception& e) {
        failure = e.what();
    }
    if (!analysis) {
        EntryReport r{entry.id, entry.label, entry.dimension, {}};
        for (const auto& name : applicable_checks(entry)) r.checks.push_back({name, false, "error", failure, 0});
        return r;
    }
    return verify_entry(entry, analysis, options);
}

EntryReport verify_entry(const CatalogEntry& entry, const std::shared_ptr<const Analysis>& analysis,
                         const VerifyOptions& options, Table4Row* row)
{
    const Analysis& a = *analysis;
    const int n = entry.dimension;
    const std::size_t k = a.table.size();
    const std::size_t order = a.group.order();

    // Lazily shared between checks.
    std::optional<RationalFunction> molien;
    auto get_molien = [&]() -> const RationalFunction& {
        if (!molien) molien = molien_series(a.group, a.classes);
        return *molien;
    };
    std::optional<SeriesVector> sym;
    auto get_sym = [&]() -> const SeriesVector& {
        if (!sym) sym = symmetric_power_vector(a.group, a.classes, a.table, options.property_order);
        return *sym;
    };

    struct Outcome {
        bool pass;
        std::string lhs;
        std::string rhs;
    };
    EntryReport report{entry.id, entry.label, n, {}};
    auto run = [&](const std::string& name, const std::function<Outcome()>& body) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult c{name, false, "", "", 0};
        try {
            auto o = body();
            c.pass = o.pass;
            c.lhs = std::move(o.lhs);
            c.rhs = std::move(o.rhs);
        } catch (const std::exception& e) {
            c.lhs = "error";
            c.rhs = e.what();
        }
        if (options.timings)
            c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(c));
    };

    run("group_order", [&] {
        return Outcome{order == entry.expected_order, std::to_string(order), std::to_string(entry.expected_order)};
    });

    run("character_table", [&] {
        bool ok = k == a.classes.count();
        long square_sum = 0;
        for (int d : a.table.degrees) square_sum += static_cast<long>(d) * d;
        ok = ok && square_sum == static_cast<long>(order);
        for (std::size_t i = 0; ok && i < k; ++i)
            for (std::size_t j = 0; ok && j < k; ++j)
                ok = inner_product(a.table.rows[i], a.table.rows[j], a.classes, order) == Cyclotomic(i == j ? 1L : 0L);
        for (std::size_t c = 0; ok && c < k; ++c)
            for (std::size_t d = 0; ok && d < k; ++d) {
                Cyclotomic s;
                for (std::size_t i = 0; i < k; ++i) s += a.table.rows[i][c] * conj(a.table.rows[i][d]);
                const long centralizer = c == d ? static_cast<long>(order / a.classes.sizes[c]) : 0L;
                ok = s == Cyclotomic(centralizer);
            }
        return Outcome{ok, std::to_string(k) + " irreducibles, degrees " + list(a.table.degrees),
                       std::to_string(a.classes.count()) + " classes, sum of squares " + std::to_string(order)};
    });

    run("bstar_transpose", [&] {
        const bool ok = a.mm.Bstar == a.mm.B.transpose();
        return Outcome{ok, "B*", "B^T"};
    });

    if (n == 2)
        run("b_symmetric", [&] { return Outcome{a.mm.B == a.mm.B.transpose(), "B", "B^T"}; });

    run("detM_class_product", [&] {
        const IntPoly oracle = det_M_class_product(a.group, a.classes);
        return Outcome{a.det_M == oracle, str(a.det_M), str(oracle)};
    });

    run("detM_degree", [&] {
        const int expected = n * static_cast<int>(k);
        return Outcome{a.det_M.degree() == expected, std::to_string(a.det_M.degree()), std::to_string(expected)};
    });

    run("cramer_molien", [&] {
        const RationalFunction quotient(a.det_M0, a.det_M);
        return Outcome{rational_eq(quotient, get_molien()), str(quotient), str(get_molien())};
    });

    run("molien_expected_pG", [&] {
        const RationalFunction expected = expected_pG(entry);
        return Outcome{rational_eq(get_molien(), expected), str(get_molien()), str(expected)};
    });

    run("c_G_gcd", [&] {
        const auto& d = entry.invariant_degrees;
        const int g = std::accumulate(d.begin() + (n == 3 ? 1 : 0), d.end(), 0,
                                      [](int x, int y) { return std::gcd(x, y); });
        return Outcome{g == entry.c_G, std::to_string(g), std::to_string(entry.c_G)};
    });

    if (entry.singularity_variant != SingularityVariant::excluded)
        run("singularity_theorem", [&] {
            const auto top = entry.singularity_variant == SingularityVariant::kleinian ? DiagramVariant::minus
                                                                                        : DiagramVariant::plus;
            const RationalFunction lattice(lattice_delta(top, entry.dolgachev),
                                           lattice_delta(DiagramVariant::plain, entry.dolgachev));
            const RationalFunction pf = poincare_from_weights(entry.weights);
            return Outcome{rational_eq(lattice, pf), str(lattice), str(pf)};
        });

    run("coxeter_closed_forms", [&] {
        bool ok = true;
        std::string checked;
        for (const auto& [v, alphas] : diagrams_of(entry)) {
            ok = ok && lattice_delta(v, alphas) == closed_form_delta(v, alphas);
            checked += (checked.empty() ? "" : " ") + pair_label(v, alphas);
        }
        return Outcome{ok, "lattice " + checked, "closed form"};
    });

    if (entry.det_M0)
        run("table4_detM0", [&] {
            return Outcome{spec_matches(a.det_M0, *entry.det_M0), str(a.det_M0), entry.det_M0->to_string()};
        });
    if (entry.det_M) {
        run("table4_detM", [&] {
            return Outcome{spec_matches(a.det_M, *entry.det_M), str(a.det_M), entry.det_M->to_string()};
        });
        run("table4_degree", [&] {
            const RationalFunction e = expected_det_expression(*entry.det_M);
            const int degree = e.numerator().degree() - e.denominator().degree();
            const int expected = n * static_cast<int>(k);
            return Outcome{degree == expected, std::to_string(degree), std::to_string(expected)};
        });
    }
    if (entry.theorem)
        run("theorem_consistency", [&] {
            const auto [m0, m] = theorem_specs(entry);
            bool ok = true;
            if (entry.det_M0)
                ok = ok && rational_eq(expected_det_expression(m0), expected_det_expression(*entry.det_M0));
            if (entry.det_M) ok = ok && rational_eq(expected_det_expression(m), expected_det_expression(*entry.det_M));
            return Outcome{ok, m0.to_string() + " ; " + m.to_string(),
                           (entry.det_M0 ? entry.det_M0->to_string() : "-") + " ; " +
                               (entry.det_M ? entry.det_M->to_string() : "-")};
        });

    if (is_tree(entry)) {
        run("sl2_detM0_coxeter", [&] {
            const IntPoly c = ade_t2(entry.ade_label, false);
            return Outcome{a.det_M0 == c, str(a.det_M0), str(c)};
        });
        run("sl2_detM_affine_coxeter", [&] {
            const IntPoly c = ade_t2(entry.ade_label, true);
            return Outcome{a.det_M == c, str(a.det_M), str(c)};
        });
    }
    if (is_cyclic(entry))
        run("cyclic_detM", [&] {
            const IntPoly e = pow(one_minus_t_pow(static_cast<unsigned>(order)), 2U);
            return Outcome{a.det_M == e, str(a.det_M), str(e)};
        });

    run("linear_system_molien", [&] {
        const SeriesVector x = solve_P_by_linear_system(a.mm, n, options.order);
        const PowerSeries m = series_expand(get_molien(), options.order);
        return Outcome{x[0] == m, series_head(x[0]), series_head(m)};
    });

    run("linear_system_symmetric_powers", [&] {
        const SeriesVector x = solve_P_by_linear_system(a.mm, n, options.property_order);
        const SeriesVector& v = get_sym();
        std::string first_bad;
        for (std::size_t i = 0; i < k && first_bad.empty(); ++i)
            if (!(x[i] == v[i])) first_bad = std::to_string(i);
        return Outcome{first_bad.empty(),
                       first_bad.empty() ? "all components" : "component " + first_bad + " differs",
                       "symmetric powers to order " + std::to_string(options.property_order)};
    });

    run("cg_recursion", [&] {
        return Outcome{check_cg_recursion(get_sym(), a.mm, n), "v_m", "order " + std::to_string(options.property_order)};
    });

    run("dimension_count", [&] {
        const auto& v = get_sym();
        const bool natural = std::all_of(v.begin(), v.end(), [](const PowerSeries& s) { return s.is_natural(); });
        const bool ok = natural && check_dimension_count(v, a.table.degrees, n);
        return Outcome{ok, natural ? "non-negative integer multiplicities" : "non-natural multiplicity",
                       "binomial(m+" + std::to_string(n - 1) + "," + std::to_string(n - 1) + ")"};
    });

    if (row && entry.det_M0 && entry.det_M) {
        row->id = entry.id;
        row->label = entry.label;
        row->expected_M0 = entry.det_M0->to_string();
        row->expected_M = entry.det_M->to_string();
        row->computed_M0 = a.det_M0;
        row->computed_M = a.det_M;
        row->match_M0 = report.check("table4_detM0").pass;
        row->match_M = report.check("table4_detM").pass;
    }
    return report;
}

std::vector<const CatalogEntry*> select_entries(const std::vector<CatalogEntry>& catalog,
                                                const std::string& selection)
{
    std::vector<const CatalogEntry*> out;
    if (selection == "all") {
        for (const auto& e : catalog) out.push_back(&e);
        return out;
    }
    std::stringstream in(selection);
    std::string name;
    while (std::getline(in, name, ',')) {
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty()) continue;
        const CatalogEntry* e = &find_entry(catalog, name);
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    if (out.empty()) throw CatalogError("empty entry selection");
    std::sort(out.begin(), out.end());
    return out;
}

Report run_suite(const std::vector<CatalogEntry>& catalog, const std::string& selection, const VerifyOptions& options)
{
    const auto chosen = select_entries(catalog, selection);
    Report report;
    report.order = options.order;
    for (const CatalogEntry* e : chosen) {
        std::shared_ptr<const Analysis> analysis;
        try {
            analysis = std::make_shared<const Analysis>(analyze(*e, options.perturb_B));
        } catch (const std::exception&) {
        }
        if (!analysis) {
            report.entries.push_back(verify_entry(*e, options));
            continue;
        }
        Table4Row row;
        report.entries.push_back(verify_entry(*e, analysis, options, &row));
        if (!row.id.empty()) report.table4.push_back(std::move(row));
    }
    return report;
}

json report_to_json(const Report& report)
{
    json entries = json::array();
    std::vector<std::string> failed_entries;
    for (const auto& e : report.entries) {
        json checks = json::array();
        for (const auto& c : e.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ms", c.ms}});
        entries.push_back({{"id", e.id}, {"checks", checks}});
        if (!e.passed()) failed_entries.push_back(e.id);
    }
    const std::size_t total = report.check_count();
    const std::size_t failed = report.failed_count();
    return {{"version", report_version},
            {"catalog_schema", catalog_schema_version},
            {"order", report.order},
            {"entries", entries},
            {"summary",
             {{"entries", report.entries.size()},
              {"checks", total},
              {"passed", total - failed},
              {"failed", failed},
              {"failed_entries", failed_entries}}}};
}

std::string table4_to_text(const std::vector<Table4Row>& rows)
{
    std::ostringstream out;
    for (const auto& r : rows) {
        out << r.id << "  " << r.label << "\n";
        for (int which = 0; which < 2; ++which) {
            const bool m0 = which == 0;
            out << "  " << column(m0 ? "det M0" : "det M", 8) << column("expected", 10)
                << (m0 ? r.expected_M0 : r.expected_M) << "\n";
            out << "  " << column("", 8) << column("computed", 10) << to_string(m0 ? r.computed_M0 : r.computed_M)
                << "\n";
            out << "  " << column("", 8) << column("match", 10) << ((m0 ? r.match_M0 : r.match_M) ? "yes" : "NO")
                << "\n";
        }
    }
    return out.str();
}

std::string report_to_text(const Report& report)
{
    std::ostringstream out;
    for (const auto& e : report.entries) {
        const auto failed = std::count_if(e.checks.begin(), e.checks.end(), [](const CheckResult& c) { return !c.pass; });
        out << e.id << " (" << e.label << "): " << e.checks.size() - static_cast<std::size_t>(failed) << "/"
            << e.checks.size() << " checks pass\n";
        for (const auto& c : e.checks) {
            out << "  " << (c.pass ? "pass " : "FAIL ") << c.name;
            if (c.ms > 0) out << "  (" << c.ms << " ms)";
            out << "\n";
            if (!c.pass) out << "       lhs: " << c.lhs << "\n       rhs: " << c.rhs << "\n";
        }
    }
    if (!report.table4.empty()) out << "\nDeterminants of M0(t) and M(t)\n" << table4_to_text(report.table4);
    out << "\n" << report.entries.size() << " entries, " << report.check_count() << " checks, "
        << report.failed_count() << " failed\n";
    return out.str();
}

}  // namespace mckay
