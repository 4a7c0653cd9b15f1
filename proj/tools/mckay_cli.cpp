// mckay: command-line front end for the catalog verifier.

#include "mckay/verify/verifier.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <sstream>

using namespace mckay;
using nlohmann::json;

namespace {

struct Globals {
    std::string catalog;
    std::size_t order = 50;
    std::string format = "text";
    std::string entries = "all";
};

std::vector<CatalogEntry> load(const Globals& g)
{
    return load_catalog(resolve_catalog_dir(g.catalog.empty() ? std::nullopt : std::optional<std::string>(g.catalog)));
}

json int_matrix_json(const IntMatrix& m)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
        rows.push_back(r);
    }
    return rows;
}

std::string int_matrix_text(const IntMatrix& m, const std::string& indent)
{
    std::ostringstream out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << indent;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const std::string v = std::to_string(m(i, j));
            out << std::string(v.size() < 3 ? 3 - v.size() : 0, ' ') << v << (j + 1 < m.cols() ? " " : "");
        }
        out << "\n";
    }
    return out.str();
}

std::vector<std::string> series_strings(const PowerSeries& s)
{
    std::vector<std::string> out;
    for (const auto& c : s.coefficients()) out.push_back(c.get_str());
    return out;
}

int cmd_verify(const Globals& g, bool timings)
{
    VerifyOptions opt;
    opt.order = g.order;
    opt.timings = timings;
    const auto catalog = load(g);
    const Report report = run_suite(catalog, g.entries, opt);
    if (g.format == "json")
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);
    return report.passed() ? 0 : 1;
}

int cmd_group_info(const Globals& g)
{
    const auto catalog = load(g);
    json out = json::array();
    std::ostringstream text;
    for (const CatalogEntry* e : select_entries(catalog, g.entries)) {
        const auto group = generate_group(e->generators, 2 * e->expected_order, e->dimension);
        const auto classes = conjugacy_classes(group);
        const auto chi = natural_character(group, classes);
        json cls = json::array();
        for (std::size_t c = 0; c < classes.count(); ++c)
            cls.push_back({{"size", classes.sizes[c]},
                           {"element_order", group.element_order(classes.representatives[c])},
                           {"trace", chi[c].to_string()}});
        json rec = {{"id", e->id},
                    {"label", e->label},
                    {"dimension", e->dimension},
                    {"order", group.order()},
                    {"expected_order", e->expected_order},
                    {"exponent", group.exponent()},
                    {"conductor", group.conductor()},
                    {"classes", cls},
                    {"invariant_degrees", e->invariant_degrees},
                    {"c_G", e->c_G},
                    {"weights", e->weights.weights},
                    {"weight_degrees", e->weights.degrees},
                    {"dolgachev", e->dolgachev},
                    {"singularity", e->singularity},
                    {"normal_form", e->normal_form},
                    {"relation", e->relation}};
        out.push_back(rec);

        text << e->id << " (" << e->label << ")\n"
             << "  order " << group.order() << " (expected " << e->expected_order << "), exponent "
             << group.exponent() << ", " << classes.count() << " classes\n"
             << "  class sizes / element orders / traces:\n";
        for (std::size_t c = 0; c < classes.count(); ++c)
            text << "    " << classes.sizes[c] << " / " << group.element_order(classes.representatives[c]) << " / "
                 << chi[c].to_string() << "\n";
        text << "  invariant degrees " << rec["invariant_degrees"].dump() << ", c_G " << e->c_G << "\n"
             << "  weights " << rec["weights"].dump() << "; " << rec["weight_degrees"].dump() << ", Dolgachev "
             << rec["dolgachev"].dump() << "\n"
             << "  singularity " << e->singularity << ": " << e->normal_form << "\n";
    }
    std::cout << (g.format == "json" ? out.dump(2) + "\n" : text.str());
    return 0;
}

int cmd_chartable(const Globals& g)
{
    const auto catalog = load(g);
    json out = json::array();
    std::ostringstream text;
    for (const CatalogEntry* e : select_entries(catalog, g.entries)) {
        const auto group = generate_group(e->generators, 2 * e->expected_order, e->dimension);
        const auto classes = conjugacy_classes(group);
        const auto table = character_table(group, classes);
        json rows = json::array();
        text << e->id << ": " << table.size() << " irreducible characters over Q(zeta_" << table.conductor << ")\n"
             << "  class sizes:";
        for (auto s : classes.sizes) text << " " << s;
        text << "\n";
        for (std::size_t i = 0; i < table.size(); ++i) {
            json r = json::array();
            text << "  chi" << i << " (deg " << table.degrees[i] << "):";
            for (const auto& v : table.rows[i]) {
                r.push_back(v.to_string());
                text << "  " << v.to_string();
            }
            text << "\n";
            rows.push_back(r);
        }
        out.push_back({{"id", e->id},
                       {"conductor", table.conductor},
                       {"class_sizes", classes.sizes},
                       {"degrees", table.degrees},
                       {"rows", rows}});
    }
    std::cout << (g.format == "json" ? out.dump(2) + "\n" : text.str());
    return 0;
}

int cmd_coxeter(const Globals& g, const std::string& variant, const std::vector<int>& alphas, const std::string& ade,
                bool affine)
{
    CoxeterDiagram d;
    std::optional<IntPoly> closed;
    if (!ade.empty()) {
        d = build_ade_diagram(ade, affine);
    } else {
        if (alphas.empty()) throw Error("give --alphas or --ade");
        const DiagramVariant v = parse_variant(variant);
        d = build_diagram(v, alphas);
        closed = closed_form_delta(v, alphas);
    }
    const IntMatrix tau = coxeter_element(d);
    const IntPoly delta = char_poly_coxeter(tau);
    if (g.format == "json") {
        json out = {{"label", d.label},
                    {"vertices", d.vertices},
                    {"gram", int_matrix_json(d.gram)},
                    {"tau", int_matrix_json(tau)},
                    {"delta", to_string(delta)}};
        if (closed) {
            out["closed_form"] = to_string(*closed);
            out["agree"] = *closed == delta;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << d.label << ", rank " << d.rank() << "\n  reflection order:";
        for (const auto& v : d.vertices) std::cout << " " << v;
        std::cout << "\n  Gram matrix:\n" << int_matrix_text(d.gram, "    ") << "  Coxeter element:\n"
                  << int_matrix_text(tau, "    ") << "  det(I - t tau) = " << to_string(delta) << "\n";
        if (closed)
            std::cout << "  closed form     = " << to_string(*closed) << (*closed == delta ? "  (agree)" : "  (DIFFER)")
                      << "\n";
    }
    return closed && !(*closed == delta) ? 1 : 0;
}

int cmd_molien(const Globals& g)
{
    const auto catalog = load(g);
    json out = json::array();
    std::ostringstream text;
    bool all_ok = true;
    for (const CatalogEntry* e : select_entries(catalog, g.entries)) {
        const auto group = generate_group(e->generators, 2 * e->expected_order, e->dimension);
        const auto classes = conjugacy_classes(group);
        const RationalFunction m = molien_series(group, classes);
        const RationalFunction expected = expected_pG(*e);
        const bool ok = rational_eq(m, expected);
        all_ok = all_ok && ok;
        const PowerSeries s = series_expand(m, g.order);
        out.push_back({{"id", e->id},
                       {"molien", m.to_string()},
                       {"expected_pG", expected.to_string()},
                       {"agree", ok},
                       {"series", series_strings(s)}});
        text << e->id << "\n  Molien series " << m.to_string() << "\n  from weights  " << expected.to_string()
             << (ok ? "  (agree)" : "  (DIFFER)") << "\n  coefficients ";
        for (std::size_t i = 0; i <= s.order(); ++i) text << (i ? " " : "") << s[i].get_str();
        text << "\n";
    }
    std::cout << (g.format == "json" ? out.dump(2) + "\n" : text.str());
    return all_ok ? 0 : 1;
}

int cmd_table4(const Globals& g)
{
    const auto catalog = load(g);
    std::vector<Table4Row> rows;
    for (const CatalogEntry* e : select_entries(catalog, g.entries)) {
        if (!e->det_M0 || !e->det_M) continue;
        const auto a = std::make_shared<const Analysis>(analyze(*e));
        Table4Row row;
        verify_entry(*e, a, VerifyOptions{}, &row);
        rows.push_back(std::move(row));
    }
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.match_M0 && r.match_M;
    if (g.format == "json") {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"id", r.id},
                           {"label", r.label},
                           {"det_M0", {{"expected", r.expected_M0}, {"computed", to_string(r.computed_M0)}, {"match", r.match_M0}}},
                           {"det_M", {{"expected", r.expected_M}, {"computed", to_string(r.computed_M)}, {"match", r.match_M}}}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << table4_to_text(rows);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact McKay correspondence checks for finite subgroups of SL2 and SL3"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--catalog", g.catalog, "Catalog directory (default: $MCKAY_CATALOG, then the built-in path)");
    app.add_option("--order", g.order, "Series truncation order")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--entries", g.entries, "Comma-separated entry ids or 'all'");

    bool timings = false;
    auto* verify = app.add_subcommand("verify", "Run every applicable check and report");
    verify->add_flag("--timings", timings, "Record milliseconds per check");
    auto* info = app.add_subcommand("group-info", "Order, classes and tabulated data");
    auto* chartable = app.add_subcommand("chartable", "Character table");
    auto* molien = app.add_subcommand("molien", "Molien series against the weight system");
    auto* table4 = app.add_subcommand("table4", "det M0(t) and det M(t) against the tabulated factorizations");

    std::string variant = "plain";
    std::vector<int> alphas;
    std::string ade;
    bool affine = false;
    auto* coxeter = app.add_subcommand("coxeter", "Coxeter element of a star-shaped or Dynkin diagram");
    coxeter->add_option("--variant", variant, "minus, plain or plus")->check(CLI::IsMember({"minus", "plain", "plus"}));
    coxeter->add_option("--alphas", alphas, "Arm lengths, e.g. 2,3,5")->delimiter(',');
    coxeter->add_option("--ade", ade, "Dynkin label such as E8 or D5");
    coxeter->add_flag("--affine", affine, "Extended diagram (with --ade)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(g, timings);
        if (*info) return cmd_group_info(g);
        if (*chartable) return cmd_chartable(g);
        if (*molien) return cmd_molien(g);
        if (*table4) return cmd_table4(g);
        if (*coxeter) return cmd_coxeter(g, variant, alphas, ade, affine);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
