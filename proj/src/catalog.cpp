#include "mckay/catalog/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#ifndef MCKAY_CATALOG_DIR
#define MCKAY_CATALOG_DIR "data/catalog"
#endif

namespace mckay {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& doc, const char* key)
{
    if (!doc.contains(key)) throw CatalogError(std::string("missing field '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw CatalogError(std::string("field '") + key + "': " + e.what());
    }
}

std::vector<int> positive_list(const json& doc, const char* key)
{
    auto v = field<std::vector<int>>(doc, key);
    for (int x : v)
        if (x < 1) throw CatalogError(std::string("field '") + key + "' must hold positive integers");
    return v;
}

FactorSpec parse_spec(const json& doc)
{
    FactorSpec s;
    for (const auto& f : field<std::vector<std::vector<int>>>(doc, "factors")) {
        if (f.size() != 2 || f[0] < 1) throw CatalogError("factor must be [exponent >= 1, power]");
        s.factors.emplace_back(static_cast<unsigned>(f[0]), f[1]);
    }
    const json delta = field<json>(doc, "delta");
    s.variant = parse_variant(field<std::string>(delta, "variant"));
    s.alphas = positive_list(delta, "alphas");
    const int p = field<int>(doc, "argument_power");
    if (p < 1) throw CatalogError("argument_power must be positive");
    s.argument_power = static_cast<unsigned>(p);
    return s;
}

SingularityVariant parse_singularity_variant(const std::string& s)
{
    if (s == "kleinian") return SingularityVariant::kleinian;
    if (s == "fuchsian") return SingularityVariant::fuchsian;
    if (s == "excluded") return SingularityVariant::excluded;
    throw CatalogError("unknown theorem1_variant '" + s + "'");
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

int WeightSystem::gcd() const
{
    int g = 0;
    for (int w : weights) g = std::gcd(g, w);
    for (int d : degrees) g = std::gcd(g, d);
    return g;
}

std::string FactorSpec::to_string() const
{
    std::string s;
    const std::string arg = argument_power == 1 ? "t" : "t^" + std::to_string(argument_power);
    for (const auto& [e, b] : factors) {
        if (b == 0) continue;
        s += "(1-t" + (e == 1 ? std::string() : "^" + std::to_string(e)) + ")";
        if (b != 1) s += "^" + std::to_string(b);
        s += " ";
    }
    static const char* prefix[] = {"T-", "T", "T+"};
    s += "Delta[" + std::string(prefix[static_cast<int>(variant)]) + "_" + join(alphas) + "](" + arg + ")";
    return s;
}

bool CatalogEntry::matches(const std::string& name) const
{
    return name == id || std::find(aliases.begin(), aliases.end(), name) != aliases.end();
}

std::string to_string(SingularityVariant v)
{
    switch (v) {
    case SingularityVariant::kleinian:
        return "kleinian";
    case SingularityVariant::fuchsian:
        return "fuchsian";
    case SingularityVariant::excluded:
        return "excluded";
    }
    return "?";
}

json cyclotomic_to_json(const Cyclotomic& c, int conductor)
{
    if (conductor % c.conductor() != 0)
        throw CatalogError("conductor " + std::to_string(conductor) + " does not contain Q(zeta_" +
                           std::to_string(c.conductor()) + ")");
    json out = json::array();
    const Cyclotomic lifted = c.lifted(conductor);
    for (const auto& q : lifted.coefficients()) out.push_back(q.get_str());
    return out;
}

Cyclotomic cyclotomic_from_json(const json& doc, int conductor)
{
    if (!doc.is_array()) throw CatalogError("cyclotomic entry must be an array of rationals");
    if (doc.size() != static_cast<std::size_t>(euler_phi(conductor)))
        throw CatalogError("cyclotomic entry needs " + std::to_string(euler_phi(conductor)) + " coordinates");
    std::vector<Rational> coeffs;
    for (const auto& item : doc) {
        if (!item.is_string()) throw CatalogError("coordinates are written as strings such as \"-3/7\"");
        Rational q;
        if (q.set_str(item.get<std::string>(), 10) != 0 || sgn(q.get_den()) == 0)
            throw CatalogError("bad rational '" + item.get<std::string>() + "'");
        q.canonicalize();
        coeffs.push_back(q);
    }
    return Cyclotomic::from_coefficients(conductor, coeffs);
}

CatalogEntry parse_entry(const json& doc)
{
    if (!doc.is_object()) throw CatalogError("catalog record must be a JSON object");
    const int version = field<int>(doc, "schema_version");
    if (version != catalog_schema_version)
        throw CatalogError("unsupported schema_version " + std::to_string(version));

    CatalogEntry e;
    e.id = field<std::string>(doc, "id");
    try {
        e.label = doc.value("label", e.id);
        if (doc.contains("aliases")) e.aliases = field<std::vector<std::string>>(doc, "aliases");
        e.dimension = field<int>(doc, "dimension");
        if (e.dimension != 2 && e.dimension != 3) throw CatalogError("dimension must be 2 or 3");
        e.conductor = field<int>(doc, "conductor");
        if (e.conductor < 1) throw CatalogError("conductor must be positive");

        for (const auto& g : field<json>(doc, "generators")) {
            if (!g.is_array() || g.size() != static_cast<std::size_t>(e.dimension))
                throw CatalogError("generator must have " + std::to_string(e.dimension) + " rows");
            GroupElement m(e.dimension, e.dimension);
            for (int i = 0; i < e.dimension; ++i) {
                if (!g[i].is_array() || g[i].size() != static_cast<std::size_t>(e.dimension))
                    throw CatalogError("generator rows must have " + std::to_string(e.dimension) + " entries");
                for (int j = 0; j < e.dimension; ++j) m(i, j) = cyclotomic_from_json(g[i][j], e.conductor);
            }
            e.generators.push_back(std::move(m));
        }

        const int order = field<int>(doc, "expected_order");
        if (order < 1) throw CatalogError("expected_order must be positive");
        e.expected_order = static_cast<std::size_t>(order);
        e.invariant_degrees = positive_list(doc, "invariant_degrees");
        e.c_G = field<int>(doc, "c_G");
        if (e.c_G < 1) throw CatalogError("c_G must be positive");
        const json ws = field<json>(doc, "weight_system");
        e.weights.weights = positive_list(ws, "weights");
        e.weights.degrees = positive_list(ws, "degrees");
        e.dolgachev = positive_list(doc, "dolgachev");
        e.singularity = doc.value("singularity", "");
        e.normal_form = doc.value("normal_form", "");
        e.relation = doc.value("relation", "");
        e.singularity_variant = parse_singularity_variant(field<std::string>(doc, "theorem1_variant"));
        e.sl2_mckay_applicable = doc.value("sl2_mckay_applicable", false);
        if (doc.contains("ade")) {
            const json ade = doc.at("ade");
            e.ade_label = field<std::string>(ade, "label");
            e.ade_family = field<std::string>(ade, "family");
            if (e.ade_family != "cyclic" && e.ade_family != "tree")
                throw CatalogError("ade.family must be 'cyclic' or 'tree'");
        }
        if (doc.contains("det_M0")) e.det_M0 = parse_spec(doc.at("det_M0"));
        if (doc.contains("det_M")) e.det_M = parse_spec(doc.at("det_M"));
        if (doc.contains("theorem")) {
            const json th = doc.at("theorem");
            e.theorem = TheoremData{field<std::string>(th, "item"), field<int>(th, "a"), field<int>(th, "b")};
        }
        e.notes = doc.value("notes", "");
    } catch (const json::exception& ex) {
        throw CatalogError("entry " + e.id + ": " + ex.what());
    } catch (const CatalogError& ex) {
        throw CatalogError("entry " + e.id + ": " + ex.what());
    } catch (const ArithmeticError& ex) {
        throw CatalogError("entry " + e.id + ": " + ex.what());
    }
    return e;
}

std::filesystem::path resolve_catalog_dir(const std::optional<std::string>& flag)
{
    if (flag && !flag->empty()) return *flag;
    if (const char* env = std::getenv("MCKAY_CATALOG"); env && *env) return env;
    return MCKAY_CATALOG_DIR;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw CatalogError("catalog directory not found: " + dir.string());

    auto read = [](const fs::path& p) {
        std::ifstream in(p);
        if (!in) throw CatalogError("cannot open " + p.string());
        try {
            return json::parse(in);
        } catch (const json::parse_error& e) {
            throw CatalogError(p.filename().string() + ": " + e.what());
        }
    };

    std::map<std::string, CatalogEntry> by_id;
    std::vector<fs::path> files;
    for (const auto& item : fs::directory_iterator(dir))
        if (item.path().extension() == ".json" && item.path().filename() != "index.json") files.push_back(item.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
        CatalogEntry e = parse_entry(read(p));
        const std::string id = e.id;
        if (!by_id.emplace(id, std::move(e)).second) throw CatalogError("duplicate catalog id " + id);
    }

    std::vector<CatalogEntry> out;
    const fs::path index = dir / "index.json";
    if (fs::exists(index)) {
        const json doc = read(index);
        for (const auto& id : field<std::vector<std::string>>(doc, "entries")) {
            auto it = by_id.find(id);
            if (it == by_id.end()) throw CatalogError("index.json lists unknown entry " + id);
            out.push_back(std::move(it->second));
            by_id.erase(it);
        }
    }
    for (auto& [id, e] : by_id) out.push_back(std::move(e));

    std::set<std::string> names;
    for (const auto& e : out) {
        if (!names.insert(e.id).second) throw CatalogError("duplicate catalog name " + e.id);
        for (const auto& a : e.aliases)
            if (!names.insert(a).second) throw CatalogError("duplicate catalog name " + a);
    }
    return out;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name)
{
    for (const auto& e : catalog)
        if (e.matches(name)) return e;
    throw CatalogError("unknown catalog entry '" + name + "'");
}

RationalFunction poincare_from_weights(const WeightSystem& w)
{
    std::vector<std::pair<unsigned, int>> f;
    for (int d : w.degrees) f.emplace_back(static_cast<unsigned>(d), 1);
    for (int x : w.weights) f.emplace_back(static_cast<unsigned>(x), -1);
    return cyclotomic_factor_product(f);
}

RationalFunction expected_pG(const CatalogEntry& entry)
{
    RationalFunction p = poincare_from_weights(entry.weights).substitute_power(static_cast<std::size_t>(entry.c_G));
    if (entry.dimension == 3) {
        if (entry.invariant_degrees.empty()) throw CatalogError("entry " + entry.id + " lacks deg w");
        p = p / RationalFunction(one_minus_t_pow(static_cast<unsigned>(entry.invariant_degrees.front())));
    }
    return p;
}

RationalFunction expected_det_expression(const FactorSpec& spec)
{
    const IntPoly delta = closed_form_delta(spec.variant, spec.alphas).substitute_power(spec.argument_power);
    return cyclotomic_factor_product(spec.factors) * RationalFunction(delta);
}

std::pair<FactorSpec, FactorSpec> theorem_specs(const CatalogEntry& entry)
{
    if (!entry.theorem) throw CatalogError("entry " + entry.id + " carries no theorem data");
    const auto& th = *entry.theorem;
    const auto& alpha = entry.dolgachev;
    auto with_arm = [&](int arm) {
        std::vector<int> v = alpha;
        v.push_back(arm);
        std::sort(v.begin(), v.end());
        return v;
    };

    FactorSpec m0;
    FactorSpec m;
    if (th.item == "i" || th.item == "ii") {
        const unsigned e = th.item == "i" ? 2 : 4;
        m0 = {{{1, th.a}, {e, th.b}}, th.item == "i" ? DiagramVariant::minus : DiagramVariant::plus, alpha, 1};
        m = {{{1, th.a + 1}, {e, th.b}}, DiagramVariant::plain, with_arm(static_cast<int>(e)), 1};
    } else if (th.item == "iii") {
        m0 = {{{3, th.a}, {6, th.b}}, DiagramVariant::plus, alpha, 3};
        m = {{{3, th.a + 1}, {6, th.b}}, DiagramVariant::plain, with_arm(2), 3};
    } else if (th.item == "iv") {
        // q = q^(2)_{a,b}(t^3); det M0 carries one more factor (1 - t^3) and
        // det M is taken on the graph with one arm fewer.
        if (alpha.size() < 2) throw CatalogError("item iv needs at least two arms");
        m0 = {{{3, th.a + 1}, {6, th.b}}, DiagramVariant::plus, alpha, 3};
        m = {{{3, th.a}, {6, th.b}}, DiagramVariant::plain, std::vector<int>(alpha.begin() + 1, alpha.end()), 3};
    } else if (th.item == "v") {
        // q(t) = (1-t)^4 (1-t^2)(1-t^3)/(1-t^6), evaluated at t^3.
        m0 = {{{3, 4}, {6, 1}, {9, 1}, {18, -1}}, DiagramVariant::plus, alpha, 6};
        m = {{{3, 4}, {6, 1}, {9, 2}, {18, -1}}, DiagramVariant::plain, alpha, 6};
    } else {
        throw CatalogError("unknown theorem item '" + th.item + "'");
    }
    return {m0, m};
}

}  // namespace mckay
