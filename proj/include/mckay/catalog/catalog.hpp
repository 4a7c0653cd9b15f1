#pragma once

// Group catalog: generators plus the tabulated data each group is checked
// against (weights, Dolgachev numbers, c_G, determinant factorizations).

#include "mckay/arith/rational_function.hpp"
#include "mckay/coxeter/coxeter.hpp"
#include "mckay/groups/matrix_group.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mckay {

inline constexpr int catalog_schema_version = 1;

class CatalogError : public Error {
public:
    using Error::Error;
};

struct WeightSystem {
    std::vector<int> weights;
    std::vector<int> degrees;

    /// gcd of all weights and degrees.
    [[nodiscard]] int gcd() const;
};

/// prod (1 - t^e)^b times Delta_{variant, alphas}(t^argument_power).
struct FactorSpec {
    std::vector<std::pair<unsigned, int>> factors;
    DiagramVariant variant = DiagramVariant::plain;
    std::vector<int> alphas;
    unsigned argument_power = 1;

    [[nodiscard]] std::string to_string() const;
};

enum class SingularityVariant { kleinian, fuchsian, excluded };

struct TheoremData {
    /// "i" ... "v".
    std::string item;
    int a = 0;
    int b = 0;
};

struct CatalogEntry {
    std::string id;
    std::string label;
    std::vector<std::string> aliases;
    int dimension = 0;
    int conductor = 1;
    std::vector<GroupElement> generators;
    std::size_t expected_order = 0;
    /// Invariant degrees; for dimension 3 the first one is deg w.
    std::vector<int> invariant_degrees;
    int c_G = 1;
    WeightSystem weights;
    std::vector<int> dolgachev;
    std::string singularity;
    std::string normal_form;
    std::string relation;
    SingularityVariant singularity_variant = SingularityVariant::excluded;
    bool sl2_mckay_applicable = false;
    /// Dynkin label and family ("cyclic" or "tree") for dimension 2.
    std::string ade_label;
    std::string ade_family;
    std::optional<FactorSpec> det_M0;
    std::optional<FactorSpec> det_M;
    std::optional<TheoremData> theorem;
    std::string notes;

    [[nodiscard]] bool matches(const std::string& name) const;
};

std::string to_string(SingularityVariant v);

/// Parses one catalog record; throws CatalogError on a malformed document.
CatalogEntry parse_entry(const nlohmann::json& doc);
/// Power-basis coordinates in Q(zeta_conductor) as rational strings.
nlohmann::json cyclotomic_to_json(const Cyclotomic& c, int conductor);
Cyclotomic cyclotomic_from_json(const nlohmann::json& doc, int conductor);

/// Flag value if given, else $MCKAY_CATALOG, else the directory compiled in.
std::filesystem::path resolve_catalog_dir(const std::optional<std::string>& flag);

/// Every *.json record except index.json, ordered as listed in index.json
/// when present and by id otherwise.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);

/// Throws CatalogError for an unknown id or alias.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name);

/// prod(1 - t^d) / prod(1 - t^w).
RationalFunction poincare_from_weights(const WeightSystem& w);

/// p_f(t^c_G), divided by (1 - t^deg w) in dimension 3.
RationalFunction expected_pG(const CatalogEntry& entry);

RationalFunction expected_det_expression(const FactorSpec& spec);

/// Table-style specs for det M0 and det M rebuilt from the theorem data
/// (item, a, b) and the Dolgachev tuple.
std::pair<FactorSpec, FactorSpec> theorem_specs(const CatalogEntry& entry);

}  // namespace mckay
