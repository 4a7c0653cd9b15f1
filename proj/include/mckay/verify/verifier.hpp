#pragma once

// Runs every identity that applies to a catalog entry and collects the
// outcomes into a deterministic report.

#include "mckay/catalog/catalog.hpp"
#include "mckay/core/mckay.hpp"

#include "json.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace mckay {

inline constexpr int report_version = 1;

/// Everything computed from the generators of one entry.
struct Analysis {
    MatrixGroup group;
    ConjugacyClasses classes;
    CharacterTable table;
    ClassFunction chi;
    McKayMatrices mm;
    MMatrices mats;
    IntPoly det_M;
    IntPoly det_M0;
};

using BPerturbation = std::function<void(McKayMatrices&)>;

/// Generation bound is twice the expected order so that a wrong order is
/// reported as a mismatch instead of an abort.
Analysis analyze(const CatalogEntry& entry, const BPerturbation& perturb = {});

struct VerifyOptions {
    /// Truncation order for the linear-system series against Molien.
    std::size_t order = 50;
    /// Order for the component-wise, recursion and dimension checks.
    std::size_t property_order = 30;
    /// Record wall-clock time per check; otherwise ms is 0.
    bool timings = false;
    /// Applied to B, B* right after they are computed (negative tests).
    BPerturbation perturb_B;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    double ms = 0;
};

struct EntryReport {
    std::string id;
    std::string label;
    int dimension = 0;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
    /// Throws Error when the entry has no check of that name.
    [[nodiscard]] const CheckResult& check(const std::string& name) const;
};

/// One row of the determinant table for a dimension-3 entry.
struct Table4Row {
    std::string id;
    std::string label;
    std::string expected_M0;
    std::string expected_M;
    IntPoly computed_M0;
    IntPoly computed_M;
    bool match_M0 = false;
    bool match_M = false;
};

struct Report {
    std::size_t order = 50;
    std::vector<EntryReport> entries;
    std::vector<Table4Row> table4;

    [[nodiscard]] std::size_t check_count() const;
    [[nodiscard]] std::size_t failed_count() const;
    [[nodiscard]] bool passed() const { return failed_count() == 0; }
};

/// Names of the checks verify_entry runs for this entry, in order.
std::vector<std::string> applicable_checks(const CatalogEntry& entry);

EntryReport verify_entry(const CatalogEntry& entry, const VerifyOptions& options = {});
/// Same, on an already computed analysis (adds the Table 4 row if any).
EntryReport verify_entry(const CatalogEntry& entry, const std::shared_ptr<const Analysis>& analysis,
                         const VerifyOptions& options, Table4Row* row = nullptr);

/// Splits "T,O,I" into names; "all" selects the whole catalog. Unknown names
/// and an empty selection throw CatalogError before anything is computed.
std::vector<const CatalogEntry*> select_entries(const std::vector<CatalogEntry>& catalog,
                                                const std::string& selection);

/// Entries are reported in catalog order.
Report run_suite(const std::vector<CatalogEntry>& catalog, const std::string& selection,
                 const VerifyOptions& options = {});

nlohmann::json report_to_json(const Report& report);
std::string report_to_text(const Report& report);
std::string table4_to_text(const std::vector<Table4Row>& rows);

}  // namespace mckay
