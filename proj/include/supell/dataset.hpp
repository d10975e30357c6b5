#pragma once

// The classification tables for genus 3-10 as data, their errata, and the
// JSON / CSV forms.

#include "supell/family.hpp"
#include "supell/signature.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace supell {

/// A printed equation that contradicts its own row (wrong genus or parameter
/// count), with the corrected template and the reason.
struct EquationErratum {
    RowKey key;
    EquationTemplate corrected;
    std::string note;
    friend bool operator==(const EquationErratum&, const EquationErratum&) = default;
};

/// A printed signature that fails Riemann-Hurwitz and how it was repaired.
struct SignatureErratum {
    RowKey key;
    RepairOutcome outcome;
    friend bool operator==(const SignatureErratum&, const SignatureErratum&) = default;
};

/// Individual curves quoted in the genus 3 and 4 arguments; not table rows.
struct NamedCurve {
    int genus = 0;
    int level = 2;
    std::string group;
    EquationTemplate equation;
    friend bool operator==(const NamedCurve&, const NamedCurve&) = default;
};

struct Dataset {
    /// Sorted by (genus, Nr).
    std::vector<FamilyRecord> records;
    std::vector<SignatureErratum> signature_errata;
    std::vector<EquationErratum> equation_errata;
    std::vector<NamedCurve> named_curves;

    const FamilyRecord* find(RowKey key) const;
    std::vector<const FamilyRecord*> rows_of_genus(int genus) const;
    std::vector<int> genera() const;

    const SignatureErratum* signature_erratum(RowKey key) const;
    const EquationErratum* equation_erratum(RowKey key) const;

    /// Repaired signature when an erratum exists, else the printed one.
    Signature effective_signature(const FamilyRecord& rec) const;
    /// Corrected equation when an erratum exists, else the printed one.
    const EquationTemplate& effective_equation(const FamilyRecord& rec) const;

    friend bool operator==(const Dataset&, const Dataset&) = default;
};

class SchemaError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raw table rows, printed values verbatim.
std::vector<FamilyRecord> embedded_records();
std::vector<EquationErratum> embedded_equation_errata();
std::vector<NamedCurve> embedded_named_curves();

/// Runs the signature repair over every record. Rows that single-edit repair
/// cannot fix fall back to the signature read off the (effective) equation
/// when that one satisfies Riemann-Hurwitz (status `reconstructed`).
std::vector<SignatureErratum> compute_signature_errata(const std::vector<FamilyRecord>& records,
                                                       const std::vector<EquationErratum>& equation_errata);

/// Embedded rows with errata attached.
Dataset load_embedded();

/// Row counts per genus of the embedded tables.
const std::map<int, int>& expected_row_counts();

/// Level tallies stated in prose next to the tables (genus 10 only).
std::optional<std::map<int, int>> stated_level_counts(int genus);

/// Structural problems: duplicate keys, gaps in Nr, unsorted rows, m columns
/// that disagree with the reduced group, errata for missing rows.
std::vector<std::string> integrity_issues(const Dataset& ds);

/// Rows whose recognized group label has an order other than n * |reduced group|.
std::vector<std::pair<RowKey, std::string>> label_order_mismatches(const Dataset& ds);

/// Versioned ("v1") JSON document. Output is byte-identical across runs.
std::string to_json(const Dataset& ds);
/// Throws SchemaError with the offending row in the message. Documents
/// without "signature_errata" get them recomputed.
Dataset from_json(std::string_view text);

/// One line per record; RFC 4180 quoting. Columns: genus, Nr, reduced_group,
/// full_group, order, n, m, signature, delta, blue, equation.
std::string export_csv(const Dataset& ds, std::optional<int> genus = std::nullopt);

/// Rows of one genus tallied by level n.
std::map<int, int> count_by_level(const Dataset& ds, int genus);

}  // namespace supell
