#pragma once

// Sufficient conditions for the field of moduli to be a field of definition,
// applied to one family in a fixed priority order.

#include "supell/dataset.hpp"

#include <set>
#include <string>
#include <vector>

namespace supell {

enum class Reason { unique_subgroup, odd_signature, quasiplatonic };

/// Definable (with the first criterion that applies) or possibly not definable.
/// The latter means no criterion applies; it does not assert non-definability.
struct Classification {
    bool definable = false;
    std::optional<Reason> reason;

    static Classification by(Reason r) { return {true, r}; }
    static Classification possibly_not() { return {false, std::nullopt}; }
    friend bool operator==(const Classification&, const Classification&) = default;
};

std::string_view to_string(Reason r);
/// Short statement of the criterion behind a verdict.
std::string theorem_citation(const Classification& c);
/// "definable (odd signature)" or "possibly not definable".
std::string describe(const Classification& c);
/// {"verdict": ..., "reason": ..., "theorem": ...}
std::string to_json(const Classification& c);

/// Priority: reduced group neither trivial nor cyclic; odd signature;
/// delta = 0; otherwise possibly not definable. Throws InconsistentSignature
/// when `signature` does not give a genus-zero quotient.
Classification classify(int genus, int level, const ReducedGroup& reduced, const Signature& signature);

/// Uses the repaired signature when the dataset carries one. Never reads rec.blue.
Classification classify(const Dataset& ds, const FamilyRecord& rec);

struct RowVerdict {
    RowKey key;
    Classification verdict;
    bool printed_blue = false;
    bool matches() const { return verdict.definable != printed_blue; }
};

struct GenusReport {
    int genus = 0;
    std::vector<RowVerdict> rows;
    std::set<int> possibly_not;
    /// Rows classified possibly-not but not marked, and vice versa.
    std::set<int> unexpected_possibly_not;
    std::set<int> missing_possibly_not;
    int definable_count() const { return static_cast<int>(rows.size() - possibly_not.size()); }
};

GenusReport classify_genus(int genus, const Dataset& ds);

/// Rows stated in the text as not covered by any criterion, genus 3..10.
/// Throws std::out_of_range otherwise.
std::set<int> expected_blue(int genus);

}  // namespace supell
