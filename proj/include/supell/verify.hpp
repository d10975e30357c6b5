#pragma once

// Re-derives every column of every row and compares with what is printed.

#include "supell/classify.hpp"
#include "supell/dataset.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace supell {

enum class Severity { warning, failure };

struct Finding {
    /// nr == 0 for findings about a whole genus or the dataset.
    RowKey key;
    Severity severity = Severity::warning;
    /// Short check name: "rh", "delta", "genus", "params", "levels",
    /// "equation-signature", "classification", "separability", "label",
    /// "counts", "integrity".
    std::string check;
    std::string message;
};

struct VerifyOptions {
    std::optional<int> genus;
    /// Repaired errata count as failures.
    bool strict = false;
};

struct VerifyReport {
    std::vector<Finding> findings;
    int rows_checked = 0;
    std::map<int, GenusReport> classification;

    int failures() const;
    int warnings() const;
    /// 0 when there are no failures, 1 otherwise.
    int exit_code() const { return failures() == 0 ? 0 : 1; }
};

VerifyReport verify(const Dataset& ds, const VerifyOptions& options = {});

/// Plain-text rendering: findings in (genus, Nr) order, then per-genus
/// classification summaries and totals.
std::string render_report(const VerifyReport& report);

}  // namespace supell
