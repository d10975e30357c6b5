#include "supell/verify.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace supell {

int VerifyReport::failures() const {
    return static_cast<int>(std::count_if(findings.begin(), findings.end(),
                                          [](const Finding& f) { return f.severity == Severity::failure; }));
}

int VerifyReport::warnings() const { return static_cast<int>(findings.size()) - failures(); }

namespace {

std::string join(const std::set<int>& s) {
    std::string out;
    for (int v : s) {
        if (!out.empty()) out += ", ";
        out += std::to_string(v);
    }
    return out.empty() ? "-" : out;
}

class RowChecker {
  public:
    RowChecker(const Dataset& ds, const VerifyOptions& opt, std::vector<Finding>& out) : ds_(ds), opt_(opt), out_(out) {}

    void run(const FamilyRecord& rec) {
        key_ = rec.key;
        const int g = rec.key.genus;
        const long order = rec.group_order();
        const auto* serr = ds_.signature_erratum(rec.key);
        const auto* eerr = ds_.equation_erratum(rec.key);
        const Severity errata = opt_.strict ? Severity::failure : Severity::warning;

        // Riemann-Hurwitz on the printed signature, and the repair.
        if (serr) {
            const auto& o = serr->outcome;
            if (o.status == RepairStatus::unrepairable || !o.repaired) {
                add(Severity::failure, "rh", "printed " + rec.signature.to_display() + " fails Riemann-Hurwitz and cannot be repaired");
                return;
            }
            std::string msg = "printed " + rec.signature.to_display() + " fails Riemann-Hurwitz (g0 = " +
                              to_string(quotient_genus_exact(g, order, rec.signature)) + "); " +
                              std::string(to_string(o.status)) + " to " + o.repaired->to_display() + " (" + o.changed_entry + ")";
            if (o.ambiguous()) {
                msg += "; ambiguous, other candidates:";
                for (const auto& c : o.candidates) {
                    if (c != *o.repaired) msg += " (" + c.to_display() + ")";
                }
            }
            add(errata, "rh", msg);
        }
        const Signature sig = ds_.effective_signature(rec);
        int g0 = 0;
        try {
            g0 = quotient_genus(g, order, sig);
        } catch (const InconsistentSignature&) {
            add(Severity::failure, "rh", sig.to_display() + " still fails Riemann-Hurwitz");
            return;
        }
        if (g0 != 0) add(Severity::failure, "rh", "quotient genus " + std::to_string(g0) + ", expected 0");

        // delta column.
        const int delta = moduli_dimension(g0, sig.size());
        if (delta != rec.delta) {
            add(Severity::failure, "delta", "computed " + std::to_string(delta) + " from " + sig.to_display() + ", printed " + std::to_string(rec.delta));
        } else if (rec.signature.size() - 3 != rec.delta) {
            add(errata, "delta", "printed delta " + std::to_string(rec.delta) + " matches only the repaired signature");
        }

        // Equation: genus, parameter count, level enumeration.
        if (eerr) {
            std::string printed;
            try {
                printed = "gives genus " + std::to_string(genus_of_family(rec.level, rec.equation));
            } catch (const std::exception& e) {
                printed = "has no superelliptic genus (" + std::string(e.what()) + ")";
            }
            add(errata, "genus", "printed y^" + std::to_string(rec.level) + " = " + render(rec.equation) + " " + printed + " and " +
                                     std::to_string(parameter_count(rec.equation)) + " parameters; corrected to " +
                                     render(eerr->corrected) + " (" + eerr->note + ")");
        }
        const auto& eq = ds_.effective_equation(rec);
        int branches = 0;
        try {
            branches = branch_count(rec.level, eq);
            const int ge = superelliptic_genus(rec.level, branches);
            if (ge != g) add(Severity::failure, "genus", "equation gives genus " + std::to_string(ge));
        } catch (const std::exception& e) {
            add(Severity::failure, "genus", e.what());
        }
        if (parameter_count(eq) != rec.delta) {
            add(Severity::failure, "params", std::to_string(parameter_count(eq)) + " parameters, delta " + std::to_string(rec.delta));
        }
        const auto levels = enumerate_levels(g);
        if (std::find(levels.begin(), levels.end(), std::pair{rec.level, branches}) == levels.end()) {
            add(Severity::failure, "levels", "(n, B) = (" + std::to_string(rec.level) + ", " + std::to_string(branches) + ") is not a level of genus " + std::to_string(g));
        }

        // Signature read off the equation, where the normal form allows it.
        if (auto derived = equation_signature(rec.level, rec.reduced, eq); derived && *derived != sig) {
            add(Severity::failure, "equation-signature", "equation gives " + derived->to_display() + ", table has " + sig.to_display());
        }

        // Classification against the printed marking.
        const auto verdict = classify(ds_, rec);
        if (verdict.definable == rec.blue) {
            // a marking that disagrees only because the printed signature is wrong
            add(serr ? errata : Severity::failure, "classification",
                "computed " + describe(verdict) + " from " + sig.to_display() + " but the row is " + (rec.blue ? "" : "not ") +
                    "marked" + (serr ? "; the marking follows the misprinted signature" : ""));
        }

        // Genericity probe.
        try {
            if (!is_separable(instantiate(eq, prime_probe(eq)))) {
                add(Severity::warning, "separability", "f(x) has a repeated root at the prime probe point");
            }
        } catch (const std::exception& e) {
            add(Severity::warning, "separability", e.what());
        }
    }

  private:
    void add(Severity s, std::string check, std::string message) {
        out_.push_back({key_, s, std::move(check), std::move(message)});
    }

    const Dataset& ds_;
    const VerifyOptions& opt_;
    std::vector<Finding>& out_;
    RowKey key_;
};

}  // namespace

VerifyReport verify(const Dataset& ds, const VerifyOptions& options) {
    VerifyReport rep;
    for (const auto& issue : integrity_issues(ds)) rep.findings.push_back({{0, 0}, Severity::failure, "integrity", issue});

    std::vector<int> genera = ds.genera();
    if (options.genus) genera = {*options.genus};

    RowChecker checker(ds, options, rep.findings);
    for (int g : genera) {
        const auto rows = ds.rows_of_genus(g);
        const auto& expected = expected_row_counts();
        if (auto it = expected.find(g); it != expected.end() && it->second != static_cast<int>(rows.size())) {
            rep.findings.push_back({{g, 0}, Severity::failure, "counts",
                                    std::to_string(rows.size()) + " rows, expected " + std::to_string(it->second)});
        }
        if (auto stated = stated_level_counts(g)) {
            const auto tally = count_by_level(ds, g);
            for (const auto& [n, c] : *stated) {
                const int got = tally.count(n) ? tally.at(n) : 0;
                if (got != c) {
                    rep.findings.push_back({{g, 0}, Severity::warning, "counts",
                                            "level " + std::to_string(n) + ": " + std::to_string(got) + " rows, text states " + std::to_string(c)});
                }
            }
        }
        for (const auto* rec : rows) {
            checker.run(*rec);
            ++rep.rows_checked;
        }
        auto report = classify_genus(g, ds);
        if (g >= 3 && g <= 10 && report.possibly_not != expected_blue(g)) {
            const auto stated = expected_blue(g);
            std::set<int> differing;
            std::set_symmetric_difference(report.possibly_not.begin(), report.possibly_not.end(), stated.begin(), stated.end(),
                                          std::inserter(differing, differing.end()));
            const bool explained = std::all_of(differing.begin(), differing.end(),
                                               [&](int nr) { return ds.signature_erratum({g, nr}) != nullptr; });
            const Severity sev = explained && !options.strict ? Severity::warning : Severity::failure;
            rep.findings.push_back({{g, 0}, sev, "classification",
                                    "possibly-not set {" + join(report.possibly_not) + "} differs from the stated {" + join(expected_blue(g)) + "}"});
        }
        rep.classification.emplace(g, std::move(report));
    }
    for (const auto& [key, message] : label_order_mismatches(ds)) {
        if (options.genus && key.genus != *options.genus) continue;
        rep.findings.push_back({key, Severity::warning, "label", message});
    }
    std::stable_sort(rep.findings.begin(), rep.findings.end(), [](const Finding& a, const Finding& b) { return a.key < b.key; });
    return rep;
}

std::string render_report(const VerifyReport& report) {
    std::ostringstream out;
    for (const auto& f : report.findings) {
        out << (f.severity == Severity::failure ? "FAIL " : "warn ");
        if (f.key.genus == 0) {
            out << "dataset";
        } else if (f.key.nr == 0) {
            out << "genus " << f.key.genus;
        } else {
            out << to_string(f.key);
        }
        out << " [" << f.check << "] " << f.message << "\n";
    }
    for (const auto& [g, rep] : report.classification) {
        out << "genus " << g << ": " << rep.rows.size() << " rows, possibly not definable: {" << join(rep.possibly_not) << "}\n";
    }
    out << "checked " << report.rows_checked << " rows: " << report.failures() << " failures, " << report.warnings() << " warnings\n";
    return out.str();
}

}  // namespace supell
