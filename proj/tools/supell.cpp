// supell: inspect, verify and classify the superelliptic family tables.

#include "supell/classify.hpp"
#include "supell/dataset.hpp"
#include "supell/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace supell;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, verification_failed = 1, usage_error = 2, io_error = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Dataset load(const std::string& path) {
    if (path.empty()) return load_embedded();
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return from_json(buf.str());
    } catch (const SchemaError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void require_table_genus(int g) {
    if (g < 3 || g > 10) throw UsageError("genus must be between 3 and 10 (got " + std::to_string(g) + ")");
}

std::string pad(const std::string& s, std::size_t width) {
    // display width: count UTF-8 lead bytes only
    std::size_t w = 0;
    for (unsigned char c : s) w += (c & 0xC0) != 0x80;
    return s + std::string(w < width ? width - w : 1, ' ');
}

std::string timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

int cmd_list(const Dataset& ds, int genus, const std::string& format) {
    require_table_genus(genus);
    if (format == "csv") {
        std::cout << export_csv(ds, genus);
        return ok;
    }
    if (format == "json") {
        json rows = json::array();
        for (const auto* r : ds.rows_of_genus(genus)) {
            rows.push_back(json{{"nr", r->key.nr},
                                {"reduced", r->reduced.name()},
                                {"group", r->group ? json(r->group->text) : json(nullptr)},
                                {"order", r->group_order()},
                                {"n", r->level},
                                {"m", r->m ? json(*r->m) : json(nullptr)},
                                {"signature", r->signature.to_string()},
                                {"delta", r->delta},
                                {"blue", r->blue},
                                {"equation", render(r->equation)}});
        }
        std::cout << rows.dump(2) << "\n";
        return ok;
    }
    std::cout << "  " << pad("Nr", 4) << pad("reduced", 9) << pad("G", 14) << pad("n", 4) << pad("m", 4)
              << pad("signature", 20) << pad("delta", 6) << "equation\n";
    for (const auto* r : ds.rows_of_genus(genus)) {
        std::cout << (r->blue ? "* " : "  ") << pad(std::to_string(r->key.nr), 4) << pad(r->reduced.name(), 9)
                  << pad(r->group ? r->group->text : "", 14) << pad(std::to_string(r->level), 4)
                  << pad(r->m ? std::to_string(*r->m) : "", 4) << pad(r->signature.to_display(), 20)
                  << pad(std::to_string(r->delta), 6) << render(r->equation) << "\n";
    }
    return ok;
}

int cmd_verify(const Dataset& ds, std::optional<int> genus, bool strict, const std::string& format, bool stamps) {
    if (genus) require_table_genus(*genus);
    const auto report = verify(ds, {genus, strict});
    if (format == "json") {
        json doc;
        if (stamps) doc["generated"] = timestamp();
        json findings = json::array();
        for (const auto& f : report.findings) {
            findings.push_back(json{{"genus", f.key.genus},
                                    {"nr", f.key.nr},
                                    {"severity", f.severity == Severity::failure ? "failure" : "warning"},
                                    {"check", f.check},
                                    {"message", f.message}});
        }
        doc["findings"] = findings;
        json summary;
        for (const auto& [g, rep] : report.classification) {
            summary[std::to_string(g)] = json{{"rows", rep.rows.size()}, {"possibly_not_definable", rep.possibly_not}};
        }
        doc["classification"] = summary;
        doc["rows_checked"] = report.rows_checked;
        doc["failures"] = report.failures();
        doc["warnings"] = report.warnings();
        std::cout << doc.dump(2) << "\n";
    } else {
        if (stamps) std::cout << "generated " << timestamp() << "\n";
        std::cout << render_report(report);
    }
    return report.exit_code();
}

int cmd_classify(const Dataset& ds, int genus, const std::string& format) {
    require_table_genus(genus);
    const auto rep = classify_genus(genus, ds);
    if (format == "json") {
        json rows = json::array();
        for (const auto& v : rep.rows) {
            auto j = json::parse(to_json(v.verdict));
            rows.push_back(json{{"nr", v.key.nr}, {"verdict", j["verdict"]}, {"reason", j["reason"]}, {"theorem", j["theorem"]}});
        }
        std::cout << json{{"genus", genus}, {"rows", rows}}.dump(2) << "\n";
        return ok;
    }
    for (const auto& v : rep.rows) {
        std::cout << pad("Nr. " + std::to_string(v.key.nr), 8) << pad(describe(v.verdict), 30) << theorem_citation(v.verdict) << "\n";
    }
    std::cout << "definable: " << rep.definable_count() << ", possibly not: " << rep.possibly_not.size() << "\n";
    return ok;
}

int cmd_levels(const Dataset& ds, int genus) {
    if (genus < 2) throw UsageError("genus must be at least 2");
    const auto rows = ds.rows_of_genus(genus);
    const auto tally = count_by_level(ds, genus);
    std::cout << pad("n", 5) << (rows.empty() ? "B" : pad("B", 5) + "rows") << "\n";
    for (const auto& [n, b] : enumerate_levels(genus)) {
        std::cout << pad(std::to_string(n), 5) << (rows.empty() ? std::to_string(b) : pad(std::to_string(b), 5));
        if (!rows.empty()) {
            std::cout << (tally.count(n) ? std::to_string(tally.at(n)) : "0");
            std::string nrs;
            for (const auto* r : rows) {
                if (r->level == n) nrs += (nrs.empty() ? "" : ",") + std::to_string(r->key.nr);
            }
            if (!nrs.empty()) std::cout << " (Nr. " << nrs << ")";
        }
        std::cout << "\n";
    }
    if (auto stated = stated_level_counts(genus)) {
        std::cout << "stated in the text:";
        for (const auto& [n, c] : *stated) std::cout << " n=" << n << ": " << c;
        std::cout << "\n";
    }
    return ok;
}

int cmd_row(const Dataset& ds, int genus, int nr) {
    const auto* r = ds.find({genus, nr});
    if (!r) throw UsageError("no row " + to_string(RowKey{genus, nr}));
    const auto& eq = ds.effective_equation(*r);
    const auto sig = ds.effective_signature(*r);
    std::cout << to_string(r->key) << (r->blue ? " (marked)" : "") << "\n";
    std::cout << "  reduced group   " << r->reduced.name() << " (order " << reduced_order(r->reduced) << ")\n";
    std::cout << "  group           " << (r->group ? r->group->text : "-") << ", |G| = " << r->group_order() << "\n";
    std::cout << "  level n, m      " << r->level << ", " << (r->m ? std::to_string(*r->m) : "-") << "\n";
    std::cout << "  equation        y^" << r->level << " = " << render(r->equation) << "\n";
    if (const auto* e = ds.equation_erratum(r->key)) {
        std::cout << "  corrected       y^" << r->level << " = " << render(e->corrected) << " (" << e->note << ")\n";
    }
    std::cout << "  signature       " << r->signature.to_display() << "\n";
    if (const auto* e = ds.signature_erratum(r->key)) {
        const auto& o = e->outcome;
        std::cout << "  repair          " << to_string(o.status);
        if (o.repaired) std::cout << ": printed (" << r->signature.to_display() << ") -> (" << o.repaired->to_display() << "), " << o.changed_entry;
        std::cout << "\n";
        if (o.ambiguous()) {
            std::cout << "  candidates     ";
            for (const auto& c : o.candidates) std::cout << " (" << c.to_display() << ")";
            std::cout << "\n";
        }
    } else {
        std::cout << "  repair          consistent\n";
    }
    std::cout << "  delta           printed " << r->delta << ", computed " << sig.size() - 3 << "\n";
    std::cout << "  degree, B       " << template_degree(eq) << ", " << branch_count(r->level, eq) << "\n";
    std::cout << "  genus           " << genus_of_family(r->level, eq) << " from the equation\n";
    std::cout << "  parameters      " << parameter_count(eq) << "\n";
    if (auto d = equation_signature(r->level, r->reduced, eq)) {
        std::cout << "  from equation   " << d->to_display() << "\n";
    }
    std::cout << "  odd signature   " << (is_odd_signature(sig) ? "yes" : "no") << "\n";
    const auto v = classify(ds, *r);
    std::cout << "  verdict         " << describe(v) << "\n";
    std::cout << "  because         " << theorem_citation(v) << "\n";
    return ok;
}

int cmd_export(const Dataset& ds, const std::string& out, const std::string& format) {
    const std::string text = format == "csv" ? export_csv(ds) : to_json(ds);
    if (out.empty() || out == "-") {
        std::cout << text;
        return ok;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw IoError("cannot write " + out);
    f << text;
    f.close();
    if (!f) throw IoError("write failed for " + out);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Superelliptic family tables: field of moduli vs field of definition"};
    app.require_subcommand(1);
    std::string data;
    app.add_option("--data", data, "JSON dataset to use instead of the embedded tables");

    int genus = 0;
    int nr = 0;
    std::string format = "text";
    bool strict = false;
    bool stamps = false;
    std::string out;

    auto* list = app.add_subcommand("list", "Print the rows of one genus");
    list->add_option("--genus,-g", genus, "Genus 3..10")->required();
    list->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* ver = app.add_subcommand("verify", "Re-derive every column and report discrepancies");
    auto* ver_genus = ver->add_option("--genus,-g", genus, "Restrict to one genus");
    ver->add_flag("--strict", strict, "Count repaired errata as failures");
    ver->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json"}));
    ver->add_flag("--timestamps", stamps, "Prefix the report with the generation time");

    auto* cls = app.add_subcommand("classify", "Per-row verdicts with the criterion used");
    cls->add_option("--genus,-g", genus)->required();
    cls->add_option("--format,-f", format)->check(CLI::IsMember({"text", "json"}));

    auto* lev = app.add_subcommand("levels", "Levels n and branch counts B possible in a genus");
    lev->add_option("--genus,-g", genus)->required();

    auto* row = app.add_subcommand("row", "Everything known about one row");
    row->add_option("--genus,-g", genus)->required();
    row->add_option("--nr,-n", nr)->required();

    auto* exp = app.add_subcommand("export", "Write the dataset with errata");
    exp->add_option("--out,-o", out, "Output path, '-' for stdout");
    exp->add_option("--format,-f", format)->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage_error;
    }

    try {
        const Dataset ds = load(data);
        if (*list) return cmd_list(ds, genus, format);
        if (*ver) return cmd_verify(ds, *ver_genus ? std::optional<int>(genus) : std::nullopt, strict, format, stamps);
        if (*cls) return cmd_classify(ds, genus, format);
        if (*lev) return cmd_levels(ds, genus);
        if (*row) return cmd_row(ds, genus, nr);
        if (*exp) return cmd_export(ds, out, format == "text" ? "json" : format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}
