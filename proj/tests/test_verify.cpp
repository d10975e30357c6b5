#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supell/verify.hpp"

#include <algorithm>

using namespace supell;

namespace {

const Dataset& ds() {
    static const Dataset d = load_embedded();
    return d;
}

bool has(const VerifyReport& r, RowKey key, const std::string& check, Severity s) {
    return std::any_of(r.findings.begin(), r.findings.end(),
                       [&](const Finding& f) { return f.key == key && f.check == check && f.severity == s; });
}

}  // namespace

TEST_CASE("default run passes with errata as warnings") {
    auto rep = verify(ds());
    CHECK(rep.rows_checked == 224);
    CHECK(rep.failures() == 0);
    CHECK(rep.exit_code() == 0);
    CHECK(has(rep, {5, 5}, "rh", Severity::warning));
    CHECK(has(rep, {6, 13}, "genus", Severity::warning));
    CHECK(has(rep, {6, 20}, "label", Severity::warning));
    CHECK(has(rep, {10, 0}, "counts", Severity::warning));
    CHECK(std::none_of(rep.findings.begin(), rep.findings.end(), [](const Finding& f) { return f.check == "separability"; }));
}

TEST_CASE("strict run on genus 9 fails on the printed errata") {
    auto rep = verify(ds(), {9, true});
    CHECK(rep.rows_checked == 50);
    CHECK(rep.exit_code() == 1);
    for (int nr : {8, 9, 11, 12, 13}) CHECK(has(rep, {9, nr}, "rh", Severity::failure));
}

TEST_CASE("genus 5 reproduces its stated set") {
    auto rep = verify(ds(), {5, false});
    CHECK(rep.classification.at(5).possibly_not == std::set<int>{1, 2, 6});
    CHECK(rep.exit_code() == 0);
}

TEST_CASE("findings are ordered by row") {
    auto rep = verify(ds());
    CHECK(std::is_sorted(rep.findings.begin(), rep.findings.end(), [](const Finding& a, const Finding& b) { return a.key < b.key; }));
}

TEST_CASE("a corrupted row is a failure") {
    Dataset d = ds();
    auto it = std::find_if(d.records.begin(), d.records.end(), [](const FamilyRecord& r) { return r.key == RowKey{5, 1}; });
    it->delta = 4;
    it->blue = false;
    auto rep = verify(d, {5, false});
    CHECK(has(rep, {5, 1}, "delta", Severity::failure));
    CHECK(has(rep, {5, 1}, "params", Severity::failure));
    CHECK(has(rep, {5, 1}, "classification", Severity::failure));
    CHECK(rep.exit_code() == 1);
}

TEST_CASE("report text is deterministic") {
    CHECK(render_report(verify(ds())) == render_report(verify(load_embedded())));
}
