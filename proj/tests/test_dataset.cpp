#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supell/dataset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

using namespace supell;

namespace {

const Dataset& ds() {
    static const Dataset d = load_embedded();
    return d;
}

std::set<RowKey> keys(std::initializer_list<std::pair<int, int>> list) {
    std::set<RowKey> out;
    for (auto [g, n] : list) out.insert({g, n});
    return out;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
    auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("row counts per genus") {
    for (const auto& [g, n] : expected_row_counts()) {
        CAPTURE(g);
        CHECK(static_cast<int>(ds().rows_of_genus(g).size()) == n);
    }
    CHECK(ds().records.size() == 224);
    CHECK(ds().genera() == std::vector<int>{3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("sample records") {
    const auto* r = ds().find({10, 55});
    REQUIRE(r);
    CHECK(r->level == 3);
    CHECK(r->reduced == ReducedGroup::a5());
    CHECK(r->signature == Signature::parse("2,3,15"));
    CHECK(render(r->equation) == "x(x^10+11x^5-1)");
    CHECK(r->group->text == "A_5×C_3");

    const auto* r4 = ds().find({3, 4});
    REQUIRE(r4);
    CHECK(r4->group->text == "C_6");
    CHECK(r4->level == 3);
    CHECK(r4->signature == Signature::parse("2,3^2,6"));
    CHECK(render(r4->equation) == "x^4+a_1x^2+1");

    const auto* r5 = ds().find({3, 5});
    REQUIRE(r5);
    CHECK(r5->reduced == ReducedGroup::dihedral(2));
    CHECK(r5->group_order() == 16);
    CHECK(r5->group->order == 16);

    CHECK(ds().find({6, 37}) == nullptr);
    CHECK(ds().find({11, 1}) == nullptr);
}

TEST_CASE("signatures are stored as printed") {
    CHECK(ds().find({5, 5})->signature == Signature::parse("2,22,22"));
    CHECK(ds().find({6, 11})->signature == Signature::parse("2^3,3^2,6^2"));
    CHECK(ds().effective_signature(*ds().find({5, 5})) == Signature::parse("2,11,22"));
}

TEST_CASE("the signature errata are exactly the rows that fail Riemann-Hurwitz as printed") {
    std::set<RowKey> failing;
    for (const auto& r : ds().records) {
        const auto g0 = quotient_genus_exact(r.key.genus, r.group_order(), r.signature);
        if (g0 != 0) failing.insert(r.key);
    }
    const auto expected = keys({{5, 5}, {6, 11}, {9, 8}, {9, 9}, {9, 11}, {9, 12}, {9, 13}, {10, 8}, {10, 9}, {10, 12}, {10, 13}, {10, 14}});
    CHECK(failing == expected);
    std::set<RowKey> errata;
    for (const auto& e : ds().signature_errata) errata.insert(e.key);
    CHECK(errata == expected);
}

TEST_CASE("signature errata outcomes") {
    struct Want {
        RowKey key;
        RepairStatus status;
        const char* repaired;
        bool ambiguous;
    };
    const std::vector<Want> want{
        {{5, 5}, RepairStatus::corrected, "2,11,22", false},    {{6, 11}, RepairStatus::reconstructed, "2^4,6^2", false},
        {{9, 8}, RepairStatus::corrected, "3,10,30", false},    {{9, 9}, RepairStatus::corrected, "4,7,28", true},
        {{9, 11}, RepairStatus::corrected, "4,7,28", false},    {{9, 12}, RepairStatus::corrected, "3,10,30", false},
        {{9, 13}, RepairStatus::corrected, "2,19,38", false},   {{10, 8}, RepairStatus::corrected, "2,21,42", false},
        {{10, 9}, RepairStatus::corrected, "3,11,33", false},   {{10, 12}, RepairStatus::corrected, "5,6,30", true},
        {{10, 13}, RepairStatus::corrected, "5,6,30", false},   {{10, 14}, RepairStatus::corrected, "3,11,33", false},
    };
    for (const auto& w : want) {
        CAPTURE(to_string(w.key));
        const auto* e = ds().signature_erratum(w.key);
        REQUIRE(e);
        CHECK(e->outcome.status == w.status);
        CHECK(e->outcome.repaired == Signature::parse(w.repaired));
        CHECK(e->outcome.ambiguous() == w.ambiguous);
    }
}

TEST_CASE("repaired signatures agree with the signature read off the equation") {
    for (const auto& e : ds().signature_errata) {
        const auto& r = *ds().find(e.key);
        auto derived = equation_signature(r.level, r.reduced, ds().effective_equation(r));
        REQUIRE(derived);
        CHECK(*derived == *e.outcome.repaired);
    }
}

TEST_CASE("the equation errata are exactly the rows whose printed equation contradicts the row") {
    std::set<RowKey> failing;
    for (const auto& r : ds().records) {
        bool bad = parameter_count(r.equation) != r.delta;
        try {
            bad = bad || genus_of_family(r) != r.key.genus;
        } catch (const std::exception&) {
            bad = true;
        }
        if (bad) failing.insert(r.key);
    }
    std::set<RowKey> errata;
    for (const auto& e : ds().equation_errata) errata.insert(e.key);
    CHECK(errata == failing);
    CHECK(errata.size() == 17);
}

TEST_CASE("corrected equations fit their rows") {
    for (const auto& e : ds().equation_errata) {
        CAPTURE(to_string(e.key));
        const auto& r = *ds().find(e.key);
        CHECK(genus_of_family(r.level, e.corrected) == r.key.genus);
        CHECK(parameter_count(e.corrected) == r.delta);
        auto derived = equation_signature(r.level, r.reduced, e.corrected);
        REQUIRE(derived);
        CHECK(*derived == ds().effective_signature(r));
        CHECK_FALSE(e.note.empty());
    }
}

TEST_CASE("integrity") {
    CHECK(integrity_issues(ds()).empty());
    auto labels = label_order_mismatches(ds());
    REQUIRE(labels.size() == 1);
    CHECK(labels[0].first == RowKey{6, 20});
}

TEST_CASE("integrity detects structural damage") {
    Dataset d = ds();
    d.records.erase(d.records.begin() + 2);
    d.records.push_back(d.records.front());
    auto issues = integrity_issues(d);
    CHECK(std::any_of(issues.begin(), issues.end(), [](const std::string& s) { return s.find("duplicate") != std::string::npos; }));
    CHECK(std::any_of(issues.begin(), issues.end(), [](const std::string& s) { return s.find("contiguous") != std::string::npos; }));
}

TEST_CASE("count_by_level") {
    auto g10 = count_by_level(ds(), 10);
    CHECK(g10 == std::map<int, int>{{2, 19}, {3, 19}, {5, 5}, {6, 9}, {11, 2}, {21, 1}});
    CHECK(count_by_level(ds(), 5)[11] == 1);
    CHECK(count_by_level(ds(), 3)[2] == 3);
    CHECK(count_by_level(ds(), 3) == std::map<int, int>{{2, 3}, {3, 1}, {4, 1}});
    CHECK(stated_level_counts(10) == std::map<int, int>{{2, 18}, {3, 18}, {5, 4}});
    CHECK_FALSE(stated_level_counts(9).has_value());
}

TEST_CASE("named curves") {
    const auto& named = ds().named_curves;
    CHECK(named.size() == 13);
    for (const auto& c : named) {
        CAPTURE(render(c.equation));
        CHECK(genus_of_family(c.level, c.equation) == c.genus);
    }
}

TEST_CASE("JSON round-trip is lossless and deterministic") {
    const auto text = to_json(ds());
    const auto back = from_json(text);
    CHECK(back == ds());
    CHECK(to_json(back) == text);
    CHECK(to_json(load_embedded()) == text);
}

TEST_CASE("JSON without errata gets them recomputed") {
    auto j = to_json(ds());
    auto start = j.find("  \"signature_errata\"");
    auto end = j.find("  \"equation_errata\"");
    REQUIRE(start != std::string::npos);
    j.erase(start, end - start);
    CHECK(from_json(j) == ds());
}

TEST_CASE("JSON schema violations") {
    const auto text = to_json(ds());
    CHECK_THROWS_AS(from_json("{"), SchemaError);
    CHECK_THROWS_AS(from_json("[]"), SchemaError);
    CHECK_THROWS_AS(from_json(replace_once(text, "\"schema\": \"v1\"", "\"schema\": \"v2\"")), SchemaError);

    // cone order 1 in genus 5 Nr. 1
    auto bad_cone = replace_once(text, "\"signature\": \"2^8\",\n      \"delta\": 5", "\"signature\": \"1,2^8\",\n      \"delta\": 5");
    CHECK_THROWS_AS(from_json(bad_cone), SchemaError);

    // drop "delta" from genus 5 Nr. 3
    auto pos = text.find("\"genus\": 5,\n      \"nr\": 3,");
    REQUIRE(pos != std::string::npos);
    auto dpos = text.find("      \"delta\":", pos);
    auto eol = text.find('\n', dpos);
    auto missing = text.substr(0, dpos) + text.substr(eol + 1);
    try {
        from_json(missing);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("genus 5 Nr. 3") != std::string::npos);
        CHECK(msg.find("delta") != std::string::npos);
    }
}

TEST_CASE("CSV export") {
    const auto all = export_csv(ds());
    CHECK(count_lines(all) == 225);
    const auto g5 = export_csv(ds(), 5);
    CHECK(count_lines(g5) == 21);
    CHECK(g5.find("5,1,C_2,V_4,4,2,2,2^8,5,true,") != std::string::npos);
    CHECK(export_csv(ds(), 8).find("\r\n8,2,") != std::string::npos);
    std::istringstream in(export_csv(ds(), 8));
    std::string line;
    std::getline(in, line);
    CHECK(line == "genus,Nr,reduced_group,full_group,order,n,m,signature,delta,blue,equation\r");
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line.find(",true,") != std::string::npos);
    // comma-bearing signatures are quoted
    CHECK(g5.find(",\"2^5,4^2\",") != std::string::npos);
    CHECK(export_csv(ds()) == export_csv(load_embedded()));
}
