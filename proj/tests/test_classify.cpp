#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supell/classify.hpp"

#include "json.hpp"

using namespace supell;

namespace {

const Dataset& ds() {
    static const Dataset d = load_embedded();
    return d;
}

Classification row(int g, int nr) { return classify(ds(), *ds().find({g, nr})); }

}  // namespace

TEST_CASE("classify examples") {
    CHECK(row(5, 8) == Classification::by(Reason::unique_subgroup));
    CHECK(row(5, 7) == Classification::by(Reason::odd_signature));
    CHECK(row(5, 1) == Classification::possibly_not());
    CHECK(row(3, 5) == Classification::by(Reason::unique_subgroup));
    CHECK(row(10, 51) == Classification::by(Reason::unique_subgroup));
    CHECK(row(9, 22) == Classification::by(Reason::odd_signature));
}

TEST_CASE("rule priority") {
    // r = 3 is always odd, so delta = 0 rows stop at the second rule
    CHECK(classify(2, 3, ReducedGroup::cyclic(2), Signature::parse("3,6^2")) == Classification::by(Reason::odd_signature));
    CHECK(classify(2, 2, ReducedGroup::cyclic(2), Signature::parse("2^2,4^2")) == Classification::possibly_not());
    CHECK_THROWS_AS(classify(9, 3, ReducedGroup::cyclic(10), Signature::parse("3,10^2")), InconsistentSignature);
}

TEST_CASE("expected_blue") {
    CHECK(expected_blue(10) == std::set<int>{2, 3, 16, 17, 19, 20, 23});
    CHECK(expected_blue(8) == std::set<int>{2, 6, 7, 8});
    CHECK(expected_blue(7) == std::set<int>{1, 2, 11});
    CHECK_THROWS_AS(expected_blue(2), std::out_of_range);
    CHECK_THROWS_AS(expected_blue(11), std::out_of_range);
}

TEST_CASE("classify_genus reproduces the stated sets") {
    CHECK(classify_genus(3, ds()).possibly_not == std::set<int>{1, 2});
    CHECK(classify_genus(4, ds()).possibly_not == std::set<int>{1, 3, 5});
    CHECK(classify_genus(9, ds()).possibly_not == std::set<int>{1, 3, 4, 14, 16, 20});
    for (int g : {3, 4, 5, 7, 8, 9, 10}) {
        CAPTURE(g);
        auto rep = classify_genus(g, ds());
        CHECK(rep.possibly_not == expected_blue(g));
        CHECK(rep.unexpected_possibly_not.empty());
        CHECK(rep.missing_possibly_not.empty());
    }
}

TEST_CASE("genus 6: Nr. 11 differs from its marking once its signature is repaired") {
    auto rep = classify_genus(6, ds());
    CHECK(rep.possibly_not == std::set<int>{9, 10, 11, 13, 15});
    CHECK(rep.unexpected_possibly_not == std::set<int>{11});
    CHECK(ds().signature_erratum({6, 11}) != nullptr);
    // the printed signature is odd, which is what the marking reflects
    CHECK(is_odd_signature(ds().find({6, 11})->signature));
}

TEST_CASE("classification invariants over the dataset") {
    for (const auto& r : ds().records) {
        CAPTURE(to_string(r.key));
        const auto sig = ds().effective_signature(r);
        const auto v = classify(ds(), r);
        if (!v.definable) {
            CHECK_FALSE(is_odd_signature(sig));
            CHECK(sig.size() % 2 == 0);
            CHECK((sig.size() - 3) % 2 == 1);
        }
        if (!is_cyclic_or_trivial(r.reduced)) CHECK(v == Classification::by(Reason::unique_subgroup));
        if (sig.size() == 3) CHECK(v.definable);
    }
}

TEST_CASE("the verdict ignores the blue flag") {
    for (const auto& r : ds().records) {
        FamilyRecord flipped = r;
        flipped.blue = !r.blue;
        CHECK(classify(ds(), flipped) == classify(ds(), r));
    }
}

TEST_CASE("rule 1 dominates any signature change") {
    for (const auto& r : ds().records) {
        if (is_cyclic_or_trivial(r.reduced)) continue;
        // any signature balancing Riemann-Hurwitz for the same data would do;
        // the classifier must not look at it once the reduced group decides
        CHECK(classify(r.key.genus, r.level, r.reduced, ds().effective_signature(r)).reason == Reason::unique_subgroup);
    }
    // dihedral reduced group with an even signature
    CHECK(classify(5, 2, ReducedGroup::dihedral(2), Signature::parse("2^8").with_removed(2).with_removed(2)) ==
          Classification::by(Reason::unique_subgroup));
}

TEST_CASE("verdict JSON") {
    auto j = nlohmann::json::parse(to_json(Classification::by(Reason::odd_signature)));
    CHECK(j["verdict"] == "definable");
    CHECK(j["reason"] == "odd_signature");
    CHECK_FALSE(j["theorem"].get<std::string>().empty());
    auto p = nlohmann::json::parse(to_json(Classification::possibly_not()));
    CHECK(p["verdict"] == "possibly_not_definable");
    CHECK(p["reason"].is_null());
    CHECK(describe(Classification::possibly_not()) == "possibly not definable");
}
