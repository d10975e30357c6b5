#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supell/family.hpp"

#include <algorithm>

using namespace supell;
using namespace supell::build;

namespace {

Factor f1() {
    return terms({fixed(12, 1), scaled(10, -1, 1), fixed(8, -33), scaled(6, 2, 1), fixed(4, -33), scaled(2, -1, 1), fixed(0, 1)});
}

// (n, B) with (n-1)(B-2) = 2g, by scanning every n and B up to 2g + 2
std::vector<std::pair<int, int>> scan_levels(int g) {
    std::vector<std::pair<int, int>> out;
    for (int n = 2; n <= 2 * g + 1; ++n) {
        for (int b = 3; b <= 2 * g + 2; ++b) {
            if ((n - 1) * (b - 2) == 2 * g) out.emplace_back(n, b);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("template_degree") {
    CHECK(template_degree(product({x(), palindromic(5, 1)})) == 11);
    CHECK(template_degree(product({f1()})) == 12);
    CHECK(template_degree(product({binomial(2, 1)})) == 2);
    CHECK_THROWS(template_degree(EquationTemplate{}));
}

TEST_CASE("parameter_count") {
    CHECK(parameter_count(product({f1()})) == 1);
    CHECK(parameter_count(product({lacunary(12, 2, 5)})) == 5);
    CHECK(parameter_count(product({binomial(21, 1)})) == 0);
    CHECK(parameter_count(product(palindromics(2, 3))) == 3);
}

TEST_CASE("render") {
    CHECK(render(product({x(), palindromic(5, 1)})) == "x(x^10+a_1x^5+1)");
    CHECK(render(product({f1()})) == "x^12-a_1x^10-33x^8+2a_1x^6-33x^4-a_1x^2+1");
    CHECK(render(product({x(), binomial(4, -1)})) == "x(x^4-1)");
    CHECK(render(product({terms({fixed(4, 1), fixed(2, QuadExt(0, 2, -3)), fixed(0, 1)})}, -3)) == "x^4+2sqrt(-3)x^2+1");
}

TEST_CASE("branch_count") {
    CHECK(branch_count(5, product({palindromic(2, 1)})) == 5);
    CHECK(branch_count(2, product({x(), palindromic(5, 1)})) == 12);
    CHECK(branch_count(2, product({lacunary(12, 2, 5)})) == 12);
    CHECK_THROWS_AS(branch_count(4, product({lacunary(6, 1, 5)})), std::domain_error);
}

TEST_CASE("superelliptic_genus") {
    CHECK(superelliptic_genus(2, 12) == 5);
    CHECK(superelliptic_genus(5, 5) == 6);
    CHECK(superelliptic_genus(11, 3) == 5);
    CHECK_THROWS(superelliptic_genus(2, 7));
    CHECK_THROWS(superelliptic_genus(2, 4));
    CHECK_THROWS(superelliptic_genus(2, 2));
}

TEST_CASE("genus_of_family examples") {
    auto g10_52 = product({x(), binomial(4, -1), terms({fixed(4, 1), fixed(2, QuadExt(0, 2, -3)), fixed(0, 1)}), f1()}, -3);
    CHECK(genus_of_family(2, g10_52) == 10);
    CHECK(genus_of_family(3, product({binomial(8, 1)})) == 7);
    CHECK(genus_of_family(4, product({palindromic(2, 1)})) == 3);
}

TEST_CASE("enumerate_levels examples") {
    using V = std::vector<std::pair<int, int>>;
    CHECK(enumerate_levels(5) == V{{2, 12}, {3, 7}, {6, 4}, {11, 3}});
    CHECK(enumerate_levels(2) == V{{2, 6}, {3, 4}, {5, 3}});
    auto g6 = enumerate_levels(6);
    CHECK(std::find(g6.begin(), g6.end(), std::pair{13, 3}) != g6.end());
}

TEST_CASE("enumerate_levels agrees with a brute-force scan") {
    for (int g = 2; g <= 40; ++g) {
        CAPTURE(g);
        CHECK(enumerate_levels(g) == scan_levels(g));
        for (auto [n, b] : enumerate_levels(g)) CHECK(superelliptic_genus(n, b) == g);
    }
}

TEST_CASE("instantiate") {
    auto t = product({palindromic(2, 1)});
    CHECK(instantiate(t, {{1, 3}}) == Poly::monomial(4) + Poly::monomial(2, QuadExt(3)) + Poly::constant(1));
    auto bad = instantiate(t, {{1, 2}});
    CHECK_FALSE(is_separable(bad));
    CHECK(instantiate(product({binomial(2, -1), binomial(2, 1)}), {}) == Poly::monomial(4) - Poly::constant(1));
    CHECK_THROWS_AS(instantiate(t, {}), std::out_of_range);
    auto scaled_f1 = instantiate(product({f1()}), {{1, 5}});
    CHECK(scaled_f1.coefficient(10) == QuadExt(-5));
    CHECK(scaled_f1.coefficient(6) == QuadExt(10));
}

TEST_CASE("prime_probe assigns distinct primes in index order") {
    auto probe = prime_probe(product(palindromics(2, 4)));
    CHECK(probe.at(1) == 5);
    CHECK(probe.at(2) == 7);
    CHECK(probe.at(3) == 11);
    CHECK(probe.at(4) == 13);
}

TEST_CASE("equation_signature for the standard normal forms") {
    // y^2 = x(x^12 + sum a_i x^{3i} + 1) under x -> zeta_3 x
    CHECK(equation_signature(2, ReducedGroup::cyclic(3), product({x(), lacunary(12, 3, 3)})) == Signature::parse("2^4,6^2"));
    CHECK(equation_signature(2, ReducedGroup::cyclic(4), product({x(), lacunary(12, 4, 2)})) == Signature::parse("2^3,8^2"));
    CHECK(equation_signature(11, ReducedGroup::cyclic(2), product({binomial(2, 1)})) == Signature::parse("2,11,22"));
    CHECK(equation_signature(2, ReducedGroup::trivial(), product({lacunary(12, 1, 11)})) == Signature::parse("2^12"));
    CHECK(equation_signature(2, ReducedGroup::dihedral(2), product(palindromics(2, 3))) == Signature::parse("2^6"));
    CHECK_FALSE(equation_signature(2, ReducedGroup::a4(), product({f1()})).has_value());
    // not invariant under x -> zeta_3 x
    CHECK_FALSE(equation_signature(2, ReducedGroup::cyclic(3), product({lacunary(12, 1, 11)})).has_value());
}
