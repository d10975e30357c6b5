#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supell/exact.hpp"

#include <random>

using namespace supell;

namespace {

// coefficients listed from the constant term up
Poly poly(const std::vector<long>& c) {
    Poly p;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) p = p + Poly::monomial(static_cast<unsigned>(i), QuadExt(c[i]));
    }
    return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("quadratic extension arithmetic") {
    const QuadExt s(0, 1, -3);  // sqrt(-3)
    CHECK(s * s == QuadExt(-3));
    const QuadExt u(1, 2, -3);
    CHECK(u * u.inverse() == QuadExt(1));
    CHECK((u + s) - s == u);
    CHECK(QuadExt(0, 2, -3).to_string() == "2sqrt(-3)");
    CHECK_THROWS_AS(QuadExt(1, 1, 4), std::invalid_argument);
    CHECK_THROWS(QuadExt(0, 1, 2) + QuadExt(0, 1, 3));
    CHECK(QuadExt(5, 0, 2) == QuadExt(5));
}

TEST_CASE("exact arithmetic property: (x + y) - y == x") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 97);
    for (int i = 0; i < 500; ++i) {
        const QuadExt x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), -3);
        const QuadExt y(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), -3);
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x * y) / y == x);
    }
}

TEST_CASE("poly_gcd") {
    CHECK(poly_gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
    CHECK(poly_gcd(poly({1, 0, 2, 0, 1}), poly({0, 4, 0, 4})) == poly({1, 0, 1}));
    CHECK(poly_gcd(poly({1, 0, 1}), poly({0, 1})) == poly({1}));
    CHECK(poly_gcd(poly({2, 4}), Poly()) == poly({1, 2}).monic());
    CHECK_THROWS_AS(poly_gcd(Poly(), Poly()), std::invalid_argument);
}

TEST_CASE("derivative") {
    CHECK(derivative(poly({1, 0, 2, 0, 1})) == poly({0, 4, 0, 4}));
    CHECK(derivative(poly({5})).is_zero());
    Poly p = Poly::monomial(12) - Poly::monomial(8, QuadExt(33));
    Poly want = Poly::monomial(11, QuadExt(12)) - Poly::monomial(7, QuadExt(264));
    CHECK(derivative(p) == want);
    CHECK(derivative(p).degree() == p.degree() - 1);
}

TEST_CASE("degree of the zero polynomial is rejected") {
    CHECK_THROWS_AS(Poly().degree(), std::domain_error);
    CHECK_FALSE(Poly().degree_if_nonzero().has_value());
}

TEST_CASE("is_separable examples") {
    CHECK(is_separable(poly({1, 0, 3, 0, 1})));
    CHECK_FALSE(is_separable(poly({1, 0, 2, 0, 1})));
    CHECK(is_separable(Poly::monomial(11) + poly({1})));
    CHECK_THROWS(is_separable(Poly()));
    CHECK_THROWS(is_separable(poly({4})));
}

TEST_CASE("separability of x^4 + b x^2 + c agrees with the discriminant 16c(b^2-4c)^2") {
    for (long b = -6; b <= 6; ++b) {
        for (long c = -6; c <= 6; ++c) {
            if (c == 0 && b == 0) continue;
            const long disc = 16 * c * (b * b - 4 * c) * (b * b - 4 * c);
            CAPTURE(b);
            CAPTURE(c);
            CHECK(is_separable(poly({c, 0, b, 0, 1})) == (disc != 0));
        }
    }
}

TEST_CASE("p*p is never separable") {
    const std::vector<std::vector<long>> samples{{1, 1}, {-1, 0, 1}, {1, 0, 3, 0, 1}, {1, 2, 0, 5}, {7, 0, 0, 0, 0, 1}};
    for (const auto& c : samples) CHECK_FALSE(is_separable(poly(c) * poly(c)));
}

TEST_CASE("separability over Q(sqrt(-3))") {
    // x^4 + 2sqrt(-3) x^2 + 1: b^2 - 4c = -12 - 4 != 0
    Poly p = Poly::monomial(4) + Poly::monomial(2, QuadExt(0, 2, -3)) + poly({1});
    CHECK(is_separable(p));
    // (x^2 + sqrt(-3))^2
    Poly q = Poly::monomial(2) + Poly::constant(QuadExt(0, 1, -3));
    CHECK_FALSE(is_separable(q * q));
}
