#include <doctest.h>

#include <random>

#include "mzeta/laurent.hpp"

using namespace mzeta;

namespace {

LaurentPoly random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), exp(-6, 6), coeff(-9, 9);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p.add_term(exp(rng), coeff(rng));
    return p;
}

} // namespace

TEST_CASE("laurent basics and canonical form") {
    LaurentPoly zero;
    CHECK(zero.is_zero());
    CHECK(!zero.degree().has_value());
    CHECK(!zero.valuation().has_value());

    LaurentPoly p = LaurentPoly::monomial(2, 1);
    p.add_term(0, -1); // u^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p.valuation() == 0);
    CHECK(p.str() == "u^2 - 1");

    // cancellation prunes to the empty map
    LaurentPoly q = p;
    q.add_term(2, -1);
    q.add_term(0, 1);
    CHECK(q.is_zero());
    CHECK(q == LaurentPoly{});

    CHECK(LaurentPoly::u_pow(-1).str() == "u^-1");
    CHECK((LaurentPoly::u_minus_one() * LaurentPoly::u_plus_one()).str() == "u^2 - 1");
}

TEST_CASE("laurent ring axioms on random inputs") {
    std::mt19937 rng(20240517);
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + LaurentPoly{} == a);
        CHECK(a * LaurentPoly(1) == a);
        // units u^k act invertibly
        CHECK(a.shifted(3).shifted(-3) == a);
        CHECK(a.shifted(2) == a * LaurentPoly::u_pow(2));
        CHECK(a - a == LaurentPoly{});
    }
}

TEST_CASE("division by u - 1") {
    // (u^2 - 1) / (u - 1) = u + 1
    LaurentPoly p = LaurentPoly::monomial(2, 1);
    p.add_term(0, -1);
    auto q = p.divide_by_u_minus_one();
    REQUIRE(q.has_value());
    CHECK(*q == LaurentPoly::u_plus_one());

    // u is not divisible
    CHECK(!LaurentPoly::u_pow(1).divide_by_u_minus_one().has_value());

    // random multiples divide back exactly
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_laurent(rng);
        LaurentPoly m = a * LaurentPoly::u_minus_one();
        auto back = m.divide_by_u_minus_one();
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
}

TEST_CASE("evaluation and derivative") {
    LaurentPoly p = LaurentPoly::monomial(2, 1);
    p.add_term(-2, 1); // u^2 + u^-2
    CHECK(p.eval_at_unit(1) == 2);
    CHECK(p.eval_at_unit(-1) == 2);
    CHECK(p.derivative() == LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(-3, -2));

    // u^-1 -> -u^-2
    CHECK(LaurentPoly::u_pow(-1).derivative() == LaurentPoly::monomial(-2, -1));
}

TEST_CASE("string round trip through pairs") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_laurent(rng);
        CHECK(LaurentPoly::from_pairs(a.to_pairs()) == a);
    }
}
