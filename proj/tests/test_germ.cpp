#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mzeta/errors.hpp"
#include "mzeta/germ.hpp"
#include "mzeta/polygon.hpp"

using namespace mzeta;

TEST_CASE("parse basic germs") {
    Germ g = parse_germ("x^2+y^4");
    CHECK(g.dim() == 2);
    REQUIRE(g.support().size() == 2);
    CHECK(g.support().at({2, 0}) == 1);
    CHECK(g.support().at({0, 4}) == 1);

    Germ h = parse_germ("-(x^2+y^4+z^4)");
    CHECK(h.dim() == 3);
    CHECK(h.support().at({2, 0, 0}) == -1);
    CHECK(h.support().at({0, 4, 0}) == -1);
    CHECK(h.support().at({0, 0, 4}) == -1);

    // like terms cancel
    Germ k = parse_germ("x^2 - x^2 + y");
    CHECK(k.dim() == 2);
    REQUIRE(k.support().size() == 1);
    CHECK(k.support().at({0, 1}) == 1);

    // coefficients, juxtaposition, explicit products, xN names
    Germ m = parse_germ("3x y^2 + 2*x^3");
    CHECK(m.support().at({1, 2}) == 3);
    CHECK(m.support().at({3, 0}) == 2);
    Germ n = parse_germ("x1^2 + x4^2");
    CHECK(n.dim() == 4);
    CHECK(n.support().at({2, 0, 0, 0}) == 1);

    // embedding
    Germ e = parse_germ("x", 2);
    CHECK(e.dim() == 2);
    CHECK(e.support().at({1, 0}) == 1);
    CHECK(parse_germ("x").dim() == 1);
    CHECK(parse_germ("x").embedded(3).dim() == 3);

    // powers of parenthesized sums
    Germ sq = parse_germ("(x+y)^2");
    CHECK(sq.support().at({1, 1}) == 2);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_germ("x^2 + "), ParseError);
    CHECK_THROWS_AS(parse_germ("x^2 + $"), ParseError);
    CHECK_THROWS_AS(parse_germ("w^2"), ParseError);
    CHECK_THROWS_AS(parse_germ("x^2 + 1"), ConstantTermError);
    CHECK_THROWS_AS(parse_germ("x - x"), ZeroPolynomialError);
    CHECK_THROWS_AS(parse_germ(""), ParseError);
}

TEST_CASE("print and reparse round trip") {
    for (const char* text : {"x^2+y^4", "-(x^2+y^4+z^4)", "x^3+x*y+y^3", "2x^2-3y^6",
                             "x1^2+x2^2+x3^2+x4^2", "x^2*y^2+x^4"}) {
        Germ g = parse_germ(text);
        CHECK(parse_germ(g.str()) == g);
    }
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> dims(1, 4), nterms(1, 5), exps(0, 6), coeff(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        int d = dims(rng);
        std::map<Germ::Exponents, BigInt> sup;
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) {
            Germ::Exponents e(static_cast<std::size_t>(d));
            bool nonzero = false;
            for (auto& v : e) {
                v = exps(rng);
                if (v) nonzero = true;
            }
            int c = coeff(rng);
            if (!nonzero || c == 0) continue;
            sup[e] = c;
        }
        if (sup.empty()) continue;
        Germ g(d, sup);
        CHECK(parse_germ(g.str()) == g);
    }
}

TEST_CASE("support classification") {
    SupportClass a = classify(parse_germ("x^2+y^4"));
    CHECK(a.cancellation_free);
    CHECK(a.diagonal);
    CHECK(a.two_var);
    CHECK(a.global_sign == 1);

    SupportClass b = classify(parse_germ("x^2*y^2+x^4"));
    CHECK(b.cancellation_free);
    CHECK(!b.diagonal);

    SupportClass c = classify(parse_germ("x^2-y^2"));
    CHECK(!c.cancellation_free);
    CHECK(!c.diagonal);
    CHECK(c.global_sign == 0);

    SupportClass d = classify(parse_germ("-(x^2+y^2)"));
    CHECK(d.cancellation_free);
    CHECK(d.diagonal);
    CHECK(d.global_sign == -1);

    // single monomials never cancel, whatever the parity
    CHECK(classify(parse_germ("x", 2)).cancellation_free);
    CHECK(!classify(parse_germ("x", 2)).diagonal);
    CHECK(classify(parse_germ("x^3*y")).cancellation_free);

    // diagonal implies cancellation_free on a random sample
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> exps(1, 4), coeff(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::map<Germ::Exponents, BigInt> sup;
        for (int v = 0; v < 2; ++v) {
            Germ::Exponents e(2, 0);
            e[static_cast<std::size_t>(v)] = exps(rng);
            int c = coeff(rng);
            if (c != 0) sup[e] = c;
        }
        if (sup.empty()) continue;
        SupportClass cls = classify(Germ(2, sup));
        if (cls.diagonal) CHECK(cls.cancellation_free);
    }
}

TEST_CASE("newton polygon of x^2+y^4") {
    NewtonPolygon p = newton_polygon(parse_germ("x^2+y^4"));
    REQUIRE(p.vertices.size() == 2);
    CHECK(p.vertices[0] == LatticePoint{0, 4});
    CHECK(p.vertices[1] == LatticePoint{2, 0});
    REQUIRE(p.edges.size() == 1);
    // primitive normal of the segment (2,0)-(0,4), rederived by brute
    // force: the smallest positive (w1,w2) with <w,.> constant on the edge
    Ray expected{0, 0};
    for (long long w1 = 1; w1 <= 8 && expected.x == 0; ++w1)
        for (long long w2 = 1; w2 <= 8; ++w2)
            if (2 * w1 == 4 * w2 && std::gcd(w1, w2) == 1) {
                expected = {w1, w2};
                break;
            }
    CHECK(p.edges[0].normal == expected);
    CHECK(p.edges[0].normal == Ray{2, 1});
    // <w, I> is constant on the edge support and minimal over the support
    const Germ g = parse_germ("x^2+y^4");
    long long level = p.edges[0].normal.x * 2;
    for (const auto& [e, c] : g.support()) {
        (void)c;
        long long v = p.edges[0].normal.x * e[0] + p.edges[0].normal.y * e[1];
        CHECK(v >= level);
    }
}

TEST_CASE("newton polygon shapes") {
    NewtonPolygon p1 = newton_polygon(parse_germ("x^2+y^2"));
    REQUIRE(p1.edges.size() == 1);
    CHECK(p1.edges[0].normal == Ray{1, 1});

    // hand enumeration: hull of {(3,0),(1,1),(0,3)} keeps all three points
    NewtonPolygon p2 = newton_polygon(parse_germ("x^3+x*y+y^3"));
    REQUIRE(p2.vertices.size() == 3);
    CHECK(p2.vertices[0] == LatticePoint{0, 3});
    CHECK(p2.vertices[1] == LatticePoint{1, 1});
    CHECK(p2.vertices[2] == LatticePoint{3, 0});
    REQUIRE(p2.edges.size() == 2);
    CHECK(p2.edges[0].normal == Ray{2, 1});
    CHECK(p2.edges[1].normal == Ray{1, 2});

    // interior points do not become vertices
    NewtonPolygon p3 = newton_polygon(parse_germ("x^2+x*y+y^2"));
    REQUIRE(p3.vertices.size() == 2);
    REQUIRE(p3.edges.size() == 1);
    CHECK(p3.edges[0].support.size() == 3);

    // single monomial: a vertex, no compact edges
    NewtonPolygon p4 = newton_polygon(parse_germ("x^2*y^3"));
    CHECK(p4.vertices.size() == 1);
    CHECK(p4.edges.empty());

    CHECK_THROWS_AS(newton_polygon(parse_germ("x^2+y^2+z^2")), DimensionUnsupportedError);
}

TEST_CASE("edge normals separate support strictly") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> exps(0, 7), coeff(1, 5), nterms(2, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::map<Germ::Exponents, BigInt> sup;
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) {
            Germ::Exponents e{exps(rng), exps(rng)};
            if (e[0] == 0 && e[1] == 0) continue;
            sup[e] = coeff(rng);
        }
        if (sup.empty()) continue;
        Germ g(2, sup);
        NewtonPolygon p = newton_polygon(g);
        for (const auto& edge : p.edges) {
            long long level = edge.normal.x * edge.from[0] + edge.normal.y * edge.from[1];
            CHECK(std::gcd(edge.normal.x, edge.normal.y) == 1);
            for (const auto& [e, c] : g.support()) {
                (void)c;
                long long v = edge.normal.x * e[0] + edge.normal.y * e[1];
                bool on_edge = std::find(edge.support.begin(), edge.support.end(),
                                         LatticePoint{e[0], e[1]}) != edge.support.end();
                if (on_edge)
                    CHECK(v == level);
                else
                    CHECK(v > level);
            }
        }
    }
}

TEST_CASE("nondegeneracy") {
    CHECK(nondegenerate(parse_germ("x^2+y^4")));       // 1 + s^2 is square-free
    CHECK(nondegenerate(parse_germ("x^2-y^2")));       // 1 - s^2 is square-free
    CHECK(!nondegenerate(parse_germ("x^2+2x y+y^2"))); // (1+s)^2
    CHECK(nondegenerate(parse_germ("x^3+x*y+y^3")));
    CHECK(nondegenerate(parse_germ("x^2*y^2"))); // no compact edge
    CHECK_THROWS_AS(nondegenerate(parse_germ("x^2+y^2+z^2")), DimensionUnsupportedError);
}
