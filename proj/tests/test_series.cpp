#include <doctest.h>

#include <random>

#include "mzeta/closed_form.hpp"
#include "mzeta/errors.hpp"
#include "mzeta/series.hpp"

using namespace mzeta;

namespace {

// Symbolic difference-quotient oracle for the formal u-derivative: for a
// Laurent polynomial f and rational point u0, write f(u0 + h) - f(u0)
// over the common denominator (u0 + h)^M as a polynomial in h, divide the
// numerator by h exactly, and read off the value at h = 0. Entirely
// independent of LaurentPoly::derivative().
Rational derivative_by_difference_quotient(const LaurentPoly& f, const Rational& u0) {
    int M = 0;
    if (auto v = f.valuation(); v.has_value() && *v < 0) M = -*v;

    // dense polynomial in h with rational coefficients
    auto mul = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto pow_lin = [&](int n) { // (u0 + h)^n as a polynomial in h
        std::vector<Rational> r{Rational(1)};
        std::vector<Rational> lin{u0, Rational(1)};
        for (int i = 0; i < n; ++i) r = mul(r, lin);
        return r;
    };

    // numerator of f(u0+h): sum c_e (u0+h)^{e+M}
    std::vector<Rational> num{Rational(0)};
    for (const auto& [e, c] : f.terms()) {
        auto term = pow_lin(e + M);
        if (term.size() > num.size()) num.resize(term.size(), Rational(0));
        for (std::size_t i = 0; i < term.size(); ++i) num[i] += Rational(c) * term[i];
    }
    // numerator of the difference quotient: num(h) - f(u0) (u0+h)^M, then /h
    auto denom_shift = pow_lin(M);
    Rational f0 = f.eval_at(u0);
    if (denom_shift.size() > num.size()) num.resize(denom_shift.size(), Rational(0));
    for (std::size_t i = 0; i < denom_shift.size(); ++i) num[i] -= f0 * denom_shift[i];
    REQUIRE(num[0] == 0); // divisible by h
    // limit h -> 0 of quotient: coefficient of h^1 over denominator at h=0
    Rational den0 = 1;
    for (int i = 0; i < M; ++i) den0 *= u0;
    return (num.size() > 1 ? num[1] : Rational(0)) / den0;
}

} // namespace

TEST_CASE("series operators") {
    // (u^2 - 1) T^2 -> (u + 1) T^2 under division by u - 1
    ZetaSeries s(4);
    LaurentPoly c = LaurentPoly::monomial(2, 1);
    c.add_term(0, -1);
    s.set_coeff(2, c);
    ZetaSeries d = div_u_minus_1(s);
    CHECK(d.coeff(2) == LaurentPoly::u_plus_one());
    CHECK(d.coeff(1).is_zero());

    // u is not divisible -> NotDivisible carries the T-index
    ZetaSeries bad(3);
    bad.set_coeff(3, LaurentPoly::u_pow(1));
    CHECK_THROWS_AS(div_u_minus_1(bad), NotDivisibleError);

    // deriv: u^-1 T -> -u^-2 T ; (u+1)u^-2 T^2 -> (-u^-2 - 2u^-3) T^2
    ZetaSeries t(2);
    t.set_coeff(1, LaurentPoly::u_pow(-1));
    t.set_coeff(2, LaurentPoly::u_plus_one().shifted(-2));
    ZetaSeries dt = deriv_u(t);
    CHECK(dt.coeff(1) == LaurentPoly::monomial(-2, -1));
    LaurentPoly expect = LaurentPoly::monomial(-2, -1) + LaurentPoly::monomial(-3, -2);
    CHECK(dt.coeff(2) == expect);

    // eval: (u^2-1)u^-2 T^2 at u=-1 -> 0 ; (u-1)u^-n T^n at u=-1 -> -2(-1)^n
    ZetaSeries e(4);
    e.set_coeff(2, c.shifted(-2));
    for (int n : {1, 3}) e.set_coeff(n, LaurentPoly::u_minus_one().shifted(-n));
    IntSeries ev = eval_u(e, -1);
    CHECK(ev.at(2) == 0);
    CHECK(ev.at(1) == 2);  // -2(-1)^1
    CHECK(ev.at(3) == 2);
    // (u+1)u^-2 T^2 at u=1 -> 2
    IntSeries at1 = eval_u(t, 1);
    CHECK(at1.at(2) == 2);

    // mod2: 2T^2 -> 0, 3T^4 -> T^4, -T^3 -> T^3
    IntSeries m(4);
    m.at(2) = 2;
    m.at(4) = 3;
    m.at(3) = -1;
    Mod2Series mm = mod2(m);
    CHECK(mm.bits[1] == 0);
    CHECK(mm.bits[3] == 1);
    CHECK(mm.bits[2] == 1);
}

TEST_CASE("derivative agrees with the symbolic difference quotient") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> nterms(1, 5), exp(-5, 5), coeff(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly f;
        int n = nterms(rng);
        for (int i = 0; i < n; ++i) f.add_term(exp(rng), coeff(rng));
        for (Rational u0 : {Rational(1), Rational(2), Rational(-3), Rational(5, 2)}) {
            Rational direct = f.derivative().eval_at(u0);
            Rational oracle = derivative_by_difference_quotient(f, u0);
            CHECK(direct == oracle);
        }
    }
}

TEST_CASE("expand geometric series") {
    // (u-1) * block(nu=1, N=1) to order 3
    ZetaClosedForm f;
    f.add_term(LaurentPoly::u_minus_one(), {RationalBlock{1, 1}});
    ZetaSeries s = expand(f, 3);
    for (int n = 1; n <= 3; ++n)
        CHECK(s.coeff(n) == LaurentPoly::u_minus_one().shifted(-n));

    // (u^2-1) * block(nu=2, N=2) to order 4: truncation of (u^2-1)T^2/(u^2-T^2)
    ZetaClosedForm g;
    LaurentPoly u2m1 = LaurentPoly::monomial(2, 1);
    u2m1.add_term(0, -1);
    g.add_term(u2m1, {RationalBlock{2, 2}});
    ZetaSeries t = expand(g, 4);
    CHECK(t.coeff(1).is_zero());
    CHECK(t.coeff(2) == u2m1.shifted(-2));
    CHECK(t.coeff(3).is_zero());
    CHECK(t.coeff(4) == u2m1.shifted(-4));
}

TEST_CASE("expand the two-divisor form") {
    // (u-1)[u B(3,4) + u B(2,2)] + (u-1)^2 B(3,4) B(2,2) to order 4;
    // the T^2 and T^4 coefficients must match the direct arc count for
    // x^2 + y^4 (checked against module arcspace in test_cross_path).
    ZetaClosedForm f;
    LaurentPoly um1 = LaurentPoly::u_minus_one();
    f.add_term(um1 * LaurentPoly::u_pow(1), {RationalBlock{3, 4}});
    f.add_term(um1 * LaurentPoly::u_pow(1), {RationalBlock{2, 2}});
    f.add_term(um1 * um1, {RationalBlock{3, 4}, RationalBlock{2, 2}});
    ZetaSeries s = expand(f, 4);
    CHECK(s.coeff(2) == um1.shifted(-1));
    LaurentPoly t4 = um1.shifted(-2) + um1.shifted(-3);
    CHECK(s.coeff(4) == t4);
    CHECK(s.coeff(1).is_zero());
    CHECK(s.coeff(3).is_zero());
}

TEST_CASE("expand is multiplicative and respects T-adic order") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> nu(1, 3), N(1, 3), coeff(-4, 4), nblocks(1, 2);
    auto random_form = [&]() {
        ZetaClosedForm f;
        int terms = 1 + static_cast<int>(rng() % 2);
        for (int t = 0; t < terms; ++t) {
            std::vector<RationalBlock> blocks;
            int nb = nblocks(rng);
            for (int b = 0; b < nb; ++b) blocks.push_back({nu(rng), N(rng)});
            LaurentPoly c;
            c.add_term(static_cast<int>(rng() % 3) - 1, coeff(rng));
            if (c.is_zero()) c = LaurentPoly(1);
            f.add_term(c, std::move(blocks));
        }
        return f;
    };
    for (int trial = 0; trial < 40; ++trial) {
        ZetaClosedForm a = random_form(), b = random_form();
        int order = 9;
        ZetaSeries lhs = expand(a * b, order);
        ZetaSeries rhs = expand(a, order) * expand(b, order);
        CHECK(lhs == rhs);

        // T-adic order >= number of blocks of every term
        std::size_t min_blocks = 100;
        for (const auto& t : a.terms()) min_blocks = std::min(min_blocks, t.blocks.size());
        ZetaSeries ea = expand(a, order);
        for (int n = 1; n < static_cast<int>(min_blocks) && n <= order; ++n)
            CHECK(ea.coeff(n).is_zero());
    }
}

TEST_CASE("closed_equal decides rational function equality") {
    LaurentPoly um1 = LaurentPoly::u_minus_one();
    LaurentPoly u2m1 = LaurentPoly::monomial(2, 1);
    u2m1.add_term(0, -1);

    // commutativity of the term list
    ZetaClosedForm a, b;
    a.add_term(um1, {RationalBlock{1, 1}});
    a.add_term(u2m1, {RationalBlock{2, 2}});
    b.add_term(u2m1, {RationalBlock{2, 2}});
    b.add_term(um1, {RationalBlock{1, 1}});
    CHECK(closed_equal(a, b));

    // different coefficients are distinguished
    ZetaClosedForm c, d;
    c.add_term(u2m1, {RationalBlock{2, 2}});
    d.add_term(um1, {RationalBlock{2, 2}});
    CHECK(!closed_equal(c, d));

    // (u-1)T/(u-T) == (u-1)u B(2,1) + (u-1)^2 B(2,1)B(1,1): a blown-up
    // rewrite of the same function
    ZetaClosedForm simple, refined;
    simple.add_term(um1, {RationalBlock{1, 1}});
    refined.add_term(um1 * LaurentPoly::u_pow(1), {RationalBlock{2, 1}});
    refined.add_term(um1 * um1, {RationalBlock{2, 1}, RationalBlock{1, 1}});
    CHECK(closed_equal(simple, refined));
    CHECK(expand(simple, 12) == expand(refined, 12));

    // zero forms
    CHECK(closed_equal(ZetaClosedForm{}, ZetaClosedForm{}));
    CHECK(!closed_equal(simple, ZetaClosedForm{}));

    // closed_equal implies equal expansions (spot check on random forms)
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> nu(1, 3), N(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        ZetaClosedForm f;
        f.add_term(um1, {RationalBlock{nu(rng), N(rng)}});
        ZetaClosedForm g = f; // same list, plus a cancelling pair
        g.add_term(u2m1, {RationalBlock{1, 2}});
        g.add_term(-u2m1, {RationalBlock{1, 2}});
        CHECK(closed_equal(f, g));
        CHECK(expand(f, 10) == expand(g, 10));
    }
}
