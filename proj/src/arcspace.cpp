#include "mzeta/arcspace.hpp"

#include <limits>
#include <vector>

#include "mzeta/errors.hpp"

namespace mzeta {

LaurentPoly beta_sphere(int q) {
    // {c_1 l_1^{e_1} + ... + c_q l_q^{e_q} = 1} with c_i > 0 and e_i even
    // is compact and nonsingular, so beta agrees with the classical Z/2
    // Betti numbers: those of S^{q-1}, giving 1 + u^{q-1}. For q = 0 the
    // equation reads 0 = 1, the empty set.
    if (q == 0) return LaurentPoly{};
    LaurentPoly r = LaurentPoly(1);
    r.add_term(q - 1, 1);
    return r;
}

namespace {

constexpr long long kInfiniteOrder = std::numeric_limits<long long>::max();

// Order of the monomial with exponents e along arcs with coordinate
// orders a: sum e_i * a_i, infinite as soon as a coordinate with e_i > 0
// is identically zero.
long long monomial_order(const Germ::Exponents& e, const std::vector<long long>& a) {
    long long total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (a[i] == kInfiniteOrder) return kInfiniteOrder;
        total += static_cast<long long>(e[i]) * a[i];
    }
    return total;
}

// Enumerates order vectors in ({1..n} U {inf})^d, calling fn on each.
template <typename Fn>
void for_each_order_vector(int d, int n, Fn&& fn) {
    std::vector<long long> a(static_cast<std::size_t>(d), 1);
    while (true) {
        fn(const_cast<const std::vector<long long>&>(a));
        int i = 0;
        for (; i < d; ++i) {
            auto& v = a[static_cast<std::size_t>(i)];
            if (v == kInfiniteOrder) {
                v = 1;
                continue;
            }
            v = (v == n) ? kInfiniteOrder : v + 1;
            break;
        }
        if (i == d) return;
    }
}

LaurentPoly binomial_alternating_sphere_sum(int q) {
    // beta{ sum_{i in S} c_i l_i^{e_i} = 1, all l_i != 0 } by inclusion-
    // exclusion over vanishing subsets, |S| = q.
    LaurentPoly total;
    BigInt binom = 1;
    for (int r = 0; r <= q; ++r) {
        LaurentPoly term = beta_sphere(q - r) * LaurentPoly(binom);
        if (r % 2 == 0)
            total += term;
        else
            total -= term;
        binom = binom * (q - r) / (r + 1);
    }
    return total;
}

} // namespace

LaurentPoly naive_coeff(const Germ& g, int n) {
    SupportClass cls = classify(g);
    if (!cls.cancellation_free)
        throw UnsupportedGermError(
            "direct enumeration requires a cancellation-free germ: " + g.str());
    const int d = g.dim();
    LaurentPoly total;
    const LaurentPoly um1 = LaurentPoly::u_minus_one();
    for_each_order_vector(d, n, [&](const std::vector<long long>& a) {
        long long m = kInfiniteOrder;
        for (const auto& [e, c] : g.support()) {
            (void)c;
            m = std::min(m, monomial_order(e, a));
            if (m < n) break;
        }
        if (m != n) return;
        LaurentPoly contrib = LaurentPoly(1);
        for (long long ai : a) {
            if (ai == kInfiniteOrder) continue; // the zero arc: one point
            contrib *= um1.shifted(static_cast<int>(n - ai));
        }
        total += contrib;
    });
    return total.shifted(-n * d);
}

LaurentPoly sign_coeff(const Germ& g, int n, Sign sign) {
    SupportClass cls = classify(g);
    if (!cls.diagonal)
        throw UnsupportedGermError("sign enumeration requires a diagonal germ: " + g.str());
    if (sign_value(sign) != cls.global_sign) return LaurentPoly{};

    const int d = g.dim();
    LaurentPoly total;
    const LaurentPoly um1 = LaurentPoly::u_minus_one();
    for_each_order_vector(d, n, [&](const std::vector<long long>& a) {
        long long m = kInfiniteOrder;
        for (const auto& [e, c] : g.support()) {
            (void)c;
            m = std::min(m, monomial_order(e, a));
        }
        if (m != n) return;
        // Coordinates owning a monomial that attains the minimum; for a
        // diagonal germ at most one monomial per coordinate can attain it.
        std::vector<bool> achieving(static_cast<std::size_t>(d), false);
        for (const auto& [e, c] : g.support()) {
            (void)c;
            if (monomial_order(e, a) != n) continue;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) achieving[i] = true;
        }
        int q = 0;
        LaurentPoly rest = LaurentPoly(1);
        for (int i = 0; i < d; ++i) {
            long long ai = a[static_cast<std::size_t>(i)];
            if (achieving[static_cast<std::size_t>(i)]) {
                ++q;
                rest = rest.shifted(static_cast<int>(n - ai)); // free higher coefficients
            } else if (ai != kInfiniteOrder) {
                rest *= um1.shifted(static_cast<int>(n - ai));
            }
        }
        total += binomial_alternating_sphere_sum(q) * rest;
    });
    return total.shifted(-n * d);
}

ZetaTriple zeta_direct(const Germ& g, int order) {
    SupportClass cls = classify(g);
    ZetaTriple out{ZetaSeries(order, SeriesKind::Naive, g.dim()), std::nullopt, std::nullopt};
    for (int n = 1; n <= order; ++n) out.naive.set_coeff(n, naive_coeff(g, n));
    if (cls.diagonal) {
        ZetaSeries plus(order, SeriesKind::Plus, g.dim());
        ZetaSeries minus(order, SeriesKind::Minus, g.dim());
        for (int n = 1; n <= order; ++n) {
            plus.set_coeff(n, sign_coeff(g, n, Sign::Plus));
            minus.set_coeff(n, sign_coeff(g, n, Sign::Minus));
        }
        out.plus = std::move(plus);
        out.minus = std::move(minus);
    }
    return out;
}

} // namespace mzeta
