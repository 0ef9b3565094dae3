#ifndef MZETA_UPOLY_HPP
#define MZETA_UPOLY_HPP

#include <utility>
#include <vector>

#include "mzeta/bigint.hpp"

namespace mzeta {

/// Dense univariate polynomial over Q, used for the face-polynomial
/// square-free test and Sturm-sequence root isolation. All arithmetic
/// is exact; sizes here are tiny so no performance tricks are needed.
struct RatPoly {
    std::vector<Rational> c; // c[i] is the s^i coefficient

    static RatPoly from_ints(const std::vector<BigInt>& v);
    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return eval(x).sign(); }
    RatPoly derivative() const;
    /// Remainder of this modulo g (g nonzero).
    RatPoly rem(const RatPoly& g) const;
    RatPoly monic() const;
};

RatPoly gcd(RatPoly a, RatPoly b);
bool square_free(const RatPoly& p);

/// Exclusive upper bound on |roots| (Cauchy bound).
Rational root_bound(const RatPoly& p);

/// An open isolating interval (lo, hi) around a single simple real root.
struct RootInterval {
    Rational lo, hi;
};

/// Isolate the distinct real roots of a square-free polynomial. The
/// returned intervals are pairwise disjoint, sorted, have rational
/// endpoints that are not roots, and none of them contains 0 unless the
/// polynomial vanishes there (callers pass polynomials with p(0) != 0).
std::vector<RootInterval> isolate_real_roots(const RatPoly& p);

} // namespace mzeta

#endif
