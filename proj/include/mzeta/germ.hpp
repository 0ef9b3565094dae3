#ifndef MZETA_GERM_HPP
#define MZETA_GERM_HPP

#include <map>
#include <string>
#include <vector>

#include "mzeta/bigint.hpp"

namespace mzeta {

/// Polynomial germ f: (R^d, 0) -> (R, 0) with exact integer coefficients.
/// Support maps an exponent vector (length d, nonnegative) to a nonzero
/// coefficient; the zero vector never appears (f(0) = 0) and the support
/// is non-empty.
class Germ {
public:
    using Exponents = std::vector<int>;

    Germ(int dim, std::map<Exponents, BigInt> support);

    int dim() const { return dim_; }
    const std::map<Exponents, BigInt>& support() const { return support_; }

    /// Same germ viewed in a larger ambient dimension (extra variables
    /// that f does not involve).
    Germ embedded(int dim) const;

    /// Canonical text; parse(str()) == *this.
    std::string str() const;

    bool operator==(const Germ& o) const { return dim_ == o.dim_ && support_ == o.support_; }

private:
    int dim_;
    std::map<Exponents, BigInt> support_;
};

/// Parse a sum of integer monomials in x, y, z (aliases of x1, x2, x3) or
/// x1..xd, with ^ for powers and explicit * or juxtaposition for products.
/// Parenthesized subexpressions and unary sign are accepted ("-(x^2+y^4)").
/// `min_dim`, when positive, embeds the result in at least that dimension.
/// Throws ParseError, ConstantTermError, ZeroPolynomialError.
Germ parse_germ(const std::string& text, int min_dim = 0);

/// Support classification used to scope the arc-space enumerators.
struct SupportClass {
    /// Sound syntactic no-cancellation criterion: a single monomial, or
    /// all exponents even with all coefficients of one sign.
    bool cancellation_free = false;
    /// Every monomial involves exactly one variable with an even exponent,
    /// and all coefficients share one sign (so diagonal implies
    /// cancellation_free).
    bool diagonal = false;
    bool two_var = false;
    /// +1 or -1 when all coefficients share a sign, else 0.
    int global_sign = 0;
};

SupportClass classify(const Germ& g);

} // namespace mzeta

#endif
