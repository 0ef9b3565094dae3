#ifndef MZETA_LAURENT_HPP
#define MZETA_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzeta/bigint.hpp"

namespace mzeta {

/// Laurent polynomial in u with BigInt coefficients, kept canonical:
/// no zero coefficient is ever stored, so the zero polynomial is the
/// empty map and equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { add_term(0, BigInt(c)); } // NOLINT(google-explicit-constructor)
    LaurentPoly(const BigInt& c) { add_term(0, c); }     // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(int exp, const BigInt& coeff) {
        LaurentPoly p;
        p.add_term(exp, coeff);
        return p;
    }
    /// u^exp
    static LaurentPoly u_pow(int exp) { return monomial(exp, 1); }
    /// u - 1
    static LaurentPoly u_minus_one();
    /// u + 1
    static LaurentPoly u_plus_one();

    bool is_zero() const { return coeffs_.empty(); }
    /// deg(0) is "minus infinity", reported as an empty optional.
    std::optional<int> degree() const;
    std::optional<int> valuation() const;

    const BigInt& coeff(int exp) const;
    const std::map<int, BigInt>& terms() const { return coeffs_; }

    void add_term(int exp, const BigInt& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Substitute u := v with v a unit (only ±1 arise in this project,
    /// but any nonzero integer works for exponents >= valuation >= 0).
    BigInt eval_at_unit(int v) const;
    /// Exact evaluation at a rational point (v != 0).
    Rational eval_at(const Rational& v) const;

    /// Formal d/du.
    LaurentPoly derivative() const;

    /// Exact division by (u - 1); empty optional when not divisible.
    std::optional<LaurentPoly> divide_by_u_minus_one() const;

    /// Multiply by u^k.
    LaurentPoly shifted(int k) const;

    /// Canonical text like "u^2 - 1", "-2u^-1 + 3", "0".
    std::string str() const;

    /// Machine form: ascending [exponent, decimal-coefficient] pairs.
    std::vector<std::pair<int, std::string>> to_pairs() const;
    static LaurentPoly from_pairs(const std::vector<std::pair<int, std::string>>& pairs);

private:
    std::map<int, BigInt> coeffs_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exp);

} // namespace mzeta

#endif
