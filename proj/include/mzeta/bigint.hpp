#ifndef MZETA_BIGINT_HPP
#define MZETA_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace mzeta {

// All arithmetic in this project is exact. Exponents and multiplicities
// coming out of Newton-polygon data blow past 64 bits quickly once orders
// grow, so coefficients are arbitrary-precision throughout.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

inline BigInt pow_big(BigInt base, unsigned long exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

} // namespace mzeta

#endif
