#ifndef MZETA_SERIES_HPP
#define MZETA_SERIES_HPP

#include <string>
#include <vector>

#include "mzeta/laurent.hpp"

namespace mzeta {

enum class SeriesKind { Naive, Plus, Minus };

std::string to_string(SeriesKind k);

/// Power series in T truncated at `order`, with LaurentPoly coefficients
/// for T^1 .. T^order. The T^0 coefficient is identically zero.
class ZetaSeries {
public:
    ZetaSeries() : order_(0) {}
    explicit ZetaSeries(int order, SeriesKind kind = SeriesKind::Naive, int dim = 0);

    int order() const { return order_; }
    SeriesKind kind() const { return kind_; }
    int dim() const { return dim_; }

    /// Coefficient of T^n, 1 <= n <= order.
    const LaurentPoly& coeff(int n) const;
    void set_coeff(int n, LaurentPoly c);
    void add_coeff(int n, const LaurentPoly& c);

    bool is_zero() const;

    /// Equality compares order and coefficients; kind/dim are metadata.
    bool operator==(const ZetaSeries& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }
    bool operator!=(const ZetaSeries& o) const { return !(*this == o); }

    ZetaSeries& operator+=(const ZetaSeries& o);
    friend ZetaSeries operator+(ZetaSeries a, const ZetaSeries& b) { return a += b; }
    /// Truncated product (both factors have zero constant term).
    friend ZetaSeries operator*(const ZetaSeries& a, const ZetaSeries& b);
    ZetaSeries scaled(const LaurentPoly& c) const;

    std::string str() const;

private:
    int order_;
    SeriesKind kind_ = SeriesKind::Naive;
    int dim_ = 0;
    std::vector<LaurentPoly> coeffs_; // index i holds T^{i+1}
};

/// Integer-coefficient series in T (the result of evaluating u).
struct IntSeries {
    int order = 0;
    std::vector<BigInt> coeffs; // index i holds T^{i+1}

    explicit IntSeries(int ord = 0) : order(ord), coeffs(static_cast<std::size_t>(ord), 0) {}
    BigInt& at(int n) { return coeffs.at(static_cast<std::size_t>(n - 1)); }
    const BigInt& at(int n) const { return coeffs.at(static_cast<std::size_t>(n - 1)); }
    bool is_zero() const;
    bool operator==(const IntSeries& o) const = default;
    std::string str() const;
};

/// Series over Z/2.
struct Mod2Series {
    int order = 0;
    std::vector<unsigned char> bits; // index i holds T^{i+1}

    explicit Mod2Series(int ord = 0) : order(ord), bits(static_cast<std::size_t>(ord), 0) {}
    bool is_zero() const;
    bool operator==(const Mod2Series& o) const = default;
    std::string str() const;
};

/// Exact coefficient-wise division by (u - 1); throws NotDivisibleError
/// naming the first offending T-power.
ZetaSeries div_u_minus_1(const ZetaSeries& s);

/// Coefficient-wise formal d/du.
ZetaSeries deriv_u(const ZetaSeries& s);

/// Substitute u := v, v in {-1, 1}.
IntSeries eval_u(const ZetaSeries& s, int v);

/// Coefficient-wise reduction mod 2.
Mod2Series mod2(const IntSeries& s);

} // namespace mzeta

#endif
