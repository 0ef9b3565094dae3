#include "mzeta/series.hpp"

#include <sstream>

#include "mzeta/errors.hpp"

namespace mzeta {

std::string to_string(SeriesKind k) {
    switch (k) {
        case SeriesKind::Naive: return "naive";
        case SeriesKind::Plus: return "plus";
        case SeriesKind::Minus: return "minus";
    }
    return "?";
}

ZetaSeries::ZetaSeries(int order, SeriesKind kind, int dim)
    : order_(order), kind_(kind), dim_(dim), coeffs_(static_cast<std::size_t>(order)) {
    if (order < 1) throw Error("InvalidOrder", "truncation order must be >= 1");
}

const LaurentPoly& ZetaSeries::coeff(int n) const {
    return coeffs_.at(static_cast<std::size_t>(n - 1));
}

void ZetaSeries::set_coeff(int n, LaurentPoly c) {
    coeffs_.at(static_cast<std::size_t>(n - 1)) = std::move(c);
}

void ZetaSeries::add_coeff(int n, const LaurentPoly& c) {
    coeffs_.at(static_cast<std::size_t>(n - 1)) += c;
}

bool ZetaSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

ZetaSeries& ZetaSeries::operator+=(const ZetaSeries& o) {
    if (order_ != o.order_)
        throw OrderMismatchError("series truncation orders differ");
    for (int n = 1; n <= order_; ++n) add_coeff(n, o.coeff(n));
    return *this;
}

ZetaSeries operator*(const ZetaSeries& a, const ZetaSeries& b) {
    if (a.order() != b.order())
        throw OrderMismatchError("series truncation orders differ");
    ZetaSeries r(a.order(), a.kind(), a.dim());
    for (int i = 1; i <= a.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 1; i + j <= a.order(); ++j)
            r.add_coeff(i + j, a.coeff(i) * b.coeff(j));
    }
    return r;
}

ZetaSeries ZetaSeries::scaled(const LaurentPoly& c) const {
    ZetaSeries r(order_, kind_, dim_);
    for (int n = 1; n <= order_; ++n) r.set_coeff(n, coeffs_[static_cast<std::size_t>(n - 1)] * c);
    return r;
}

std::string ZetaSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 1; n <= order_; ++n) {
        if (coeff(n).is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeff(n).str() << ")*T^" << n;
        first = false;
    }
    if (first) os << "0";
    os << " + O(T^" << order_ + 1 << ")";
    return os.str();
}

bool IntSeries::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

std::string IntSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 1; n <= order; ++n) {
        const BigInt& c = at(n);
        if (c == 0) continue;
        BigInt a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << a.str() << "*";
        os << "T^" << n;
        first = false;
    }
    if (first) os << "0";
    os << " + O(T^" << order + 1 << ")";
    return os.str();
}

bool Mod2Series::is_zero() const {
    for (auto b : bits)
        if (b) return false;
    return true;
}

std::string Mod2Series::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 1; n <= order; ++n) {
        if (!bits[static_cast<std::size_t>(n - 1)]) continue;
        if (!first) os << " + ";
        os << "T^" << n;
        first = false;
    }
    if (first) os << "0";
    os << " + O(T^" << order + 1 << ")  (mod 2)";
    return os.str();
}

ZetaSeries div_u_minus_1(const ZetaSeries& s) {
    ZetaSeries r(s.order(), s.kind(), s.dim());
    for (int n = 1; n <= s.order(); ++n) {
        auto q = s.coeff(n).divide_by_u_minus_one();
        if (!q) throw NotDivisibleError(n);
        r.set_coeff(n, std::move(*q));
    }
    return r;
}

ZetaSeries deriv_u(const ZetaSeries& s) {
    ZetaSeries r(s.order(), s.kind(), s.dim());
    for (int n = 1; n <= s.order(); ++n) r.set_coeff(n, s.coeff(n).derivative());
    return r;
}

IntSeries eval_u(const ZetaSeries& s, int v) {
    IntSeries r(s.order());
    for (int n = 1; n <= s.order(); ++n) r.at(n) = s.coeff(n).eval_at_unit(v);
    return r;
}

Mod2Series mod2(const IntSeries& s) {
    Mod2Series r(s.order);
    for (int n = 1; n <= s.order; ++n)
        r.bits[static_cast<std::size_t>(n - 1)] = static_cast<unsigned char>(s.at(n) % 2 != 0);
    return r;
}

} // namespace mzeta
