#include "mzeta/laurent.hpp"

#include <sstream>

namespace mzeta {

LaurentPoly LaurentPoly::u_minus_one() {
    LaurentPoly p;
    p.add_term(1, 1);
    p.add_term(0, -1);
    return p;
}

LaurentPoly LaurentPoly::u_plus_one() {
    LaurentPoly p;
    p.add_term(1, 1);
    p.add_term(0, 1);
    return p;
}

std::optional<int> LaurentPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

std::optional<int> LaurentPoly::valuation() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

const BigInt& LaurentPoly::coeff(int exp) const {
    static const BigInt zero = 0;
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? zero : it->second;
}

void LaurentPoly::add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
}

BigInt LaurentPoly::eval_at_unit(int v) const {
    BigInt acc = 0;
    for (const auto& [e, c] : coeffs_) {
        if (v == 1) {
            acc += c;
        } else if (v == -1) {
            acc += (e % 2 == 0) ? c : -c;
        } else {
            // general unit: negative exponents only make sense for |v| = 1
            BigInt p = pow_big(BigInt(v), static_cast<unsigned long>(e >= 0 ? e : -e));
            if (e >= 0)
                acc += c * p;
            else
                acc += c / p; // exact only if p | c; callers use ±1
        }
    }
    return acc;
}

Rational LaurentPoly::eval_at(const Rational& v) const {
    Rational acc = 0;
    for (const auto& [e, c] : coeffs_) {
        Rational p = 1;
        int a = e >= 0 ? e : -e;
        for (int i = 0; i < a; ++i) p *= v;
        if (e < 0) p = 1 / p;
        acc += Rational(c) * p;
    }
    return acc;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_)
        if (e != 0) r.add_term(e - 1, c * e);
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_by_u_minus_one() const {
    if (is_zero()) return LaurentPoly{};
    if (eval_at_unit(1) != 0) return std::nullopt;
    // Write f = u^v g with g an ordinary polynomial, g(1) = 0, and use
    // synthetic division by (u - 1); integrality is preserved.
    int v = *valuation();
    int d = *degree();
    std::vector<BigInt> g(static_cast<std::size_t>(d - v) + 1, 0);
    for (const auto& [e, c] : coeffs_) g[static_cast<std::size_t>(e - v)] = c;
    // g = (u-1) q: q_i = sum_{j>i} g_j (Horner from the top).
    std::vector<BigInt> q(g.size(), 0);
    BigInt carry = 0;
    for (std::size_t i = g.size(); i-- > 1;) {
        carry += g[i];
        q[i - 1] = carry;
    }
    LaurentPoly result;
    for (std::size_t i = 0; i < q.size(); ++i)
        result.add_term(static_cast<int>(i) + v, q[i]);
    return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
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
        if (e == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str();
            os << "u";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

std::vector<std::pair<int, std::string>> LaurentPoly::to_pairs() const {
    std::vector<std::pair<int, std::string>> out;
    out.reserve(coeffs_.size());
    for (const auto& [e, c] : coeffs_) out.emplace_back(e, c.str());
    return out;
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, std::string>>& pairs) {
    LaurentPoly p;
    for (const auto& [e, s] : pairs) p.add_term(e, BigInt(s));
    return p;
}

LaurentPoly pow(const LaurentPoly& base, unsigned exp) {
    LaurentPoly r = LaurentPoly(1);
    LaurentPoly b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

} // namespace mzeta
