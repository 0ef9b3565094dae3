#include "mzeta/closed_form.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mzeta/errors.hpp"

namespace mzeta {

void ClosedTerm::normalize() { std::sort(blocks.begin(), blocks.end()); }

void ZetaClosedForm::add_term(LaurentPoly coeff, std::vector<RationalBlock> blocks) {
    if (coeff.is_zero()) return;
    for (const auto& b : blocks)
        if (b.N < 1) throw Error("InvalidBlock", "block requires N >= 1");
    ClosedTerm t{std::move(coeff), std::move(blocks)};
    t.normalize();
    terms_.push_back(std::move(t));
}

ZetaClosedForm operator+(const ZetaClosedForm& a, const ZetaClosedForm& b) {
    ZetaClosedForm r = a;
    for (const auto& t : b.terms_) r.terms_.push_back(t);
    return r;
}

ZetaClosedForm operator*(const ZetaClosedForm& a, const ZetaClosedForm& b) {
    ZetaClosedForm r;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            std::vector<RationalBlock> blocks = ta.blocks;
            blocks.insert(blocks.end(), tb.blocks.begin(), tb.blocks.end());
            r.add_term(ta.coeff * tb.coeff, std::move(blocks));
        }
    return r;
}

std::string ZetaClosedForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        os << "(" << t.coeff.str() << ")";
        for (const auto& b : t.blocks)
            os << " * [u^-" << b.nu << " T^" << b.N << " / (1 - u^-" << b.nu << " T^" << b.N
               << ")]";
        first = false;
    }
    return os.str();
}

ZetaSeries expand(const ZetaClosedForm& closed, int order, SeriesKind kind, int dim) {
    if (order < 1) throw Error("InvalidOrder", "expansion order must be >= 1");
    ZetaSeries total(order, kind, dim);
    for (const auto& t : closed.terms()) {
        // Start from the constant coefficient placed at the lowest block and
        // multiply the remaining geometric series in; every block has N >= 1
        // so the T-adic order of the term is at least |blocks|.
        ZetaSeries acc(order, kind, dim);
        bool started = false;
        for (const auto& b : t.blocks) {
            ZetaSeries geom(order, kind, dim);
            for (long long j = 1; j * b.N <= order; ++j)
                geom.set_coeff(static_cast<int>(j * b.N),
                               LaurentPoly::u_pow(static_cast<int>(-j * b.nu)));
            if (!started) {
                acc = geom;
                started = true;
            } else {
                acc = acc * geom;
            }
        }
        if (!started) {
            // A term with no blocks is a plain Laurent constant; those never
            // arise from the evaluators but the expansion is still defined
            // (constant terms have no T^n component for n >= 1).
            continue;
        }
        total += acc.scaled(t.coeff);
    }
    return total;
}

namespace {

// Dense polynomial in T with LaurentPoly coefficients; just enough for
// clearing denominators in closed_equal.
struct TPoly {
    std::vector<LaurentPoly> c; // c[k] is the T^k coefficient

    static TPoly zero() { return TPoly{}; }
    static TPoly constant(LaurentPoly v) {
        TPoly p;
        p.c.push_back(std::move(v));
        return p;
    }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool operator==(const TPoly& o) const {
        std::size_t n = std::max(c.size(), o.c.size());
        static const LaurentPoly zero{};
        for (std::size_t i = 0; i < n; ++i) {
            const LaurentPoly& a = i < c.size() ? c[i] : zero;
            const LaurentPoly& b = i < o.c.size() ? o.c[i] : zero;
            if (a != b) return false;
        }
        return true;
    }
};

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, LaurentPoly{});
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

TPoly& operator+=(TPoly& a, const TPoly& b) {
    if (b.c.size() > a.c.size()) a.c.resize(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] += b.c[i];
    return a;
}

// u^nu - T^N
TPoly denominator_factor(const RationalBlock& b) {
    TPoly p;
    p.c.assign(static_cast<std::size_t>(b.N) + 1, LaurentPoly{});
    p.c[0] = LaurentPoly::u_pow(static_cast<int>(b.nu));
    p.c[static_cast<std::size_t>(b.N)] = LaurentPoly(-1);
    return p;
}

// T^k
TPoly t_power(long long k) {
    TPoly p;
    p.c.assign(static_cast<std::size_t>(k) + 1, LaurentPoly{});
    p.c[static_cast<std::size_t>(k)] = LaurentPoly(1);
    return p;
}

using BlockCount = std::map<RationalBlock, long long>;

BlockCount count_blocks(const ClosedTerm& t) {
    BlockCount m;
    for (const auto& b : t.blocks) ++m[b];
    return m;
}

// Numerator of the form over the denominator prod (u^nu - T^N)^{mult[b]}.
TPoly cleared_numerator(const ZetaClosedForm& f, const BlockCount& mult) {
    TPoly total = TPoly::zero();
    for (const auto& t : f.terms()) {
        BlockCount mine = count_blocks(t);
        TPoly term = TPoly::constant(t.coeff);
        for (const auto& [b, m] : mult) {
            long long have = 0;
            if (auto it = mine.find(b); it != mine.end()) have = it->second;
            // each copy of the block contributes T^N to the numerator
            if (have > 0) term = term * t_power(b.N * have);
            TPoly den = denominator_factor(b);
            for (long long i = 0; i < m - have; ++i) term = term * den;
        }
        total += term;
    }
    total.trim();
    return total;
}

} // namespace

bool closed_equal(const ZetaClosedForm& a, const ZetaClosedForm& b) {
    BlockCount mult;
    for (const ZetaClosedForm* f : {&a, &b})
        for (const auto& t : f->terms()) {
            BlockCount mine = count_blocks(t);
            for (const auto& [blk, m] : mine) {
                auto [it, inserted] = mult.emplace(blk, m);
                if (!inserted) it->second = std::max(it->second, m);
            }
        }
    return cleared_numerator(a, mult) == cleared_numerator(b, mult);
}

} // namespace mzeta
