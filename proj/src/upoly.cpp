#include "upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzeta {

RatPoly RatPoly::from_ints(const std::vector<BigInt>& v) {
    RatPoly p;
    p.c.reserve(v.size());
    for (const auto& a : v) p.c.emplace_back(a);
    p.trim();
    return p;
}

void RatPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

RatPoly RatPoly::derivative() const {
    RatPoly d;
    for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * Rational(i));
    d.trim();
    return d;
}

RatPoly RatPoly::rem(const RatPoly& g) const {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    RatPoly r = *this;
    r.trim();
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Rational q = r.c.back() / g.c.back();
        int shift = r.degree() - g.degree();
        for (int i = 0; i <= g.degree(); ++i)
            r.c[static_cast<std::size_t>(i + shift)] -= q * g.c[static_cast<std::size_t>(i)];
        r.c.pop_back();
        r.trim();
    }
    return r;
}

RatPoly RatPoly::monic() const {
    RatPoly m = *this;
    m.trim();
    if (m.is_zero()) return m;
    Rational lead = m.c.back();
    for (auto& a : m.c) a /= lead;
    return m;
}

RatPoly gcd(RatPoly a, RatPoly b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        RatPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool square_free(const RatPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

Rational root_bound(const RatPoly& p) {
    Rational m = 0;
    Rational lead = abs(p.c.back());
    for (std::size_t i = 0; i + 1 < p.c.size(); ++i) {
        Rational q = Rational(abs(p.c[i])) / lead;
        if (q > m) m = q;
    }
    return m + 1;
}

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        RatPoly r = chain[chain.size() - 2].rem(chain.back());
        for (auto& a : r.c) a = -a;
        r.trim();
        chain.push_back(std::move(r));
    }
    chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    int v = 0, prev = 0;
    for (const auto& q : chain) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

std::vector<RootInterval> isolate_real_roots(const RatPoly& p) {
    std::vector<RootInterval> out;
    if (p.is_zero() || p.degree() == 0) return out;
    if (p.sign_at(0) == 0)
        throw std::invalid_argument("isolate_real_roots: polynomial vanishes at 0");
    auto chain = sturm_chain(p);
    Rational bound = root_bound(p);

    // Bisect (lo, hi]; Sturm counts roots in the half-open interval, and
    // the outer endpoints +-bound are not roots by the Cauchy bound.
    struct Seg {
        Rational lo, hi;
        int count;
    };
    std::vector<Seg> stack;
    int total = sign_variations(chain, -bound) - sign_variations(chain, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Seg seg = stack.back();
        stack.pop_back();
        if (seg.count == 1 && p.sign_at(seg.lo) != 0 && p.sign_at(seg.hi) != 0 &&
            !(seg.lo < 0 && 0 < seg.hi)) {
            out.push_back({seg.lo, seg.hi});
            continue;
        }
        // Split near the middle at a point that is a root of neither p nor
        // anything relevant: p has at most deg roots, so one of deg+1
        // candidates works.
        Rational mid = (seg.lo + seg.hi) / 2;
        Rational step = (seg.hi - seg.lo) / (4 * (p.degree() + 1));
        while (p.sign_at(mid) == 0) mid += step;
        int left = sign_variations(chain, seg.lo) - sign_variations(chain, mid);
        int right = seg.count - left;
        if (left > 0) stack.push_back({seg.lo, mid, left});
        if (right > 0) stack.push_back({mid, seg.hi, right});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

} // namespace mzeta
