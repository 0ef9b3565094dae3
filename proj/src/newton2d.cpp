#include "mzeta/newton2d.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "mzeta/errors.hpp"
#include "upoly.hpp"

namespace mzeta {

namespace {

long long det(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

long long dot(const Ray& w, const LatticePoint& p) { return w.x * p[0] + w.y * p[1]; }

// Unique primitive ray in the open cone (v, vp) with det(v, w) = 1 and
// det(w, vp) minimal (>= 1). Exists whenever det(v, vp) > 1.
Ray insert_ray(const Ray& v, const Ray& vp) {
    long long delta = det(v, vp);
    // particular solution of v.x * y - v.y * x = 1
    long long g = 0, s = 0, t = 0;
    {
        // extended euclid on (v.x, v.y)
        long long a = v.x, b = v.y;
        long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            long long q = a / b;
            std::tie(a, b) = std::make_pair(b, a - q * b);
            std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
            std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
        }
        g = a, s = x0, t = y0; // s*v.x + t*v.y = g = 1
    }
    if (g != 1) throw Error("InternalError", "fan ray is not primitive");
    Ray w0{-t, s}; // v.x * s - v.y * (-t) = 1
    long long d0 = det(w0, vp);
    // shift by multiples of v so that det(w, vp) lands in [1, delta)
    long long d = ((d0 - 1) % delta + delta) % delta + 1;
    long long k = (d - d0) / delta;
    Ray w{w0.x + k * v.x, w0.y + k * v.y};
    if (det(v, w) != 1 || det(w, vp) != d || d >= delta || w.x < 0 || w.y < 0)
        throw Error("InternalError", "fan subdivision produced an invalid ray");
    return w;
}

std::vector<Ray> unimodularize(std::vector<Ray> rays) {
    std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return det(a, b) > 0; });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    std::vector<Ray> out;
    out.push_back(rays.front());
    for (std::size_t i = 1; i < rays.size(); ++i) {
        const Ray target = rays[i];
        while (det(out.back(), target) > 1) out.push_back(insert_ray(out.back(), target));
        out.push_back(target);
    }
    return out;
}

void check_fan(const Fan& fan) {
    if (fan.rays.size() < 3 || fan.rays.front() != Ray{1, 0} || fan.rays.back() != Ray{0, 1})
        throw Error("InternalError", "fan must run from (1,0) to (0,1) with an interior ray");
    for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i)
        if (det(fan.rays[i], fan.rays[i + 1]) != 1)
            throw Error("InternalError", "fan is not unimodular");
}

} // namespace

int Fan::index_of(const Ray& r) const {
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == r) return static_cast<int>(i);
    return -1;
}

Fan build_fan(const NewtonPolygon& p) {
    std::vector<Ray> rays{{1, 0}, {0, 1}};
    for (const auto& e : p.edges) rays.push_back(e.normal);
    if (p.edges.empty()) rays.push_back(Ray{1, 1}); // ensure an exceptional divisor
    Fan fan{unimodularize(std::move(rays))};
    check_fan(fan);
    return fan;
}

Fan refine_fan(const Fan& fan, const std::vector<Ray>& extra) {
    std::vector<Ray> rays = fan.rays;
    for (const auto& r : extra) {
        if (r.x < 1 || r.y < 1 || std::gcd(r.x, r.y) != 1)
            throw InvalidDataError("extra fan rays must be primitive interior vectors");
        rays.push_back(r);
    }
    Fan out{unimodularize(std::move(rays))};
    check_fan(out);
    return out;
}

std::vector<RayData> ray_data(const Fan& fan, const Germ& g) {
    if (g.dim() != 2) throw DimensionUnsupportedError("fan data requires a two-variable germ");
    check_fan(fan);
    std::vector<RayData> out;
    out.reserve(fan.rays.size());
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const Ray w = fan.rays[i];
        RayData d;
        d.w = w;
        d.nu = w.x + w.y;
        d.interior = fan.is_interior(i);
        long long best = 0;
        bool first = true;
        for (const auto& [e, c] : g.support()) {
            (void)c;
            LatticePoint p{e[0], e[1]};
            long long v = dot(w, p);
            if (first || v < best) {
                best = v;
                first = false;
            }
        }
        d.N = best;
        for (const auto& [e, c] : g.support()) {
            (void)c;
            LatticePoint p{e[0], e[1]};
            if (dot(w, p) == best) d.face.push_back(p);
        }
        std::sort(d.face.begin(), d.face.end());
        if (d.interior) {
            const Ray prev = fan.rays[i - 1];
            const Ray next = fan.rays[i + 1];
            long long sx = prev.x + next.x, sy = prev.y + next.y;
            long long a = (w.x != 0) ? sx / w.x : sy / w.y;
            if (a * w.x != sx || a * w.y != sy)
                throw Error("InternalError", "neighbor sum is not a multiple of the ray");
            d.a = a;
        }
        out.push_back(std::move(d));
    }
    return out;
}

long long UnitFunction::ord() const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) return static_cast<long long>(i);
    return -1;
}

long long UnitFunction::deg() const {
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i] != 0) return static_cast<long long>(i);
    return -1;
}

std::string UnitFunction::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs[i].str();
        if (i > 0) os << "*s^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

UnitFunction unit_on_ray(const Fan& fan, const Germ& g, std::size_t ray_index,
                         std::size_t neighbor_index) {
    check_fan(fan);
    if (ray_index >= fan.rays.size() || neighbor_index >= fan.rays.size() ||
        (neighbor_index + 1 != ray_index && ray_index + 1 != neighbor_index))
        throw Error("InternalError", "unit requires an adjacent neighbor ray");
    if (!fan.is_interior(ray_index))
        throw Error("InternalError", "unit is defined along interior rays");
    auto data = ray_data(fan, g);
    const RayData& wd = data[ray_index];
    const Ray v = fan.rays[neighbor_index];

    long long max_exp = 0;
    for (const auto& p : wd.face) max_exp = std::max(max_exp, dot(v, p));
    UnitFunction u;
    u.coeffs.assign(static_cast<std::size_t>(max_exp) + 1, 0);
    for (const auto& p : wd.face) {
        Germ::Exponents e{static_cast<int>(p[0]), static_cast<int>(p[1])};
        u.coeffs[static_cast<std::size_t>(dot(v, p))] += g.support().at(e);
    }
    u.twist = wd.a * wd.N;
    // The transition to the opposite chart is U(s) s^{-D} = U_opp(1/s); at
    // s = 0 the unit vanishes to the multiplicity of the neighbor divisor.
    if (u.ord() != data[neighbor_index].N)
        throw Error("InternalError", "unit order does not match the neighbor multiplicity");
    return u;
}

std::vector<FaceRoot> real_roots(const Germ& g, const PolygonEdge& edge) {
    RatPoly q = RatPoly::from_ints(edge_face_coefficients(edge, g));
    if (!square_free(q))
        throw DegenerateError("face polynomial of an edge has a repeated factor");
    std::vector<FaceRoot> out;
    for (const auto& iv : isolate_real_roots(q)) {
        FaceRoot r;
        r.lo = iv.lo;
        r.hi = iv.hi;
        r.sign_left = q.sign_at(iv.lo);
        r.sign_right = q.sign_at(iv.hi);
        if (r.sign_left == 0 || r.sign_right == 0 || r.sign_left == r.sign_right)
            throw Error("InternalError", "root interval endpoints must straddle a sign change");
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// Roots of the unit of ray i (always taken against the previous ray) in
// the chart coordinate, split into ascending positive / negative lists,
// plus the sign of the unit on every interval of the cut circle.
struct RayCircle {
    std::vector<RootInterval> pos, neg;
    std::vector<int> unit_sign; // circular: (0,.), between pos roots, (., seam), (seam, .), ...
    long long ord0 = 0;         // vanishing order of U at s = 0
    long long e_inf = 0;        // vanishing order of U_opp at the seam
};

RayCircle analyze_ray_circle(const UnitFunction& u) {
    RayCircle rc;
    long long ord = u.ord();
    long long deg = u.deg();
    rc.ord0 = ord;
    rc.e_inf = u.twist - deg;

    std::vector<BigInt> stripped(u.coeffs.begin() + static_cast<std::ptrdiff_t>(ord),
                                 u.coeffs.end());
    RatPoly q = RatPoly::from_ints(stripped);
    if (!square_free(q))
        throw DegenerateError("unit of a ray has a repeated nonzero root");
    auto roots = isolate_real_roots(q);
    for (const auto& r : roots)
        (r.hi <= 0 ? rc.neg : rc.pos).push_back(r);

    auto q_sign = [&](const Rational& x) { return q.sign_at(x); };
    // Interval signs of q walking the circle: (0, ...) through positive
    // roots to the seam, then (-infinity, ...) through negative roots
    // back to 0. Isolation interval endpoints are never roots, so they
    // are valid sample points for the neighboring gaps.
    std::vector<int> qs;
    if (rc.pos.empty()) {
        qs.push_back(q_sign(1));
    } else {
        qs.push_back(q_sign(rc.pos.front().lo));
        for (std::size_t i = 1; i < rc.pos.size(); ++i) qs.push_back(q_sign(rc.pos[i].lo));
        qs.push_back(q_sign(rc.pos.back().hi));
    }
    std::size_t first_negative_interval = qs.size();
    if (rc.neg.empty()) {
        qs.push_back(q_sign(-1));
    } else {
        qs.push_back(q_sign(rc.neg.front().lo));
        for (std::size_t i = 1; i < rc.neg.size(); ++i) qs.push_back(q_sign(rc.neg[i].lo));
        qs.push_back(q_sign(rc.neg.back().hi));
    }
    // U = s^{ord} q(s): on the negative half of the circle the monomial
    // contributes (-1)^{ord}.
    rc.unit_sign = qs;
    if (ord % 2 != 0)
        for (std::size_t i = first_negative_interval; i < rc.unit_sign.size(); ++i)
            rc.unit_sign[i] = -rc.unit_sign[i];
    for (int s : rc.unit_sign)
        if (s == 0) throw Error("InternalError", "unit sign sampled at a root");
    return rc;
}

} // namespace

CoverModel make_cover_model(const Fan& fan, const Germ& g, std::size_t ray_index) {
    if (!fan.is_interior(ray_index))
        throw Error("InternalError", "covers are computed along interior rays");
    auto data = ray_data(fan, g);
    const RayData& wd = data[ray_index];
    UnitFunction u = unit_on_ray(fan, g, ray_index, ray_index - 1);
    RayCircle rc = analyze_ray_circle(u);
    if (rc.e_inf != data[ray_index + 1].N)
        throw Error("InternalError", "unit order at the seam does not match the next ray");

    CoverModel model;
    model.m = wd.N;
    if (u.twist % model.m != 0)
        throw UnsupportedCoverError("chart twist is not divisible by the cover degree");
    model.seam_twist = static_cast<int>(((u.twist / model.m) % 2 + 2) % 2);

    model.cuts.push_back({rc.ord0 >= 1, rc.ord0, false});
    for (std::size_t i = 0; i < rc.pos.size(); ++i) model.cuts.push_back({true, 1, false});
    model.cuts.push_back({rc.e_inf >= 1, rc.e_inf, true});
    for (std::size_t i = 0; i < rc.neg.size(); ++i) model.cuts.push_back({true, 1, false});
    model.unit_sign = rc.unit_sign;
    if (model.unit_sign.size() != model.cuts.size())
        throw Error("InternalError", "cover model interval/cut mismatch");
    return model;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

LaurentPoly cover_beta(const CoverModel& model, Sign sign) {
    const int sigma = sign_value(sign);
    const long long m = model.m;
    const std::size_t K = model.cuts.size();
    if (K == 0 || model.unit_sign.size() != K)
        throw UnsupportedCoverError("malformed cover model");
    const bool even = (m % 2 == 0);

    // Sheets over interval i: labels are the sign of the fiber coordinate
    // in the chart of the interval (a single unlabeled sheet when m is odd).
    auto has_sheets = [&](std::size_t i) {
        return even ? (sigma * model.unit_sign[i] > 0) : true;
    };
    // node ids: interval * 2 + (0 for label +1, 1 for label -1); odd m uses slot 0.
    auto node = [&](std::size_t i, int label) {
        return static_cast<int>(2 * i + (label > 0 ? 0 : 1));
    };
    Dsu dsu(2 * K);
    long long r = 0;

    for (std::size_t j = 0; j < K; ++j) {
        const auto& cut = model.cuts[j];
        std::size_t walk_left = (j + K - 1) % K;
        std::size_t walk_right = j;
        // Local picture at the cut: for the seam the local coordinate is
        // 1/s, so the local right side (s' > 0) is the interval ending at
        // the seam, and fiber labels on the s < 0 side differ from the
        // chart-1 labels by (-1)^{seam twist}.
        std::size_t loc_right = cut.seam ? walk_left : walk_right;
        std::size_t loc_left = cut.seam ? walk_right : walk_left;
        int conv_right = 1;
        int conv_left = (cut.seam && model.seam_twist == 1) ? -1 : 1;
        auto node_local = [&](std::size_t i, int local_label, int conv) {
            return node(i, local_label * conv);
        };

        if (!cut.removed) {
            // The unit is nonzero here; the cover passes over the point
            // with a continuous fiber coordinate in the local chart.
            if (!even) {
                dsu.unite(node(loc_left, 1), node(loc_right, 1));
            } else {
                if (has_sheets(loc_left) != has_sheets(loc_right))
                    throw UnsupportedCoverError("sheet count changes across a retained point");
                if (has_sheets(loc_right))
                    for (int lab : {1, -1})
                        dsu.unite(node_local(loc_right, lab, conv_right),
                                  node_local(loc_left, lab, conv_left));
            }
            continue;
        }

        // Removed point: the unit vanishes to order e; local model
        // t^m c z^e = sigma with c the unit sign just right of the point.
        // Real branches are z = alpha tau^{M'}, t = beta tau^{-E'} with
        // beta^m alpha^e = sigma c; tau -> -tau maps (alpha, beta) to
        // (alpha (-1)^{M'}, beta (-1)^{E'}) and each orbit is one place of
        // the compact model, gluing its two half-branch ends at one
        // boundary point.
        const long long e = cut.e;
        const long long gg = std::gcd(m, e);
        const long long Mp = m / gg;
        const long long Ep = e / gg;
        const int c = model.unit_sign[loc_right];
        if ((m % 2) != 0) {
            // m odd: the two sign solutions form a single orbit; one
            // boundary point joins the right branch to the left branch.
            dsu.unite(node(loc_right, 1), node(loc_left, 1));
            r += 1;
        } else if (Mp % 2 == 0) {
            // M' even, E' odd: alpha is fixed on an orbit, so each side
            // with solutions (sigma c alpha^e > 0) closes onto itself:
            // one boundary point gluing the side's two sheets.
            struct SideInfo {
                std::size_t interval;
                int side_sign;
            };
            for (SideInfo side : {SideInfo{loc_right, 1}, SideInfo{loc_left, -1}}) {
                int side_pow = (e % 2 == 0) ? 1 : side.side_sign;
                bool solvable = sigma * c * side_pow > 0;
                if (solvable != has_sheets(side.interval))
                    throw UnsupportedCoverError("side sheet count contradicts the local rule");
                if (solvable) {
                    dsu.unite(node(side.interval, 1), node(side.interval, -1));
                    r += 1;
                }
            }
        } else {
            // M' odd forces e even, so both sides behave alike and
            // solutions exist iff sigma c > 0; the two orbits glue a right
            // branch of local label lambda to a left branch of local label
            // lambda (-1)^{E'}.
            bool solvable = sigma * c > 0;
            if (has_sheets(loc_right) != solvable || has_sheets(loc_left) != solvable)
                throw UnsupportedCoverError("sheet count contradicts the local rule");
            if (solvable) {
                int flip = (Ep % 2 == 0) ? 1 : -1;
                for (int lab : {1, -1})
                    dsu.unite(node_local(loc_right, lab, conv_right),
                              node_local(loc_left, lab * flip, conv_left));
                r += 2;
            }
        }
    }

    // Count components among the sheets that exist; each is one circle of
    // the smooth compact model, so beta = k(1+u) - r.
    std::set<int> components;
    for (std::size_t i = 0; i < K; ++i) {
        if (!has_sheets(i)) continue;
        components.insert(dsu.find(node(i, 1)));
        if (even) components.insert(dsu.find(node(i, -1)));
    }
    if (components.empty()) return LaurentPoly{};
    LaurentPoly beta;
    LaurentPoly circle = LaurentPoly::u_plus_one();
    for (std::size_t i = 0; i < components.size(); ++i) beta += circle;
    beta -= LaurentPoly(BigInt(r));
    return beta;
}

namespace {

std::string ray_id(const Ray& r) {
    return "E" + std::to_string(r.x) + "_" + std::to_string(r.y);
}

std::string branch_id(const Ray& r, std::size_t k) {
    return "B" + std::to_string(r.x) + "_" + std::to_string(r.y) + "_" + std::to_string(k);
}

LaurentPoly point_cover(long long m, int unit_value_sign, Sign sign) {
    // Number of real m-th roots of sigma / (unit value): one for odd m,
    // two or zero for even m depending on the sign.
    if (m % 2 != 0) return LaurentPoly(1);
    return (sign_value(sign) * unit_value_sign > 0) ? LaurentPoly(2) : LaurentPoly{};
}

ResolutionData build_resolution(const Fan& fan, const Germ& g, bool with_covers) {
    if (g.dim() != 2)
        throw DimensionUnsupportedError("automatic resolution requires a two-variable germ");
    if (!nondegenerate(g))
        throw DegenerateError("germ is degenerate for its Newton polygon: " + g.str());

    auto data = ray_data(fan, g);
    const std::size_t R = fan.rays.size();

    std::vector<bool> in_J(R, false);
    for (std::size_t i = 0; i < R; ++i) in_J[i] = data[i].interior || data[i].N >= 1;

    // Nonzero real roots of the unit of each interior ray, in the chart
    // coordinate against the previous ray.
    std::vector<std::vector<RootInterval>> roots(R);
    std::vector<CoverModel> models(R);
    for (std::size_t i = 0; i < R; ++i) {
        if (!data[i].interior) continue;
        CoverModel model = make_cover_model(fan, g, i);
        std::size_t nroots = model.cuts.size() - 2;
        (void)nroots;
        UnitFunction u = unit_on_ray(fan, g, i, i - 1);
        RatPoly q = RatPoly::from_ints(std::vector<BigInt>(
            u.coeffs.begin() + static_cast<std::ptrdiff_t>(u.ord()), u.coeffs.end()));
        roots[i] = isolate_real_roots(q);
        models[i] = std::move(model);
    }

    ResolutionData out;
    out.dim = 2;
    out.note = "newton2d";

    // Divisors: rays in fan order, then branch divisors grouped by ray
    // and ordered along the real line.
    for (std::size_t i = 0; i < R; ++i) {
        if (!in_J[i]) continue;
        out.divisors.push_back(
            {ray_id(fan.rays[i]), data[i].N, data[i].nu, data[i].interior});
    }
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t k = 0; k < roots[i].size(); ++k)
            out.divisors.push_back({branch_id(fan.rays[i], k), 1, 1, false});

    auto add_stratum = [&](std::vector<std::string> ids, LaurentPoly beta,
                           std::optional<LaurentPoly> cp, std::optional<LaurentPoly> cm) {
        std::sort(ids.begin(), ids.end());
        Stratum s;
        s.divisor_ids = std::move(ids);
        s.beta = std::move(beta);
        s.cover_plus = std::move(cp);
        s.cover_minus = std::move(cm);
        out.strata.push_back(std::move(s));
    };
    auto covers = [&](LaurentPoly p, LaurentPoly m) {
        if (!with_covers)
            return std::pair<std::optional<LaurentPoly>, std::optional<LaurentPoly>>{
                std::nullopt, std::nullopt};
        return std::pair<std::optional<LaurentPoly>, std::optional<LaurentPoly>>{std::move(p),
                                                                                 std::move(m)};
    };

    // Singleton strata.
    for (std::size_t i = 0; i < R; ++i) {
        if (!in_J[i]) continue;
        if (!data[i].interior) {
            // Axis divisors meet sigma^{-1}(0) only at the fixed points,
            // which belong to deeper strata.
            auto [cp, cm] = covers(LaurentPoly{}, LaurentPoly{});
            add_stratum({ray_id(fan.rays[i])}, LaurentPoly{}, std::move(cp), std::move(cm));
            continue;
        }
        // The divisor is a real projective line (beta = 1 + u) minus the
        // fixed points shared with neighbors in J and the strict-transform
        // crossings.
        long long removed = 0;
        if (in_J[i - 1]) ++removed;
        if (in_J[i + 1]) ++removed;
        removed += static_cast<long long>(roots[i].size());
        LaurentPoly beta = LaurentPoly::u_plus_one();
        beta -= LaurentPoly(BigInt(removed));
        if (with_covers) {
            add_stratum({ray_id(fan.rays[i])}, std::move(beta),
                        cover_beta(models[i], Sign::Plus), cover_beta(models[i], Sign::Minus));
        } else {
            add_stratum({ray_id(fan.rays[i])}, std::move(beta), std::nullopt, std::nullopt);
        }
    }
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t k = 0; k < roots[i].size(); ++k) {
            auto [cp, cm] = covers(LaurentPoly{}, LaurentPoly{});
            add_stratum({branch_id(fan.rays[i], k)}, LaurentPoly{}, std::move(cp), std::move(cm));
        }

    // Adjacent ray pairs in J: the fixed point of the shared cone.
    for (std::size_t i = 0; i + 1 < R; ++i) {
        if (!in_J[i] || !in_J[i + 1]) continue;
        long long m2 = std::gcd(data[i].N, data[i + 1].N);
        // unit value at the fixed point = coefficient at the vertex the
        // two faces share
        std::vector<LatticePoint> common;
        std::set_intersection(data[i].face.begin(), data[i].face.end(),
                              data[i + 1].face.begin(), data[i + 1].face.end(),
                              std::back_inserter(common));
        if (common.size() != 1)
            throw Error("InternalError", "adjacent faces must share exactly one vertex");
        Germ::Exponents e{static_cast<int>(common[0][0]), static_cast<int>(common[0][1])};
        int cs = g.support().at(e) > 0 ? 1 : -1;
        auto [cp, cm] = covers(point_cover(m2, cs, Sign::Plus), point_cover(m2, cs, Sign::Minus));
        add_stratum({ray_id(fan.rays[i]), ray_id(fan.rays[i + 1])}, LaurentPoly(1),
                    std::move(cp), std::move(cm));
    }

    // Edge ray + its strict-transform branches: simple crossings, where
    // the cover degree is gcd(N, 1) = 1.
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t k = 0; k < roots[i].size(); ++k) {
            auto [cp, cm] = covers(LaurentPoly(1), LaurentPoly(1));
            add_stratum({ray_id(fan.rays[i]), branch_id(fan.rays[i], k)}, LaurentPoly(1),
                        std::move(cp), std::move(cm));
        }

    return out;
}

} // namespace

std::vector<Stratum> strata_table(const Fan& fan, const Germ& g) {
    return build_resolution(fan, g, false).strata;
}

ResolutionData resolve(const Germ& g, const std::vector<Ray>& extra_rays) {
    if (g.dim() != 2)
        throw DimensionUnsupportedError("automatic resolution requires a two-variable germ");
    Fan fan = build_fan(newton_polygon(g));
    if (!extra_rays.empty()) fan = refine_fan(fan, extra_rays);
    return build_resolution(fan, g, true);
}

} // namespace mzeta
