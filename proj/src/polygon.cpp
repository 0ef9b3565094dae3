#include "mzeta/polygon.hpp"

#include <algorithm>
#include <numeric>

#include "mzeta/errors.hpp"
#include "upoly.hpp"

namespace mzeta {

namespace {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

} // namespace

NewtonPolygon newton_polygon(const Germ& g) {
    if (g.dim() != 2)
        throw DimensionUnsupportedError("Newton polygon construction requires two variables");

    std::vector<LatticePoint> pts;
    pts.reserve(g.support().size());
    for (const auto& [e, c] : g.support()) {
        (void)c;
        pts.push_back({static_cast<long long>(e[0]), static_cast<long long>(e[1])});
    }
    std::sort(pts.begin(), pts.end());

    // Pareto-minimal staircase: x ascending, strictly decreasing y.
    std::vector<LatticePoint> stairs;
    for (const auto& p : pts) {
        if (!stairs.empty() && stairs.back()[1] <= p[1]) continue; // dominated
        stairs.push_back(p);
    }

    // Lower-left convex chain over the staircase.
    std::vector<LatticePoint> hull;
    for (const auto& p : stairs) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }

    NewtonPolygon poly;
    poly.vertices = hull;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const LatticePoint& a = hull[i];
        const LatticePoint& b = hull[i + 1];
        long long dx = b[0] - a[0]; // > 0
        long long dy = a[1] - b[1]; // > 0
        long long gdiv = std::gcd(dx, dy);
        PolygonEdge edge;
        edge.from = a;
        edge.to = b;
        edge.normal = Ray{dy / gdiv, dx / gdiv};
        long long n0 = edge.normal.x * a[0] + edge.normal.y * a[1];
        for (const auto& [e, c] : g.support()) {
            (void)c;
            long long px = e[0], py = e[1];
            if (edge.normal.x * px + edge.normal.y * py == n0 && a[0] <= px && px <= b[0])
                edge.support.push_back({px, py});
        }
        std::sort(edge.support.begin(), edge.support.end());
        poly.edges.push_back(std::move(edge));
    }
    return poly;
}

std::vector<BigInt> edge_face_coefficients(const PolygonEdge& edge, const Germ& g) {
    long long steps =
        (edge.to[0] - edge.from[0]) / edge.normal.y; // direction is (w2, -w1)
    std::vector<BigInt> coeffs(static_cast<std::size_t>(steps) + 1, 0);
    for (long long t = 0; t <= steps; ++t) {
        LatticePoint p{edge.from[0] + t * edge.normal.y, edge.from[1] - t * edge.normal.x};
        Germ::Exponents e{static_cast<int>(p[0]), static_cast<int>(p[1])};
        auto it = g.support().find(e);
        if (it != g.support().end()) coeffs[static_cast<std::size_t>(t)] = it->second;
    }
    return coeffs;
}

bool nondegenerate(const Germ& g) {
    NewtonPolygon poly = newton_polygon(g);
    for (const auto& edge : poly.edges) {
        RatPoly q = RatPoly::from_ints(edge_face_coefficients(edge, g));
        if (!square_free(q)) return false;
    }
    return true;
}

} // namespace mzeta
