#ifndef MZETA_POLYGON_HPP
#define MZETA_POLYGON_HPP

#include <array>
#include <vector>

#include "mzeta/germ.hpp"

namespace mzeta {

using LatticePoint = std::array<long long, 2>;

/// Primitive vector in the closed first quadrant.
struct Ray {
    long long x = 0, y = 0;
    friend auto operator<=>(const Ray&, const Ray&) = default;
};

/// A compact edge of the Newton polygon: its endpoints (sorted by
/// increasing first coordinate of the upper vertex first), the primitive
/// inward normal (both components >= 1), and the support points of f on
/// the edge.
struct PolygonEdge {
    LatticePoint from, to; // from has the smaller first coordinate
    Ray normal;
    std::vector<LatticePoint> support;
};

/// Compact part of the boundary of conv(supp(f) + R_+^2).
struct NewtonPolygon {
    std::vector<LatticePoint> vertices; // sorted by increasing first coordinate
    std::vector<PolygonEdge> edges;     // in the same order
};

/// Build the polygon of a two-variable germ. Throws DimensionUnsupported
/// if g.dim() != 2.
NewtonPolygon newton_polygon(const Germ& g);

/// Face polynomial of an edge in the lattice parametrization of the edge:
/// with P0 the endpoint of smaller first coordinate... points are
/// P0 + t*(w2, -w1) for t = 0..L, and the returned coefficient vector c
/// has c[t] = coefficient of f at that lattice point (0 when absent).
/// The nonzero roots of this polynomial are in bijection with the real
/// points of the exceptional circle of the edge where the strict
/// transform crosses.
std::vector<BigInt> edge_face_coefficients(const PolygonEdge& edge, const Germ& g);

/// True iff every compact-edge face polynomial is square-free over Q
/// (a sufficient, exact criterion for Newton nondegeneracy; vertices are
/// always nondegenerate). Throws DimensionUnsupported if g.dim() != 2.
bool nondegenerate(const Germ& g);

} // namespace mzeta

#endif
