#ifndef MZETA_NEWTON2D_HPP
#define MZETA_NEWTON2D_HPP

#include <string>
#include <vector>

#include "mzeta/polygon.hpp"
#include "mzeta/resolution.hpp"

namespace mzeta {

/// Complete fan of the first quadrant: primitive rays from (1,0) to (0,1)
/// sorted by angle, every adjacent pair unimodular (det = 1), containing
/// every compact-edge normal of the polygon and at least one interior ray.
struct Fan {
    std::vector<Ray> rays;

    int index_of(const Ray& r) const;
    bool is_interior(std::size_t i) const {
        return rays[i].x >= 1 && rays[i].y >= 1;
    }
};

/// Minimal unimodular subdivision containing the axis rays and all edge
/// normals of the polygon (continued-fraction insertion). When the
/// polygon has no compact edge, the ray (1,1) is inserted so that the
/// modification has an exceptional divisor.
Fan build_fan(const NewtonPolygon& p);

/// `fan` refined by the given primitive interior rays, re-subdivided to
/// unimodular. Used for refinement-invariance checks.
Fan refine_fan(const Fan& fan, const std::vector<Ray>& extra);

/// Multiplicity data along the divisor of one fan ray: N = min <w, supp f>,
/// nu = w1 + w2 (the toric value of 1 + mult jac), and for interior rays
/// the integer a with v_prev + v_next = a * w. `face` is the support of f
/// on the face of w.
struct RayData {
    Ray w;
    long long N = 0;
    long long nu = 1;
    long long a = 0; // 0 for axis rays
    bool interior = false;
    std::vector<LatticePoint> face;
};

std::vector<RayData> ray_data(const Fan& fan, const Germ& g);

/// Chart unit of f along the divisor of ray w, relative to the adjacent
/// ray v: U(s) = sum over the face of w of c_I s^{<v, I>}, plus the twist
/// datum D = a * N(w) relating the two charts via U(s) s^{-D} = U_opp(1/s).
struct UnitFunction {
    std::vector<BigInt> coeffs; // dense in s
    long long twist = 0;        // D

    long long ord() const; // vanishing order at s = 0
    long long deg() const;
    std::string str() const;
};

UnitFunction unit_on_ray(const Fan& fan, const Germ& g, std::size_t ray_index,
                         std::size_t neighbor_index);

/// One real root of a face polynomial, isolated with rational endpoints
/// and carrying the sign of the face polynomial on each side.
struct FaceRoot {
    Rational lo, hi;   // open isolating interval, 0 not inside
    int sign_left = 0; // sign of the face polynomial just below the root
    int sign_right = 0;
};

/// Ordered distinct nonzero real roots of the face polynomial of an edge
/// (in the lattice parametrization of edge_face_coefficients, which is the
/// coordinate of the unimodular chart). Throws Degenerate if the face
/// polynomial is not square-free.
std::vector<FaceRoot> real_roots(const Germ& g, const PolygonEdge& edge);

/// The strata of the modification with their beta values (covers not
/// filled in). Throws Degenerate for degenerate germs.
std::vector<Stratum> strata_table(const Fan& fan, const Germ& g);

/// Abstract cover tracing input for one exceptional circle: m-th root
/// cover {t^m * U = sign} over the circle minus its marked points.
/// Cut points sit at s = 0, the positive roots ascending, the chart seam
/// (s = infinity), then the negative roots ascending. unit_sign[i] is the
/// sign of the unit on the open interval following cuts[i] in that cyclic
/// walk. Non-removed cuts are points the cover passes over.
struct CoverModel {
    long long m = 1;
    int seam_twist = 0; // parity of a = D/m: sheet labels flip when crossing the seam
    struct Cut {
        bool removed = false;
        long long e = 0; // vanishing order of the unit (removed cuts)
        bool seam = false;
    };
    std::vector<Cut> cuts;
    std::vector<int> unit_sign;
};

/// beta of the sign cover over the open stratum of one interior ray,
/// computed on the smooth compact model as k(1+u) - r with k the circle
/// count and r the boundary-point count of the gluing.
LaurentPoly cover_beta(const CoverModel& model, Sign sign);

/// Build the cover model for the divisor of an interior fan ray.
CoverModel make_cover_model(const Fan& fan, const Germ& g, std::size_t ray_index);

/// Full automatic resolution data for a nondegenerate two-variable germ,
/// with beta and both sign covers on every stratum. `extra_rays` refines
/// the fan first (refinement must not change either zeta function).
ResolutionData resolve(const Germ& g, const std::vector<Ray>& extra_rays = {});

} // namespace mzeta

#endif
