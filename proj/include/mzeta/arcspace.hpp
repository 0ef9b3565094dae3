#ifndef MZETA_ARCSPACE_HPP
#define MZETA_ARCSPACE_HPP

#include <optional>

#include "mzeta/germ.hpp"
#include "mzeta/series.hpp"

namespace mzeta {

enum class Sign { Plus, Minus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

/// beta of {sum of q positive even powers = 1}: a compact nonsingular
/// variety with the Z/2 Betti numbers of the (q-1)-sphere, so
/// beta = 1 + u^{q-1} for q >= 1 and 0 for q = 0 (empty set).
LaurentPoly beta_sphere(int q);

/// Normalized coefficient beta(X_n) * u^{-nd} of the naive zeta function,
/// computed by exact enumeration of coordinate-order strata. Requires a
/// cancellation-free germ (UnsupportedGerm otherwise). O((n+1)^d) strata.
LaurentPoly naive_coeff(const Germ& g, int n);

/// Normalized coefficient beta(X_n^{sign}) * u^{-nd}. Requires a diagonal
/// germ (UnsupportedGerm otherwise).
LaurentPoly sign_coeff(const Germ& g, int n, Sign sign);

/// The three zeta series truncated at `order`; the sign components are
/// present only for diagonal germs.
struct ZetaTriple {
    ZetaSeries naive;
    std::optional<ZetaSeries> plus;
    std::optional<ZetaSeries> minus;
};

ZetaTriple zeta_direct(const Germ& g, int order);

} // namespace mzeta

#endif
