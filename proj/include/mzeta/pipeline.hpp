#ifndef MZETA_PIPELINE_HPP
#define MZETA_PIPELINE_HPP

#include <optional>
#include <string>

#include "mzeta/invariants.hpp"
#include "mzeta/newton2d.hpp"

namespace mzeta {

enum class Method { Auto, Direct, Newton, File };

Method method_from_string(const std::string& s);
std::string to_string(Method m);

/// Everything one computation produces: the series always, closed forms
/// when the resolution route was taken, and the resolution data itself
/// when it was constructed or loaded.
struct ZetaComputation {
    Method used = Method::Direct;
    int order = 20;
    ZetaSeries naive;
    std::optional<ZetaSeries> plus, minus;
    std::optional<ZetaClosedForm> naive_closed, plus_closed, minus_closed;
    std::optional<ResolutionData> resolution;
};

/// Auto prefers the Newton-polygon route for nondegenerate two-variable
/// germs and falls back to direct enumeration; NoApplicableMethod when
/// neither route accepts the germ.
Method choose_method(const Germ& g);

ZetaComputation compute_zeta(const Germ& g, int order, Method method);

/// Zeta functions straight from resolution data (sign components when
/// cover data is present).
ZetaComputation compute_zeta_from_resolution(const ResolutionData& r, int order);

InvariantProfile profile_of(const ZetaComputation& z);

} // namespace mzeta

#endif
