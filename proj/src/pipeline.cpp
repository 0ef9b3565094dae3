#include "mzeta/pipeline.hpp"

#include "mzeta/errors.hpp"

namespace mzeta {

Method method_from_string(const std::string& s) {
    if (s == "auto") return Method::Auto;
    if (s == "direct") return Method::Direct;
    if (s == "newton") return Method::Newton;
    if (s == "file") return Method::File;
    throw Error("UnknownMethod", "unknown method '" + s + "'");
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Auto: return "auto";
        case Method::Direct: return "direct";
        case Method::Newton: return "newton";
        case Method::File: return "file";
    }
    return "?";
}

Method choose_method(const Germ& g) {
    if (g.dim() == 2 && nondegenerate(g)) return Method::Newton;
    if (classify(g).cancellation_free) return Method::Direct;
    throw NoApplicableMethodError(
        "germ is neither two-variable nondegenerate nor cancellation-free: " + g.str());
}

ZetaComputation compute_zeta_from_resolution(const ResolutionData& r, int order) {
    ZetaComputation out;
    out.used = Method::File;
    out.order = order;
    out.naive_closed = zeta_from_resolution(r);
    out.naive = expand(*out.naive_closed, order, SeriesKind::Naive, r.dim);

    bool covers = true;
    for (const auto& s : r.strata)
        if (!s.beta.is_zero() && !s.cover_plus.has_value()) covers = false;
    if (covers) {
        out.plus_closed = sign_zeta_from_resolution(r, Sign::Plus);
        out.minus_closed = sign_zeta_from_resolution(r, Sign::Minus);
        out.plus = expand(*out.plus_closed, order, SeriesKind::Plus, r.dim);
        out.minus = expand(*out.minus_closed, order, SeriesKind::Minus, r.dim);
    }
    out.resolution = r;
    return out;
}

ZetaComputation compute_zeta(const Germ& g, int order, Method method) {
    if (method == Method::Auto) method = choose_method(g);
    switch (method) {
        case Method::Direct: {
            ZetaTriple t = zeta_direct(g, order);
            ZetaComputation out;
            out.used = Method::Direct;
            out.order = order;
            out.naive = std::move(t.naive);
            out.plus = std::move(t.plus);
            out.minus = std::move(t.minus);
            return out;
        }
        case Method::Newton: {
            ResolutionData r = resolve(g);
            ZetaComputation out = compute_zeta_from_resolution(r, order);
            out.used = Method::Newton;
            return out;
        }
        default:
            throw Error("UnknownMethod", "method 'file' needs resolution data, not a germ");
    }
}

InvariantProfile profile_of(const ZetaComputation& z) {
    return profile(z.naive, z.plus, z.minus);
}

} // namespace mzeta
