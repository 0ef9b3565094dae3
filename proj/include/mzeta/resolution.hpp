#ifndef MZETA_RESOLUTION_HPP
#define MZETA_RESOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "mzeta/arcspace.hpp"
#include "mzeta/closed_form.hpp"

namespace mzeta {

/// An irreducible component of (f o sigma)^{-1}(0): N is the multiplicity
/// of f o sigma along it, nu is 1 + the multiplicity of jac sigma, and
/// `exceptional` marks components lying over the origin.
struct Divisor {
    std::string id;
    long long N = 1;
    long long nu = 1;
    bool exceptional = false;
};

/// One stratum E_I^0 together with beta(E_I^0 ∩ sigma^{-1}(0)) and, when
/// available, the beta values of its two sign covers. The cover fields are
/// virtual Poincare polynomials of the covers as real algebraic sets, never
/// topological sheet counts; either both are present or neither is.
struct Stratum {
    std::vector<std::string> divisor_ids; // non-empty, sorted, no duplicates
    LaurentPoly beta;
    std::optional<LaurentPoly> cover_plus;
    std::optional<LaurentPoly> cover_minus;
};

/// Minimal sufficient data extracted from a modification: enough for both
/// zeta evaluators without representing the map itself. Interchange format
/// between the automatic two-variable construction, hand-authored files,
/// and the evaluators.
struct ResolutionData {
    int dim = 2;
    std::vector<Divisor> divisors;
    std::vector<Stratum> strata;
    std::string note;

    const Divisor* find_divisor(const std::string& id) const;
    const Stratum* find_stratum(const std::vector<std::string>& ids) const;
};

struct Violation {
    std::string code;
    std::string detail;
};

/// Structural checks; an empty list means the data is usable. Violations
/// are data, not exceptions.
std::vector<Violation> validate(const ResolutionData& r);

/// Naive zeta function from resolution data: one term per stratum with
/// nonzero beta, coefficient (u-1)^{|I|} * beta and one block (nu_i, N_i)
/// per divisor in I. Throws InvalidData when validate() reports problems.
ZetaClosedForm zeta_from_resolution(const ResolutionData& r);

/// Sign zeta function: coefficient (u-1)^{|I|-1} * cover_sign with the
/// same blocks. Strata with nonzero beta must carry cover data
/// (MissingCoverData names the offending stratum).
ZetaClosedForm sign_zeta_from_resolution(const ResolutionData& r, Sign sign);

/// Lossless JSON round trip (see README for the schema).
std::string to_json(const ResolutionData& r);
ResolutionData resolution_from_json(const std::string& text);
ResolutionData load_resolution(const std::string& path);
void save_resolution(const ResolutionData& r, const std::string& path);

} // namespace mzeta

#endif
