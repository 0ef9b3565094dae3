#ifndef MZETA_CLOSED_FORM_HPP
#define MZETA_CLOSED_FORM_HPP

#include <string>
#include <vector>

#include "mzeta/series.hpp"

namespace mzeta {

/// One factor u^{-nu} T^N / (1 - u^{-nu} T^N), N >= 1.
struct RationalBlock {
    long long nu = 1;
    long long N = 1;

    friend auto operator<=>(const RationalBlock&, const RationalBlock&) = default;
};

/// coefficient * product of blocks; blocks are a multiset, kept sorted.
struct ClosedTerm {
    LaurentPoly coeff;
    std::vector<RationalBlock> blocks;

    void normalize();
};

/// Finite sum of ClosedTerms; the empty list is the zero function.
/// Terms are never merged into a single fraction: equality is decided by
/// cross-multiplication, expansion by truncated geometric series.
class ZetaClosedForm {
public:
    ZetaClosedForm() = default;

    void add_term(LaurentPoly coeff, std::vector<RationalBlock> blocks);
    const std::vector<ClosedTerm>& terms() const { return terms_; }
    bool is_zero_form() const { return terms_.empty(); }

    friend ZetaClosedForm operator+(const ZetaClosedForm& a, const ZetaClosedForm& b);
    friend ZetaClosedForm operator*(const ZetaClosedForm& a, const ZetaClosedForm& b);

    std::string str() const;

private:
    std::vector<ClosedTerm> terms_;
};

/// Exact truncation of the rational function to order `order`.
ZetaSeries expand(const ZetaClosedForm& closed, int order,
                  SeriesKind kind = SeriesKind::Naive, int dim = 0);

/// True iff a and b agree as rational functions. Both sides are cleared
/// to the common denominator prod (u^nu - T^N)^max-multiplicity and the
/// numerators compared; no gcd is ever computed.
bool closed_equal(const ZetaClosedForm& a, const ZetaClosedForm& b);

} // namespace mzeta

#endif
