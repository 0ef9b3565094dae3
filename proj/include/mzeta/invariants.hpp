#ifndef MZETA_INVARIANTS_HPP
#define MZETA_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mzeta/series.hpp"

namespace mzeta {

/// The extracted comparison invariants of a germ: the u = -1 evaluations
/// of all three zeta series, the value and u-derivative of Z/(u-1) at
/// u = 1 (the latter mod 2), and the value and u-derivative of the sign
/// series at u = 1 (the latter mod 2). Sign entries are absent when no
/// sign series was computable.
struct InvariantProfile {
    int order = 0;
    IntSeries kp_naive;
    IntSeries z1;
    Mod2Series z2_mod2;
    bool sign_present = false;
    IntSeries kp_plus, kp_minus;
    IntSeries z0_plus, z0_minus;
    Mod2Series z1_plus_mod2, z1_minus_mod2;
};

/// Extract the profile. Z must have (u-1)-divisible coefficients
/// (NotDivisible propagates otherwise); the sign series may be absent.
InvariantProfile profile(const ZetaSeries& naive, const std::optional<ZetaSeries>& plus,
                         const std::optional<ZetaSeries>& minus);

enum class Verdict { Equal, Distinct, Unknown };

std::string to_string(Verdict v);

struct InvariantVerdict {
    std::string invariant;
    Verdict verdict = Verdict::Unknown;
    int witness_order = 0; // first T-power where the two sides differ
};

/// Per-invariant comparison of two profiles at the same truncation order.
/// `distinguished` is true iff some comparable invariant differs; absent
/// sign data compares as unknown, never as distinct.
struct CompareReport {
    int order = 0;
    std::vector<InvariantVerdict> verdicts;
    bool distinguished = false;

    const InvariantVerdict* witness() const;
};

CompareReport compare(const InvariantProfile& a, const InvariantProfile& b);

/// Partition of a list of germs into classes whose profiles are pairwise
/// indistinguishable at the given order. Entries that no pipeline could
/// compute are reported separately, never grouped.
struct Classification {
    int order = 0;
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> classes; // indices into names
    struct Pair {
        std::size_t a = 0, b = 0;
        Verdict verdict = Verdict::Unknown;
        std::string witness_invariant;
        int witness_order = 0;
    };
    std::vector<Pair> pairs; // every comparable pair, row-major a < b
    std::vector<std::pair<std::size_t, std::string>> failures; // index, error
};

Classification classify_profiles(const std::vector<std::string>& names,
                                 const std::vector<std::optional<InvariantProfile>>& profiles,
                                 const std::vector<std::string>& errors);

} // namespace mzeta

#endif
