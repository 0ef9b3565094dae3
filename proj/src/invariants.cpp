#include "mzeta/invariants.hpp"

#include "mzeta/errors.hpp"

namespace mzeta {

InvariantProfile profile(const ZetaSeries& naive, const std::optional<ZetaSeries>& plus,
                         const std::optional<ZetaSeries>& minus) {
    if (plus.has_value() != minus.has_value())
        throw Error("InvalidProfileInput", "either both sign series or neither");
    if (plus && (plus->order() != naive.order() || minus->order() != naive.order()))
        throw OrderMismatchError("sign series order differs from the naive series");

    InvariantProfile p;
    p.order = naive.order();
    ZetaSeries quotient = div_u_minus_1(naive);
    p.kp_naive = eval_u(naive, -1);
    p.z1 = eval_u(quotient, 1);
    p.z2_mod2 = mod2(eval_u(deriv_u(quotient), 1));
    if (plus) {
        p.sign_present = true;
        p.kp_plus = eval_u(*plus, -1);
        p.kp_minus = eval_u(*minus, -1);
        p.z0_plus = eval_u(*plus, 1);
        p.z0_minus = eval_u(*minus, 1);
        p.z1_plus_mod2 = mod2(eval_u(deriv_u(*plus), 1));
        p.z1_minus_mod2 = mod2(eval_u(deriv_u(*minus), 1));
    }
    return p;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "equal";
        case Verdict::Distinct: return "distinct";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

namespace {

int first_difference(const IntSeries& a, const IntSeries& b) {
    for (int n = 1; n <= a.order; ++n)
        if (a.at(n) != b.at(n)) return n;
    return 0;
}

int first_difference(const Mod2Series& a, const Mod2Series& b) {
    for (int n = 1; n <= a.order; ++n)
        if (a.bits[static_cast<std::size_t>(n - 1)] != b.bits[static_cast<std::size_t>(n - 1)])
            return n;
    return 0;
}

template <typename S>
InvariantVerdict verdict_for(const std::string& name, const S& a, const S& b) {
    int w = first_difference(a, b);
    return {name, w == 0 ? Verdict::Equal : Verdict::Distinct, w};
}

} // namespace

const InvariantVerdict* CompareReport::witness() const {
    for (const auto& v : verdicts)
        if (v.verdict == Verdict::Distinct) return &v;
    return nullptr;
}

CompareReport compare(const InvariantProfile& a, const InvariantProfile& b) {
    if (a.order != b.order)
        throw OrderMismatchError("profiles have different truncation orders");
    CompareReport rep;
    rep.order = a.order;
    rep.verdicts.push_back(verdict_for("z1", a.z1, b.z1));
    rep.verdicts.push_back(verdict_for("z2_mod2", a.z2_mod2, b.z2_mod2));
    rep.verdicts.push_back(verdict_for("kp_naive", a.kp_naive, b.kp_naive));
    if (a.sign_present && b.sign_present) {
        rep.verdicts.push_back(verdict_for("z0_plus", a.z0_plus, b.z0_plus));
        rep.verdicts.push_back(verdict_for("z0_minus", a.z0_minus, b.z0_minus));
        rep.verdicts.push_back(verdict_for("z1_plus_mod2", a.z1_plus_mod2, b.z1_plus_mod2));
        rep.verdicts.push_back(verdict_for("z1_minus_mod2", a.z1_minus_mod2, b.z1_minus_mod2));
        rep.verdicts.push_back(verdict_for("kp_plus", a.kp_plus, b.kp_plus));
        rep.verdicts.push_back(verdict_for("kp_minus", a.kp_minus, b.kp_minus));
    } else {
        for (const char* name : {"z0_plus", "z0_minus", "z1_plus_mod2", "z1_minus_mod2",
                                 "kp_plus", "kp_minus"})
            rep.verdicts.push_back({name, Verdict::Unknown, 0});
    }
    for (const auto& v : rep.verdicts)
        if (v.verdict == Verdict::Distinct) rep.distinguished = true;
    return rep;
}

Classification classify_profiles(const std::vector<std::string>& names,
                                 const std::vector<std::optional<InvariantProfile>>& profiles,
                                 const std::vector<std::string>& errors) {
    Classification cls;
    cls.names = names;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!profiles[i]) cls.failures.emplace_back(i, errors[i]);
    for (const auto& p : profiles)
        if (p) cls.order = p->order;

    // Pairwise reports.
    std::vector<std::vector<const InvariantVerdict*>> witness(
        names.size(), std::vector<const InvariantVerdict*>(names.size(), nullptr));
    std::vector<std::vector<bool>> distinct(names.size(),
                                            std::vector<bool>(names.size(), false));
    std::vector<CompareReport> reports;
    reports.reserve(names.size() * names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            if (!profiles[i] || !profiles[j]) continue;
            reports.push_back(compare(*profiles[i], *profiles[j]));
            const CompareReport& rep = reports.back();
            Classification::Pair pr;
            pr.a = i;
            pr.b = j;
            pr.verdict = rep.distinguished ? Verdict::Distinct : Verdict::Equal;
            if (const InvariantVerdict* w = rep.witness()) {
                pr.witness_invariant = w->invariant;
                pr.witness_order = w->witness_order;
                distinct[i][j] = distinct[j][i] = true;
            }
            cls.pairs.push_back(std::move(pr));
        }

    // Greedy class formation: a germ joins the first class it is
    // indistinguishable from every member of. The verdict is only
    // "indistinguishable at this order", never equivalence.
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!profiles[i]) continue;
        bool placed = false;
        for (auto& cl : cls.classes) {
            bool ok = true;
            for (std::size_t member : cl)
                if (distinct[i][member]) ok = false;
            if (ok) {
                cl.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) cls.classes.push_back({i});
    }
    return cls;
}

} // namespace mzeta
