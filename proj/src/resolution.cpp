#include "mzeta/resolution.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mzeta/errors.hpp"

namespace mzeta {

using ordered_json = nlohmann::ordered_json;

const Divisor* ResolutionData::find_divisor(const std::string& id) const {
    for (const auto& d : divisors)
        if (d.id == id) return &d;
    return nullptr;
}

const Stratum* ResolutionData::find_stratum(const std::vector<std::string>& ids) const {
    std::vector<std::string> key = ids;
    std::sort(key.begin(), key.end());
    for (const auto& s : strata)
        if (s.divisor_ids == key) return &s;
    return nullptr;
}

std::vector<Violation> validate(const ResolutionData& r) {
    std::vector<Violation> out;
    if (r.dim < 1) out.push_back({"BadDimension", "dimension must be >= 1"});

    std::set<std::string> ids;
    bool any_exceptional = false;
    for (const auto& d : r.divisors) {
        if (!ids.insert(d.id).second) out.push_back({"DuplicateDivisor", d.id});
        if (d.N < 1) out.push_back({"BadMultiplicity", d.id + ": N must be >= 1"});
        if (d.nu < 1) out.push_back({"BadMultiplicity", d.id + ": nu must be >= 1"});
        if (d.exceptional) any_exceptional = true;
    }
    if (!any_exceptional) out.push_back({"NoExceptional", "no divisor lies over the origin"});

    std::set<std::vector<std::string>> seen;
    std::set<std::string> singleton_present;
    for (const auto& s : r.strata) {
        if (s.divisor_ids.empty()) {
            out.push_back({"EmptyStratum", "stratum with empty divisor set"});
            continue;
        }
        std::vector<std::string> key = s.divisor_ids;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
            out.push_back({"DuplicateDivisorInStratum", key.front()});
        if (!seen.insert(key).second) {
            std::string joined;
            for (const auto& i : key) joined += (joined.empty() ? "" : ",") + i;
            out.push_back({"DuplicateStratum", joined});
        }
        for (const auto& id : key)
            if (!ids.count(id)) out.push_back({"UnknownDivisor", id});
        if (static_cast<int>(key.size()) > r.dim)
            out.push_back({"TooManyDivisors",
                           "stratum of " + std::to_string(key.size()) +
                               " divisors exceeds the normal crossings bound"});
        if (key.size() == 1) singleton_present.insert(key.front());
        if (s.cover_plus.has_value() != s.cover_minus.has_value())
            out.push_back({"HalfCoverData", key.front()});
    }
    for (const auto& d : r.divisors)
        if (d.exceptional && !singleton_present.count(d.id))
            out.push_back({"MissingSingleton", d.id});
    return out;
}

namespace {

std::string joined_ids(const Stratum& s) {
    std::string joined;
    for (const auto& i : s.divisor_ids) joined += (joined.empty() ? "" : ",") + i;
    return joined;
}

std::vector<RationalBlock> stratum_blocks(const ResolutionData& r, const Stratum& s) {
    std::vector<RationalBlock> blocks;
    for (const auto& id : s.divisor_ids) {
        const Divisor* d = r.find_divisor(id);
        blocks.push_back(RationalBlock{d->nu, d->N});
    }
    return blocks;
}

void require_valid(const ResolutionData& r) {
    auto violations = validate(r);
    if (!violations.empty()) {
        std::string msg;
        for (const auto& v : violations) {
            if (!msg.empty()) msg += "; ";
            msg += v.code + " (" + v.detail + ")";
        }
        throw InvalidDataError(msg);
    }
}

} // namespace

ZetaClosedForm zeta_from_resolution(const ResolutionData& r) {
    require_valid(r);
    ZetaClosedForm form;
    for (const auto& s : r.strata) {
        if (s.beta.is_zero()) continue;
        LaurentPoly coeff =
            pow(LaurentPoly::u_minus_one(), static_cast<unsigned>(s.divisor_ids.size())) * s.beta;
        form.add_term(std::move(coeff), stratum_blocks(r, s));
    }
    return form;
}

ZetaClosedForm sign_zeta_from_resolution(const ResolutionData& r, Sign sign) {
    require_valid(r);
    ZetaClosedForm form;
    for (const auto& s : r.strata) {
        if (!s.cover_plus.has_value()) {
            if (s.beta.is_zero()) continue; // empty stratum, empty cover
            throw MissingCoverDataError(joined_ids(s));
        }
        const LaurentPoly& cover = sign == Sign::Plus ? *s.cover_plus : *s.cover_minus;
        if (cover.is_zero()) continue;
        LaurentPoly coeff =
            pow(LaurentPoly::u_minus_one(), static_cast<unsigned>(s.divisor_ids.size()) - 1) *
            cover;
        form.add_term(std::move(coeff), stratum_blocks(r, s));
    }
    return form;
}

namespace {

ordered_json laurent_to_json(const LaurentPoly& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& [e, c] : p.to_pairs()) arr.push_back(ordered_json::array({e, c}));
    return arr;
}

LaurentPoly laurent_from_json(const ordered_json& j) {
    if (!j.is_array()) throw InvalidDataError("Laurent polynomial must be an array of pairs");
    std::vector<std::pair<int, std::string>> pairs;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw InvalidDataError("Laurent term must be an [exponent, coefficient] pair");
        int e = item[0].get<int>();
        std::string c =
            item[1].is_string() ? item[1].get<std::string>() : item[1].dump();
        pairs.emplace_back(e, c);
    }
    return LaurentPoly::from_pairs(pairs);
}

} // namespace

std::string to_json(const ResolutionData& r) {
    ordered_json j;
    j["d"] = r.dim;
    j["divisors"] = ordered_json::array();
    for (const auto& d : r.divisors) {
        ordered_json jd;
        jd["id"] = d.id;
        jd["N"] = d.N;
        jd["nu"] = d.nu;
        jd["exceptional"] = d.exceptional;
        j["divisors"].push_back(std::move(jd));
    }
    j["strata"] = ordered_json::array();
    for (const auto& s : r.strata) {
        ordered_json js;
        js["I"] = s.divisor_ids;
        js["beta"] = laurent_to_json(s.beta);
        if (s.cover_plus) {
            js["cover_plus"] = laurent_to_json(*s.cover_plus);
            js["cover_minus"] = laurent_to_json(*s.cover_minus);
        }
        j["strata"].push_back(std::move(js));
    }
    j["note"] = r.note;
    return j.dump(2) + "\n";
}

ResolutionData resolution_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidDataError(std::string("malformed JSON: ") + e.what());
    }
    ResolutionData r;
    try {
        r.dim = j.at("d").get<int>();
        for (const auto& jd : j.at("divisors")) {
            Divisor d;
            d.id = jd.at("id").get<std::string>();
            d.N = jd.at("N").get<long long>();
            d.nu = jd.at("nu").get<long long>();
            d.exceptional = jd.at("exceptional").get<bool>();
            r.divisors.push_back(std::move(d));
        }
        for (const auto& js : j.at("strata")) {
            Stratum s;
            s.divisor_ids = js.at("I").get<std::vector<std::string>>();
            std::sort(s.divisor_ids.begin(), s.divisor_ids.end());
            s.beta = laurent_from_json(js.at("beta"));
            if (js.contains("cover_plus") || js.contains("cover_minus")) {
                if (js.contains("cover_plus")) s.cover_plus = laurent_from_json(js["cover_plus"]);
                if (js.contains("cover_minus"))
                    s.cover_minus = laurent_from_json(js["cover_minus"]);
            }
            r.strata.push_back(std::move(s));
        }
        if (j.contains("note")) r.note = j["note"].get<std::string>();
    } catch (const InvalidDataError&) {
        throw;
    } catch (const std::exception& e) {
        throw InvalidDataError(std::string("bad resolution data: ") + e.what());
    }
    return r;
}

ResolutionData load_resolution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidDataError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return resolution_from_json(buf.str());
}

void save_resolution(const ResolutionData& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidDataError("cannot write '" + path + "'");
    out << to_json(r);
}

} // namespace mzeta
