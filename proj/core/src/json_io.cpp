#include "vdb/json_io.hpp"

namespace vdb {

using nlohmann::json;

std::string encode_mask(std::uint64_t mask) {
    char buf[19] = "0x";
    int pos = 2;
    bool started = false;
    for (int shift = 60; shift >= 0; shift -= 4) {
        const int digit = static_cast<int>((mask >> shift) & 0xf);
        if (digit != 0) started = true;
        if (started) buf[pos++] = "0123456789abcdef"[digit];
    }
    if (!started) buf[pos++] = '0';
    return std::string(buf, pos);
}

namespace {

json masks_to_json(const std::vector<std::uint64_t>& masks) {
    json arr = json::array();
    for (std::uint64_t m : masks) arr.push_back(encode_mask(m));
    return arr;
}

}  // namespace

json to_json(const PhiSpec& spec) {
    json j;
    j["family"] = spec.family_name();
    if (spec.has_alpha()) j["alpha"] = spec.alpha();
    return j;
}

json to_json(const DegreeSpectrum& s) {
    json j;
    j["n"] = s.n;
    j["arc_count"] = s.arc_count;
    json a = json::array();
    for (const auto& [pair, count] : s.a)
        a.push_back({{"i", pair.first}, {"j", pair.second}, {"count", count}});
    j["a"] = std::move(a);
    json p = json::array();
    for (const auto& [pair, count] : s.p)
        p.push_back({{"i", pair.first}, {"j", pair.second}, {"count", count}});
    j["p"] = std::move(p);
    json roles = json::array();
    for (const auto& [degree, count] : s.n_class)
        roles.push_back({{"degree", degree}, {"count", count}});
    j["n_class"] = std::move(roles);
    return j;
}

json to_json(const HypothesisReport& r) {
    json j;
    j["theorem"] = theorem_name(r.theorem);
    j["n"] = r.n;
    j["spec"] = to_json(r.spec);
    j["holds"] = r.holds;
    json v = json::array();
    for (const HypothesisViolation& viol : r.violations)
        v.push_back({{"i", viol.i}, {"j", viol.j}, {"phi", viol.phi},
                     {"threshold", viol.threshold}});
    j["violations"] = std::move(v);
    if (r.diagonal_ok) j["diagonal_ok"] = *r.diagonal_ok;
    return j;
}

json to_json(const BoundStatement& st) {
    json j;
    j["id"] = st.id;
    j["direction"] = st.direction == BoundDirection::Lower ? "lower" : "upper";
    j["spec"] = to_json(st.spec);
    j["n"] = st.n;
    j["bound_value"] = st.bound_value;
    j["applicability"] = st.applicability;
    j["equality_class"] = equality_class_name(st.equality_class);
    j["gating_theorem"] = theorem_name(st.gating_theorem);
    return j;
}

json to_json(const ExtremalReport& r) {
    json j;
    j["n"] = r.n;
    j["spec"] = to_json(r.spec);
    j["direction"] = search_direction_name(r.direction);
    j["extremal_value"] = r.extremal_value;
    j["attaining"] = masks_to_json(r.attaining);
    j["enumerated_count"] = r.enumerated_count;
    j["tie_tolerance"] = r.tie_tolerance;
    return j;
}

json to_json(const VerificationOutcome& o) {
    json j;
    j["statement"] = to_json(o.statement);
    j["observed_extremal"] = o.observed_extremal;
    j["bound_respected"] = o.bound_respected;
    j["tight"] = o.tight;
    j["equality_set_matches"] = o.equality_set_matches;
    j["counterexamples"] = masks_to_json(o.counterexamples);
    return j;
}

}  // namespace vdb
