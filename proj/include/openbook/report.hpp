#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include "openbook/braid.hpp"
#include "openbook/openbook.hpp"

#include "vendor/json.hpp"

namespace openbook {

inline constexpr const char* kToolVersion = "0.1.0";

// Canonical statement of every pinned sign and ordering convention.  The
// fingerprint of this string ships in every report, so any convention change
// is externally visible.
inline const std::string& conventions_string() {
    static const std::string s =
        "composition: products act with the rightmost factor first;"
        " pi1 basis: x1 y1 .. xg yg z1 .. z{b-1}, basepoint on boundary component 1;"
        " boundary words: comp1 = prod [xi,yi] z1..z{b-1}, comp 1+j conjugate to zj^-1;"
        " pairing: <xi,yi> = +1;"
        " positive twist on homology: v -> v + <v,c> c;"
        " chain relation: (t_a t_b)^6 = positive boundary twist on genus-1 one-boundary;"
        " braid lift: sigma_i -> positive twist about chain curve c_i;"
        " burau at -1: positive generator block [[2,1],[-1,0]] at rows (i,i+1)";
    return s;
}

inline std::string convention_fingerprint() {
    // FNV-1a, 64-bit.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : conventions_string()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline nlohmann::json report_header() {
    return {{"tool_version", kToolVersion},
            {"convention_fingerprint", convention_fingerprint()}};
}

inline nlohmann::json invariants_json(const ManifoldInvariants& inv) {
    nlohmann::json j;
    j["page_betti"] = inv.page_betti;
    j["manifold_betti"] = inv.manifold_betti;
    j["torsion"] = inv.torsion;
    j["literal_fixed_dim"] = inv.literal_fixed_dim;
    j["readings_differ"] = inv.literal_fixed_dim != inv.manifold_betti;
    return j;
}

inline nlohmann::json report_json(const OpenBook& ob) {
    nlohmann::json j = report_header();
    FactorReport fr = factor_report(ob);
    j.update(invariants_json(fr.inv));
    j["surface"] = {{"genus", ob.page.genus()}, {"boundary", ob.page.boundary_components()}};
    if (!ob.label.empty()) j["label"] = ob.label;
    j["trivial"] = fr.trivial;
    j["s2s1_upper_bound"] = fr.s2s1_upper_bound;
    j["verdict"] = verdict_str(fr.verdict);
    j["certificate"] = fr.certificate;
    return j;
}

inline nlohmann::json unlink_json(const BraidWord& w, const UnlinkReport& r) {
    nlohmann::json j = report_header();
    j.update(invariants_json(r.cover));
    Surface page = braid_cover_page(w.strands);
    j["surface"] = {{"genus", page.genus()}, {"boundary", page.boundary_components()}};
    j["strands"] = w.strands;
    j["braid"] = w.str();
    j["closure_components"] = closure_components(w);
    j["trivial"] = r.may_be_unlink;
    j["verdict"] = r.verdict;
    j["certificate"] = r.certificate;
    return j;
}

}  // namespace openbook
