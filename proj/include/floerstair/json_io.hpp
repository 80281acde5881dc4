#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include "json.hpp"

#include "floerstair/errors.hpp"
#include "floerstair/filtered_complex.hpp"
#include "floerstair/invariants.hpp"
#include "floerstair/laurent.hpp"
#include "floerstair/staircase.hpp"

namespace floerstair {

// All documents use ordered_json so field order (and therefore byte output)
// is stable across runs.
using json = nlohmann::ordered_json;

// {"terms": [[exponent, coefficient], ...]} sorted by exponent.
inline json to_json(const laurent_poly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        check_invariant(c >= INT64_MIN && c <= INT64_MAX,
                        "coefficient too large for the JSON schema");
        terms.push_back(json::array({e, static_cast<std::int64_t>(c)}));
    }
    return json{{"terms", std::move(terms)}};
}

inline laurent_poly laurent_from_json(const json& j) {
    laurent_poly p;
    for (const auto& t : j.at("terms"))
        p.add_term(t.at(0).get<std::int64_t>(), coeff_t(t.at(1).get<std::int64_t>()));
    return p;
}

// {"half": [a0, a1, ...]}
inline json to_json(const staircase& s) {
    return json{{"half", s.half()}};
}

inline staircase staircase_from_json(const json& j) {
    return staircase(j.at("half").get<std::vector<std::int64_t>>());
}

// {"terms": [{"half": [...], "coeff": k}, ...]} in canonical key order.
inline json to_json(const stair_sum& s) {
    json terms = json::array();
    for (const auto& [st, k] : s.terms())
        terms.push_back(json{{"half", st.half()}, {"coeff", k}});
    return json{{"terms", std::move(terms)}};
}

inline stair_sum stairsum_from_json(const json& j) {
    stair_sum s;
    for (const auto& t : j.at("terms"))
        s.add(staircase(t.at("half").get<std::vector<std::int64_t>>()),
              t.at("coeff").get<std::int64_t>());
    return s;
}

// {"generators": [{"name", "alexander", "maslov"}, ...], "arrows": [[src, tgt], ...]}
inline json to_json(const filtered_complex& c) {
    json gens = json::array();
    for (const auto& g : c.generators())
        gens.push_back(json{{"name", g.name}, {"alexander", g.alexander}, {"maslov", g.maslov}});
    json arrows = json::array();
    for (const auto& [s, t] : c.arrows())
        arrows.push_back(json::array({s, t}));
    return json{{"generators", std::move(gens)}, {"arrows", std::move(arrows)}};
}

inline filtered_complex complex_from_json(const json& j) {
    std::vector<generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back(generator{g.at("name").get<std::string>(),
                                 g.at("alexander").get<std::int64_t>(),
                                 g.at("maslov").get<std::int64_t>()});
    std::vector<filtered_complex::arrow> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.emplace_back(a.at(0).get<std::int32_t>(), a.at(1).get<std::int32_t>());
    return filtered_complex(std::move(gens), std::move(arrows));
}

// FNV-1a over the canonical dump; used to tie records to their inputs.
inline std::string digest(const json& j) {
    const std::string dump = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : dump) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

inline std::string digest(const filtered_complex& c) { return digest(to_json(c)); }

inline json to_json(const invariant_record& r, const std::string& complex_digest = "") {
    json j{{"tau", r.tau}, {"nu", r.nu}, {"nu_prime", r.nu_prime}, {"epsilon", r.epsilon}};
    if (!complex_digest.empty())
        j["complex_digest"] = complex_digest;
    return j;
}

inline json to_json(const domination_evidence& ev) {
    json verdicts = json::array();
    for (ordering o : ev.verdicts)
        verdicts.push_back(to_string(o));
    json j{{"depth", ev.depth_requested}, {"verdicts", std::move(verdicts)},
           {"all_greater", ev.all_greater()}};
    if (ev.first_failure)
        j["first_failure"] = *ev.first_failure;
    return j;
}

inline json comparison_to_json(ordering relation, const std::string& left_digest,
                               const std::string& right_digest) {
    return json{{"relation", to_string(relation)},
                {"left_digest", left_digest},
                {"right_digest", right_digest}};
}

}  // namespace floerstair
