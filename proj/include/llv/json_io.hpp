#pragma once

// JSON forms of the domain values. Weights serialize as {"doubled": [...]},
// characters as lists of {"w": [...], "m": ...} with doubled coordinates,
// algebras as "B12" / "D13". All documents carry a "schema" version and are
// emitted with sorted supports so identical values give identical bytes.

#include "json.hpp"

#include "llv/hodge.hpp"
#include "llv/solver.hpp"

namespace llv {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr const char* kEngineVersion = "llv-0.1.0";

inline json weight_to_json(const Weight& w) {
    json j;
    j["doubled"] = w.doubled();
    return j;
}

inline Weight weight_from_json(const json& j) {
    return Weight::from_doubled(j.at("doubled").get<std::vector<int>>());
}

inline json character_to_json(const Character& c) {
    std::vector<std::pair<Weight, int64_t>> entries(c.sup.begin(), c.sup.end());
    std::sort(entries.begin(), entries.end(),
              [&](auto& a, auto& b) { return weight_before(c.alg, a.first, b.first); });
    json terms = json::array();
    for (auto& [w, m] : entries) terms.push_back(json{{"w", w.doubled()}, {"m", m}});
    json j;
    j["schema"] = kSchemaVersion;
    j["algebra"] = c.alg.name();
    j["support"] = std::move(terms);
    return j;
}

inline Character character_from_json(const json& j) {
    Character c(Algebra::parse(j.at("algebra").get<std::string>()));
    for (auto& t : j.at("support"))
        c.add_term(Weight::from_doubled(t.at("w").get<std::vector<int>>()),
                   t.at("m").get<int64_t>());
    return c;
}

inline json decomposition_to_json(const Decomposition& d) {
    json parts = json::array();
    for (auto& [w, m] : d.parts) parts.push_back(json{{"w", w.doubled()}, {"m", m}});
    json j;
    j["schema"] = kSchemaVersion;
    j["algebra"] = d.alg.name();
    j["parts"] = std::move(parts);
    return j;
}

inline Decomposition decomposition_from_json(const json& j) {
    Decomposition d(Algebra::parse(j.at("algebra").get<std::string>()));
    for (auto& t : j.at("parts"))
        d.add(Weight::from_doubled(t.at("w").get<std::vector<int>>()), t.at("m").get<int64_t>());
    d.sort_canonical();
    return d;
}

inline json diamond_to_json(const HodgeDiamond& h) {
    json j;
    j["schema"] = kSchemaVersion;
    j["n"] = h.n;
    j["h"] = h.h;
    return j;
}

inline json betti_to_json(const BettiVector& b) {
    json j;
    j["schema"] = kSchemaVersion;
    j["n"] = b.n;
    j["b"] = b.b;
    return j;
}

inline json poly1_to_json(const Poly1& p) {
    json terms = json::array();
    for (auto& [e, c] : p) terms.push_back(json{{"e", e}, {"c", c}});
    return terms;
}

inline json poly2_to_json(const Poly2& p) {
    json terms = json::array();
    for (auto& [e, c] : p) terms.push_back(json{{"s", e.first}, {"t", e.second}, {"c", c}});
    return terms;
}

inline HKProfile profile_from_json(const json& j) {
    HKProfile p;
    p.n = j.at("n").get<int>();
    p.b2 = j.at("b2").get<int>();
    p.euler = j.at("euler").get<int64_t>();
    p.odd_vanishes = j.value("odd_vanishes", true);
    if (j.contains("known_betti"))
        for (auto& t : j.at("known_betti"))
            p.known_betti.emplace_back(t.at("k").get<int>(), t.at("b").get<int64_t>());
    if (j.contains("hodge_fixture")) {
        HodgeDiamond h(p.n);
        h.h = j.at("hodge_fixture").get<std::vector<std::vector<int64_t>>>();
        if (static_cast<int>(h.h.size()) != 2 * p.n + 1)
            throw precondition_error("hodge_fixture grid must be (2n+1) x (2n+1)");
        p.hodge_fixture = std::move(h);
    }
    return p;
}

inline json candidate_set_to_json(const CandidateSet& cs) {
    json arr = json::array();
    for (auto& c : cs.candidates) {
        json jc;
        jc["decomposition"] = decomposition_to_json(c.dec);
        jc["betti"] = betti_to_json(c.betti);
        jc["salamon"] = c.salamon_ok;
        jc["nagai"] = c.nagai_ok;
        jc["conjecture"] = c.conjecture_ok;
        arr.push_back(std::move(jc));
    }
    json j;
    j["schema"] = kSchemaVersion;
    j["candidates"] = std::move(arr);
    return j;
}

}  // namespace llv
