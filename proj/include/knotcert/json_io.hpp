#pragma once

// JSON renderings of the documented interchange schemas:
//   diagram: {"crossings":[[a,b,c,d],...],"free_loops":k}
//   marked:  {"diagram":<diagram>,"site":{"s1":int,"s2":int,"side":"A"|"B"}}
//   poly:    [{"num":c,"exp_quarters":e},...] ascending by exponent
//   verdict: {"outcome","lhs","rhs","delta_w","triviality_check"}
// Coefficients that fit in 64 bits serialize as JSON numbers, larger ones as
// decimal strings.

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "knotcert/certify.hpp"
#include "knotcert/diagram.hpp"
#include "knotcert/laurent.hpp"
#include "knotcert/moves.hpp"

namespace knotcert {

inline nlohmann::json to_json(const Diagram& d) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& x : d.crossings()) cs.push_back({x[0], x[1], x[2], x[3]});
    return {{"crossings", cs}, {"free_loops", d.free_loops()}};
}

inline Diagram diagram_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("crossings"))
        throw DiagramError("diagram JSON: expected object with \"crossings\"");
    std::vector<Diagram::Crossing> cs;
    for (const auto& row : j.at("crossings")) {
        if (!row.is_array() || row.size() != 4)
            throw DiagramError("diagram JSON: each crossing must be a 4-tuple");
        cs.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                      row[3].get<int>()});
    }
    int loops = j.value("free_loops", 0);
    return Diagram(std::move(cs), loops);
}

inline nlohmann::json to_json(const MarkedDiagram& md) {
    return {{"diagram", to_json(md.diagram)},
            {"site",
             {{"s1", md.s1}, {"s2", md.s2}, {"side", std::string(1, md.side)}}}};
}

inline MarkedDiagram marked_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("diagram") || !j.contains("site"))
        throw DiagramError("marked-diagram JSON: expected \"diagram\" and \"site\"");
    const auto& site = j.at("site");
    std::string side = site.value("side", "A");
    if (side.size() != 1) throw DiagramError("marked-diagram JSON: bad side flag");
    return MarkedDiagram{diagram_from_json(j.at("diagram")), site.at("s1").get<int>(),
                         site.at("s2").get<int>(), side[0]};
}

inline nlohmann::json to_json(const Laurent& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json term;
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max())
            term["num"] = static_cast<std::int64_t>(c);
        else
            term["num"] = c.str();
        term["exp_quarters"] = e;
        out.push_back(term);
    }
    return out;
}

inline nlohmann::json to_json(const Verdict& v) {
    return {{"outcome",
             v.outcome == Verdict::Outcome::Distinguished ? "distinguished" : "inconclusive"},
            {"lhs", to_json(v.lhs)},
            {"rhs", to_json(v.rhs)},
            {"delta_w", v.delta_w},
            {"triviality_check", v.triviality_check}};
}

}  // namespace knotcert
