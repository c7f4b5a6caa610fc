#include "membrane/capability_graph.hpp"

#include <deque>

#include "membrane/errors.hpp"

namespace membrane {

void CapabilityGraph::validate(const RiskModel& risk, const std::string& where) const {
    std::set<std::string> ids;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& v = vertices[i];
        const std::string path = where + ".vertices[" + std::to_string(i) + "]";
        if (!ids.insert(v.id).second) {
            throw ConfigError(path + ".id: duplicate vertex '" + v.id + "'");
        }
        if (!risk.has_class(v.risk_class)) {
            throw ConfigError(path + ".class: unknown risk class '" + v.risk_class + "'");
        }
        if (v.trust < 0 || v.trust > 1) {
            throw ConfigError(path + ".trust: must lie in [0, 1]");
        }
        if (v.validity < 0 || v.validity > 1) {
            throw ConfigError(path + ".validity: must lie in [0, 1]");
        }
    }
    for (const auto& [from, to] : edges) {
        if (!ids.count(from) || !ids.count(to)) {
            throw ConfigError(where + ".edges: edge (" + from + ", " + to +
                              ") has an undeclared endpoint");
        }
    }
    for (const auto& r : roots) {
        if (!ids.count(r)) {
            throw ConfigError(where + ".roots: unknown vertex '" + r + "'");
        }
    }
}

Rational proxy_reach_measure(const CapabilityGraph& graph, std::uint32_t hop_limit,
                             const RiskModel& risk) {
    std::map<std::string, const CapabilityVertex*> by_id;
    std::map<std::string, std::vector<std::string>> out_edges;
    for (const auto& v : graph.vertices) by_id[v.id] = &v;
    for (const auto& [from, to] : graph.edges) out_edges[from].push_back(to);

    std::map<std::string, std::uint32_t> hop;
    std::deque<std::string> frontier;
    for (const auto& r : graph.roots) {
        hop[r] = 0;
        frontier.push_back(r);
    }
    while (!frontier.empty()) {
        const std::string v = frontier.front();
        frontier.pop_front();
        const std::uint32_t d = hop[v];
        if (d >= hop_limit) continue;
        for (const auto& succ : out_edges[v]) {
            if (!hop.count(succ)) {
                hop[succ] = d + 1;
                frontier.push_back(succ);
            }
        }
    }

    Rational total = 0;
    for (const auto& [id, _] : hop) {
        const CapabilityVertex* v = by_id.at(id);
        total += risk.class_weight(v->risk_class) * v->trust * v->validity;
    }
    return total;
}

}  // namespace membrane
