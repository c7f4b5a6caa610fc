#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "membrane/rational.hpp"
#include "membrane/risk.hpp"

namespace membrane {

// Typed authority graph used by the non-normative proxy diagnostic. Vertices
// carry a risk class, a trust attenuation factor and a validity factor, both
// in [0,1].
struct CapabilityVertex {
    std::string id;
    std::string risk_class;
    Rational trust = 1;     // χ
    Rational validity = 1;  // ν
};

struct CapabilityGraph {
    std::vector<CapabilityVertex> vertices;
    std::set<std::pair<std::string, std::string>> edges;
    std::set<std::string> roots;  // current authority configuration

    void validate(const RiskModel& risk, const std::string& where) const;
};

// Class-weighted, trust- and validity-attenuated mass of all vertices within
// hop_limit directed hops of the roots (roots at hop 0). Diagnostic only; no
// invariance guarantee is claimed.
Rational proxy_reach_measure(const CapabilityGraph& graph, std::uint32_t hop_limit,
                             const RiskModel& risk);

}  // namespace membrane
