#include "membrane/automaton.hpp"

#include "membrane/errors.hpp"

namespace membrane {

namespace {

bool key_in_region(const std::string& key, const std::string& prefix) {
    return !prefix.empty() && key.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

bool ActionSpec::boundary_relevant(const std::string& caps_prefix,
                                   const std::string& tools_prefix) const {
    for (const auto& op : delta) {
        switch (op.kind) {
            case DeltaOp::Kind::SetExternal:
            case DeltaOp::Kind::AppendOutbox:
            case DeltaOp::Kind::SetWorldObs:
            case DeltaOp::Kind::AppendCommit:
            case DeltaOp::Kind::AddVertex:
            case DeltaOp::Kind::AddEdge:
            case DeltaOp::Kind::RemoveEdge:
            case DeltaOp::Kind::SetProfile:
                return true;
            case DeltaOp::Kind::SetInternal:
            case DeltaOp::Kind::EraseInternal:
                if (key_in_region(op.key, caps_prefix) || key_in_region(op.key, tools_prefix)) {
                    return true;
                }
                break;
            default:
                break;
        }
    }
    return false;
}

const AutomatonNode& ScenarioAutomaton::node(const NodeId& id) const {
    auto it = node_index.find(id);
    if (it == node_index.end()) {
        throw ConfigError("automaton: unknown node '" + id + "'");
    }
    return nodes[it->second];
}

const ActionSpec* ScenarioAutomaton::find_action(const NodeId& node_id, const ActionId& act) const {
    for (const auto& a : node(node_id).actions) {
        if (a.id == act) return &a;
    }
    return nullptr;
}

bool ScenarioAutomaton::admissible(const std::string& policy_version, const ActionId& act) const {
    auto it = policy_admits.find(policy_version);
    if (it == policy_admits.end()) {
        throw ConfigError("automaton: no admissibility guard declared for policy version '" +
                          policy_version + "'");
    }
    return it->second.count(act) > 0;
}

TraceSymbol ScenarioAutomaton::symbol_for(const std::string& policy_version,
                                          const std::string& channel) const {
    auto pit = encodings.find(policy_version);
    if (pit == encodings.end()) {
        throw ConfigError("automaton: no canonical encoding declared for policy version '" +
                          policy_version + "'");
    }
    auto cit = pit->second.find(channel);
    if (cit == pit->second.end()) {
        throw ConfigError("automaton: policy version '" + policy_version +
                          "' has no canonical encoding for channel '" + channel + "'");
    }
    return cit->second;
}

void ScenarioAutomaton::validate(const std::string& where) const {
    if (nodes.empty()) {
        throw ConfigError(where + ".nodes: automaton has no nodes");
    }
    if (!node_index.count(initial)) {
        throw ConfigError(where + ".initial: unknown node '" + initial + "'");
    }
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        const auto& node = nodes[n];
        const std::string npath = where + ".nodes[" + std::to_string(n) + "]";
        std::set<ActionId> seen;
        for (std::size_t a = 0; a < node.actions.size(); ++a) {
            const auto& act = node.actions[a];
            const std::string apath = npath + ".actions[" + std::to_string(a) + "]";
            if (!seen.insert(act.id).second) {
                throw ConfigError(apath + ".id: duplicate action '" + act.id + "'");
            }
            if (act.branches.empty()) {
                throw ConfigError(apath + ".branches: at least one environment branch is required");
            }
            Rational total = 0;
            for (std::size_t b = 0; b < act.branches.size(); ++b) {
                const auto& br = act.branches[b];
                const std::string bpath = apath + ".branches[" + std::to_string(b) + "]";
                if (br.probability <= 0) {
                    throw ConfigError(bpath + ".p: branch probabilities must be positive");
                }
                if (!node_index.count(br.to)) {
                    throw ConfigError(bpath + ".to: unknown node '" + br.to + "'");
                }
                total += br.probability;
            }
            if (total != 1) {
                throw ConfigError(apath + ".branches: probabilities sum to " + total.str() +
                                  ", expected exactly 1");
            }
        }
    }
    // Guards must be total over declared policy versions.
    for (const auto& [version, admitted] : policy_admits) {
        for (const auto& act_id : admitted) {
            bool found = false;
            for (const auto& node : nodes) {
                for (const auto& act : node.actions) {
                    if (act.id == act_id) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) {
                throw ConfigError(where + ".policies['" + version + "'].admits: unknown action '" +
                                  act_id + "'");
            }
        }
    }
}

}  // namespace membrane
