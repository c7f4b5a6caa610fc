#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "membrane/rational.hpp"
#include "membrane/state.hpp"
#include "membrane/trace.hpp"
#include "membrane/value.hpp"

namespace membrane {

using NodeId = std::string;

// One atomic mutation of institution state. Actions carry an ordered list of
// these; the executor applies them under the membrane's commit point.
struct DeltaOp {
    enum class Kind : std::uint8_t {
        SetInternal,
        EraseInternal,
        SetExternal,
        AppendOutbox,
        SetWorldObs,
        AppendCommit,
        AddVertex,
        AddEdge,
        RemoveEdge,
        SpendBudget,
        AddInternalTask,
        AddExternalTask,
        SetProfile,
    };

    Kind kind{};
    std::string key;        // store key / vertex id / edge source / task id / profile id
    std::string key2;       // edge target
    Value value = std::int64_t{0};
    std::int64_t amount = 0;  // SpendBudget
    Provenance provenance = Provenance::Endogenous;  // AddExternalTask
    std::string payload;    // outbox payload / commit note
};

struct EnvBranch {
    Rational probability;
    NodeId to;
};

// A labeled action available at an automaton node: an optional boundary
// channel emission, state deltas, and stochastic environment branching.
struct ActionSpec {
    ActionId id;
    std::optional<std::string> channel;  // absent = internal action
    std::string payload;                 // event payload presented to the membrane
    bool stimulated = false;             // explicitly authorized boundary self-stimulation
    std::vector<DeltaOp> delta;
    std::vector<EnvBranch> branches;

    // Whether any delta op requires boundary mediation (given the declared
    // caps/tools prefixes).
    bool boundary_relevant(const std::string& caps_prefix, const std::string& tools_prefix) const;
};

struct AutomatonNode {
    NodeId id;
    std::vector<ActionSpec> actions;
};

// Scenario metadata checks from the system-class taxonomy.
struct SystemClassFlags {
    bool open_cybernetic_process = false;
    bool generative_core = false;
    bool autonomous = false;
};

// The executable world: a finite labeled transition system with per-policy
// admissibility guards and per-policy canonical symbol encodings.
struct ScenarioAutomaton {
    std::vector<AutomatonNode> nodes;
    std::map<NodeId, std::size_t> node_index;
    NodeId initial;

    // policy version → ids of actions admissible under that version. Guards
    // are total: every declared version has an entry.
    std::map<std::string, std::set<ActionId>> policy_admits;

    // policy version → channel id → canonical (channel, class) symbol. This is
    // the declared normalization encoding; reach comparisons refuse to run
    // without it.
    std::map<std::string, std::map<std::string, TraceSymbol>> encodings;

    SystemClassFlags class_flags;

    const AutomatonNode& node(const NodeId& id) const;
    const ActionSpec* find_action(const NodeId& node_id, const ActionId& act) const;
    bool admissible(const std::string& policy_version, const ActionId& act) const;
    TraceSymbol symbol_for(const std::string& policy_version, const std::string& channel) const;

    void validate(const std::string& where) const;
};

}  // namespace membrane
