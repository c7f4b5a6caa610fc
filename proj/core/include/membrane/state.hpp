#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "membrane/digest.hpp"
#include "membrane/rational.hpp"
#include "membrane/value.hpp"

namespace membrane {

using ActionId = std::string;
using RuntimeId = std::string;

// Runtime population and delegation/communication structure. Vertices are
// drawn from the active population; edges connect active vertices.
struct TopologyGraph {
    std::set<RuntimeId> population;                          // N
    std::set<RuntimeId> vertices;                            // V ⊆ N
    std::set<std::pair<RuntimeId, RuntimeId>> edges;         // E ⊆ V × V
    bool allow_self_delegation = false;

    bool operator==(const TopologyGraph&) const = default;

    // Throws ConfigError naming `where` on a structural violation.
    void validate(const std::string& where) const;
};

// One received or emitted boundary message, append-ordered by step.
struct BoundaryMessage {
    std::uint64_t step = 0;
    std::string channel;
    std::string payload;

    bool operator==(const BoundaryMessage&) const = default;
    auto operator<=>(const BoundaryMessage&) const = default;
};

struct CommitEntry {
    std::uint64_t step = 0;
    std::string act;
    std::string note;

    bool operator==(const CommitEntry&) const = default;
};

// The boundary-observable slice of institution state: what hook generation,
// commit classification and continuation accounting may see. Distinct full
// states may share a projection.
struct ExternalProjection {
    std::vector<BoundaryMessage> inbox;
    std::vector<BoundaryMessage> outbox;
    std::vector<CommitEntry> commit_ledger;
    Store world_obs;

    bool operator==(const ExternalProjection&) const = default;
};

enum class PolicyUpdateMode : std::uint8_t { Fixed = 0, Versioned = 1 };

struct StrategyClassSpec {
    std::uint32_t memory_bound = 0;  // choice tables condition on the last m visited nodes
    bool deterministic = true;

    bool operator==(const StrategyClassSpec&) const = default;
};

// Declared admissibility profile: strategy class, lookahead horizon, and
// policy-update semantics. All reach claims are relative to one of these.
struct AdmissibilityProfile {
    std::string id;
    std::string policy_version;
    StrategyClassSpec strategy_class;
    std::uint32_t horizon = 1;  // ≥ 1
    PolicyUpdateMode policy_update = PolicyUpdateMode::Fixed;

    bool operator==(const AdmissibilityProfile&) const = default;
};

// Operational approximation profile governing estimator runs and the
// expansion threshold flag.
struct ApproximationProfile {
    std::uint32_t strategy_complexity_bound = 0;  // L
    Rational estimator_tolerance = 0;             // δ, ≥ 0
    Rational expansion_threshold = Rational(1, 100);  // ε, > 0

    void validate(const std::string& where) const;
};

enum class Provenance : std::uint8_t { Exogenous = 0, Stimulated = 1, Endogenous = 2 };

const char* to_string(Provenance p);
std::optional<Provenance> provenance_from_string(const std::string& s);

struct ExternalTaskEntry {
    std::string id;
    Provenance provenance = Provenance::Exogenous;
    std::uint64_t inserted_step = 0;
    std::string trigger_event;

    bool operator==(const ExternalTaskEntry&) const = default;
};

// Internal vs externally accountable tasking. t_ext is append-only within a
// run; internal planning state never implies institutional intent.
struct TaskLayers {
    std::set<std::string> internal_tasks;
    std::vector<ExternalTaskEntry> external_tasks;
};

struct ComponentFlags {
    bool policy_control = false;
    bool stop_control = false;
    bool witness_coverage = false;
    bool membrane_mediated_access = false;
};

enum class Placement : std::uint8_t { Inside = 0, BoundaryCoupled = 1, External = 2 };

const char* to_string(Placement p);

// The six-component institution state plus the transition index. The witness
// ledger itself lives in the ledger module; the state carries only its length
// and head hash so core equality can visibly exclude append-only growth.
struct InstitutionState {
    Store internal_store;          // artifact/plan entries; caps/tools regions live here
    Store external_store;          // externally effective world state
    std::uint64_t ledger_len = 0;
    Digest ledger_head = kZeroDigest;
    std::int64_t budget = 0;       // ≥ 0
    TopologyGraph topology;
    std::string profile_id;        // active admissibility profile
    std::uint64_t step = 0;        // discrete transition index
    ExternalProjection boundary;

    bool operator==(const InstitutionState&) const = default;

    void validate(const std::string& where) const;
};

// --- core-state operations ---------------------------------------------------

// Pure selection of the boundary-observable components.
ExternalProjection project_external(const InstitutionState& state);

// Projection-level commit: did the observable boundary change? Every modeled
// transition must be action-labeled; an empty label is rejected.
bool projected_commit(const ActionId& act, const InstitutionState& before,
                      const InstitutionState& after);

// Ontological first-order commit: did the external world store change?
bool external_commit(const ActionId& act, const InstitutionState& before,
                     const InstitutionState& after);

// Policy-only core-state equality. Ledger growth, the active profile and the
// step counter are deliberately excluded.
bool core_equal(const InstitutionState& a, const InstitutionState& b);

// Deployment classification from control guarantees, not reachability.
Placement classify_component(const ComponentFlags& flags);

// Canonical digest of a full state, used to identify states in run logs.
Digest state_digest(const InstitutionState& s);

}  // namespace membrane
