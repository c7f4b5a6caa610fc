#include "membrane/state.hpp"

#include "membrane/errors.hpp"

namespace membrane {

void TopologyGraph::validate(const std::string& where) const {
    for (const auto& v : vertices) {
        if (!population.count(v)) {
            throw ConfigError(where + ": vertex '" + v + "' is not in the active population");
        }
    }
    for (const auto& [from, to] : edges) {
        if (!vertices.count(from) || !vertices.count(to)) {
            throw ConfigError(where + ": edge (" + from + ", " + to +
                              ") has an endpoint outside the vertex set");
        }
        if (from == to && !allow_self_delegation) {
            throw ConfigError(where + ": self-delegation edge on '" + from +
                              "' but the scenario does not declare self-delegation");
        }
    }
}

void ApproximationProfile::validate(const std::string& where) const {
    if (expansion_threshold <= 0) {
        throw ConfigError(where + ".expansion_threshold: must be > 0");
    }
    if (estimator_tolerance < 0) {
        throw ConfigError(where + ".estimator_tolerance: must be >= 0");
    }
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Exogenous: return "EXOGENOUS";
        case Provenance::Stimulated: return "STIMULATED";
        case Provenance::Endogenous: return "ENDOGENOUS";
    }
    return "?";
}

std::optional<Provenance> provenance_from_string(const std::string& s) {
    if (s == "EXOGENOUS") return Provenance::Exogenous;
    if (s == "STIMULATED") return Provenance::Stimulated;
    if (s == "ENDOGENOUS") return Provenance::Endogenous;
    return std::nullopt;
}

const char* to_string(Placement p) {
    switch (p) {
        case Placement::Inside: return "INSIDE";
        case Placement::BoundaryCoupled: return "BOUNDARY_COUPLED";
        case Placement::External: return "EXTERNAL";
    }
    return "?";
}

void InstitutionState::validate(const std::string& where) const {
    if (budget < 0) {
        throw ConfigError(where + ".budget: must be >= 0");
    }
    topology.validate(where + ".topology");
}

ExternalProjection project_external(const InstitutionState& state) { return state.boundary; }

bool projected_commit(const ActionId& act, const InstitutionState& before,
                      const InstitutionState& after) {
    if (act.empty()) {
        throw Error("projected_commit: unlabeled transition (every transition carries an action label)");
    }
    return !(project_external(before) == project_external(after));
}

bool external_commit(const ActionId& act, const InstitutionState& before,
                     const InstitutionState& after) {
    if (act.empty()) {
        throw Error("external_commit: unlabeled transition (every transition carries an action label)");
    }
    return before.external_store != after.external_store;
}

bool core_equal(const InstitutionState& a, const InstitutionState& b) {
    return a.internal_store == b.internal_store && a.external_store == b.external_store &&
           a.budget == b.budget && a.topology == b.topology;
}

Placement classify_component(const ComponentFlags& flags) {
    const bool inside = flags.policy_control && flags.stop_control && flags.witness_coverage;
    if (inside) return Placement::Inside;
    if (flags.membrane_mediated_access) return Placement::BoundaryCoupled;
    return Placement::External;
}

namespace {

void write_messages(ByteWriter& w, const std::vector<BoundaryMessage>& msgs) {
    w.u64be(msgs.size());
    for (const auto& m : msgs) {
        w.u64be(m.step);
        w.str(m.channel);
        w.str(m.payload);
    }
}

void write_commits(ByteWriter& w, const std::vector<CommitEntry>& entries) {
    w.u64be(entries.size());
    for (const auto& e : entries) {
        w.u64be(e.step);
        w.str(e.act);
        w.str(e.note);
    }
}

}  // namespace

Digest state_digest(const InstitutionState& s) {
    ByteWriter w;
    write_store(w, s.internal_store);
    write_store(w, s.external_store);
    w.u64be(s.ledger_len);
    w.digest(s.ledger_head);
    w.i64be(s.budget);
    w.u64be(s.topology.population.size());
    for (const auto& n : s.topology.population) w.str(n);
    w.u64be(s.topology.vertices.size());
    for (const auto& v : s.topology.vertices) w.str(v);
    w.u64be(s.topology.edges.size());
    for (const auto& [a, b] : s.topology.edges) {
        w.str(a);
        w.str(b);
    }
    w.str(s.profile_id);
    w.u64be(s.step);
    write_messages(w, s.boundary.inbox);
    write_messages(w, s.boundary.outbox);
    write_commits(w, s.boundary.commit_ledger);
    write_store(w, s.boundary.world_obs);
    return sha256(w.data());
}

}  // namespace membrane
