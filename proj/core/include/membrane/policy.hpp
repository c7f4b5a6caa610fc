#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "membrane/channel.hpp"
#include "membrane/digest.hpp"
#include "membrane/risk.hpp"
#include "membrane/state.hpp"

namespace membrane {

enum class Decision : std::uint8_t { Allow = 0, Reject = 1, Quarantine = 2 };

const char* to_string(Decision d);
std::optional<Decision> decision_from_string(const std::string& s);

// One first-match rule: channel pattern, risk ceiling, capability and budget
// requirements. A rule whose channel/caps/budget requirements match but whose
// risk ceiling is exceeded yields its excess decision when declared, and
// falls through otherwise.
struct PolicyRule {
    std::string channel_pattern;  // "*", a channel id, or a canonical channel name
    std::string max_risk_class;
    std::vector<std::string> required_caps;
    std::int64_t budget_floor = 0;
    Decision decision = Decision::Reject;
    std::optional<Decision> on_excess_risk;
};

// Membrane adjudication policy: ordered rules with a fail-closed default.
struct Policy {
    std::string version;
    std::vector<PolicyRule> rules;
    Decision default_decision = Decision::Reject;

    void validate(const RiskModel& risk, const ChannelTable& channels,
                  const std::string& where) const;
};

// A boundary-relevant act presented for adjudication, with the context
// abstraction pinned at request time. ctx_blob is the canonical serialization
// of (channel id, event payload, sorted capability keys, budget, policy
// version); ctx_abs is its digest.
struct MediationRequest {
    ActionId act;
    std::string channel;
    std::string canonical_channel;
    std::uint32_t risk_class_index = 0;
    std::string payload;
    std::vector<std::string> caps_snapshot;  // sorted
    std::int64_t budget_snapshot = 0;
    std::string policy_version;
    std::vector<std::uint8_t> ctx_blob;
    Digest ctx_abs = kZeroDigest;
};

MediationRequest make_mediation_request(const ActionId& act, const std::string& channel,
                                        const std::string& payload,
                                        std::vector<std::string> caps_snapshot,
                                        std::int64_t budget_snapshot,
                                        const std::string& policy_version, const RiskModel& risk,
                                        const ChannelTable& channels);

// Rebuilds a request from a stored context abstraction. Throws Error when the
// blob does not reproduce the expected digest.
MediationRequest request_from_context(const ActionId& act,
                                      const std::vector<std::uint8_t>& ctx_blob,
                                      const Digest& expected_ctx_abs, const RiskModel& risk,
                                      const ChannelTable& channels);

// First matching rule wins; no match falls through to the default. The result
// is a deterministic function of (policy version, context abstraction) given a
// fixed risk model, which is what replay relies on.
Decision adjudicate(const MediationRequest& request, const Policy& policy, const RiskModel& risk);

// Everything replay needs: pinned policies plus the declared risk typing.
struct PolicyRegistry {
    std::map<std::string, Policy> policies;
    RiskModel risk;
    ChannelTable channels;

    const Policy* find(const std::string& version) const {
        auto it = policies.find(version);
        return it == policies.end() ? nullptr : &it->second;
    }
};

}  // namespace membrane
