#include "membrane/policy.hpp"

#include <algorithm>

#include "membrane/errors.hpp"

namespace membrane {

const char* to_string(Decision d) {
    switch (d) {
        case Decision::Allow: return "ALLOW";
        case Decision::Reject: return "REJECT";
        case Decision::Quarantine: return "QUARANTINE";
    }
    return "?";
}

std::optional<Decision> decision_from_string(const std::string& s) {
    if (s == "ALLOW") return Decision::Allow;
    if (s == "REJECT") return Decision::Reject;
    if (s == "QUARANTINE") return Decision::Quarantine;
    return std::nullopt;
}

void Policy::validate(const RiskModel& risk, const ChannelTable& channels,
                      const std::string& where) const {
    if (version.empty()) {
        throw ConfigError(where + ".version: policy version must be non-empty");
    }
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& rule = rules[i];
        const std::string path = where + ".rules[" + std::to_string(i) + "]";
        if (rule.channel_pattern != "*" && !channels.known(rule.channel_pattern)) {
            throw ConfigError(path + ".channel: unknown channel pattern '" + rule.channel_pattern +
                              "'");
        }
        if (!risk.has_class(rule.max_risk_class)) {
            throw ConfigError(path + ".max_risk: unknown risk class '" + rule.max_risk_class + "'");
        }
        if (rule.budget_floor < 0) {
            throw ConfigError(path + ".budget_floor: must be >= 0");
        }
    }
}

namespace {

std::vector<std::uint8_t> context_blob(const std::string& channel, const std::string& payload,
                                       const std::vector<std::string>& sorted_caps,
                                       std::int64_t budget, const std::string& policy_version) {
    ByteWriter w;
    w.str(channel);
    w.str(payload);
    w.u64be(sorted_caps.size());
    for (const auto& c : sorted_caps) w.str(c);
    w.i64be(budget);
    w.str(policy_version);
    return w.take();
}

}  // namespace

MediationRequest make_mediation_request(const ActionId& act, const std::string& channel,
                                        const std::string& payload,
                                        std::vector<std::string> caps_snapshot,
                                        std::int64_t budget_snapshot,
                                        const std::string& policy_version, const RiskModel& risk,
                                        const ChannelTable& channels) {
    MediationRequest req;
    req.act = act;
    req.channel = channel;
    req.canonical_channel = to_string(channels.parent(channel));
    req.risk_class_index = risk.label(channel, channels);
    req.payload = payload;
    std::sort(caps_snapshot.begin(), caps_snapshot.end());
    req.caps_snapshot = std::move(caps_snapshot);
    req.budget_snapshot = budget_snapshot;
    req.policy_version = policy_version;
    req.ctx_blob =
        context_blob(channel, payload, req.caps_snapshot, budget_snapshot, policy_version);
    req.ctx_abs = sha256(req.ctx_blob);
    return req;
}

MediationRequest request_from_context(const ActionId& act,
                                      const std::vector<std::uint8_t>& ctx_blob,
                                      const Digest& expected_ctx_abs, const RiskModel& risk,
                                      const ChannelTable& channels) {
    if (sha256(ctx_blob) != expected_ctx_abs) {
        throw Error("context abstraction does not reproduce its recorded digest");
    }
    ByteReader r(ctx_blob);
    const std::string channel = r.str();
    const std::string payload = r.str();
    const std::uint64_t n = r.u64be();
    std::vector<std::string> caps;
    caps.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) caps.push_back(r.str());
    const std::int64_t budget = r.i64be();
    const std::string version = r.str();
    return make_mediation_request(act, channel, payload, std::move(caps), budget, version, risk,
                                  channels);
}

Decision adjudicate(const MediationRequest& request, const Policy& policy,
                    const RiskModel& risk) {
    for (const auto& rule : policy.rules) {
        const bool channel_matches = rule.channel_pattern == "*" ||
                                     rule.channel_pattern == request.channel ||
                                     rule.channel_pattern == request.canonical_channel;
        if (!channel_matches) continue;
        const bool caps_ok =
            std::all_of(rule.required_caps.begin(), rule.required_caps.end(),
                        [&](const std::string& cap) {
                            return std::binary_search(request.caps_snapshot.begin(),
                                                      request.caps_snapshot.end(), cap);
                        });
        if (!caps_ok) continue;
        if (request.budget_snapshot < rule.budget_floor) continue;
        if (request.risk_class_index <= risk.class_index(rule.max_risk_class)) {
            return rule.decision;
        }
        if (rule.on_excess_risk) {
            return *rule.on_excess_risk;
        }
        // risk ceiling exceeded with no excess mapping: try later rules
    }
    return policy.default_decision;
}

}  // namespace membrane
