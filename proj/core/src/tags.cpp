#include "membrane/tags.hpp"

#include "membrane/errors.hpp"

namespace membrane {

TagSet TagSet::from_mask(std::uint8_t m) {
    if (m > 0x07) throw Error("tag set: invalid mask");
    TagSet t;
    t.mask_ = m;
    return t;
}

std::vector<std::string> TagSet::names() const {
    std::vector<std::string> out;
    if (has(EffectTag::First)) out.push_back("FIRST");
    if (has(EffectTag::SecondStructural)) out.push_back("SECOND_T");
    if (has(EffectTag::SecondPolicy)) out.push_back("SECOND_P");
    return out;
}

std::optional<EffectTag> TagSet::tag_from_name(const std::string& name) {
    if (name == "FIRST") return EffectTag::First;
    if (name == "SECOND_T") return EffectTag::SecondStructural;
    if (name == "SECOND_P") return EffectTag::SecondPolicy;
    return std::nullopt;
}

void StructuralRegions::validate(const std::string& where) const {
    if (caps_prefix.empty()) {
        throw ConfigError(where + ".caps_prefix: caps region declaration is required");
    }
    if (tools_prefix.empty()) {
        throw ConfigError(where + ".tools_prefix: tools region declaration is required");
    }
    if (caps_prefix == tools_prefix) {
        throw ConfigError(where + ": caps and tools regions must be distinct prefixes");
    }
}

bool structural_expand(const InstitutionState& before, const InstitutionState& after,
                       const StructuralRegions& regions) {
    regions.validate("regions");
    if (store_region(before.internal_store, regions.caps_prefix) !=
        store_region(after.internal_store, regions.caps_prefix)) {
        return true;
    }
    if (store_region(before.internal_store, regions.tools_prefix) !=
        store_region(after.internal_store, regions.tools_prefix)) {
        return true;
    }
    return before.topology.vertices != after.topology.vertices ||
           before.topology.edges != after.topology.edges;
}

bool policy_expand(const InstitutionState& before, const InstitutionState& after,
                   const TraceSet& reach_before, const TraceSet& reach_after) {
    if (!core_equal(before, after)) return false;
    return reach_after.strictly_includes(reach_before);
}

TagSet tag_transition(const ActionId& act, const InstitutionState& before,
                      const InstitutionState& after, const StructuralRegions& regions,
                      const std::optional<TraceSet>& reach_before,
                      const std::optional<TraceSet>& reach_after) {
    TagSet tags;
    if (external_commit(act, before, after)) tags.add(EffectTag::First);
    if (structural_expand(before, after, regions)) tags.add(EffectTag::SecondStructural);
    if (reach_before && reach_after &&
        policy_expand(before, after, *reach_before, *reach_after)) {
        tags.add(EffectTag::SecondPolicy);
    }
    return tags;
}

}  // namespace membrane
