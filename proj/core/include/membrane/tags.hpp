#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "membrane/state.hpp"
#include "membrane/trace.hpp"

namespace membrane {

enum class EffectTag : std::uint8_t { First = 0, SecondStructural = 1, SecondPolicy = 2 };

// The effect tags carried by one transition. Tags are not mutually exclusive;
// a transition with a nonempty tag set has external effect.
class TagSet {
  public:
    TagSet() = default;

    void add(EffectTag t) { mask_ |= bit(t); }
    bool has(EffectTag t) const { return mask_ & bit(t); }
    bool empty() const { return mask_ == 0; }
    std::uint8_t mask() const { return mask_; }
    static TagSet from_mask(std::uint8_t m);

    bool operator==(const TagSet&) const = default;

    // Uppercase wire names: FIRST, SECOND_T, SECOND_P.
    std::vector<std::string> names() const;
    static std::optional<EffectTag> tag_from_name(const std::string& name);

  private:
    static std::uint8_t bit(EffectTag t) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(t)); }
    std::uint8_t mask_ = 0;
};

// Scenario-declared key-prefix regions of the internal store that realize the
// capability and tool projections.
struct StructuralRegions {
    std::string caps_prefix;
    std::string tools_prefix;

    void validate(const std::string& where) const;
};

// Did capabilities, tools, or runtime topology change? Deliberately
// over-approximate: authority-neutral reconfigurations still count.
bool structural_expand(const InstitutionState& before, const InstitutionState& after,
                       const StructuralRegions& regions);

// Did a policy-only transition strictly enlarge horizon-limited reach? Both
// reach sets must be computed over the shared canonical alphabet.
bool policy_expand(const InstitutionState& before, const InstitutionState& after,
                   const TraceSet& reach_before, const TraceSet& reach_after);

// Full effect typing for one executed transition. When the step carries no
// witnessed policy transition, pass nullopt reach sets and SECOND_P is false.
TagSet tag_transition(const ActionId& act, const InstitutionState& before,
                      const InstitutionState& after, const StructuralRegions& regions,
                      const std::optional<TraceSet>& reach_before,
                      const std::optional<TraceSet>& reach_after);

// ExternalEffect: equivalent to a nonempty tag set.
inline bool external_effect(const TagSet& tags) { return !tags.empty(); }

}  // namespace membrane
