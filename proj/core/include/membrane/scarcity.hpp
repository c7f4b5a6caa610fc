#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "membrane/rational.hpp"

namespace membrane {

// Continuation-contract parameters for the scarcity simulation. The scarcity
// regime flag is operationalized as internal activity rate >= ratio * the
// exogenous boundary-event rate (default ratio 10, reported never hidden).
struct ScarcityConfig {
    Rational exogenous_rate = 0;   // events per step, in [0, 1]
    Rational internal_rate = 1;    // internal activity rate
    std::uint32_t halt_window = 10;  // W consecutive boundary-silent steps
    bool policy_fixed = true;
    std::uint64_t horizon = 100;
    Rational scarcity_ratio = 10;

    void validate(const std::string& where) const;
};

// Scenario-declared continuation behavior: when boundary-visible stimulation
// happens and whether the absorbing halt contract is actually enforced.
// Claimed assumptions and actual behavior are deliberately separate so the
// diagnostic corollary has something to detect.
struct ContinuationBehavior {
    std::uint64_t stimulated_period = 0;          // 0 = never; otherwise steps k, 2k, ...
    std::vector<std::uint64_t> stimulated_steps;  // explicit extra steps (1-based)
    bool halt_enforced = true;
};

struct ScarcityStep {
    std::uint64_t step = 0;  // 1-based
    bool exogenous = false;
    bool stimulated = false;
    bool ext_delta = false;
    bool halted = false;
};

struct ScarcityReport {
    bool scarcity_regime = false;
    bool halted = false;
    std::optional<std::uint64_t> halted_at_step;
    bool survived = false;
    std::uint64_t stimulated_count = 0;
    std::uint64_t exogenous_count = 0;
    bool assumption_breach = false;
    std::string breach_detail;
    std::vector<ScarcityStep> trace;
};

// Runs the absorbing-halt contract over the horizon. Once halted the state is
// absorbing: no later step shows activity. Non-halting over the full horizon
// without a single stimulated act triggers the assumption-breach diagnostic.
ScarcityReport simulate_scarcity(const ScarcityConfig& config,
                                 const ContinuationBehavior& behavior, std::uint64_t seed);

}  // namespace membrane
