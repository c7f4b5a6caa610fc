#include "membrane/scarcity.hpp"

#include <algorithm>

#include "membrane/errors.hpp"
#include "membrane/rng.hpp"

namespace membrane {

void ScarcityConfig::validate(const std::string& where) const {
    if (exogenous_rate < 0 || exogenous_rate > 1) {
        throw ConfigError(where + ".exogenous_rate: must lie in [0, 1]");
    }
    if (internal_rate < 0) {
        throw ConfigError(where + ".internal_rate: must be >= 0");
    }
    if (halt_window == 0) {
        throw ConfigError(where + ".halt_window: must be >= 1");
    }
    if (horizon == 0) {
        throw ConfigError(where + ".horizon: must be >= 1");
    }
    if (scarcity_ratio <= 0) {
        throw ConfigError(where + ".scarcity_ratio: must be > 0");
    }
}

ScarcityReport simulate_scarcity(const ScarcityConfig& config,
                                 const ContinuationBehavior& behavior, std::uint64_t seed) {
    config.validate("scarcity");
    std::mt19937_64 rng(seed);

    ScarcityReport report;
    report.scarcity_regime = config.internal_rate >= config.scarcity_ratio * config.exogenous_rate;

    std::uint64_t silent_run = 0;
    for (std::uint64_t step = 1; step <= config.horizon; ++step) {
        ScarcityStep s;
        s.step = step;
        if (report.halted) {
            // Absorbing: once halted no later step shows activity.
            s.halted = true;
            report.trace.push_back(s);
            continue;
        }
        s.exogenous = bernoulli(rng, config.exogenous_rate);
        const bool periodic = behavior.stimulated_period != 0 &&
                              step % behavior.stimulated_period == 0;
        const bool listed = std::find(behavior.stimulated_steps.begin(),
                                      behavior.stimulated_steps.end(),
                                      step) != behavior.stimulated_steps.end();
        s.stimulated = periodic || listed;
        s.ext_delta = s.exogenous || s.stimulated;  // both are boundary-visible

        if (s.exogenous) ++report.exogenous_count;
        if (s.stimulated) ++report.stimulated_count;

        if (s.ext_delta) {
            silent_run = 0;
        } else {
            ++silent_run;
            if (silent_run >= config.halt_window && behavior.halt_enforced) {
                report.halted = true;
                report.halted_at_step = step;
                s.halted = true;
            }
        }
        report.trace.push_back(s);
    }

    report.survived = !report.halted;
    if (report.survived && report.stimulated_count == 0) {
        // Non-halting without a single stimulated act: under the continuation
        // contract this is impossible, so at least one declared assumption is
        // false on the interval.
        report.assumption_breach = true;
        report.breach_detail =
            "sustained non-halting with zero stimulated acts: at least one of the declared "
            "continuation assumptions (1)-(5) is false on this interval";
    }
    return report;
}

}  // namespace membrane
