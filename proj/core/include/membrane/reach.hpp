#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "membrane/automaton.hpp"
#include "membrane/rational.hpp"
#include "membrane/risk.hpp"
#include "membrane/state.hpp"
#include "membrane/trace.hpp"

namespace membrane {

// Explicit resource budgets for reach computation. Exceeding a budget is a
// hard error, never a silent truncation.
struct ReachBudget {
    std::uint64_t max_tree_nodes = 1'000'000;
    std::uint64_t max_search_nodes = 10'000'000;
};

// All boundary traces of length ≤ H producible with positive probability by
// some strategy in the profile's class, by exhaustive expansion. The result is
// prefix-closed and lexicographically ordered.
TraceSet enumerate_reach(const ScenarioAutomaton& automaton, const NodeId& start,
                         const AdmissibilityProfile& profile, const TraceAlphabet& alphabet,
                         const ReachBudget& budget = {});

// Bounded risk-weighted reach estimator: the maximum over deterministic
// choice tables with memory ≤ L of the expected sum of step weights over H
// steps. Expectations are exact rationals.
Rational risk_weighted_reach(const ScenarioAutomaton& automaton, const NodeId& start,
                             const AdmissibilityProfile& profile, const RiskModel& risk,
                             const ApproximationProfile& approx, const ReachBudget& budget = {});

struct CalibrationResult {
    std::vector<Rational> values;            // estimator value per L = 0..
    std::optional<std::uint32_t> converged_at;  // first L with value(L+1) - value(L) <= tolerance
    Rational value;                          // last computed value
};

// Raises L until successive estimator values are within the declared
// stability tolerance (or max_complexity is reached).
CalibrationResult calibrate_estimator(const ScenarioAutomaton& automaton, const NodeId& start,
                                      const AdmissibilityProfile& profile, const RiskModel& risk,
                                      const Rational& tolerance, std::uint32_t max_complexity,
                                      const ReachBudget& budget = {});

// Normalized same-profile expansion diagnostic:
// (after - before) / max(1, before).
Rational expansion_delta(const Rational& mu_before, const Rational& mu_after);

inline bool expansion_flag(const Rational& delta, const Rational& threshold) {
    return delta > threshold;
}

}  // namespace membrane
