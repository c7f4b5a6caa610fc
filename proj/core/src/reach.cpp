#include "membrane/reach.hpp"

#include <algorithm>
#include <map>

#include "membrane/errors.hpp"

namespace membrane {

namespace {

// Strategy memory: the last m visited nodes, most recent last. A table with a
// smaller bound embeds into any larger one by ignoring the older entries, so
// the classes nest and the estimator is monotone in the bound.
using MemoryWord = std::vector<std::uint32_t>;

MemoryWord push_memory(const MemoryWord& mem, std::uint32_t node, std::uint32_t bound) {
    if (bound == 0) return {};
    MemoryWord out = mem;
    out.push_back(node);
    if (out.size() > bound) out.erase(out.begin());
    return out;
}

struct ContextKey {
    std::uint32_t node;
    MemoryWord memory;

    auto operator<=>(const ContextKey&) const = default;
};

// Per-node admissible actions under one policy version, in declared order.
std::vector<std::vector<const ActionSpec*>> admissible_actions(
    const ScenarioAutomaton& automaton, const std::string& policy_version) {
    std::vector<std::vector<const ActionSpec*>> out(automaton.nodes.size());
    for (std::size_t n = 0; n < automaton.nodes.size(); ++n) {
        for (const auto& act : automaton.nodes[n].actions) {
            if (automaton.admissible(policy_version, act.id)) {
                out[n].push_back(&act);
            }
        }
    }
    return out;
}

class ReachEnumerator {
  public:
    ReachEnumerator(const ScenarioAutomaton& automaton, const AdmissibilityProfile& profile,
                    const TraceAlphabet& alphabet, const ReachBudget& budget)
        : automaton_(automaton),
          profile_(profile),
          budget_(budget),
          actions_(admissible_actions(automaton, profile.policy_version)),
          result_(alphabet) {}

    TraceSet run(const NodeId& start) {
        auto it = automaton_.node_index.find(start);
        if (it == automaton_.node_index.end()) {
            throw ConfigError("reach: unknown start node '" + start + "'");
        }
        Trace emitted;
        std::map<ContextKey, const ActionSpec*> constraints;
        visit(static_cast<std::uint32_t>(it->second), {}, profile_.horizon, emitted, constraints);
        return std::move(result_);
    }

  private:
    void visit(std::uint32_t node, const MemoryWord& mem, std::uint32_t steps_left, Trace& emitted,
               std::map<ContextKey, const ActionSpec*>& constraints) {
        if (++visited_ > budget_.max_tree_nodes) {
            throw ResourceLimitError("reach enumeration exceeded max_tree_nodes = " +
                                     std::to_string(budget_.max_tree_nodes));
        }
        result_.insert(emitted);  // records every prefix, including the empty trace
        if (steps_left == 0) return;

        const bool deterministic = profile_.strategy_class.deterministic;
        const ContextKey key{node, mem};
        const ActionSpec* pinned = nullptr;
        if (deterministic) {
            auto it = constraints.find(key);
            if (it != constraints.end()) pinned = it->second;
        }

        for (const ActionSpec* act : actions_[node]) {
            if (pinned && act != pinned) continue;
            bool inserted = false;
            if (deterministic && !pinned) {
                constraints.emplace(key, act);
                inserted = true;
            }
            const bool emits = act->channel.has_value();
            if (emits) {
                emitted.push_back(
                    automaton_.symbol_for(profile_.policy_version, *act->channel));
            }
            for (const auto& branch : act->branches) {
                if (branch.probability <= 0) continue;
                const auto succ =
                    static_cast<std::uint32_t>(automaton_.node_index.at(branch.to));
                visit(succ, push_memory(mem, node, profile_.strategy_class.memory_bound),
                      steps_left - 1, emitted, constraints);
            }
            if (emits) emitted.pop_back();
            if (inserted) constraints.erase(key);
        }
    }

    const ScenarioAutomaton& automaton_;
    const AdmissibilityProfile& profile_;
    const ReachBudget& budget_;
    std::vector<std::vector<const ActionSpec*>> actions_;
    TraceSet result_;
    std::uint64_t visited_ = 0;
};

// Maximizes the expected weight sum over deterministic memory-bounded choice
// tables by backtracking over the positions reachable under each partial
// table. Positions are processed in discovery order; a context assigned once
// stays assigned for every later position that shares it, which is exactly
// the table-consistency constraint.
class EstimatorSearch {
  public:
    EstimatorSearch(const ScenarioAutomaton& automaton, const std::string& policy_version,
                    const RiskModel& risk, std::uint32_t horizon, std::uint32_t memory_bound,
                    const ReachBudget& budget)
        : automaton_(automaton),
          risk_(risk),
          horizon_(horizon),
          memory_bound_(memory_bound),
          budget_(budget),
          actions_(admissible_actions(automaton, policy_version)) {
        weights_.resize(automaton.nodes.size());
        for (std::size_t n = 0; n < automaton.nodes.size(); ++n) {
            for (const auto* act : actions_[n]) {
                Rational w = 0;
                if (act->channel) {
                    const auto sym = automaton.symbol_for(policy_version, *act->channel);
                    w = risk.step_weight(sym.class_index);
                }
                weights_[n].push_back(w);
            }
        }
    }

    Rational run(const NodeId& start) {
        auto it = automaton_.node_index.find(start);
        if (it == automaton_.node_index.end()) {
            throw ConfigError("estimator: unknown start node '" + start + "'");
        }
        std::vector<Position> pending;
        pending.push_back({static_cast<std::uint32_t>(it->second), {}, horizon_, Rational(1)});
        std::map<ContextKey, std::size_t> assigned;
        return best(pending, 0, assigned);
    }

  private:
    struct Position {
        std::uint32_t node;
        MemoryWord memory;
        std::uint32_t steps_left;
        Rational probability;
    };

    Rational best(std::vector<Position>& pending, std::size_t idx,
                  std::map<ContextKey, std::size_t>& assigned) {
        if (++searched_ > budget_.max_search_nodes) {
            throw ResourceLimitError("estimator search exceeded max_search_nodes = " +
                                     std::to_string(budget_.max_search_nodes));
        }
        if (idx == pending.size()) return 0;
        const Position pos = pending[idx];
        if (pos.steps_left == 0 || actions_[pos.node].empty()) {
            return best(pending, idx + 1, assigned);
        }
        const ContextKey key{pos.node, pos.memory};
        const auto found = assigned.find(key);
        const bool was_assigned = found != assigned.end();

        Rational best_value = -1;
        const auto& choices = actions_[pos.node];
        for (std::size_t c = 0; c < choices.size(); ++c) {
            if (was_assigned && found->second != c) continue;
            bool inserted = false;
            if (!was_assigned) {
                assigned.emplace(key, c);
                inserted = true;
            }
            const ActionSpec* act = choices[c];
            const std::size_t base = pending.size();
            for (const auto& branch : act->branches) {
                pending.push_back({static_cast<std::uint32_t>(automaton_.node_index.at(branch.to)),
                                   push_memory(pos.memory, pos.node, memory_bound_),
                                   pos.steps_left - 1, pos.probability * branch.probability});
            }
            Rational value =
                pos.probability * weights_[pos.node][c] + best(pending, idx + 1, assigned);
            pending.resize(base);
            if (inserted) assigned.erase(key);
            if (value > best_value) best_value = value;
        }
        return best_value;
    }

    const ScenarioAutomaton& automaton_;
    const RiskModel& risk_;
    std::uint32_t horizon_;
    std::uint32_t memory_bound_;
    const ReachBudget& budget_;
    std::vector<std::vector<const ActionSpec*>> actions_;
    std::vector<std::vector<Rational>> weights_;
    std::uint64_t searched_ = 0;
};

}  // namespace

TraceSet enumerate_reach(const ScenarioAutomaton& automaton, const NodeId& start,
                         const AdmissibilityProfile& profile, const TraceAlphabet& alphabet,
                         const ReachBudget& budget) {
    ReachEnumerator enumerator(automaton, profile, alphabet, budget);
    return enumerator.run(start);
}

Rational risk_weighted_reach(const ScenarioAutomaton& automaton, const NodeId& start,
                             const AdmissibilityProfile& profile, const RiskModel& risk,
                             const ApproximationProfile& approx, const ReachBudget& budget) {
    if (!profile.strategy_class.deterministic) {
        throw ConfigError(
            "estimator: only deterministic strategy classes are supported; "
            "stochastic classes have no exact table enumeration");
    }
    EstimatorSearch search(automaton, profile.policy_version, risk, profile.horizon,
                           approx.strategy_complexity_bound, budget);
    return search.run(start);
}

CalibrationResult calibrate_estimator(const ScenarioAutomaton& automaton, const NodeId& start,
                                      const AdmissibilityProfile& profile, const RiskModel& risk,
                                      const Rational& tolerance, std::uint32_t max_complexity,
                                      const ReachBudget& budget) {
    CalibrationResult result;
    for (std::uint32_t level = 0; level <= max_complexity; ++level) {
        ApproximationProfile approx;
        approx.strategy_complexity_bound = level;
        result.values.push_back(
            risk_weighted_reach(automaton, start, profile, risk, approx, budget));
        if (level > 0 && !result.converged_at &&
            result.values[level] - result.values[level - 1] <= tolerance) {
            result.converged_at = level - 1;
            break;
        }
    }
    result.value = result.values.back();
    return result;
}

Rational expansion_delta(const Rational& mu_before, const Rational& mu_after) {
    const Rational denom = std::max(Rational(1), mu_before);
    return (mu_after - mu_before) / denom;
}

}  // namespace membrane
