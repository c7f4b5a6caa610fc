#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "membrane/rational.hpp"

namespace membrane {

// Finite-rate boundary observer: a finite symbol alphabet, at most kappa
// symbols per step, and a declared bandwidth of R bits/step with
// R <= kappa * log2(|alphabet|). The bound is checked exactly at
// construction: 2^p <= |alphabet|^(kappa * q) for R = p/q.
struct ObserverModel {
    std::vector<std::string> alphabet;
    std::uint32_t kappa = 1;
    Rational bandwidth_bits = 0;

    void validate(const std::string& where) const;

    // |alphabet|^(kappa * t): the number of distinguishable full-rate
    // boundary traces by time t.
    BigInt trace_bound(std::uint64_t t) const;
};

// A deterministic emitter: at step i it emits row i (at most kappa symbols
// drawn from the observer alphabet).
struct HiddenMachine {
    std::string id;
    std::vector<std::vector<std::string>> rows;
};

struct CollisionResult {
    std::string first;
    std::string second;
    std::vector<std::vector<std::string>> trace;  // the shared boundary trace
    bool guaranteed = false;  // machine count exceeded the trace bound
};

// Exhaustive search for two machines whose emitted boundary traces over t
// steps are identical. When the family size exceeds the trace bound (and the
// machines emit at full rate), a collision is guaranteed by counting.
std::optional<CollisionResult> find_observer_collision(const ObserverModel& model,
                                                       std::uint64_t t,
                                                       const std::vector<HiddenMachine>& machines);

}  // namespace membrane
