#pragma once

#include <stdexcept>
#include <string>

namespace membrane {

// Base class for all domain errors raised by the kernel and its loaders.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Scenario / configuration defects detected at load time. The message always
// names the offending field path (e.g. "automaton.nodes[1].actions[0].channel").
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// An analysis exceeded its declared resource budget. Budgets fail hard:
// silent truncation would fabricate reach claims.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

// Two trace sets were compared without a shared canonical alphabet.
struct AlphabetMismatchError : Error {
    explicit AlphabetMismatchError(const std::string& what) : Error(what) {}
};

// Replay cannot run because the pinned policy version is not registered.
struct ReplayUnavailableError : Error {
    explicit ReplayUnavailableError(const std::string& what) : Error(what) {}
};

// A ledger append was attempted outside the executor's commit point.
struct OutOfBandAppendError : Error {
    explicit OutOfBandAppendError(const std::string& what) : Error(what) {}
};

// A mediated transition could not be committed; no partial effect is visible.
struct TransitionAborted : Error {
    explicit TransitionAborted(const std::string& what) : Error(what) {}
};

}  // namespace membrane
