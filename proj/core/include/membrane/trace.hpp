#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "membrane/channel.hpp"
#include "membrane/risk.hpp"

namespace membrane {

// Canonical trace alphabet descriptor: the class set (in declared order) over
// the fixed canonical channel set. Two trace sets are comparable only when
// their descriptors are equal.
struct TraceAlphabet {
    std::vector<std::string> risk_classes;

    bool operator==(const TraceAlphabet&) const = default;
};

// One canonical boundary symbol: (canonical channel, risk class).
struct TraceSymbol {
    CanonicalChannel channel;
    std::uint32_t class_index;

    auto operator<=>(const TraceSymbol&) const = default;
};

using Trace = std::vector<TraceSymbol>;

std::string format_symbol(const TraceSymbol& sym, const TraceAlphabet& alphabet);
std::string format_trace(const Trace& t, const TraceAlphabet& alphabet);

// A prefix-closed, lexicographically ordered set of boundary traces of length
// ≤ H. Always contains the empty trace.
class TraceSet {
  public:
    explicit TraceSet(TraceAlphabet alphabet);

    const TraceAlphabet& alphabet() const { return alphabet_; }
    const std::set<Trace>& traces() const { return traces_; }

    void insert(const Trace& t) { traces_.insert(t); }
    bool contains(const Trace& t) const { return traces_.count(t) > 0; }
    std::size_t size() const { return traces_.size(); }

    bool prefix_closed() const;

    // Set relations; throw AlphabetMismatchError when the canonical alphabets
    // differ (no declared normalization to compare under).
    bool operator==(const TraceSet& other) const;
    bool includes(const TraceSet& other) const;         // this ⊇ other
    bool strictly_includes(const TraceSet& other) const;  // this ⊋ other

  private:
    void check_comparable(const TraceSet& other) const;

    TraceAlphabet alphabet_;
    std::set<Trace> traces_;
};

}  // namespace membrane
