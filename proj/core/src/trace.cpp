#include "membrane/trace.hpp"

#include <algorithm>

#include "membrane/errors.hpp"

namespace membrane {

std::string format_symbol(const TraceSymbol& sym, const TraceAlphabet& alphabet) {
    std::string s = to_string(sym.channel);
    s += ":";
    s += sym.class_index < alphabet.risk_classes.size() ? alphabet.risk_classes[sym.class_index]
                                                        : "?";
    return s;
}

std::string format_trace(const Trace& t, const TraceAlphabet& alphabet) {
    if (t.empty()) return "<empty>";
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += " ";
        s += format_symbol(t[i], alphabet);
    }
    return s;
}

TraceSet::TraceSet(TraceAlphabet alphabet) : alphabet_(std::move(alphabet)) {
    traces_.insert(Trace{});  // the empty trace is always reachable
}

bool TraceSet::prefix_closed() const {
    for (const auto& t : traces_) {
        if (t.empty()) continue;
        Trace prefix(t.begin(), t.end() - 1);
        if (!traces_.count(prefix)) return false;
    }
    return true;
}

void TraceSet::check_comparable(const TraceSet& other) const {
    if (!(alphabet_ == other.alphabet_)) {
        throw AlphabetMismatchError(
            "trace sets were built over different canonical alphabets; "
            "declare a shared normalization encoding before comparing");
    }
}

bool TraceSet::operator==(const TraceSet& other) const {
    check_comparable(other);
    return traces_ == other.traces_;
}

bool TraceSet::includes(const TraceSet& other) const {
    check_comparable(other);
    return std::includes(traces_.begin(), traces_.end(), other.traces_.begin(),
                         other.traces_.end());
}

bool TraceSet::strictly_includes(const TraceSet& other) const {
    return includes(other) && traces_.size() > other.traces_.size();
}

}  // namespace membrane
