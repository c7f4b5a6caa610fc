#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "membrane/digest.hpp"

namespace membrane {

// Store entries are strings or integers; equality is structural. Keeping the
// stores this small makes the brute-force oracles exact.
using Value = std::variant<std::int64_t, std::string>;

using Store = std::map<std::string, Value>;

inline void write_value(ByteWriter& w, const Value& v) {
    if (std::holds_alternative<std::int64_t>(v)) {
        w.u8(0);
        w.i64be(std::get<std::int64_t>(v));
    } else {
        w.u8(1);
        w.str(std::get<std::string>(v));
    }
}

inline void write_store(ByteWriter& w, const Store& s) {
    w.u64be(s.size());
    for (const auto& [k, v] : s) {  // std::map iterates in key order
        w.str(k);
        write_value(w, v);
    }
}

// Submap of `s` whose keys start with `prefix`; used for the declared
// caps/tools regions.
inline Store store_region(const Store& s, const std::string& prefix) {
    Store out;
    for (auto it = s.lower_bound(prefix); it != s.end(); ++it) {
        if (it->first.compare(0, prefix.size(), prefix) != 0) break;
        out.insert(*it);
    }
    return out;
}

}  // namespace membrane
