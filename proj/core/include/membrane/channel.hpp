#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "membrane/errors.hpp"

namespace membrane {

// The eight canonical classes of boundary-crossing effect. Scenario files may
// declare refined channel ids, but each refinement must name exactly one
// canonical parent; completeness claims are conditional on this enumeration.
enum class CanonicalChannel : std::uint8_t {
    Net = 0,
    FsShared,
    Exec,
    Money,
    Deploy,
    Comm,
    Spawn,
    Connect,
};

inline constexpr std::array<const char*, 8> kCanonicalChannelNames = {
    "net", "fs_shared", "exec", "money", "deploy", "comm", "spawn", "connect"};

inline const char* to_string(CanonicalChannel c) {
    return kCanonicalChannelNames[static_cast<std::size_t>(c)];
}

inline std::optional<CanonicalChannel> canonical_channel_from_string(const std::string& s) {
    for (std::size_t i = 0; i < kCanonicalChannelNames.size(); ++i) {
        if (s == kCanonicalChannelNames[i]) return static_cast<CanonicalChannel>(i);
    }
    return std::nullopt;
}

// Declared channel table: canonical ids plus scenario refinements, each
// mapped to its canonical parent.
class ChannelTable {
  public:
    ChannelTable() {
        for (std::size_t i = 0; i < kCanonicalChannelNames.size(); ++i) {
            parents_[kCanonicalChannelNames[i]] = static_cast<CanonicalChannel>(i);
        }
    }

    void declare_refinement(const std::string& id, CanonicalChannel parent,
                            const std::string& field) {
        if (canonical_channel_from_string(id)) {
            throw ConfigError(field + ": refinement id shadows canonical channel '" + id + "'");
        }
        auto [it, inserted] = parents_.emplace(id, parent);
        if (!inserted && it->second != parent) {
            throw ConfigError(field + ": channel '" + id + "' redeclared with a different parent");
        }
    }

    bool known(const std::string& id) const { return parents_.count(id) > 0; }

    CanonicalChannel parent(const std::string& id) const {
        auto it = parents_.find(id);
        if (it == parents_.end()) {
            throw ConfigError("channel '" + id + "' is not declared and has no canonical parent");
        }
        return it->second;
    }

    const std::map<std::string, CanonicalChannel>& all() const { return parents_; }

  private:
    std::map<std::string, CanonicalChannel> parents_;
};

}  // namespace membrane
