#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "membrane/channel.hpp"
#include "membrane/errors.hpp"
#include "membrane/rational.hpp"

namespace membrane {

// Policy-declared risk typing: an ordered class set, a channel-to-class
// labeling, and per-class weights. Step weights are derived from class
// weights, so the two maps agree on matched classes by construction and the
// empty step always weighs zero.
class RiskModel {
  public:
    RiskModel() = default;
    RiskModel(std::vector<std::string> classes_ascending,
              std::map<std::string, std::string> channel_labels,
              std::map<std::string, Rational> class_weights);

    const std::vector<std::string>& classes() const { return classes_; }

    bool has_class(const std::string& id) const { return class_index_.count(id) > 0; }
    std::uint32_t class_index(const std::string& id) const;
    const std::string& class_name(std::uint32_t index) const { return classes_.at(index); }

    // ℓ: channel id → risk class index. Refinements fall back to their
    // canonical parent's label unless labeled explicitly.
    std::uint32_t label(const std::string& channel_id, const ChannelTable& channels) const;

    const Rational& class_weight(std::uint32_t class_index) const;
    const Rational& class_weight(const std::string& id) const { return class_weight(class_index(id)); }

    // w over step events: weight of a (channel, class) symbol; the empty step
    // weighs 0 and is never stored in traces.
    const Rational& step_weight(std::uint32_t class_index) const { return class_weight(class_index); }

    void validate(const ChannelTable& channels, const std::string& where) const;

    bool operator==(const RiskModel& other) const {
        return classes_ == other.classes_ && channel_labels_ == other.channel_labels_ &&
               class_weights_ == other.class_weights_;
    }

  private:
    std::vector<std::string> classes_;                 // ascending declared order
    std::map<std::string, std::uint32_t> class_index_;
    std::map<std::string, std::string> channel_labels_;
    std::vector<Rational> class_weights_;              // by class index
    std::map<std::string, Rational> class_weights_by_name_;
};

}  // namespace membrane
