#include "membrane/risk.hpp"

namespace membrane {

RiskModel::RiskModel(std::vector<std::string> classes_ascending,
                     std::map<std::string, std::string> channel_labels,
                     std::map<std::string, Rational> class_weights)
    : classes_(std::move(classes_ascending)),
      channel_labels_(std::move(channel_labels)),
      class_weights_by_name_(std::move(class_weights)) {
    for (std::uint32_t i = 0; i < classes_.size(); ++i) {
        if (!class_index_.emplace(classes_[i], i).second) {
            throw ConfigError("risk_model.classes[" + std::to_string(i) + "]: duplicate class '" +
                              classes_[i] + "'");
        }
    }
    class_weights_.resize(classes_.size());
    for (std::uint32_t i = 0; i < classes_.size(); ++i) {
        auto it = class_weights_by_name_.find(classes_[i]);
        if (it == class_weights_by_name_.end()) {
            throw ConfigError("risk_model.class_weights: missing weight for class '" + classes_[i] +
                              "'");
        }
        class_weights_[i] = it->second;
    }
}

std::uint32_t RiskModel::class_index(const std::string& id) const {
    auto it = class_index_.find(id);
    if (it == class_index_.end()) {
        throw ConfigError("risk class '" + id + "' is not declared");
    }
    return it->second;
}

std::uint32_t RiskModel::label(const std::string& channel_id, const ChannelTable& channels) const {
    auto it = channel_labels_.find(channel_id);
    if (it != channel_labels_.end()) return class_index(it->second);
    // Refinements inherit the canonical parent's label.
    const std::string parent = to_string(channels.parent(channel_id));
    it = channel_labels_.find(parent);
    if (it == channel_labels_.end()) {
        throw ConfigError("risk_model.channel_labels: no label for channel '" + channel_id +
                          "' or its canonical parent '" + parent + "'");
    }
    return class_index(it->second);
}

const Rational& RiskModel::class_weight(std::uint32_t index) const {
    if (index >= class_weights_.size()) {
        throw ConfigError("risk class index out of range");
    }
    return class_weights_[index];
}

void RiskModel::validate(const ChannelTable& channels, const std::string& where) const {
    if (classes_.empty()) {
        throw ConfigError(where + ".classes: at least one risk class is required");
    }
    for (std::size_t i = 0; i < class_weights_.size(); ++i) {
        if (class_weights_[i] < 0) {
            throw ConfigError(where + ".class_weights['" + classes_[i] + "']: must be >= 0");
        }
        // Step weights must be monotone in the declared class order.
        if (i > 0 && class_weights_[i] < class_weights_[i - 1]) {
            throw ConfigError(where + ".class_weights['" + classes_[i] +
                              "']: weights must be non-decreasing in declared class order");
        }
    }
    for (const auto& [channel, cls] : channel_labels_) {
        if (!channels.known(channel)) {
            throw ConfigError(where + ".channel_labels['" + channel + "']: unknown channel");
        }
        if (!has_class(cls)) {
            throw ConfigError(where + ".channel_labels['" + channel + "']: unknown risk class '" +
                              cls + "'");
        }
    }
    // Every canonical channel must be labeled so refinements always resolve.
    for (const char* name : kCanonicalChannelNames) {
        if (!channel_labels_.count(name)) {
            throw ConfigError(where + ".channel_labels: missing label for canonical channel '" +
                              std::string(name) + "'");
        }
    }
}

}  // namespace membrane
