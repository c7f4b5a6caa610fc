#include "membrane/observer.hpp"

#include <map>
#include <set>

#include "membrane/errors.hpp"

namespace membrane {

void ObserverModel::validate(const std::string& where) const {
    if (alphabet.empty()) {
        throw ConfigError(where + ".alphabet: must be non-empty");
    }
    std::set<std::string> seen(alphabet.begin(), alphabet.end());
    if (seen.size() != alphabet.size()) {
        throw ConfigError(where + ".alphabet: duplicate symbols");
    }
    if (kappa == 0) {
        throw ConfigError(where + ".kappa: must be >= 1");
    }
    if (bandwidth_bits < 0) {
        throw ConfigError(where + ".bandwidth_bits: must be >= 0");
    }
    // R <= kappa * log2(|alphabet|)  ⇔  2^(p) <= |alphabet|^(kappa * q), R = p/q.
    const BigInt p = numerator(bandwidth_bits);
    const BigInt q = denominator(bandwidth_bits);
    const BigInt lhs = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(p));
    const BigInt rhs = boost::multiprecision::pow(
        BigInt(alphabet.size()), static_cast<unsigned>(BigInt(kappa) * q));
    if (lhs > rhs) {
        throw ConfigError(where + ".bandwidth_bits: exceeds kappa * log2(|alphabet|)");
    }
}

BigInt ObserverModel::trace_bound(std::uint64_t t) const {
    return boost::multiprecision::pow(BigInt(alphabet.size()),
                                      static_cast<unsigned>(BigInt(kappa) * t));
}

std::optional<CollisionResult> find_observer_collision(
    const ObserverModel& model, std::uint64_t t, const std::vector<HiddenMachine>& machines) {
    model.validate("observer");
    std::set<std::string> symbols(model.alphabet.begin(), model.alphabet.end());
    for (const auto& m : machines) {
        if (m.rows.size() < t) {
            throw ConfigError("machine '" + m.id + "' declares fewer than " + std::to_string(t) +
                              " emission rows");
        }
        for (const auto& row : m.rows) {
            if (row.size() > model.kappa) {
                throw ConfigError("machine '" + m.id + "' emits more than kappa symbols in a step");
            }
            for (const auto& s : row) {
                if (!symbols.count(s)) {
                    throw ConfigError("machine '" + m.id + "' emits symbol '" + s +
                                      "' outside the observer alphabet");
                }
            }
        }
    }

    const bool guaranteed = BigInt(machines.size()) > model.trace_bound(t);

    // Exhaustive table over emitted trace prefixes of length t.
    std::map<std::vector<std::vector<std::string>>, std::size_t> seen;
    for (std::size_t i = 0; i < machines.size(); ++i) {
        std::vector<std::vector<std::string>> trace(machines[i].rows.begin(),
                                                    machines[i].rows.begin() + t);
        auto [it, inserted] = seen.emplace(std::move(trace), i);
        if (!inserted) {
            CollisionResult result;
            result.first = machines[it->second].id;
            result.second = machines[i].id;
            result.trace = it->first;
            result.guaranteed = guaranteed;
            return result;
        }
    }
    return std::nullopt;
}

}  // namespace membrane
