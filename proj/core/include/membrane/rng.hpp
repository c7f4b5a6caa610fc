#pragma once

#include <cstdint>
#include <random>

#include "membrane/errors.hpp"
#include "membrane/rational.hpp"

namespace membrane {

// All stochastic branches draw from one mt19937_64 seeded explicitly; the
// helpers below avoid std distributions, whose sequences are not pinned by
// the standard.

// Unbiased draw in [0, bound) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw Error("uniform_below: zero bound");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Exact Bernoulli(p) for rational p in [0, 1].
inline bool bernoulli(std::mt19937_64& rng, const Rational& p) {
    if (p < 0 || p > 1) throw Error("bernoulli: probability outside [0, 1]");
    if (p == 0) return false;
    if (p == 1) return true;
    const BigInt num = numerator(p);
    const BigInt den = denominator(p);
    if (den > UINT64_MAX) {
        throw ConfigError("bernoulli: probability denominator exceeds 64 bits");
    }
    const std::uint64_t d = den.convert_to<std::uint64_t>();
    const std::uint64_t n = num.convert_to<std::uint64_t>();
    return uniform_below(rng, d) < n;
}

}  // namespace membrane
