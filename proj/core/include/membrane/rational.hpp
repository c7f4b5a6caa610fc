#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "membrane/errors.hpp"

namespace membrane {

// All probabilities, weights and measures are exact rationals; acceptance
// checks compare against brute-force oracles with zero tolerance.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p", "-p" or "p/q". Used by scenario and report loaders.
inline Rational parse_rational(const std::string& text, const std::string& field) {
    try {
        Rational r(text);
        return r;
    } catch (const std::exception&) {
        throw ConfigError(field + ": not a rational number: '" + text + "'");
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace membrane
