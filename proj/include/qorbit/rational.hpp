#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qorbit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

struct engine_error : std::runtime_error {
    explicit engine_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(const BigInt& n) { return n.str(); }
inline std::string to_string(const Rational& r) { return r.str(); }

// Parses "p" or "p/q"; q must be nonzero.
inline Rational rational_from_string(const std::string& s) {
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw usage_error("cannot parse rational: '" + s + "'");
    }
}

} // namespace qorbit
