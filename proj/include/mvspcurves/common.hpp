#ifndef MVSPCURVES_COMMON_HPP
#define MVSPCURVES_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mvsp {

/// Unbounded integer used for all exponent and degree arithmetic.
using Int = boost::multiprecision::cpp_int;

/// Precondition violation on caller-supplied data (CLI exit code 1).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or table would exceed the configured size bound.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The valuation engine could not separate a minimal-weight monomial
/// within the allowed number of rewriting passes.
struct AmbiguousValuation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int int_pow(const Int& base, uint64_t exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline uint64_t checked_u64(const Int& v, const char* what) {
    if (v < 0 || v > Int(UINT64_MAX)) throw BoundExceeded(std::string(what) + " does not fit in 64 bits");
    return v.convert_to<uint64_t>();
}

}  // namespace mvsp

#endif
