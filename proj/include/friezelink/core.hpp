#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace friezelink {

// Arbitrary-precision integer used throughout. Frieze entries and bracket
// exponents are unbounded in principle, so no fixed-width type is safe.
using Int = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct zero_over_zero : error { zero_over_zero() : error("0/0 is not a fraction") {} };
struct negative_input : error { explicit negative_input(const std::string& m) : error(m) {} };
struct not_neighbors : error { explicit not_neighbors(const std::string& m) : error(m) {} };
struct no_parents : error { explicit no_parents(const std::string& m) : error(m) {} };
struct out_of_range : error { explicit out_of_range(const std::string& m) : error(m) {} };
struct infinite_input : error { explicit infinite_input(const std::string& m) : error(m) {} };
struct variable_mismatch : error { variable_mismatch() : error("laurent variable mismatch") {} };
struct odd_exponent : error { explicit odd_exponent(const std::string& m) : error(m) {} };
struct not_two_component : error { explicit not_two_component(const std::string& m) : error(m) {} };
struct too_many_crossings : error { explicit too_many_crossings(const std::string& m) : error(m) {} };
struct invalid_q : error { explicit invalid_q(const std::string& m) : error(m) {} };
struct frieze_integrity : error { explicit frieze_integrity(const std::string& m) : error(m) {} };

inline long long checked_ll(const Int& v) {
    if (v > Int(std::numeric_limits<long long>::max()) ||
        v < Int(std::numeric_limits<long long>::min()))
        throw error("integer too large for this operation: " + v.str());
    return static_cast<long long>(v);
}

inline int parity_bit(const Int& v) { return static_cast<int>(v & 1); }

} // namespace friezelink
