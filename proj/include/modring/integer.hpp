#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace modring {

/// Arbitrary-precision signed integer. Schoolbook arithmetic is plenty at
/// the scale this library targets; exactness is the requirement.
using Integer = boost::multiprecision::cpp_int;

struct DivMod {
    Integer quotient;
    Integer remainder;
};

/// Floor-style division for a positive divisor: a = q*b + r with 0 <= r < b.
/// Throws non_positive_modulus for b <= 0.
DivMod floor_divmod(const Integer& a, const Integer& b);

/// The remainder part of floor_divmod.
Integer floor_mod(const Integer& a, const Integer& b);

inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace modring
