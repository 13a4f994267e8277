#pragma once

#include "modring/errors.hpp"
#include "modring/integer.hpp"

namespace modring {

/// Canonical element of Z/mZ: 0 <= value < modulus. The zero ring (m = 1)
/// is fully supported; its single element is 0.
struct Residue {
    Integer value;
    Integer modulus;

    friend bool operator==(const Residue&, const Residue&) = default;
};

/// g = gcd(|a|, |b|) >= 0 together with one Bezout pair: g = s*a + t*b.
/// The pair is not unique; only the identity is contractual.
struct ExtGcdResult {
    Integer g;
    Integer s;
    Integer t;
};

/// Least non-negative representative of value mod modulus.
Residue residue_normalize(const Integer& value, const Integer& modulus);

/// Iterative extended Euclid. Accepts any signs; a = b = 0 yields g = 0.
ExtGcdResult extended_gcd(const Integer& a, const Integer& b);

/// r with r*a == 1 (mod m), 0 <= r < m. Throws not_invertible(gcd) when
/// gcd(a, m) != 1. In the zero ring every element inverts to 0.
Residue mod_inverse(const Integer& a, const Integer& m);

/// true iff a is invertible mod m. is_unit(anything, 1) is true.
bool is_unit(const Integer& a, const Integer& m);

}  // namespace modring
