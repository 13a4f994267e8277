#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "modring/integer.hpp"

namespace modring {

class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A modulus-taking operation received a modulus <= 0.
class non_positive_modulus : public error {
  public:
    explicit non_positive_modulus(Integer modulus)
        : error("modulus must be >= 1, got " + modulus.str()),
          modulus(std::move(modulus)) {}
    Integer modulus;
};

/// gcd(a, m) != 1; carries the offending gcd as witness.
class not_invertible : public error {
  public:
    explicit not_invertible(Integer gcd)
        : error("element is not invertible: gcd with modulus is " + gcd.str()),
          gcd(std::move(gcd)) {}
    Integer gcd;
};

/// Moduli i and j share a nontrivial factor.
class not_coprime : public error {
  public:
    not_coprime(std::size_t i, std::size_t j, Integer gcd)
        : error("moduli at indices " + std::to_string(i) + " and " + std::to_string(j) +
                " are not coprime: gcd = " + gcd.str()),
          i(i), j(j), gcd(std::move(gcd)) {}
    std::size_t i;
    std::size_t j;
    Integer gcd;
};

/// Generalized congruence system has no solution; (i, j) is the first
/// conflicting pair in index order.
class inconsistent_system : public error {
  public:
    inconsistent_system(std::size_t i, std::size_t j, Integer gcd)
        : error("congruences " + std::to_string(i) + " and " + std::to_string(j) +
                " are inconsistent: gcd " + gcd.str() + " does not divide the residue difference"),
          i(i), j(j), gcd(std::move(gcd)) {}
    std::size_t i;
    std::size_t j;
    Integer gcd;
};

/// Two polynomials from different rings Z/nZ were combined.
class modulus_mismatch : public error {
  public:
    modulus_mismatch(Integer left, Integer right)
        : error("modulus mismatch: " + left.str() + " vs " + right.str()),
          left(std::move(left)), right(std::move(right)) {}
    Integer left;
    Integer right;
};

/// Division requested by a divisor that is zero or not monic.
class not_monic : public error {
  public:
    not_monic() : error("divisor must be nonzero with leading coefficient 1") {}
};

/// roots_mod_n refused to scan a modulus beyond the configured limit.
class limit_exceeded : public error {
  public:
    limit_exceeded(Integer modulus, Integer limit)
        : error("modulus " + modulus.str() + " exceeds the root scan limit " + limit.str()),
          modulus(std::move(modulus)), limit(std::move(limit)) {}
    Integer modulus;
    Integer limit;
};

/// Interpolation nodes i and j whose difference is not a unit mod n.
/// Duplicate nodes surface here with gcd = n.
class not_unit_difference : public error {
  public:
    not_unit_difference(std::size_t i, std::size_t j, Integer gcd)
        : error("x_i - x_j not a unit for nodes " + std::to_string(i) + ", " +
                std::to_string(j) + ": gcd with modulus = " + gcd.str()),
          i(i), j(j), gcd(std::move(gcd)) {}
    std::size_t i;
    std::size_t j;
    Integer gcd;
};

/// Interpolation over zero points has no canonical answer.
class empty_input : public error {
  public:
    empty_input() : error("at least one point is required") {}
};

/// Malformed CLI-facing text (numbers, lists, points, coefficients).
class parse_error : public error {
  public:
    using error::error;
};

}  // namespace modring
