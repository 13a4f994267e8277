#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modring/ring.hpp"

namespace modring {

/// Polynomial over Z/nZ, coefficients ascending by degree, canonical:
/// every coefficient in [0, n) and no trailing zeros. The zero polynomial
/// is the empty coefficient sequence; its degree is reported as nullopt.
class Polynomial {
  public:
    Polynomial(Integer modulus, std::vector<Integer> coefficients);

    static Polynomial zero(Integer modulus);
    static Polynomial constant(Integer modulus, const Integer& c);

    const Integer& modulus() const { return modulus_; }
    const std::vector<Integer>& coefficients() const { return coefficients_; }
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coefficients_.empty(); }
    bool is_monic() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    Integer modulus_;
    std::vector<Integer> coefficients_;
};

/// Exact convolution over Z. Shared kernel for both coefficient domains:
/// Z/nZ multiplication reduces the result, Z[t] keeps it as is.
std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b);

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// f scaled by the class of c.
Polynomial poly_scale(const Polynomial& f, const Integer& c);

/// Horner evaluation; the point is normalized first. Result in [0, n).
Integer poly_eval(const Polynomial& f, const Integer& point);

/// Monic product of (t - r) over all roots (with multiplicity).
Polynomial expand_from_roots(const std::vector<Integer>& roots, const Integer& modulus);

struct PolyDivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Long division by a monic divisor: f = q*g + r with deg r < deg g.
/// Monic division is exact over every Z/nZ; no coefficient inverses needed.
PolyDivMod monic_divmod(const Polynomial& f, const Polynomial& g);

inline constexpr long kDefaultRootScanLimit = 1'000'000;

/// All roots of f in [0, n), ascending, by exhaustive scan. The modulus is
/// composite in general, so no field factorization applies; the scan limit
/// guards the CLI. Throws limit_exceeded when n > limit.
std::vector<Integer> roots_mod_n(const Polynomial& f, const Integer& limit = kDefaultRootScanLimit);

}  // namespace modring
