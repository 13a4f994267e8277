#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "modring/crt.hpp"
#include "modring/poly.hpp"

namespace modring {

struct Point {
    Integer x;
    Integer y;
};

/// Interpolation data over Z/nZ. Coordinates are normalized on construction;
/// the unit-difference condition on the nodes is validated by the
/// interpolation routines, not assumed.
class PointSet {
  public:
    PointSet(Integer modulus, std::vector<Point> points);
    PointSet(Integer modulus, std::initializer_list<Point> points);

    const Integer& modulus() const { return modulus_; }
    const std::vector<Point>& points() const { return points_; }
    std::vector<Integer> nodes() const;
    std::size_t size() const { return points_.size(); }

  private:
    Integer modulus_;
    std::vector<Point> points_;
};

/// nullopt iff every difference x_i - x_j is a unit mod n. Duplicate nodes
/// show up as a failed pair with gcd = n.
std::optional<PairWitness> check_unit_differences(const std::vector<Integer>& xs,
                                                  const Integer& modulus);

/// Basis polynomials L_i with L_i(x_j) = delta_ij, degree n - 1 each.
/// These are simultaneously the CRT idempotents for the principal ideals
/// (t - x_i) in (Z/nZ)[t].
std::vector<Polynomial> lagrange_basis(const std::vector<Integer>& xs, const Integer& modulus);

/// Direct Lagrange interpolation: p = sum y_i * L_i, degree <= n - 1,
/// p(x_k) = y_k for every k.
Polynomial lagrange_interpolate(const PointSet& points);

/// Interpolation through polynomial-ring CRT: forms the idempotent
/// combination and reduces it modulo the monic node product, which picks
/// the canonical degree-< n representative. Coefficientwise equal to
/// lagrange_interpolate on every valid input.
Polynomial interpolate_via_crt(const PointSet& points);

}  // namespace modring
