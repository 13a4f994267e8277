#pragma once

#include <vector>

#include "modring/crt.hpp"

namespace modring {

/// Polynomial over Z, ascending coefficients, exact and never reduced.
/// Canonical form: no trailing zero coefficients.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients);

    const std::vector<Integer>& coefficients() const { return coefficients_; }
    bool is_zero() const { return coefficients_.empty(); }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  private:
    std::vector<Integer> coefficients_;
};

IntPolynomial int_poly_add(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial int_poly_mul(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial int_poly_scale(const IntPolynomial& f, const Integer& c);

/// Exact Horner evaluation over Z.
Integer int_poly_eval(const IntPolynomial& f, const Integer& point);

/// Multipliers r_i in [0, m_i) with r_i * prod_{j != i} (m_i - m_j) == 1
/// (mod m_i). They exist because each -m_j is a unit mod m_i when the
/// moduli are pairwise coprime.
std::vector<Integer> interpolation_multipliers(const std::vector<Integer>& moduli);

/// p(t) = sum b_i * r_i * prod_{j != i} (t - m_j) over Z, which satisfies
/// p(m_k) == b_k (mod m_k) for every k. Kept exact; nothing is reduced
/// until the final evaluation.
IntPolynomial build_crt_polynomial(const CongruenceSystem& system);

/// Solves the system as p(0) mod M; agrees with solve_crt exactly.
CrtSolution crt_via_interpolation(const CongruenceSystem& system);

}  // namespace modring
