#include "modring/crt_polynomial.hpp"

#include "modring/poly.hpp"

#include <algorithm>
#include <utility>

namespace modring {

namespace {

void trim(std::vector<Integer>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim(coefficients_);
}

IntPolynomial int_poly_add(const IntPolynomial& f, const IntPolynomial& g) {
    const auto& a = f.coefficients();
    const auto& b = g.coefficients();
    std::vector<Integer> out(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial int_poly_mul(const IntPolynomial& f, const IntPolynomial& g) {
    return IntPolynomial(convolve(f.coefficients(), g.coefficients()));
}

IntPolynomial int_poly_scale(const IntPolynomial& f, const Integer& c) {
    std::vector<Integer> out = f.coefficients();
    for (Integer& coeff : out) coeff *= c;
    return IntPolynomial(std::move(out));
}

Integer int_poly_eval(const IntPolynomial& f, const Integer& point) {
    Integer acc = 0;
    for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) {
        acc = acc * point + *it;
    }
    return acc;
}

std::vector<Integer> interpolation_multipliers(const std::vector<Integer>& moduli) {
    if (auto bad = pairwise_coprime(moduli)) throw not_coprime(bad->i, bad->j, bad->gcd);
    std::vector<Integer> rs;
    rs.reserve(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        Integer prod = 1;
        for (std::size_t j = 0; j < moduli.size(); ++j) {
            if (j != i) prod *= moduli[i] - moduli[j];
        }
        rs.push_back(mod_inverse(prod, moduli[i]).value);
    }
    return rs;
}

IntPolynomial build_crt_polynomial(const CongruenceSystem& system) {
    const std::vector<Integer> rs = interpolation_multipliers(system.moduli());
    IntPolynomial p;
    for (std::size_t i = 0; i < system.size(); ++i) {
        IntPolynomial term({system.items()[i].residue * rs[i]});
        for (std::size_t j = 0; j < system.size(); ++j) {
            if (j != i) term = int_poly_mul(term, IntPolynomial({-system.items()[j].modulus, 1}));
        }
        p = int_poly_add(p, term);
    }
    return p;
}

CrtSolution crt_via_interpolation(const CongruenceSystem& system) {
    const IntPolynomial p = build_crt_polynomial(system);
    Integer product = 1;
    for (const Congruence& c : system.items()) product *= c.modulus;
    return {floor_mod(int_poly_eval(p, 0), product), std::move(product)};
}

}  // namespace modring
