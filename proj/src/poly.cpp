#include "modring/poly.hpp"

#include <algorithm>
#include <utility>

namespace modring {

namespace {

void trim(std::vector<Integer>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

void require_same_modulus(const Polynomial& f, const Polynomial& g) {
    if (f.modulus() != g.modulus()) throw modulus_mismatch(f.modulus(), g.modulus());
}

}  // namespace

Polynomial::Polynomial(Integer modulus, std::vector<Integer> coefficients)
    : modulus_(std::move(modulus)), coefficients_(std::move(coefficients)) {
    if (modulus_ <= 0) throw non_positive_modulus(modulus_);
    for (Integer& c : coefficients_) c = floor_mod(c, modulus_);
    trim(coefficients_);
}

Polynomial Polynomial::zero(Integer modulus) { return Polynomial(std::move(modulus), {}); }

Polynomial Polynomial::constant(Integer modulus, const Integer& c) {
    return Polynomial(std::move(modulus), {c});
}

std::optional<std::size_t> Polynomial::degree() const {
    if (coefficients_.empty()) return std::nullopt;
    return coefficients_.size() - 1;
}

bool Polynomial::is_monic() const {
    return !coefficients_.empty() && coefficients_.back() == 1;
}

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    require_same_modulus(f, g);
    const auto& a = f.coefficients();
    const auto& b = g.coefficients();
    std::vector<Integer> out(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    return Polynomial(f.modulus(), std::move(out));
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
    require_same_modulus(f, g);
    const auto& a = f.coefficients();
    const auto& b = g.coefficients();
    std::vector<Integer> out(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    return Polynomial(f.modulus(), std::move(out));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    require_same_modulus(f, g);
    return Polynomial(f.modulus(), convolve(f.coefficients(), g.coefficients()));
}

Polynomial poly_scale(const Polynomial& f, const Integer& c) {
    std::vector<Integer> out = f.coefficients();
    for (Integer& coeff : out) coeff *= c;
    return Polynomial(f.modulus(), std::move(out));
}

Integer poly_eval(const Polynomial& f, const Integer& point) {
    const Integer a = floor_mod(point, f.modulus());
    Integer acc = 0;
    for (auto it = f.coefficients().rbegin(); it != f.coefficients().rend(); ++it) {
        acc = floor_mod(acc * a + *it, f.modulus());
    }
    return acc;
}

Polynomial expand_from_roots(const std::vector<Integer>& roots, const Integer& modulus) {
    Polynomial acc = Polynomial::constant(modulus, 1);
    for (const Integer& r : roots) {
        acc = poly_mul(acc, Polynomial(modulus, {-r, 1}));
    }
    return acc;
}

PolyDivMod monic_divmod(const Polynomial& f, const Polynomial& g) {
    require_same_modulus(f, g);
    if (!g.is_monic()) throw not_monic();
    const std::size_t dg = *g.degree();
    std::vector<Integer> rem = f.coefficients();
    if (rem.size() <= dg) {
        return {Polynomial::zero(f.modulus()), f};
    }
    std::vector<Integer> quot(rem.size() - dg, Integer(0));
    for (std::size_t k = rem.size(); k-- > dg;) {
        Integer factor = floor_mod(rem[k], f.modulus());
        if (factor == 0) continue;
        quot[k - dg] = factor;
        for (std::size_t j = 0; j <= dg; ++j) {
            rem[k - dg + j] -= factor * g.coefficients()[j];
        }
    }
    rem.resize(dg);
    return {Polynomial(f.modulus(), std::move(quot)), Polynomial(f.modulus(), std::move(rem))};
}

std::vector<Integer> roots_mod_n(const Polynomial& f, const Integer& limit) {
    const Integer& n = f.modulus();
    if (n > limit) throw limit_exceeded(n, limit);
    std::vector<Integer> roots;
    for (Integer a = 0; a < n; ++a) {
        if (poly_eval(f, a) == 0) roots.push_back(a);
    }
    return roots;
}

}  // namespace modring
