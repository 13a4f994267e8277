#include "modring/ring.hpp"

#include <utility>

namespace modring {

DivMod floor_divmod(const Integer& a, const Integer& b) {
    if (b <= 0) throw non_positive_modulus(b);
    Integer q = a / b;  // truncated
    Integer r = a - q * b;
    if (r < 0) {
        r += b;
        q -= 1;
    }
    return {std::move(q), std::move(r)};
}

Integer floor_mod(const Integer& a, const Integer& b) {
    return floor_divmod(a, b).remainder;
}

Residue residue_normalize(const Integer& value, const Integer& modulus) {
    return {floor_mod(value, modulus), modulus};
}

ExtGcdResult extended_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;  // truncated; |r| strictly decreases
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {std::move(old_r), std::move(old_s), std::move(old_t)};
}

Residue mod_inverse(const Integer& a, const Integer& m) {
    const Residue canon = residue_normalize(a, m);
    const ExtGcdResult eg = extended_gcd(canon.value, m);
    if (eg.g != 1) throw not_invertible(eg.g);
    return residue_normalize(eg.s, m);
}

bool is_unit(const Integer& a, const Integer& m) {
    const Residue canon = residue_normalize(a, m);
    return extended_gcd(canon.value, m).g == 1;
}

}  // namespace modring
