#include "modring/crt.hpp"

#include <utility>

namespace modring {

namespace {

Integer product_of(const std::vector<Integer>& moduli) {
    Integer m = 1;
    for (const Integer& mi : moduli) m *= mi;
    return m;
}

void require_pairwise_coprime(const std::vector<Integer>& moduli) {
    if (auto bad = pairwise_coprime(moduli)) throw not_coprime(bad->i, bad->j, bad->gcd);
}

// Split without re-running the coprimality check.
BezoutSplit bezout_split_unchecked(std::size_t i, const std::vector<Integer>& moduli) {
    if (moduli.size() == 1) return {0, 1};  // complementary ideal is the whole ring
    Integer complement = 1;
    for (std::size_t j = 0; j < moduli.size(); ++j) {
        if (j != i) complement *= moduli[j];
    }
    const Integer inv = mod_inverse(complement, moduli[i]).value;
    Integer u = complement * inv;
    Integer v = 1 - u;
    return {std::move(v), std::move(u)};
}

}  // namespace

CongruenceSystem::CongruenceSystem(std::vector<Congruence> items) : items_(std::move(items)) {
    for (Congruence& c : items_) c.residue = residue_normalize(c.residue, c.modulus).value;
}

CongruenceSystem::CongruenceSystem(std::initializer_list<Congruence> items)
    : CongruenceSystem(std::vector<Congruence>(items)) {}

std::vector<Integer> CongruenceSystem::moduli() const {
    std::vector<Integer> ms;
    ms.reserve(items_.size());
    for (const Congruence& c : items_) ms.push_back(c.modulus);
    return ms;
}

std::optional<PairWitness> pairwise_coprime(const std::vector<Integer>& moduli) {
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] <= 0) throw non_positive_modulus(moduli[i]);
        for (std::size_t j = i + 1; j < moduli.size(); ++j) {
            Integer g = extended_gcd(moduli[i], moduli[j]).g;
            if (g != 1) return PairWitness{i, j, std::move(g)};
        }
    }
    return std::nullopt;
}

BezoutSplit bezout_split(std::size_t i, const std::vector<Integer>& moduli) {
    require_pairwise_coprime(moduli);
    return bezout_split_unchecked(i, moduli);
}

IdempotentBasis idempotent_basis(const std::vector<Integer>& moduli) {
    require_pairwise_coprime(moduli);
    IdempotentBasis basis;
    basis.modulus = product_of(moduli);
    basis.idempotents.reserve(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        basis.idempotents.push_back(
            floor_mod(bezout_split_unchecked(i, moduli).u, basis.modulus));
    }
    return basis;
}

CrtSolution solve_crt(const CongruenceSystem& system) {
    const IdempotentBasis basis = idempotent_basis(system.moduli());
    // The combination is formed exactly over Z and reduced once at the end.
    Integer acc = 0;
    for (std::size_t i = 0; i < system.size(); ++i) {
        acc += system.items()[i].residue * basis.idempotents[i];
    }
    return {floor_mod(acc, basis.modulus), basis.modulus};
}

CrtSolution solve_crt_general(const CongruenceSystem& system) {
    const auto& items = system.items();
    // Pairwise consistency scan in lexicographic order. Over Z, pairwise
    // consistency implies global consistency, so the fold below cannot fail.
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            const Integer g = extended_gcd(items[i].modulus, items[j].modulus).g;
            if (floor_mod(items[i].residue - items[j].residue, g) != 0) {
                throw inconsistent_system(i, j, g);
            }
        }
    }
    Integer x = 0;
    Integer combined = 1;
    for (const Congruence& c : items) {
        const Integer g = extended_gcd(combined, c.modulus).g;
        const Integer step = c.modulus / g;
        const Integer diff = c.residue - x;
        const Integer shift =
            floor_mod((diff / g) * mod_inverse(combined / g, step).value, step);
        x += combined * shift;
        combined *= step;
        x = floor_mod(x, combined);
    }
    return {std::move(x), std::move(combined)};
}

bool verify_solution(const CongruenceSystem& system, const Integer& x) {
    for (const Congruence& c : system.items()) {
        if (floor_mod(x - c.residue, c.modulus) != 0) return false;
    }
    return true;
}

}  // namespace modring
