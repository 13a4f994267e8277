#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "modring/ring.hpp"

namespace modring {

/// One congruence x == residue (mod modulus), stored pre-normalized.
struct Congruence {
    Integer residue;
    Integer modulus;
};

/// Ordered list of congruences. An empty system means "no constraint" and
/// solves to (0, 1). Moduli equal to 1 are accepted and contribute nothing.
class CongruenceSystem {
  public:
    CongruenceSystem() = default;
    explicit CongruenceSystem(std::vector<Congruence> items);
    CongruenceSystem(std::initializer_list<Congruence> items);

    const std::vector<Congruence>& items() const { return items_; }
    std::vector<Integer> moduli() const;
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

  private:
    std::vector<Congruence> items_;
};

/// Canonical solution x plus combined modulus M; the solution class is x + MZ.
struct CrtSolution {
    Integer x;
    Integer modulus;

    friend bool operator==(const CrtSolution&, const CrtSolution&) = default;
};

/// u_i == 1 (mod m_i), u_i == 0 (mod m_j) for j != i, each reduced to [0, M).
struct IdempotentBasis {
    std::vector<Integer> idempotents;
    Integer modulus;  // M, the product of the moduli
};

/// Exact integer identity v + u = 1 with m_i | v and (prod_{j!=i} m_j) | u.
struct BezoutSplit {
    Integer v;
    Integer u;
};

/// Witness for a failed pairwise-coprimality or consistency check.
struct PairWitness {
    std::size_t i;
    std::size_t j;
    Integer gcd;
};

/// nullopt when all pairs are coprime; otherwise first offending pair in
/// lexicographic index order.
std::optional<PairWitness> pairwise_coprime(const std::vector<Integer>& moduli);

/// Splits 1 = v + u across m_i and the complementary product.
/// Throws not_coprime when the moduli are not pairwise coprime.
BezoutSplit bezout_split(std::size_t i, const std::vector<Integer>& moduli);

IdempotentBasis idempotent_basis(const std::vector<Integer>& moduli);

/// Classical CRT on pairwise coprime moduli: x = sum y_i * u_i mod M.
CrtSolution solve_crt(const CongruenceSystem& system);

/// Solver for arbitrary moduli: solution modulo lcm when the system is
/// consistent, otherwise throws inconsistent_system with the first pair
/// (i, j) where gcd(m_i, m_j) does not divide b_i - b_j.
CrtSolution solve_crt_general(const CongruenceSystem& system);

/// true iff x satisfies every congruence (vacuously true when empty).
bool verify_solution(const CongruenceSystem& system, const Integer& x);

}  // namespace modring
