#pragma once

// Shared generators and brute-force oracles for the test suites. Everything
// here is deliberately independent of the library code paths under test:
// oracles work on int64 or by exhaustive scan.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modring/crt.hpp"
#include "modring/interp.hpp"

namespace support {

using modring::Integer;

struct SmallSystem {
    std::vector<std::int64_t> residues;
    std::vector<std::int64_t> moduli;

    modring::CongruenceSystem to_system() const {
        std::vector<modring::Congruence> items;
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            items.push_back({Integer(residues[i]), Integer(moduli[i])});
        }
        return modring::CongruenceSystem(items);
    }

    std::int64_t product() const {
        std::int64_t m = 1;
        for (auto mi : moduli) m *= mi;
        return m;
    }
};

// Pairwise coprime moduli in [2, max_modulus], n of them, product bounded.
inline SmallSystem random_coprime_system(std::mt19937_64& rng, int max_n = 5,
                                         std::int64_t max_modulus = 50,
                                         std::int64_t max_product = 1'000'000) {
    std::uniform_int_distribution<int> n_dist(1, max_n);
    std::uniform_int_distribution<std::int64_t> m_dist(2, max_modulus);
    const int n = n_dist(rng);
    SmallSystem sys;
    std::int64_t product = 1;
    int attempts = 0;
    while (static_cast<int>(sys.moduli.size()) < n && attempts < 400) {
        ++attempts;
        const std::int64_t candidate = m_dist(rng);
        if (product > max_product / candidate) continue;
        bool ok = true;
        for (auto m : sys.moduli) {
            if (std::gcd(m, candidate) != 1) { ok = false; break; }
        }
        if (!ok) continue;
        sys.moduli.push_back(candidate);
        product *= candidate;
    }
    if (sys.moduli.empty()) sys.moduli.push_back(m_dist(rng));
    for (auto m : sys.moduli) {
        std::uniform_int_distribution<std::int64_t> r_dist(0, m - 1);
        sys.residues.push_back(r_dist(rng));
    }
    return sys;
}

// Exhaustive-scan oracle: all x in [0, product) satisfying every congruence.
inline std::vector<std::int64_t> scan_solutions(const SmallSystem& sys) {
    std::vector<std::int64_t> found;
    const std::int64_t bound = sys.product();
    for (std::int64_t x = 0; x < bound; ++x) {
        bool ok = true;
        for (std::size_t i = 0; i < sys.moduli.size(); ++i) {
            if (x % sys.moduli[i] != sys.residues[i]) { ok = false; break; }
        }
        if (ok) found.push_back(x);
    }
    return found;
}

// Same scan for arbitrary (possibly non-coprime) systems over a given bound.
inline std::vector<std::int64_t> scan_solutions_upto(const SmallSystem& sys, std::int64_t bound) {
    std::vector<std::int64_t> found;
    for (std::int64_t x = 0; x < bound; ++x) {
        bool ok = true;
        for (std::size_t i = 0; i < sys.moduli.size(); ++i) {
            if (x % sys.moduli[i] != sys.residues[i] % sys.moduli[i]) { ok = false; break; }
        }
        if (ok) found.push_back(x);
    }
    return found;
}

// Nodes with pairwise unit differences mod n, by rejection.
inline std::vector<std::int64_t> random_unit_nodes(std::mt19937_64& rng, std::int64_t modulus,
                                                   int count) {
    std::uniform_int_distribution<std::int64_t> dist(0, modulus - 1);
    std::vector<std::int64_t> xs;
    int attempts = 0;
    while (static_cast<int>(xs.size()) < count && attempts < 4000) {
        ++attempts;
        const std::int64_t candidate = dist(rng);
        bool ok = true;
        for (auto x : xs) {
            std::int64_t diff = ((candidate - x) % modulus + modulus) % modulus;
            if (std::gcd(diff, modulus) != 1) { ok = false; break; }
        }
        if (ok) xs.push_back(candidate);
    }
    return xs;
}

inline modring::PointSet random_point_set(std::mt19937_64& rng, std::int64_t modulus,
                                          int max_points) {
    std::uniform_int_distribution<int> n_dist(1, max_points);
    std::uniform_int_distribution<std::int64_t> y_dist(0, modulus - 1);
    const auto xs = random_unit_nodes(rng, modulus, n_dist(rng));
    std::vector<modring::Point> pts;
    for (auto x : xs) pts.push_back({Integer(x), Integer(y_dist(rng))});
    return modring::PointSet(Integer(modulus), pts);
}

inline modring::Polynomial random_poly(std::mt19937_64& rng, std::int64_t modulus,
                                       int max_degree) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_int_distribution<std::int64_t> c_dist(0, modulus - 1);
    std::vector<Integer> cs;
    const int deg = deg_dist(rng);
    for (int i = 0; i <= deg; ++i) cs.push_back(Integer(c_dist(rng)));
    return modring::Polynomial(Integer(modulus), cs);
}

inline modring::Polynomial random_monic_poly(std::mt19937_64& rng, std::int64_t modulus,
                                             int min_degree, int max_degree) {
    std::uniform_int_distribution<int> deg_dist(min_degree, max_degree);
    std::uniform_int_distribution<std::int64_t> c_dist(0, modulus - 1);
    std::vector<Integer> cs;
    const int deg = deg_dist(rng);
    for (int i = 0; i < deg; ++i) cs.push_back(Integer(c_dist(rng)));
    cs.push_back(Integer(1));
    return modring::Polynomial(Integer(modulus), cs);
}

}  // namespace support
