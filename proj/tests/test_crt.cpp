#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modring/crt.hpp"
#include "modring/crt_polynomial.hpp"
#include "support.hpp"

using modring::bezout_split;
using modring::CongruenceSystem;
using modring::CrtSolution;
using modring::idempotent_basis;
using modring::Integer;
using modring::pairwise_coprime;
using modring::solve_crt;
using modring::solve_crt_general;
using modring::verify_solution;

namespace {

std::vector<Integer> to_integers(const std::vector<std::int64_t>& xs) {
    return std::vector<Integer>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("pairwise_coprime") {
    CHECK_FALSE(pairwise_coprime({3, 5, 7}).has_value());
    const auto bad = pairwise_coprime({4, 6});
    REQUIRE(bad.has_value());
    CHECK(bad->i == 0);
    CHECK(bad->j == 1);
    CHECK(bad->gcd == 2);
    CHECK_FALSE(pairwise_coprime({9}).has_value());
    CHECK_FALSE(pairwise_coprime({}).has_value());

    SUBCASE("first offending pair in lexicographic order") {
        const auto first = pairwise_coprime({2, 3, 4, 9});
        REQUIRE(first.has_value());
        CHECK(first->i == 0);
        CHECK(first->j == 2);
    }
}

TEST_CASE("bezout_split") {
    SUBCASE("canonical construction over (3, 5, 7)") {
        const auto s0 = bezout_split(0, {3, 5, 7});
        CHECK(s0.v + s0.u == 1);
        CHECK(s0.v % 3 == 0);
        CHECK(s0.u % 35 == 0);
        CHECK(s0.u == 70);
        CHECK(s0.v == -69);

        const auto s1 = bezout_split(1, {3, 5, 7});
        CHECK(s1.u == 21);
        CHECK(s1.v == -20);
    }
    SUBCASE("singleton: complementary ideal is the whole ring") {
        for (std::int64_t m : {1, 2, 9}) {
            const auto s = bezout_split(0, {Integer(m)});
            CHECK(s.v == 0);
            CHECK(s.u == 1);
        }
    }
    SUBCASE("non-coprime moduli are rejected") {
        CHECK_THROWS_AS(bezout_split(0, {4, 6}), modring::not_coprime);
    }
}

TEST_CASE("idempotent_basis pinned values") {
    const auto basis = idempotent_basis({3, 5, 7});
    CHECK(basis.modulus == 105);
    CHECK(basis.idempotents == std::vector<Integer>{70, 21, 15});
    CHECK((70 + 21 + 15) % 105 == 1);

    const auto single = idempotent_basis({9});
    CHECK(single.idempotents == std::vector<Integer>{1});
    CHECK(single.modulus == 9);

    const auto pair = idempotent_basis({2, 3});
    CHECK(pair.idempotents == std::vector<Integer>{3, 4});
    CHECK(pair.modulus == 6);
}

TEST_CASE("idempotent_basis laws on random coprime sets") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const auto sys = support::random_coprime_system(rng);
        const auto moduli = to_integers(sys.moduli);
        const auto basis = idempotent_basis(moduli);
        const Integer& M = basis.modulus;
        Integer sum = 0;
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            sum += basis.idempotents[i];
            for (std::size_t j = 0; j < moduli.size(); ++j) {
                const Integer expected = i == j ? Integer(moduli[j] == 1 ? 0 : 1) : Integer(0);
                CHECK(basis.idempotents[i] % moduli[j] == expected);
                if (i != j) {
                    CHECK(basis.idempotents[i] * basis.idempotents[j] % M == 0);
                }
            }
            CHECK(basis.idempotents[i] * basis.idempotents[i] % M == basis.idempotents[i]);
        }
        CHECK(modring::floor_mod(sum, M) == (M == 1 ? 0 : 1));
    }
}

TEST_CASE("solve_crt pinned cases") {
    SUBCASE("classic (2,3)(3,5)(2,7), checked against exhaustive scan") {
        const support::SmallSystem small{{2, 3, 2}, {3, 5, 7}};
        const auto scan = support::scan_solutions(small);
        REQUIRE(scan == std::vector<std::int64_t>{23});
        const CrtSolution sol = solve_crt(small.to_system());
        CHECK(sol == CrtSolution{23, 105});
    }
    SUBCASE("all-zero residues") {
        const CrtSolution sol = solve_crt(CongruenceSystem{{0, 4}, {0, 9}, {0, 5}});
        CHECK(sol == CrtSolution{0, 180});
    }
    SUBCASE("single congruence") {
        CHECK(solve_crt(CongruenceSystem{{4, 9}}) == CrtSolution{4, 9});
    }
    SUBCASE("empty system solves to the no-constraint class") {
        CHECK(solve_crt(CongruenceSystem{}) == CrtSolution{0, 1});
    }
    SUBCASE("moduli equal to 1 contribute nothing") {
        CHECK(solve_crt(CongruenceSystem{{5, 1}, {2, 3}}) == CrtSolution{2, 3});
    }
    SUBCASE("non-coprime moduli carry the offending pair") {
        try {
            solve_crt(CongruenceSystem{{1, 4}, {2, 6}});
            FAIL("expected not_coprime");
        } catch (const modring::not_coprime& e) {
            CHECK(e.i == 0);
            CHECK(e.j == 1);
            CHECK(e.gcd == 2);
        }
    }
}

TEST_CASE("solve_crt correctness and uniqueness on random systems") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const auto small = support::random_coprime_system(rng, 4, 30, 20'000);
        const auto sol = solve_crt(small.to_system());
        CHECK(verify_solution(small.to_system(), sol.x));
        CHECK(sol.modulus == small.product());
        const auto scan = support::scan_solutions(small);
        REQUIRE(scan.size() == 1);
        CHECK(sol.x == scan.front());
    }
}

TEST_CASE("kernel equals product") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<std::int64_t> x_dist(-1'000'000, 1'000'000);
    for (int trial = 0; trial < 60; ++trial) {
        const auto small = support::random_coprime_system(rng);
        const Integer M = small.product();
        for (int k = 0; k < 30; ++k) {
            Integer x = x_dist(rng);
            if (k % 3 == 0) x = M * (x % 7);  // exercise the "all divide" branch
            bool all_divide = true;
            for (auto m : small.moduli) {
                if (x % m != 0) { all_divide = false; break; }
            }
            CHECK(all_divide == (x % M == 0));
        }
    }
}

TEST_CASE("solve_crt_general pinned cases") {
    SUBCASE("compatible non-coprime pair") {
        const support::SmallSystem small{{1, 3}, {4, 6}};
        CHECK(support::scan_solutions_upto(small, 12) == std::vector<std::int64_t>{9});
        CHECK(solve_crt_general(small.to_system()) == CrtSolution{9, 12});
    }
    SUBCASE("incompatible pair reports the first conflict") {
        try {
            solve_crt_general(CongruenceSystem{{1, 4}, {2, 6}});
            FAIL("expected inconsistent_system");
        } catch (const modring::inconsistent_system& e) {
            CHECK(e.i == 0);
            CHECK(e.j == 1);
            CHECK(e.gcd == 2);
        }
    }
    SUBCASE("coprime systems agree with solve_crt") {
        const support::SmallSystem small{{2, 3}, {3, 5}};
        CHECK(support::scan_solutions_upto(small, 15) == std::vector<std::int64_t>{8});
        CHECK(solve_crt_general(small.to_system()) == CrtSolution{8, 15});
        CHECK(solve_crt(small.to_system()) == CrtSolution{8, 15});
    }
    SUBCASE("empty system") {
        CHECK(solve_crt_general(CongruenceSystem{}) == CrtSolution{0, 1});
    }
}

TEST_CASE("solve_crt_general agrees with solve_crt on coprime systems") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const auto system = support::random_coprime_system(rng).to_system();
        CHECK(solve_crt_general(system) == solve_crt(system));
    }
}

TEST_CASE("solve_crt_general solves random non-coprime systems that scan as solvable") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::int64_t> m_dist(1, 24);
    for (int trial = 0; trial < 150; ++trial) {
        support::SmallSystem small;
        std::uniform_int_distribution<int> n_dist(1, 4);
        const int n = n_dist(rng);
        std::int64_t lcm = 1;
        for (int i = 0; i < n; ++i) {
            const std::int64_t m = m_dist(rng);
            small.moduli.push_back(m);
            lcm = std::lcm(lcm, m);
            std::uniform_int_distribution<std::int64_t> r_dist(0, m - 1);
            small.residues.push_back(r_dist(rng));
        }
        const auto scan = support::scan_solutions_upto(small, lcm);
        try {
            const auto sol = solve_crt_general(small.to_system());
            CHECK(sol.modulus == lcm);
            REQUIRE(scan.size() == 1);
            CHECK(sol.x == scan.front());
        } catch (const modring::inconsistent_system&) {
            CHECK(scan.empty());
        }
    }
}

TEST_CASE("moduli far beyond 64 bits stay exact") {
    // three Mersenne primes: 2^61 - 1, 2^89 - 1, 2^107 - 1
    const Integer m1{"2305843009213693951"};
    const Integer m2{"618970019642690137449562111"};
    const Integer m3{"162259276829213363391578010288127"};
    const CongruenceSystem system{
        {Integer{"123456789123456789"}, m1}, {Integer{"42"}, m2}, {Integer{"987654321"}, m3}};
    const auto sol = solve_crt(system);
    CHECK(sol.modulus == m1 * m2 * m3);
    CHECK(verify_solution(system, sol.x));
    CHECK(sol.x >= 0);
    CHECK(sol.x < sol.modulus);
    CHECK(modring::crt_via_interpolation(system) == sol);
}

TEST_CASE("verify_solution") {
    const CongruenceSystem system{{2, 3}, {3, 5}, {2, 7}};
    CHECK(verify_solution(system, 23));
    CHECK_FALSE(verify_solution(system, 24));
    CHECK(verify_solution(CongruenceSystem{}, 123456));
    CHECK(verify_solution(system, 23 + 105));
    CHECK(verify_solution(system, 23 - 105));
}
