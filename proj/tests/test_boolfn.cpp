#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "rmcodes/boolfn.hpp"

using namespace rmcodes;

namespace {

BooleanFunction v(unsigned m, unsigned i) { return BooleanFunction::variable(m, i); }

WeightDistribution as_distribution(const std::map<std::size_t, std::uint64_t>& m) { return WeightDistribution(m); }

}  // namespace

TEST_CASE("variables follow the least significant bit convention") {
    const auto v1 = v(3, 1);
    const auto v3 = v(3, 3);
    CHECK(v1.table().to_string() == "01010101");
    CHECK(v3.table().to_string() == "00001111");
    CHECK_THROWS(v(3, 0));
    CHECK_THROWS(v(3, 4));
    CHECK_THROWS(BooleanFunction(21));
}

TEST_CASE("spectrum examples") {
    const auto zero = BooleanFunction(3);
    const auto s0 = hadamard_transform(zero);
    CHECK(s0[0] == 8);
    for (std::size_t u = 1; u < 8; ++u) CHECK(s0[u] == 0);

    CHECK(hadamard_transform(v(2, 1)) == SpectrumVector{0, 4, 0, 0});
    for (auto x : hadamard_transform(v(2, 1) * v(2, 2))) CHECK((x == 2 || x == -2));
}

TEST_CASE("bent examples") {
    CHECK(is_bent(v(2, 1) * v(2, 2)));
    CHECK(is_bent((v(4, 1) * v(4, 2)) ^ (v(4, 3) * v(4, 4))));
    CHECK_FALSE(is_bent(BooleanFunction(4)));
    CHECK_FALSE(is_bent(v(4, 1) * v(4, 2)));
    CHECK_THROWS_AS(is_bent(BooleanFunction(3)), std::invalid_argument);
}

TEST_CASE("fast transform equals the defining sum") {
    std::mt19937_64 rng(21);
    for (unsigned m = 1; m <= 8; ++m)
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = oracle::random_function(m, rng);
            REQUIRE(hadamard_transform(f) == oracle::direct_hadamard(f));
        }
}

TEST_CASE("Parseval and convolution identities") {
    std::mt19937_64 rng(22);
    for (unsigned m = 1; m <= 10; ++m) {
        const auto f = oracle::random_function(m, rng);
        const auto s = hadamard_transform(f);
        std::int64_t energy = 0;
        for (auto x : s) energy += x * x;
        REQUIRE(energy == (std::int64_t{1} << (2 * m)));
        for (auto x : s) REQUIRE(((x - (std::int64_t{1} << m)) % 2) == 0);
        if (m <= 6)
            for (std::uint32_t w = 1; w < s.size(); ++w) {
                std::int64_t acc = 0;
                for (std::uint32_t u = 0; u < s.size(); ++u) acc += s[u] * s[u ^ w];
                REQUIRE(acc == 0);
            }
    }
}

TEST_CASE("spectrum links to distance from linear forms") {
    std::mt19937_64 rng(23);
    for (unsigned m = 1; m <= 6; ++m) {
        const auto f = oracle::random_function(m, rng);
        const auto s = hadamard_transform(f);
        for (std::uint32_t u = 0; u < s.size(); ++u) {
            std::int64_t dist = 0;
            for (std::uint32_t x = 0; x < s.size(); ++x) dist += f(x) != (std::popcount(u & x) & 1);
            REQUIRE(s[u] == (std::int64_t{1} << m) - 2 * dist);
        }
    }
}

TEST_CASE("polarization examples") {
    CHECK(polarize(v(3, 2) ^ v(3, 3)).is_zero());
    CHECK(polarize(v(2, 1) * v(2, 2)).to_strings() == std::vector<std::string>{"01", "10"});
    const auto b = polarize((v(4, 1) * v(4, 2)) ^ (v(4, 3) * v(4, 4)));
    CHECK(b.to_strings() == std::vector<std::string>{"0100", "1000", "0001", "0010"});
    CHECK(rank(b) == 4);
    CHECK_THROWS_AS(polarize(v(3, 1) * v(3, 2) * v(3, 3)), std::invalid_argument);
}

TEST_CASE("polarization of random quadratics is symplectic") {
    std::mt19937_64 rng(24);
    for (unsigned m = 2; m <= 8; ++m)
        for (int trial = 0; trial < 20; ++trial) {
            const auto b = polarize(oracle::random_quadratic(m, rng));
            REQUIRE(is_symplectic(b));
            REQUIRE(rank(b) % 2 == 0);
        }
}

TEST_CASE("coset weight tables by rank") {
    CHECK(coset_weight_distribution_by_rank(BitMatrix(4, 4), 4) == as_distribution({{0, 1}, {8, 30}, {16, 1}}));
    const auto full = BitMatrix::from_strings({"0100", "1000", "0001", "0010"});
    CHECK(coset_weight_distribution_by_rank(full, 4) == as_distribution({{6, 16}, {10, 16}}));
    const auto half = BitMatrix::from_strings({"0100", "1000", "0000", "0000"});
    CHECK(coset_weight_distribution_by_rank(half, 4) == as_distribution({{4, 4}, {8, 24}, {12, 4}}));
    CHECK_THROWS(coset_weight_distribution_by_rank(BitMatrix::identity(4), 4));
    CHECK_THROWS(coset_weight_distribution_by_rank(full, 5));
}

TEST_CASE("coset table matches brute force on random quadratics") {
    std::mt19937_64 rng(25);
    for (unsigned m = 2; m <= 6; ++m)
        for (int trial = 0; trial < 40; ++trial) {
            const auto f = oracle::random_quadratic(m, rng);
            REQUIRE(coset_weight_distribution_by_rank(polarize(f), m) == as_distribution(oracle::brute_coset_weights(f)));
        }
}
