#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rmcodes/bounds.hpp"

using namespace rmcodes;

TEST_CASE("Plotkin examples") {
    CHECK(plotkin_max(7, 5) == 2);
    CHECK(plotkin_max(7, 4) == 8);
    CHECK_FALSE(plotkin_max(8, 4).has_value());
    CHECK_THROWS(plotkin_max(8, 0));
}

TEST_CASE("Plotkin dichotomy at the simplex parameters") {
    for (unsigned m = 2; m <= 30; ++m) {
        const std::uint64_t n = (std::uint64_t{1} << m) - 1;
        const std::uint64_t half = std::uint64_t{1} << (m - 1);
        REQUIRE(*plotkin_max(n, half) >= n + 1);
        REQUIRE(*plotkin_max(n, half + 1) < n + 1);
    }
}

TEST_CASE("Hamming examples") {
    const auto h = hamming_feasible(7, 4, 3);
    CHECK(h.feasible);
    CHECK(h.tight);
    CHECK(h.lhs == 128);
    CHECK_FALSE(hamming_feasible(7, 5, 3).feasible);
    for (std::uint64_t k = 0; k <= 20; ++k) CHECK(hamming_feasible(20, k, 1).feasible);
    CHECK(hamming_sphere_volume(10, 2) == 56);
}

TEST_CASE("Hamming bound is tight exactly at the Hamming parameters") {
    for (unsigned r = 2; r <= 10; ++r) {
        const std::uint64_t n = (std::uint64_t{1} << r) - 1;
        for (std::uint64_t k = 1; k < n; ++k) {
            const auto h = hamming_feasible(n, k, 3);
            REQUIRE(h.tight == (k == n - r));
            REQUIRE(h.feasible == (k <= n - r));
        }
    }
}

TEST_CASE("Grey-Rankin examples") {
    CHECK(grey_rankin_max(16, 7) == 42);
    CHECK_THROWS_AS(grey_rankin_max(16, 6), std::domain_error);
    CHECK_THROWS_AS(grey_rankin_max(16, 2), std::domain_error);
}

TEST_CASE("Grey-Rankin is monotone decreasing in d") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t n = 4 + rng() % 5000;
        std::vector<std::uint64_t> valid;
        for (std::uint64_t d = 1; d <= n; ++d) {
            const std::int64_t s = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(d);
            if (static_cast<std::int64_t>(n) - s * s > 0 && 2 * d <= n) valid.push_back(d);
        }
        for (std::size_t i = 1; i < valid.size(); ++i)
            REQUIRE(grey_rankin_max(n, valid[i]) <= grey_rankin_max(n, valid[i - 1]));
    }
}

TEST_CASE("self-complementary optimality") {
    const auto steps4 = self_complementary_optimality_steps(4);
    REQUIRE(steps4.size() == 1);
    CHECK(steps4[0].distance == 7);
    CHECK(steps4[0].bound == 42);
    CHECK(self_complementary_optimality_steps(6).size() == 3);
    for (unsigned m = 4; m <= 12; m += 2) CHECK(self_complementary_optimality(m));
    CHECK_THROWS(self_complementary_optimality(5));
}

TEST_CASE("bound reports") {
    const auto r = bound_reports(7, 4, 3);
    REQUIRE(r.size() == 3);
    CHECK(r[0].bound_name == "Plotkin");
    CHECK_FALSE(r[0].applicable);
    CHECK(r[1].tight);
    CHECK(*r[1].max_cardinality == 16);
    CHECK(r[2].applicable);
    for (const auto& b : bound_reports(100, 3, 40))
        if (b.max_cardinality) CHECK(*b.max_cardinality >= 1);
    CHECK_THROWS(bound_reports(7, 4, 8));
}
