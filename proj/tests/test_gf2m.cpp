#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "rmcodes/gf2m.hpp"

using rmcodes::FieldElement;
using rmcodes::FieldTable;

TEST_CASE("degree 3 table follows x^3+x+1") {
    const FieldTable f(3);
    CHECK(f.polynomial() == 0xB);
    CHECK(f.exp(3) == f.add(f.alpha(), f.one()));
    CHECK(f.exp(7) == f.one());
    CHECK(f.mul(f.alpha(), f.exp(6)) == f.one());
}

TEST_CASE("alpha has full multiplicative order for every supported degree") {
    for (unsigned m = FieldTable::kMinDegree; m <= FieldTable::kMaxDegree; ++m) {
        const FieldTable f(m);
        std::uint32_t x = 1;
        std::uint32_t order = 0;
        do {
            x = oracle::clmul_mod(x, 2, f.polynomial(), m);
            ++order;
        } while (x != 1);
        CHECK(order == f.order());
    }
}

TEST_CASE("degree 8 exp table lists every nonzero mask once") {
    const FieldTable f(8);
    std::set<std::uint32_t> seen;
    for (std::uint32_t i = 0; i < 255; ++i) seen.insert(f.exp(i).value);
    CHECK(seen.size() == 255);
    CHECK(seen.count(0) == 0);
}

TEST_CASE("multiplication matches carry-less reduction") {
    for (unsigned m : {2u, 4u, 7u, 8u}) {
        const FieldTable f(m);
        for (std::uint32_t a = 0; a < f.size(); ++a)
            for (std::uint32_t b = 0; b < f.size(); ++b)
                REQUIRE(f.mul({a}, {b}).value == oracle::clmul_mod(a, b, f.polynomial(), m));
    }
}

TEST_CASE("pow and inverse") {
    const FieldTable f(4);
    const FieldElement a5 = f.pow(f.alpha(), 5);
    CHECK(a5 != f.one());
    CHECK(f.mul(a5, a5) != f.one());
    CHECK(f.mul(f.mul(a5, a5), a5) == f.one());
    CHECK(f.pow(f.zero(), 0) == f.one());
    CHECK(f.pow(f.zero(), 3) == f.zero());
    CHECK_THROWS_AS(f.pow(f.alpha(), -1), std::invalid_argument);
    for (std::uint32_t a = 1; a < f.size(); ++a) CHECK(f.mul({a}, f.inverse({a})) == f.one());
    CHECK_THROWS_AS(f.log(f.zero()), std::domain_error);
    for (std::uint32_t a = 0; a < f.size(); ++a) CHECK(f.add({a}, {a}) == f.zero());
}

TEST_CASE("unsupported degrees are rejected") {
    CHECK_THROWS(FieldTable(1));
    CHECK_THROWS(FieldTable(17));
}

TEST_CASE("absolute trace values") {
    const FieldTable f2(2);
    CHECK(f2.trace(f2.alpha(), 2) == f2.one());
    CHECK(f2.trace(f2.zero(), 2) == f2.zero());

    const FieldTable f4(4);
    int zeros = 0;
    for (std::uint32_t a = 0; a < 16; ++a) {
        const auto t = f4.trace({a}, 4);
        CHECK((t == f4.zero() || t == f4.one()));
        zeros += t == f4.zero();
    }
    CHECK(zeros == 8);
}

TEST_CASE("trace by repeated squaring oracle") {
    for (unsigned m = 2; m <= 10; ++m) {
        const FieldTable f(m);
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            std::uint32_t sq = a;
            std::uint32_t sum = 0;
            for (unsigned i = 0; i < m; ++i) {
                sum ^= sq;
                sq = oracle::clmul_mod(sq, sq, f.polynomial(), m);
            }
            REQUIRE(f.trace({a}, m).value == sum);
        }
    }
}

TEST_CASE("trace is linear") {
    for (unsigned m = 2; m <= 8; ++m) {
        const FieldTable f(m);
        for (std::uint32_t a = 0; a < f.size(); ++a)
            for (std::uint32_t b = 0; b < f.size(); ++b)
                REQUIRE(f.trace({a ^ b}, m) == f.add(f.trace({a}, m), f.trace({b}, m)));
    }
    std::mt19937_64 rng(7);
    for (unsigned m = 9; m <= 16; ++m) {
        const FieldTable f(m);
        for (int i = 0; i < 2000; ++i) {
            const std::uint32_t a = rng() % f.size();
            const std::uint32_t b = rng() % f.size();
            REQUIRE(f.trace({a ^ b}, m) == f.add(f.trace({a}, m), f.trace({b}, m)));
        }
    }
}

TEST_CASE("relative trace lands in the subfield and composes to the absolute trace") {
    for (unsigned m : {2u, 4u, 6u, 8u}) {
        const FieldTable f(m);
        const unsigned s = m / 2;
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            const auto rel = f.relative_trace({a}, s);
            REQUIRE(f.in_subfield(rel, s));
            REQUIRE(f.frobenius(rel, s) == rel);
            REQUIRE(f.trace(rel, s) == f.trace({a}, m));
        }
    }
}

TEST_CASE("trace rejects bad subfields") {
    const FieldTable f(6);
    CHECK_THROWS(f.trace(f.alpha(), 4));
    CHECK_THROWS(f.relative_trace(f.alpha(), 4));
    // alpha generates the whole field, so it is outside GF(2^3)
    CHECK_THROWS_AS(f.trace(f.alpha(), 3), std::domain_error);
    const FieldElement sub = f.exp(9);  // order 7
    CHECK(f.in_subfield(sub, 3));
    CHECK_NOTHROW(f.trace(sub, 3));
}

TEST_CASE("frobenius is an automorphism of order m") {
    const FieldTable f(5);
    for (std::uint32_t a = 0; a < f.size(); ++a) {
        CHECK(f.frobenius({a}, 5) == FieldElement{a});
        CHECK(f.frobenius({a}, 1) == f.mul({a}, {a}));
    }
}
