#pragma once

#include <cstdint>
#include <vector>

namespace rmcodes {

/// Element of GF(2^m) as an m-bit mask in the polynomial basis.
struct FieldElement {
    std::uint32_t value = 0;

    friend bool operator==(FieldElement, FieldElement) = default;
};

/// Exp/log tables for GF(2^m), 2 <= m <= 16, over a fixed primitive polynomial.
///
/// The table is immutable once built. Element alpha is the class of x, so
/// exp(i) = alpha^i and exp(0) = 1.
class FieldTable {
public:
    static constexpr unsigned kMinDegree = 2;
    static constexpr unsigned kMaxDegree = 16;

    /// Throws std::invalid_argument for an unsupported degree.
    explicit FieldTable(unsigned m);

    /// The pinned primitive polynomial for degree m, bit i = coefficient of x^i.
    static std::uint32_t primitive_polynomial(unsigned m);

    unsigned degree() const { return m_; }
    std::uint32_t polynomial() const { return poly_; }
    /// Field size 2^m.
    std::uint32_t size() const { return 1u << m_; }
    /// Multiplicative order 2^m - 1.
    std::uint32_t order() const { return (1u << m_) - 1; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement alpha() const { return exp(1); }

    /// alpha^i, exponent reduced mod 2^m - 1.
    FieldElement exp(std::uint64_t i) const { return {exp_[i % order()]}; }
    /// Discrete log of a nonzero element; throws std::domain_error on zero.
    std::uint32_t log(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const { return {a.value ^ b.value}; }
    FieldElement mul(FieldElement a, FieldElement b) const;
    /// a^e for e >= 0. 0^0 = 1, 0^e = 0 for e > 0. Negative exponents are rejected.
    FieldElement pow(FieldElement a, std::int64_t e) const;
    /// a^(2^m - 2); throws std::domain_error on zero.
    FieldElement inverse(FieldElement a) const;
    /// a^(2^k), k applications of Frobenius.
    FieldElement frobenius(FieldElement a, unsigned k) const;

    /// True iff a lies in the subfield GF(2^s), i.e. a^(2^s) = a. Requires s | m.
    bool in_subfield(FieldElement a, unsigned s) const;

    /// Absolute trace T_s(a) = a + a^2 + ... + a^(2^(s-1)) of an element of GF(2^s).
    ///
    /// Requires s | m and a in GF(2^s); the result is 0 or 1. With s = m this
    /// is the ordinary trace GF(2^m) -> GF(2).
    FieldElement trace(FieldElement a, unsigned s) const;

    /// Relative trace GF(2^m) -> GF(2^s): sum over i < m/s of a^(2^(s*i)). Requires s | m.
    FieldElement relative_trace(FieldElement a, unsigned s) const;

    const std::vector<std::uint32_t>& exp_table() const { return exp_; }
    const std::vector<std::uint32_t>& log_table() const { return log_; }

private:
    unsigned m_;
    std::uint32_t poly_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace rmcodes
