#pragma once

#include <cstdint>
#include <vector>

#include "rmcodes/bitlinalg.hpp"
#include "rmcodes/codes.hpp"
#include "rmcodes/gf2m.hpp"

namespace rmcodes {

/// Closed form for gcd(2^m - 1, 2^i + 1): 1 when gcd(m, 2i) = gcd(m, i),
/// otherwise 2^gcd(m, i) + 1. Requires 1 <= m, i <= 62.
std::uint64_t gcd_power_formula(unsigned m, unsigned i);

/// Orbit of s under doubling mod n.
struct CyclotomicCoset {
    std::uint32_t representative = 0;  ///< smallest member
    std::vector<std::uint32_t> members; ///< sorted

    std::size_t size() const { return members.size(); }
    bool contains(std::uint32_t x) const;
    friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

/// Requires n >= 1, n odd and s < n.
CyclotomicCoset cyclotomic_coset(std::uint32_t s, std::uint32_t n);
/// All cosets mod n, ordered by representative.
std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint32_t n);

/// |C_{1 + 2^i}| mod 2^m - 1: m for 1 <= i <= floor((m-1)/2); m/2 for even m and i = m/2.
/// Throws std::out_of_range outside that range.
unsigned coset_size_formula(unsigned m, unsigned i);

/// Element of R_n = GF(2)[x] / (x^n - 1); bit i holds the coefficient of x^i.
class RingPolynomial {
public:
    explicit RingPolynomial(std::size_t n) : coeffs_(n) {}
    explicit RingPolynomial(BitVector coeffs) : coeffs_(std::move(coeffs)) {}

    std::size_t modulus_length() const { return coeffs_.length(); }
    const BitVector& coeffs() const { return coeffs_; }

    /// x^k * p.
    RingPolynomial shifted(std::size_t k) const { return RingPolynomial(coeffs_.rotated(k)); }

    RingPolynomial& operator+=(const RingPolynomial& other);
    friend RingPolynomial operator+(RingPolynomial a, const RingPolynomial& b) { return a += b; }
    /// Schoolbook product with x^n = 1.
    friend RingPolynomial operator*(const RingPolynomial& a, const RingPolynomial& b);
    friend bool operator==(const RingPolynomial&, const RingPolynomial&) = default;

    bool is_idempotent() const { return (*this) * (*this) == *this; }

    /// p(beta) in the field.
    FieldElement evaluate(const FieldTable& field, FieldElement beta) const;

private:
    BitVector coeffs_;
};

/// theta_s^*: the primitive idempotent whose Mattson-Solomon polynomial is
/// sum_{j in C_s} z^j, so coefficient i is sum_{j in C_s} alpha^(i j).
/// It evaluates to 1 at alpha^j exactly for j in C_{-s}.
RingPolynomial primitive_idempotent_star(std::uint32_t s, const FieldTable& field);

/// Sum of theta_s^* over the given coset representatives (duplicate cosets
/// are rejected, since they would cancel).
RingPolynomial idempotent_sum(const std::vector<std::uint32_t>& reps, const FieldTable& field);

/// Exponents j with e(alpha^j) = 1. For an idempotent every evaluation is 0 or 1.
std::vector<std::uint32_t> spectral_support(const RingPolynomial& e, const FieldTable& field);

/// Cyclic code generated by the idempotent e. Throws std::invalid_argument
/// unless e * e == e.
LinearCode cyclic_code_from_idempotent(const RingPolynomial& e);

}  // namespace rmcodes
