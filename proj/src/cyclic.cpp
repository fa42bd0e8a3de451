#include "rmcodes/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace rmcodes {

std::uint64_t gcd_power_formula(unsigned m, unsigned i) {
    if (m < 1 || i < 1 || m > 62 || i > 62) throw std::out_of_range("gcd_power_formula: m and i must lie in [1, 62]");
    const unsigned g = std::gcd(m, i);
    if (std::gcd(m, 2 * i) == g) return 1;
    return (std::uint64_t{1} << g) + 1;
}

bool CyclotomicCoset::contains(std::uint32_t x) const { return std::binary_search(members.begin(), members.end(), x); }

CyclotomicCoset cyclotomic_coset(std::uint32_t s, std::uint32_t n) {
    if (n == 0 || n % 2 == 0) throw std::invalid_argument("cyclotomic_coset: modulus must be odd");
    if (s >= n) throw std::out_of_range("cyclotomic_coset: s must be < n");
    CyclotomicCoset c;
    std::uint64_t x = s;
    do {
        c.members.push_back(static_cast<std::uint32_t>(x));
        x = (2 * x) % n;
    } while (x != s);
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    return c;
}

std::vector<CyclotomicCoset> cyclotomic_cosets(std::uint32_t n) {
    std::vector<CyclotomicCoset> out;
    std::vector<bool> seen(n, false);
    for (std::uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        auto c = cyclotomic_coset(s, n);
        for (auto x : c.members) seen[x] = true;
        out.push_back(std::move(c));
    }
    return out;
}

unsigned coset_size_formula(unsigned m, unsigned i) {
    if (m < 2) throw std::out_of_range("coset_size_formula: m must be >= 2");
    const unsigned top = (m % 2 == 0) ? m / 2 : (m - 1) / 2;
    if (i < 1 || i > top)
        throw std::out_of_range("coset_size_formula: i=" + std::to_string(i) + " outside [1, " + std::to_string(top) + "]");
    return (m % 2 == 0 && i == m / 2) ? m / 2 : m;
}

RingPolynomial& RingPolynomial::operator+=(const RingPolynomial& other) {
    coeffs_ ^= other.coeffs_;
    return *this;
}

RingPolynomial operator*(const RingPolynomial& a, const RingPolynomial& b) {
    if (a.modulus_length() != b.modulus_length()) throw std::invalid_argument("RingPolynomial: ring mismatch");
    RingPolynomial out(a.modulus_length());
    for (std::size_t i = 0; i < a.modulus_length(); ++i)
        if (a.coeffs_.get(i)) out.coeffs_ ^= b.coeffs_.rotated(i);
    return out;
}

FieldElement RingPolynomial::evaluate(const FieldTable& field, FieldElement beta) const {
    FieldElement acc = field.zero();
    for (std::size_t i = 0; i < modulus_length(); ++i)
        if (coeffs_.get(i)) acc = field.add(acc, field.pow(beta, static_cast<std::int64_t>(i)));
    return acc;
}

namespace {

void check_ring(const RingPolynomial& e, const FieldTable& field) {
    if (e.modulus_length() != field.order())
        throw std::invalid_argument("ring length " + std::to_string(e.modulus_length()) + " != 2^m - 1 = " +
                                    std::to_string(field.order()));
}

}  // namespace

RingPolynomial primitive_idempotent_star(std::uint32_t s, const FieldTable& field) {
    const std::uint32_t n = field.order();
    const CyclotomicCoset coset = cyclotomic_coset(s, n);
    BitVector coeffs(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        FieldElement c = field.zero();
        for (std::uint32_t j : coset.members) c = field.add(c, field.exp(static_cast<std::uint64_t>(i) * j));
        if (c.value > 1)
            throw std::logic_error("primitive_idempotent_star: coefficient outside GF(2) at i=" + std::to_string(i));
        coeffs.set(i, c.value == 1);
    }
    return RingPolynomial(std::move(coeffs));
}

RingPolynomial idempotent_sum(const std::vector<std::uint32_t>& reps, const FieldTable& field) {
    const std::uint32_t n = field.order();
    std::set<std::uint32_t> seen;
    RingPolynomial out(n);
    for (auto s : reps) {
        const auto c = cyclotomic_coset(s % n, n);
        if (!seen.insert(c.representative).second)
            throw std::invalid_argument("idempotent_sum: cyclotomic coset " + std::to_string(c.representative) + " repeated");
        out += primitive_idempotent_star(c.representative, field);
    }
    return out;
}

std::vector<std::uint32_t> spectral_support(const RingPolynomial& e, const FieldTable& field) {
    check_ring(e, field);
    std::vector<std::uint32_t> support;
    for (std::uint32_t j = 0; j < field.order(); ++j) {
        const FieldElement v = e.evaluate(field, field.exp(j));
        if (v.value > 1) throw std::invalid_argument("spectral_support: polynomial is not idempotent");
        if (v.value == 1) support.push_back(j);
    }
    return support;
}

LinearCode cyclic_code_from_idempotent(const RingPolynomial& e) {
    if (!e.is_idempotent()) throw std::invalid_argument("cyclic_code_from_idempotent: polynomial is not idempotent");
    // The shifts e, xe, ..., x^(k-1)e are independent and x^k e depends on
    // them (k = code dimension), so stop at the first dependent shift.
    const std::size_t n = e.modulus_length();
    RowEchelon echelon(n);
    BitMatrix g(0, n);
    for (std::size_t i = 0; i < n; ++i) {
        BitVector row = e.coeffs().rotated(i);
        if (!echelon.insert(row)) break;
        g.append_row(std::move(row));
    }
    return LinearCode(std::move(g));
}

}  // namespace rmcodes
