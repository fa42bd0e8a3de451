#include "rmcodes/gf2m.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace rmcodes {

namespace {

// Bit i is the coefficient of x^i. Degrees 2..8 are the usual textbook
// choices; 9..16 are low-weight primitive polynomials.
constexpr std::array<std::uint32_t, 17> kPrimitivePolys = {
    0,        // unused
    0,        // unused
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x89,     // x^7 + x^3 + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

void check_degree(unsigned m) {
    if (m < FieldTable::kMinDegree || m > FieldTable::kMaxDegree)
        throw std::invalid_argument("GF(2^m): unsupported degree " + std::to_string(m));
}

}  // namespace

std::uint32_t FieldTable::primitive_polynomial(unsigned m) {
    check_degree(m);
    return kPrimitivePolys[m];
}

FieldTable::FieldTable(unsigned m) : m_(m), poly_(primitive_polynomial(m)) {
    const std::uint32_t n = order();
    exp_.resize(n);
    log_.assign(size(), 0);

    // x has order exactly 2^m - 1 iff the polynomial is primitive, which in
    // turn forces irreducibility; a repeat before step n means it is not.
    std::uint32_t v = 1;
    std::vector<bool> seen(size(), false);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (v == 0 || seen[v])
            throw std::logic_error("GF(2^m): polynomial is not primitive for degree " + std::to_string(m));
        seen[v] = true;
        exp_[i] = v;
        log_[v] = i;
        v <<= 1;
        if (v & size()) v ^= poly_;
    }
    if (v != 1) throw std::logic_error("GF(2^m): polynomial is not primitive for degree " + std::to_string(m));
}

std::uint32_t FieldTable::log(FieldElement a) const {
    if (a.value == 0) throw std::domain_error("GF(2^m): log of zero");
    return log_[a.value];
}

FieldElement FieldTable::mul(FieldElement a, FieldElement b) const {
    if (a.value == 0 || b.value == 0) return zero();
    std::uint32_t s = log_[a.value] + log_[b.value];
    if (s >= order()) s -= order();
    return {exp_[s]};
}

FieldElement FieldTable::pow(FieldElement a, std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("GF(2^m): negative exponent; use inverse()");
    if (e == 0) return one();
    if (a.value == 0) return zero();
    const std::uint64_t s = (static_cast<std::uint64_t>(log_[a.value]) * (static_cast<std::uint64_t>(e) % order())) % order();
    return {exp_[s]};
}

FieldElement FieldTable::inverse(FieldElement a) const {
    if (a.value == 0) throw std::domain_error("GF(2^m): inverse of zero");
    return pow(a, static_cast<std::int64_t>(order()) - 1);
}

FieldElement FieldTable::frobenius(FieldElement a, unsigned k) const {
    for (unsigned i = 0; i < k % m_; ++i) a = mul(a, a);
    return a;
}

bool FieldTable::in_subfield(FieldElement a, unsigned s) const {
    if (s == 0 || m_ % s != 0)
        throw std::invalid_argument("GF(2^m): subfield degree " + std::to_string(s) + " does not divide " + std::to_string(m_));
    return frobenius(a, s) == a;
}

FieldElement FieldTable::trace(FieldElement a, unsigned s) const {
    if (!in_subfield(a, s))
        throw std::domain_error("GF(2^m): trace argument is not in GF(2^" + std::to_string(s) + ")");
    FieldElement acc = zero();
    FieldElement p = a;
    for (unsigned i = 0; i < s; ++i) {
        acc = add(acc, p);
        p = mul(p, p);
    }
    return acc;
}

FieldElement FieldTable::relative_trace(FieldElement a, unsigned s) const {
    if (s == 0 || m_ % s != 0)
        throw std::invalid_argument("GF(2^m): subfield degree " + std::to_string(s) + " does not divide " + std::to_string(m_));
    FieldElement acc = zero();
    FieldElement p = a;
    for (unsigned i = 0; i < m_ / s; ++i) {
        acc = add(acc, p);
        p = frobenius(p, s);
    }
    return acc;
}

}  // namespace rmcodes
