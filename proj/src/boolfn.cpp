#include "rmcodes/boolfn.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace rmcodes {

BooleanFunction::BooleanFunction(unsigned m) : BooleanFunction(m, BitVector(std::size_t{1} << m)) {}

BooleanFunction::BooleanFunction(unsigned m, BitVector table) : m_(m), table_(std::move(table)) {
    if (m > kMaxVariables) throw std::invalid_argument("BooleanFunction: too many variables");
    if (table_.length() != (std::size_t{1} << m))
        throw std::invalid_argument("BooleanFunction: table length must be 2^m");
}

BooleanFunction BooleanFunction::from(unsigned m, const std::function<bool(std::uint32_t)>& f) {
    BooleanFunction out(m);
    for (std::uint32_t u = 0; u < out.size(); ++u)
        if (f(u)) out.table_.set(u);
    return out;
}

BooleanFunction BooleanFunction::variable(unsigned m, unsigned i) {
    if (i < 1 || i > m) throw std::invalid_argument("BooleanFunction: variable index out of range");
    return from(m, [i](std::uint32_t u) { return (u >> (i - 1)) & 1u; });
}

BooleanFunction& BooleanFunction::operator^=(const BooleanFunction& other) {
    if (other.m_ != m_) throw std::invalid_argument("BooleanFunction: variable count mismatch");
    table_ ^= other.table_;
    return *this;
}

BooleanFunction operator*(const BooleanFunction& a, const BooleanFunction& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("BooleanFunction: variable count mismatch");
    BooleanFunction out = a;
    auto dst = out.table_.words();
    auto src = b.table_.words();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
    return out;
}

SpectrumVector hadamard_transform(const BooleanFunction& f) {
    const std::size_t n = f.size();
    SpectrumVector s(n);
    for (std::size_t u = 0; u < n; ++u) s[u] = f(static_cast<std::uint32_t>(u)) ? -1 : 1;
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int64_t a = s[j];
                const std::int64_t b = s[j + h];
                s[j] = a + b;
                s[j + h] = a - b;
            }
        }
    }
    return s;
}

bool is_bent(const BooleanFunction& f) {
    const unsigned m = f.variables();
    if (m % 2 != 0) throw std::invalid_argument("is_bent: m must be even");
    const std::int64_t target = std::int64_t{1} << (m / 2);
    for (std::int64_t v : hadamard_transform(f))
        if (v != target && v != -target) return false;
    return true;
}

bool is_symplectic(const BitMatrix& b) {
    if (!b.is_symmetric()) return false;
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (b.get(i, i)) return false;
    return true;
}

BitMatrix polarize(const BooleanFunction& f) {
    const unsigned m = f.variables();
    const bool f0 = f(0);
    auto form = [&](std::uint32_t u, std::uint32_t v) { return f(u ^ v) ^ f(u) ^ f(v) ^ f0; };

    if (m > 0) {
        std::mt19937_64 rng(0x5eed'b1'11'0eaULL);
        std::uniform_int_distribution<std::uint32_t> point(0, static_cast<std::uint32_t>(f.size() - 1));
        for (int trial = 0; trial < 32; ++trial) {
            const std::uint32_t u = point(rng), w = point(rng), v = point(rng);
            if (form(u ^ w, v) != (form(u, v) ^ form(w, v)))
                throw std::invalid_argument("polarize: function is not quadratic (polarized form is not bilinear)");
        }
    }

    BitMatrix b(m, m);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j)
            if (i != j && form(1u << i, 1u << j)) b.set(i, j);
    return b;
}

WeightDistribution coset_weight_distribution_for_half_rank(unsigned h, unsigned m) {
    if (2 * h > m) throw std::invalid_argument("coset weight table: rank 2h exceeds m");
    const std::uint64_t half = std::uint64_t{1} << (m - 1);
    const std::uint64_t offset = std::uint64_t{1} << (m - h - 1);
    const std::uint64_t extreme = std::uint64_t{1} << (2 * h);
    WeightDistribution d;
    d.add(half - offset, extreme);
    d.add(half, (std::uint64_t{1} << (m + 1)) - (std::uint64_t{1} << (2 * h + 1)));
    d.add(half + offset, extreme);
    return d;
}

WeightDistribution coset_weight_distribution_by_rank(const BitMatrix& b, unsigned m) {
    if (m == 0 || b.rows() != m || b.cols() != m)
        throw std::invalid_argument("coset weight table: B must be m x m with m >= 1");
    if (!is_symplectic(b)) throw std::invalid_argument("coset weight table: B is not symplectic");
    const std::size_t r = rank(b);
    if (r % 2 != 0) throw std::logic_error("coset weight table: symplectic matrix of odd rank " + std::to_string(r));
    return coset_weight_distribution_for_half_rank(static_cast<unsigned>(r / 2), m);
}

}  // namespace rmcodes
