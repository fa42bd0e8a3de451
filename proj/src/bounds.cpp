#include "rmcodes/bounds.hpp"

#include <stdexcept>

namespace rmcodes {

namespace {

BigInt pow2(std::uint64_t e) {
    BigInt x = 1;
    x <<= static_cast<unsigned>(e);
    return x;
}

BoundReport make_report(const char* name, std::uint64_t n, std::uint64_t k, std::uint64_t d) {
    BoundReport r;
    r.bound_name = name;
    r.n = n;
    r.k = k;
    r.d = d;
    return r;
}

}  // namespace

std::optional<std::uint64_t> plotkin_max(std::uint64_t n, std::uint64_t d) {
    if (d < 1) throw std::invalid_argument("plotkin_max: d must be >= 1");
    if (2 * d <= n) return std::nullopt;
    return 2 * (d / (2 * d - n));
}

BigInt hamming_sphere_volume(std::uint64_t n, std::uint64_t radius) {
    BigInt total = 0;
    BigInt term = 1;  // C(n, i)
    for (std::uint64_t i = 0; i <= radius && i <= n; ++i) {
        total += term;
        term = term * (n - i) / (i + 1);
    }
    return total;
}

HammingCheck hamming_feasible(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
    if (d < 1) throw std::invalid_argument("hamming_feasible: d must be >= 1");
    HammingCheck h;
    h.lhs = pow2(k) * hamming_sphere_volume(n, (d - 1) / 2);
    h.rhs = pow2(n);
    h.feasible = h.lhs <= h.rhs;
    h.tight = h.lhs == h.rhs;
    return h;
}

BigInt grey_rankin_max(std::uint64_t n, std::uint64_t d) {
    const BigInt nn = n;
    const BigInt dd = d;
    const BigInt spread = nn - 2 * dd;
    const BigInt denom = nn - spread * spread;
    if (denom <= 0) throw std::domain_error("grey_rankin_max: n - (n-2d)^2 must be positive");
    return (8 * dd * (nn - dd)) / denom;
}

std::vector<OptimalityStep> self_complementary_optimality_steps(unsigned m) {
    if (m % 2 != 0 || m < 2 || m > 40) throw std::invalid_argument("self_complementary_optimality: m must be even in [2, 40]");
    const std::uint64_t n = std::uint64_t{1} << m;
    const std::uint64_t root = std::uint64_t{1} << (m / 2);
    const std::uint64_t base = n / 2 - root / 2;
    const BigInt cardinality = pow2(1 + 3 * m / 2);
    const BigInt envelope = pow2(3 * m / 2 - 1) + pow2(m - 1) + 2;

    std::vector<OptimalityStep> steps;
    for (std::uint64_t delta = 1; delta < root / 2; ++delta) {
        OptimalityStep s;
        s.delta = delta;
        s.distance = base + delta;
        s.bound = grey_rankin_max(n, s.distance);
        s.below_cardinality = s.bound < cardinality;
        s.product_inequality = delta * (root - delta) >= root - 1;
        s.below_envelope = s.bound <= envelope;
        steps.push_back(std::move(s));
    }
    return steps;
}

bool self_complementary_optimality(unsigned m) {
    for (const auto& s : self_complementary_optimality_steps(m))
        if (!s.below_cardinality || !s.product_inequality || !s.below_envelope) return false;
    return true;
}

std::vector<BoundReport> bound_reports(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
    if (d < 1 || d > n) throw std::invalid_argument("bounds: need 1 <= d <= n");
    if (k > n) throw std::invalid_argument("bounds: need k <= n");
    const BigInt size = pow2(k);
    std::vector<BoundReport> out;

    BoundReport plotkin = make_report("Plotkin", n, k, d);
    if (auto p = plotkin_max(n, d)) {
        plotkin.applicable = true;
        plotkin.max_cardinality = BigInt(*p);
        plotkin.feasible = size <= *p;
        plotkin.tight = size == *p;
    }
    out.push_back(plotkin);

    const auto h = hamming_feasible(n, k, d);
    BoundReport hamming = make_report("Hamming", n, k, d);
    hamming.applicable = true;
    hamming.max_cardinality = h.rhs / hamming_sphere_volume(n, (d - 1) / 2);
    hamming.feasible = h.feasible;
    hamming.tight = h.tight;
    out.push_back(hamming);

    BoundReport grey = make_report("Grey-Rankin", n, k, d);
    const BigInt spread = BigInt(n) - 2 * BigInt(d);
    if (BigInt(n) - spread * spread > 0) {
        grey.applicable = true;
        grey.max_cardinality = grey_rankin_max(n, d);
        grey.feasible = size <= *grey.max_cardinality;
        grey.tight = size == *grey.max_cardinality;
    }
    out.push_back(grey);
    return out;
}

}  // namespace rmcodes
