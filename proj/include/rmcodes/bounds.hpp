#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rmcodes {

using BigInt = boost::multiprecision::cpp_int;

/// Plotkin ceiling 2 * floor(d / (2d - n)) for 2d > n; nullopt when 2d <= n
/// (the bound does not apply there).
std::optional<std::uint64_t> plotkin_max(std::uint64_t n, std::uint64_t d);

struct HammingCheck {
    bool feasible = false;  ///< 2^k * V(n, floor((d-1)/2)) <= 2^n
    bool tight = false;     ///< equality: a code with these parameters would be perfect
    BigInt lhs;             ///< 2^k * sphere volume
    BigInt rhs;             ///< 2^n
};

/// Sphere volume sum_{i <= r} C(n, i).
BigInt hamming_sphere_volume(std::uint64_t n, std::uint64_t radius);
HammingCheck hamming_feasible(std::uint64_t n, std::uint64_t k, std::uint64_t d);

/// floor(8d(n-d) / (n - (n-2d)^2)) for self-complementary codes.
/// Throws std::domain_error when n - (n-2d)^2 <= 0.
BigInt grey_rankin_max(std::uint64_t n, std::uint64_t d);

/// Per-delta trace of the optimality argument for [2^m, 1+3m/2] codes.
struct OptimalityStep {
    std::uint64_t delta = 0;
    std::uint64_t distance = 0;  ///< 2^(m-1) - 2^(m/2-1) + delta
    BigInt bound;                ///< grey_rankin_max(2^m, distance)
    bool below_cardinality = false;   ///< bound < 2^(1+3m/2)
    bool product_inequality = false;  ///< delta(2^(m/2) - delta) >= 2^(m/2) - 1
    bool below_envelope = false;      ///< bound <= 2^(3m/2-1) + 2^(m-1) + 2
};

std::vector<OptimalityStep> self_complementary_optimality_steps(unsigned m);

/// True iff no self-complementary [2^m, 1+3m/2] code can beat distance
/// 2^(m-1) - 2^(m/2-1): every delta in (0, 2^(m/2-1)) violates Grey-Rankin.
/// Requires even m >= 2 (m <= 40).
bool self_complementary_optimality(unsigned m);

/// Summary line used by the CLI.
struct BoundReport {
    std::string bound_name;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d = 0;
    std::optional<BigInt> max_cardinality;  ///< nullopt when the bound does not apply
    bool applicable = false;
    bool feasible = true;
    bool tight = false;
};

/// Plotkin, Hamming and Grey-Rankin reports for a [n, k, d] query.
std::vector<BoundReport> bound_reports(std::uint64_t n, std::uint64_t k, std::uint64_t d);

}  // namespace rmcodes
