#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rmcodes/bitlinalg.hpp"
#include "rmcodes/weights.hpp"

namespace rmcodes {

/// Truth table of a Boolean function on V^m.
///
/// Point u = (u_1, ..., u_m) is stored at index sum u_i 2^(i-1), so v_1 is the
/// least significant bit. Every code in this library uses the same order.
class BooleanFunction {
public:
    static constexpr unsigned kMaxVariables = 20;

    explicit BooleanFunction(unsigned m);
    /// Table length must be 2^m.
    BooleanFunction(unsigned m, BitVector table);
    static BooleanFunction from(unsigned m, const std::function<bool(std::uint32_t)>& f);
    /// The coordinate function v_i, 1 <= i <= m.
    static BooleanFunction variable(unsigned m, unsigned i);

    unsigned variables() const { return m_; }
    std::size_t size() const { return table_.length(); }
    bool operator()(std::uint32_t u) const { return table_.get(u); }
    const BitVector& table() const { return table_; }

    BooleanFunction& operator^=(const BooleanFunction& other);
    friend BooleanFunction operator^(BooleanFunction a, const BooleanFunction& b) { return a ^= b; }
    /// Pointwise product (AND).
    friend BooleanFunction operator*(const BooleanFunction& a, const BooleanFunction& b);
    friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

private:
    unsigned m_;
    BitVector table_;
};

/// Walsh-Hadamard spectrum: entry u is sum_v (-1)^(u.v + f(v)).
using SpectrumVector = std::vector<std::int64_t>;

/// In-place butterfly, O(m 2^m).
SpectrumVector hadamard_transform(const BooleanFunction& f);

/// Every spectrum entry is +-2^(m/2). Throws std::invalid_argument for odd m.
bool is_bent(const BooleanFunction& f);

/// Symplectic matrix of a quadratic function:
/// B[i][j] = f(e_i + e_j) + f(e_i) + f(e_j) + f(0).
///
/// Bilinearity of the polarized form is probed on 32 pseudo-random triples
/// (fixed seed); a failure throws std::invalid_argument.
BitMatrix polarize(const BooleanFunction& f);

/// Symmetric with zero diagonal.
bool is_symplectic(const BitMatrix& b);

/// Weight distribution of the coset f + R(1,m) for a quadratic f whose
/// symplectic matrix has rank 2h:
///   2^(m-1) - 2^(m-h-1) : 2^(2h)
///   2^(m-1)             : 2^(m+1) - 2^(2h+1)
///   2^(m-1) + 2^(m-h-1) : 2^(2h)
WeightDistribution coset_weight_distribution_by_rank(const BitMatrix& b, unsigned m);
/// Same table, keyed directly by h.
WeightDistribution coset_weight_distribution_for_half_rank(unsigned h, unsigned m);

}  // namespace rmcodes
