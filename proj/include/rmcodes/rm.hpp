#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rmcodes/bitlinalg.hpp"
#include "rmcodes/boolfn.hpp"
#include "rmcodes/codes.hpp"
#include "rmcodes/gf2m.hpp"
#include "rmcodes/weights.hpp"

namespace rmcodes {

/// Orthogonal code O_m: rows v_1, ..., v_m. 1 <= m <= 16.
LinearCode orthogonal(unsigned m);
/// R(1,m): all-one row, then v_1, ..., v_m. 1 <= m <= 16.
LinearCode rm1(unsigned m);
/// R(2,m): R(1,m) rows, then v_i v_j for i < j in lexicographic order. 2 <= m <= 8.
LinearCode rm2(unsigned m);
/// O_m punctured at the zero point. 2 <= m <= 16.
LinearCode simplex(unsigned m);

/// Which linear sub-code family of R(2,m) to build.
enum class Family {
    kEven,       ///< m = 2t+2, idempotent theta_0 + theta_1^* + sum_{j=d}^{t+1} theta_{l_j}^*
    kOddFirst,   ///< m = 2t+1, idempotent theta_0 + theta_1^* + sum_{j=d}^{t} theta_{l_j}^*
    kOddSecond,  ///< m = 2t+1, idempotent theta_0 + theta_1^* + sum_{j=1}^{t-d+1} theta_{l_j}^*
};

const char* to_string(Family f);

struct SubcodeSpec {
    unsigned m = 0;
    unsigned d = 0;
    Family family = Family::kEven;

    /// Throws std::invalid_argument when (m, d, family) is outside the family's range.
    void validate() const;
    /// floor((m-2)/2) for even m, (m-1)/2 for odd m.
    unsigned t() const;
    /// Largest h in the claimed weight set: t+1 for the even family, t otherwise.
    unsigned max_h() const;
};

struct CodeParameters {
    std::size_t length = 0;
    std::size_t dimension = 0;
    std::size_t min_distance = 0;
    friend bool operator==(const CodeParameters&, const CodeParameters&) = default;
};

/// Closed-form [2^m, k, 2^(m-1) - 2^(m-d-1)] for the family.
CodeParameters expected_parameters(const SubcodeSpec& spec);

/// Representatives s with theta_s^* in the family's idempotent, in canonical order
/// (0, 1, then l_j = 1 + 2^j by increasing j).
std::vector<std::uint32_t> idempotent_representatives(const SubcodeSpec& spec);

/// {0, 2^m, 2^(m-1)} together with 2^(m-1) +- 2^(m-h-1) for d <= h <= max_h.
std::set<std::size_t> claimed_weight_set(const SubcodeSpec& spec);

/// Builds the cyclic sub-code of R(2,m)^* from the family idempotent, appends
/// the parity coordinate, and reorders coordinates into the Boolean point
/// order: the cyclic position of alpha^i becomes point exp(alpha^i) (the
/// polynomial-basis mask) and the parity coordinate becomes point 0.
///
/// m = 2 is degenerate for the idempotent route (l_1 = 3 = 0 mod 3) and
/// returns R(2,2), which has the family's parameters [4, 4, 1].
LinearCode subcode(const SubcodeSpec& spec, const FieldTable& field);
LinearCode subcode(const SubcodeSpec& spec);

/// Column permutation taking extended cyclic order (alpha^0 .. alpha^(n-1), then
/// the parity coordinate) to Boolean point order.
ColumnPermutation cyclic_to_boolean_order(const FieldTable& field);

/// A code containing R(1,m), split as R(1,m) plus complement rows.
///
/// Cosets of R(1,m) are indexed by messages over the complement rows; the
/// symplectic matrix of a coset is the XOR of the matrices of its rows,
/// since polarization is linear.
struct CosetDecomposition {
    unsigned m = 0;
    std::vector<BooleanFunction> complement;  ///< coset representatives for the basis messages
    std::vector<BitMatrix> symplectic;        ///< polarize(complement[i])

    std::size_t coset_count() const { return std::size_t{1} << complement.size(); }
    /// Representative of the coset with message `index` (bit i selects complement[i]).
    BooleanFunction representative(std::uint64_t index) const;
    BitMatrix symplectic_matrix(std::uint64_t index) const;
};

/// Throws std::invalid_argument if `code` does not contain R(1,m) or a
/// complement row is not quadratic.
CosetDecomposition decompose_over_rm1(const LinearCode& code, unsigned m);

/// Entry r counts cosets whose symplectic matrix has rank r (0 <= r <= m).
/// Enumerated in Gray order; threads split on the top message bits.
std::vector<std::uint64_t> coset_rank_histogram(const CosetDecomposition& cosets, unsigned threads = 1);

/// Weight distribution from per-coset ranks. Requires R(1,m) inside `code`.
WeightDistribution weight_distribution_by_cosets(const LinearCode& code, unsigned m, unsigned threads = 1);
/// Smallest nonzero weight from the coset-rank distribution.
std::size_t minimum_distance_by_cosets(const LinearCode& code, unsigned m, unsigned threads = 1);

/// Containment along a family's chain, from d = max down to d = 1.
bool check_nesting(unsigned m, Family family);
/// Even m: the even chain. Odd m: both odd chains.
bool check_nesting(unsigned m);

/// Additive group of m x m symplectic matrices from the cosets of the
/// even-family code with d = m/2.
struct SymplecticGroup {
    unsigned m = 0;
    std::vector<BitMatrix> elements;  ///< element c is the XOR of generators selected by the bits of c

    bool contains(const BitMatrix& b) const;
    bool is_closed_under_xor() const;
};

/// Requires even m with 2 <= m <= 12.
SymplecticGroup symplectic_group(unsigned m, const FieldTable& field);
SymplecticGroup symplectic_group(unsigned m);

/// Every nontrivial coset of the even-family sub-code polarizes to rank >= 2d;
/// for d = m/2 every rank is m and every representative is bent.
bool rank_lower_bound_check(const SubcodeSpec& spec, const FieldTable& field, unsigned threads = 1);

}  // namespace rmcodes
