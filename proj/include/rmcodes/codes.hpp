#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>

#include "rmcodes/bitlinalg.hpp"
#include "rmcodes/weights.hpp"

namespace rmcodes {

/// Knobs for exhaustive codeword enumeration.
struct EnumerationOptions {
    unsigned threads = 1;
    /// Largest dimension k that may be enumerated (2^k codewords).
    unsigned budget_bits = 30;
};

/// Binary linear [n, k] code given by a full-rank k x n generator matrix.
///
/// Values are immutable. The weight distribution is computed at most once and
/// shared between copies.
class LinearCode {
public:
    /// Throws std::invalid_argument unless the rows are independent.
    explicit LinearCode(BitMatrix generator);
    /// Keeps an independent subset of the rows (first-come order).
    static LinearCode from_spanning_rows(const BitMatrix& rows);
    static LinearCode zero(std::size_t n) { return LinearCode(BitMatrix(0, n)); }

    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }
    const BitMatrix& generator() const { return generator_; }

    /// Cached exhaustive distribution; see weight_distribution().
    const WeightDistribution& weights(const EnumerationOptions& options = {}) const;

private:
    struct Cache;
    BitMatrix generator_;
    std::shared_ptr<Cache> cache_;
};

/// Exact weight distribution by binary-reflected Gray code traversal: each
/// step XORs one generator row into the running codeword. With several
/// threads the top message bits select disjoint subcubes whose histograms
/// are summed. Throws std::length_error when k exceeds options.budget_bits.
WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options = {});

/// Smallest nonzero weight. Throws std::invalid_argument for the zero code.
std::size_t minimum_distance(const LinearCode& code, const EnumerationOptions& options = {});

/// Appends an overall parity coordinate at index n.
LinearCode extend_parity(const LinearCode& code);
/// Deletes one coordinate; the dimension drops when two codewords merge.
LinearCode puncture(const LinearCode& code, std::size_t position);
/// [n, n - k] code orthogonal to every codeword of `code`.
LinearCode dual(const LinearCode& code);

bool contains_all_one(const LinearCode& code);
inline bool is_self_complementary(const LinearCode& code) { return contains_all_one(code); }

bool same_code(const LinearCode& a, const LinearCode& b);
/// Every codeword of `inner` is a codeword of `outer`.
bool is_subcode(const LinearCode& inner, const LinearCode& outer);

/// Generator of R(1,m) in the global point order: the all-one row, then v_1 ... v_m.
BitMatrix canonical_rm1_generator(unsigned m);

enum class Verdict {
    kAccepted,
    kWrongParameters,     ///< n != 2^m, k != m + 1 or d_min != 2^(m-1)
    kAllOneAbsent,        ///< parameters fit but the all-one word is missing
    kColumnsIncomplete,   ///< sub-generator columns do not run over all of V^m
    kCertificateMismatch, ///< mapped generator differs from the canonical one
};

const char* to_string(Verdict v);

/// Witness that a code is R(1,m) up to coordinate order.
///
/// When accepted, permute_columns(basis_change * G, column_permutation)
/// equals canonical_rm1_generator(m) bit for bit.
struct EquivalenceCertificate {
    Verdict verdict = Verdict::kWrongParameters;
    std::string reason;
    unsigned m = 0;
    ColumnPermutation column_permutation;
    BitMatrix basis_change;

    bool accepted() const { return verdict == Verdict::kAccepted; }
    BitMatrix apply(const BitMatrix& generator) const;
};

/// Decides whether `code` is equivalent to R(1,m) and builds the certificate.
///
/// Steps: parameters [2^m, m+1, 2^(m-1)]; all-one word present (its absence
/// would contradict uniqueness, so it is reported separately); the m rows
/// completing the all-one word to a basis must have columns that enumerate
/// V^m exactly once; sorting those columns yields the permutation.
EquivalenceCertificate verify_first_order_rm(const LinearCode& code, const EnumerationOptions& options = {});

/// Text format: header "n k", then k lines of n characters '0'/'1'.
LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& code);
LinearCode read_code_file(const std::string& path);
void write_code_file(const std::string& path, const LinearCode& code);

}  // namespace rmcodes
