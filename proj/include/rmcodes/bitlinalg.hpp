#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rmcodes {

/// Packed binary vector. Bits past length() are always zero.
class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

    static BitVector ones(std::size_t length);
    /// Parses a string of '0'/'1' characters; character i is bit i.
    static BitVector from_string(std::string_view bits);
    static std::size_t word_count(std::size_t length) { return (length + kWordBits - 1) / kWordBits; }

    std::size_t length() const { return length_; }
    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i, bool v = true) {
        const Word mask = Word{1} << (i % kWordBits);
        if (v)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    std::size_t weight() const;
    bool is_zero() const;
    /// Index of the lowest set bit, or length() if zero.
    std::size_t lowest_set_bit() const;
    bool parity() const { return weight() & 1u; }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    /// Cyclic shift by k positions: bit i moves to (i + k) mod length.
    BitVector rotated(std::size_t k) const;
    /// Copy with one coordinate removed.
    BitVector without(std::size_t position) const;
    /// Copy with one bit appended at the end.
    BitVector appended(bool bit) const;

    std::string to_string() const;

private:
    std::size_t length_ = 0;
    std::vector<Word> words_;
};

/// Dense matrix over GF(2) stored as packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    /// All rows must share one length; throws std::invalid_argument otherwise.
    BitMatrix(std::vector<BitVector> rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }
    const std::vector<BitVector>& row_data() const { return rows_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

    void append_row(BitVector row);
    BitMatrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;

    /// Row vector times matrix: sum of the rows selected by coeffs.
    BitVector combine(const BitVector& coeffs) const;
    BitMatrix operator*(const BitMatrix& rhs) const;
    BitMatrix& operator^=(const BitMatrix& rhs);
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    std::vector<std::string> to_strings() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Column permutation: entry j is the source column placed at position j.
using ColumnPermutation = std::vector<std::size_t>;

BitMatrix permute_columns(const BitMatrix& m, const ColumnPermutation& perm);
BitVector permute_bits(const BitVector& v, const ColumnPermutation& perm);
ColumnPermutation invert_permutation(const ColumnPermutation& perm);

/// Incrementally built reduced basis. Each stored row owns a pivot column
/// that is clear in every other stored row.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<BitVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residue of v after elimination against the basis.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
    /// Adds v if independent; returns whether it was added.
    bool insert(const BitVector& v);

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const BitMatrix& m);

struct SystematicForm {
    BitMatrix matrix;               ///< [I | A] in permuted column order
    ColumnPermutation permutation;  ///< matrix == RREF(input) with columns permuted
};

/// Reduces a full-row-rank G to [I | A]; pivots take the lowest free column.
/// Throws std::invalid_argument when G is rank deficient.
SystematicForm systematic_form(const BitMatrix& g);

bool row_space_contains(const BitMatrix& g, const BitVector& v);
/// Every row of a lies in the row space of b.
bool row_space_subset(const BitMatrix& a, const BitMatrix& b);

/// Linearly independent rows spanning the row space of m, in input order.
BitMatrix row_basis(const BitMatrix& m);
/// Basis of {x : m x^T = 0}, i.e. the dual of the row space.
BitMatrix null_space(const BitMatrix& m);
/// Coefficients c with c * m == v, or nullopt when v is outside the row space.
/// Rows of m must be independent.
std::optional<BitVector> solve_row_combination(const BitMatrix& m, const BitVector& v);

}  // namespace rmcodes
