#include "rmcodes/bitlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rmcodes {

BitVector BitVector::ones(std::size_t length) {
    BitVector v(length);
    std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
    if (length % kWordBits != 0 && !v.words_.empty()) v.words_.back() = (Word{1} << (length % kWordBits)) - 1;
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitVector: expected '0' or '1' in bit string");
    }
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](Word x) { return x == 0; });
}

std::size_t BitVector::lowest_set_bit() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return length_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.length_ != length_) throw std::invalid_argument("BitVector: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector BitVector::rotated(std::size_t k) const {
    BitVector out(length_);
    if (length_ == 0) return out;
    k %= length_;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word x = words_[w];
        while (x) {
            const std::size_t i = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
            x &= x - 1;
            std::size_t j = i + k;
            if (j >= length_) j -= length_;
            out.set(j);
        }
    }
    return out;
}

BitVector BitVector::without(std::size_t position) const {
    if (position >= length_) throw std::out_of_range("BitVector: position out of range");
    BitVector out(length_ - 1);
    for (std::size_t i = 0, j = 0; i < length_; ++i) {
        if (i == position) continue;
        if (get(i)) out.set(j);
        ++j;
    }
    return out;
}

BitVector BitVector::appended(bool bit) const {
    BitVector out(length_ + 1);
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    out.set(length_, bit);
    return out;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::vector<BitVector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.length() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    std::vector<BitVector> data;
    data.reserve(rows.size());
    for (const auto& r : rows) data.push_back(BitVector::from_string(r));
    const std::size_t cols = data.front().length();
    return BitMatrix(std::move(data), cols);
}

void BitMatrix::append_row(BitVector row) {
    if (rows_.empty() && cols_ == 0) cols_ = row.length();
    if (row.length() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.is_zero(); });
}

bool BitMatrix::is_symmetric() const {
    if (rows() != cols_) return false;
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r)) return false;
    return true;
}

BitVector BitMatrix::combine(const BitVector& coeffs) const {
    if (coeffs.length() != rows()) throw std::invalid_argument("BitMatrix: coefficient length mismatch");
    BitVector out(cols_);
    for (std::size_t r = 0; r < rows(); ++r)
        if (coeffs.get(r)) out ^= rows_[r];
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
    if (cols_ != rhs.rows()) throw std::invalid_argument("BitMatrix: dimension mismatch in product");
    BitMatrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r) out.rows_[r] = rhs.combine(rows_[r]);
    return out;
}

BitMatrix& BitMatrix::operator^=(const BitMatrix& rhs) {
    if (rows() != rhs.rows() || cols_ != rhs.cols_) throw std::invalid_argument("BitMatrix: dimension mismatch");
    for (std::size_t r = 0; r < rows(); ++r) rows_[r] ^= rhs.rows_[r];
    return *this;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows());
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
}

BitVector permute_bits(const BitVector& v, const ColumnPermutation& perm) {
    if (perm.size() != v.length()) throw std::invalid_argument("permutation length mismatch");
    BitVector out(v.length());
    for (std::size_t j = 0; j < perm.size(); ++j)
        if (v.get(perm[j])) out.set(j);
    return out;
}

BitMatrix permute_columns(const BitMatrix& m, const ColumnPermutation& perm) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (const auto& r : m.row_data()) rows.push_back(permute_bits(r, perm));
    return BitMatrix(std::move(rows), m.cols());
}

ColumnPermutation invert_permutation(const ColumnPermutation& perm) {
    ColumnPermutation inv(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        if (perm[j] >= perm.size() || inv[perm[j]] != perm.size())
            throw std::invalid_argument("not a permutation");
        inv[perm[j]] = j;
    }
    return inv;
}

BitVector RowEchelon::reduce(BitVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    return v;
}

bool RowEchelon::insert(const BitVector& v) {
    BitVector r = reduce(v);
    const std::size_t p = r.lowest_set_bit();
    if (p == r.length()) return false;
    for (auto& row : rows_)
        if (row.get(p)) row ^= r;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

std::size_t rank(const BitMatrix& m) {
    RowEchelon e(m.cols());
    for (const auto& r : m.row_data()) e.insert(r);
    return e.rank();
}

namespace {

// Gauss-Jordan with the lowest available pivot column; returns pivot columns.
std::vector<std::size_t> reduce_in_place(std::vector<BitVector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t p = next;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[next], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

}  // namespace

SystematicForm systematic_form(const BitMatrix& g) {
    std::vector<BitVector> rows = g.row_data();
    const auto pivots = reduce_in_place(rows, g.cols());
    if (pivots.size() != g.rows()) throw std::invalid_argument("systematic_form: generator is rank deficient");

    ColumnPermutation perm(pivots.begin(), pivots.end());
    std::vector<bool> is_pivot(g.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t c = 0; c < g.cols(); ++c)
        if (!is_pivot[c]) perm.push_back(c);

    return {permute_columns(BitMatrix(std::move(rows), g.cols()), perm), std::move(perm)};
}

bool row_space_contains(const BitMatrix& g, const BitVector& v) {
    if (v.length() != g.cols()) throw std::invalid_argument("row_space_contains: length mismatch");
    RowEchelon e(g.cols());
    for (const auto& r : g.row_data()) e.insert(r);
    return e.contains(v);
}

bool row_space_subset(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("row_space_subset: length mismatch");
    RowEchelon e(b.cols());
    for (const auto& r : b.row_data()) e.insert(r);
    return std::all_of(a.row_data().begin(), a.row_data().end(), [&](const BitVector& r) { return e.contains(r); });
}

BitMatrix row_basis(const BitMatrix& m) {
    RowEchelon e(m.cols());
    BitMatrix out(0, m.cols());
    for (const auto& r : m.row_data())
        if (e.insert(r)) out.append_row(r);
    return out;
}

BitMatrix null_space(const BitMatrix& m) {
    std::vector<BitVector> rows = m.row_data();
    const auto pivots = reduce_in_place(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    // One basis vector per free column f: x_f = 1, x_{pivot_i} = rows[i][f].
    BitMatrix out(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector x(m.cols());
        x.set(f);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i].get(f)) x.set(pivots[i]);
        out.append_row(std::move(x));
    }
    return out;
}

std::optional<BitVector> solve_row_combination(const BitMatrix& m, const BitVector& v) {
    // Augment each row with a unit tag so the elimination tracks coefficients.
    const std::size_t k = m.rows();
    const std::size_t n = m.cols();
    std::vector<BitVector> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        BitVector r(n + k);
        for (std::size_t c = 0; c < n; ++c)
            if (m.get(i, c)) r.set(c);
        r.set(n + i);
        rows.push_back(std::move(r));
    }
    const auto pivots = reduce_in_place(rows, n);
    if (pivots.size() != k) throw std::invalid_argument("solve_row_combination: rows are not independent");

    BitVector target(n + k);
    for (std::size_t c = 0; c < n; ++c)
        if (v.get(c)) target.set(c);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (target.get(pivots[i])) target ^= rows[i];
    for (std::size_t c = 0; c < n; ++c)
        if (target.get(c)) return std::nullopt;

    BitVector coeffs(k);
    for (std::size_t i = 0; i < k; ++i)
        if (target.get(n + i)) coeffs.set(i);
    return coeffs;
}

}  // namespace rmcodes
