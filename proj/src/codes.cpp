#include "rmcodes/codes.hpp"

#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rmcodes {

struct LinearCode::Cache {
    std::once_flag once;
    std::optional<WeightDistribution> weights;
};

LinearCode::LinearCode(BitMatrix generator) : generator_(std::move(generator)), cache_(std::make_shared<Cache>()) {
    if (rank(generator_) != generator_.rows())
        throw std::invalid_argument("LinearCode: generator rows are linearly dependent");
}

LinearCode LinearCode::from_spanning_rows(const BitMatrix& rows) { return LinearCode(row_basis(rows)); }

const WeightDistribution& LinearCode::weights(const EnumerationOptions& options) const {
    std::call_once(cache_->once, [&] { cache_->weights = weight_distribution(*this, options); });
    return *cache_->weights;
}

namespace {

using Word = BitVector::Word;

// Enumerates the 2^low_bits codewords start + span(rows[0 .. low_bits)).
template <std::size_t W>
void gray_fixed(const std::vector<Word>& rows, std::size_t low_bits, const Word* start, std::vector<std::uint64_t>& hist) {
    std::array<Word, W> cur{};
    for (std::size_t i = 0; i < W; ++i) cur[i] = start[i];
    auto weight = [&] {
        std::size_t w = 0;
        for (std::size_t i = 0; i < W; ++i) w += static_cast<std::size_t>(std::popcount(cur[i]));
        return w;
    };
    ++hist[weight()];
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t g = 1; g < steps; ++g) {
        const Word* r = rows.data() + static_cast<std::size_t>(std::countr_zero(g)) * W;
        for (std::size_t i = 0; i < W; ++i) cur[i] ^= r[i];
        ++hist[weight()];
    }
}

void gray_dynamic(const std::vector<Word>& rows, std::size_t words, std::size_t low_bits, const Word* start,
                  std::vector<std::uint64_t>& hist) {
    std::vector<Word> cur(start, start + words);
    auto weight = [&] {
        std::size_t w = 0;
        for (Word x : cur) w += static_cast<std::size_t>(std::popcount(x));
        return w;
    };
    ++hist[weight()];
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t g = 1; g < steps; ++g) {
        const Word* r = rows.data() + static_cast<std::size_t>(std::countr_zero(g)) * words;
        for (std::size_t i = 0; i < words; ++i) cur[i] ^= r[i];
        ++hist[weight()];
    }
}

void gray_subcube(const std::vector<Word>& rows, std::size_t words, std::size_t low_bits, const Word* start,
                  std::vector<std::uint64_t>& hist) {
    switch (words) {
        case 1: gray_fixed<1>(rows, low_bits, start, hist); break;
        case 2: gray_fixed<2>(rows, low_bits, start, hist); break;
        case 4: gray_fixed<4>(rows, low_bits, start, hist); break;
        case 8: gray_fixed<8>(rows, low_bits, start, hist); break;
        default: gray_dynamic(rows, words, low_bits, start, hist); break;
    }
}

}  // namespace

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& options) {
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    if (k > options.budget_bits)
        throw std::length_error("weight_distribution: dimension " + std::to_string(k) + " exceeds enumeration budget of " +
                                std::to_string(options.budget_bits) + " bits");

    const std::size_t words = BitVector::word_count(n);
    std::vector<Word> rows(std::max<std::size_t>(k, 1) * std::max<std::size_t>(words, 1), 0);
    for (std::size_t r = 0; r < k; ++r) {
        auto src = code.generator().row(r).words();
        std::copy(src.begin(), src.end(), rows.begin() + static_cast<std::ptrdiff_t>(r * words));
    }

    const unsigned threads = std::max(1u, options.threads);
    std::size_t top_bits = 0;
    while ((std::size_t{1} << top_bits) < threads && top_bits < k) ++top_bits;
    const std::size_t low_bits = k - top_bits;
    const std::size_t cubes = std::size_t{1} << top_bits;
    const std::size_t workers = std::min<std::size_t>(threads, cubes);

    std::vector<std::vector<std::uint64_t>> hists(workers, std::vector<std::uint64_t>(n + 1, 0));
    auto run = [&](std::size_t worker) {
        std::vector<Word> start(std::max<std::size_t>(words, 1));
        for (std::size_t cube = worker; cube < cubes; cube += workers) {
            std::fill(start.begin(), start.end(), 0);
            for (std::size_t b = 0; b < top_bits; ++b)
                if ((cube >> b) & 1u)
                    for (std::size_t i = 0; i < words; ++i) start[i] ^= rows[(low_bits + b) * words + i];
            gray_subcube(rows, words, low_bits, start.data(), hists[worker]);
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    WeightDistribution out;
    for (const auto& h : hists)
        for (std::size_t w = 0; w <= n; ++w) out.add(w, h[w]);
    return out;
}

std::size_t minimum_distance(const LinearCode& code, const EnumerationOptions& options) {
    if (code.dimension() == 0) throw std::invalid_argument("minimum_distance: zero code");
    return *code.weights(options).min_nonzero_weight();
}

LinearCode extend_parity(const LinearCode& code) {
    BitMatrix g(0, code.length() + 1);
    for (const auto& r : code.generator().row_data()) g.append_row(r.appended(r.parity()));
    return LinearCode(std::move(g));
}

LinearCode puncture(const LinearCode& code, std::size_t position) {
    if (position >= code.length()) throw std::out_of_range("puncture: position out of range");
    BitMatrix g(0, code.length() - 1);
    for (const auto& r : code.generator().row_data()) g.append_row(r.without(position));
    return LinearCode::from_spanning_rows(g);
}

LinearCode dual(const LinearCode& code) { return LinearCode(null_space(code.generator())); }

bool contains_all_one(const LinearCode& code) {
    if (code.length() == 0) return false;
    return row_space_contains(code.generator(), BitVector::ones(code.length()));
}

bool same_code(const LinearCode& a, const LinearCode& b) {
    return a.length() == b.length() && a.dimension() == b.dimension() && row_space_subset(a.generator(), b.generator());
}

bool is_subcode(const LinearCode& inner, const LinearCode& outer) {
    return inner.length() == outer.length() && row_space_subset(inner.generator(), outer.generator());
}

BitMatrix canonical_rm1_generator(unsigned m) {
    const std::size_t n = std::size_t{1} << m;
    BitMatrix g(0, n);
    g.append_row(BitVector::ones(n));
    for (unsigned i = 0; i < m; ++i) {
        BitVector row(n);
        for (std::size_t u = 0; u < n; ++u)
            if ((u >> i) & 1u) row.set(u);
        g.append_row(std::move(row));
    }
    return g;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::kAccepted: return "accepted";
        case Verdict::kWrongParameters: return "wrong parameters";
        case Verdict::kAllOneAbsent: return "all-one word absent despite first-order parameters";
        case Verdict::kColumnsIncomplete: return "columns do not enumerate V^m";
        case Verdict::kCertificateMismatch: return "certificate does not reproduce R(1,m)";
    }
    return "unknown";
}

BitMatrix EquivalenceCertificate::apply(const BitMatrix& generator) const {
    return permute_columns(basis_change * generator, column_permutation);
}

EquivalenceCertificate verify_first_order_rm(const LinearCode& code, const EnumerationOptions& options) {
    EquivalenceCertificate cert;
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();

    if (n < 2 || !std::has_single_bit(n)) {
        cert.reason = "length " + std::to_string(n) + " is not a power of two >= 2";
        return cert;
    }
    const unsigned m = static_cast<unsigned>(std::countr_zero(n));
    cert.m = m;
    if (k != m + 1) {
        cert.reason = "dimension " + std::to_string(k) + " != m + 1 = " + std::to_string(m + 1);
        return cert;
    }
    const std::size_t d = minimum_distance(code, options);
    if (d != n / 2) {
        cert.reason = "minimum distance " + std::to_string(d) + " != 2^(m-1) = " + std::to_string(n / 2);
        return cert;
    }

    const BitVector all_one = BitVector::ones(n);
    const auto all_one_coeffs = solve_row_combination(code.generator(), all_one);
    if (!all_one_coeffs) {
        cert.verdict = Verdict::kAllOneAbsent;
        cert.reason = "[2^m, m+1, 2^(m-1)] code without the all-one word";
        return cert;
    }

    // Complete {1} to a basis with generator rows; these m rows form G_2.
    RowEchelon echelon(n);
    echelon.insert(all_one);
    std::vector<std::size_t> chosen;
    for (std::size_t r = 0; r < k && chosen.size() < m; ++r)
        if (echelon.insert(code.generator().row(r))) chosen.push_back(r);

    std::vector<std::size_t> column_of(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t value = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (code.generator().get(chosen[i], c)) value |= std::size_t{1} << i;
        if (column_of[value] != n) {
            cert.verdict = Verdict::kColumnsIncomplete;
            cert.reason = "columns " + std::to_string(column_of[value]) + " and " + std::to_string(c) + " coincide";
            return cert;
        }
        column_of[value] = c;
    }

    cert.column_permutation = column_of;
    cert.basis_change = BitMatrix(k, k);
    cert.basis_change.row(0) = *all_one_coeffs;
    for (std::size_t i = 0; i < m; ++i) cert.basis_change.set(i + 1, chosen[i]);

    if (cert.apply(code.generator()) != canonical_rm1_generator(m)) {
        cert.verdict = Verdict::kCertificateMismatch;
        cert.reason = "mapped generator differs from canonical R(1,m)";
        return cert;
    }
    cert.verdict = Verdict::kAccepted;
    cert.reason = "equivalent to R(1," + std::to_string(m) + ")";
    return cert;
}

LinearCode read_code(std::istream& in) {
    std::size_t n = 0, k = 0;
    if (!(in >> n >> k)) throw std::invalid_argument("code file: missing 'n k' header");
    if (k > n) throw std::invalid_argument("code file: k exceeds n");
    BitMatrix g(0, n);
    for (std::size_t r = 0; r < k; ++r) {
        std::string line;
        if (!(in >> line)) throw std::invalid_argument("code file: expected " + std::to_string(k) + " generator rows");
        if (line.size() != n) throw std::invalid_argument("code file: row " + std::to_string(r) + " has wrong length");
        g.append_row(BitVector::from_string(line));
    }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("code file: trailing content after generator rows");
    return LinearCode(std::move(g));
}

void write_code(std::ostream& out, const LinearCode& code) {
    out << code.length() << ' ' << code.dimension() << '\n';
    for (const auto& r : code.generator().row_data()) out << r.to_string() << '\n';
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    return read_code(in);
}

void write_code_file(const std::string& path, const LinearCode& code) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write code file: " + path);
    write_code(out, code);
}

}  // namespace rmcodes
