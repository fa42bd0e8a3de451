#include "rmcodes/rm.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

#include "rmcodes/cyclic.hpp"

namespace rmcodes {

namespace {

void check_m(unsigned m, unsigned lo, unsigned hi, const char* what) {
    if (m < lo || m > hi)
        throw std::invalid_argument(std::string(what) + ": m=" + std::to_string(m) + " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "]");
}

BitVector monomial(unsigned m, std::uint32_t mask) {
    const std::size_t n = std::size_t{1} << m;
    BitVector row(n);
    for (std::size_t u = 0; u < n; ++u)
        if ((u & mask) == mask) row.set(u);
    return row;
}

// Symplectic matrix packed as one word per row.
using PackedMatrix = std::array<std::uint32_t, 16>;

PackedMatrix pack(const BitMatrix& b) {
    PackedMatrix p{};
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b.get(i, j)) p[i] |= 1u << j;
    return p;
}

unsigned packed_rank(PackedMatrix rows, unsigned m) {
    unsigned r = 0;
    for (unsigned i = 0; i < m; ++i) {
        const std::uint32_t v = rows[i];
        if (v == 0) continue;
        const std::uint32_t pivot = v & (~v + 1);
        for (unsigned j = i + 1; j < m; ++j)
            if (rows[j] & pivot) rows[j] ^= v;
        ++r;
    }
    return r;
}

}  // namespace

LinearCode orthogonal(unsigned m) {
    check_m(m, 1, 16, "orthogonal");
    BitMatrix g(0, std::size_t{1} << m);
    for (unsigned i = 0; i < m; ++i) g.append_row(monomial(m, 1u << i));
    return LinearCode(std::move(g));
}

LinearCode rm1(unsigned m) {
    check_m(m, 1, 16, "rm1");
    return LinearCode(canonical_rm1_generator(m));
}

LinearCode rm2(unsigned m) {
    check_m(m, 2, 8, "rm2");
    BitMatrix g = canonical_rm1_generator(m);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = i + 1; j < m; ++j) g.append_row(monomial(m, (1u << i) | (1u << j)));
    return LinearCode(std::move(g));
}

LinearCode simplex(unsigned m) {
    check_m(m, 2, 16, "simplex");
    return puncture(orthogonal(m), 0);
}

const char* to_string(Family f) {
    switch (f) {
        case Family::kEven: return "even";
        case Family::kOddFirst: return "odd1";
        case Family::kOddSecond: return "odd2";
    }
    return "unknown";
}

unsigned SubcodeSpec::t() const { return family == Family::kEven ? (m - 2) / 2 : (m - 1) / 2; }

unsigned SubcodeSpec::max_h() const { return family == Family::kEven ? t() + 1 : t(); }

void SubcodeSpec::validate() const {
    const std::string label = std::string("subcode(") + to_string(family) + ", m=" + std::to_string(m) + ", d=" + std::to_string(d) + ")";
    if (family == Family::kEven) {
        if (m % 2 != 0 || m < 2 || m > 16) throw std::invalid_argument(label + ": even family needs even m in [2, 16]");
    } else {
        if (m % 2 == 0 || m < 3 || m > 15) throw std::invalid_argument(label + ": odd families need odd m in [3, 15]");
    }
    if (d < 1 || d > max_h()) throw std::invalid_argument(label + ": d must lie in [1, " + std::to_string(max_h()) + "]");
}

CodeParameters expected_parameters(const SubcodeSpec& spec) {
    spec.validate();
    const std::size_t m = spec.m;
    const std::size_t t = spec.t();
    CodeParameters p;
    p.length = std::size_t{1} << m;
    p.dimension = m * (t - spec.d + 2) + 1 + (spec.family == Family::kEven ? m / 2 : 0);
    p.min_distance = (std::size_t{1} << (m - 1)) - (std::size_t{1} << (m - spec.d - 1));
    return p;
}

std::vector<std::uint32_t> idempotent_representatives(const SubcodeSpec& spec) {
    spec.validate();
    std::vector<std::uint32_t> reps = {0, 1};
    unsigned lo = spec.d, hi = spec.max_h();
    if (spec.family == Family::kOddSecond) {
        lo = 1;
        hi = spec.t() - spec.d + 1;
    }
    for (unsigned j = lo; j <= hi; ++j) reps.push_back(1u + (1u << j));
    return reps;
}

std::set<std::size_t> claimed_weight_set(const SubcodeSpec& spec) {
    spec.validate();
    const std::size_t half = std::size_t{1} << (spec.m - 1);
    std::set<std::size_t> w = {0, half, std::size_t{1} << spec.m};
    for (unsigned h = spec.d; h <= spec.max_h(); ++h) {
        w.insert(half - (std::size_t{1} << (spec.m - h - 1)));
        w.insert(half + (std::size_t{1} << (spec.m - h - 1)));
    }
    return w;
}

ColumnPermutation cyclic_to_boolean_order(const FieldTable& field) {
    const std::size_t n = field.order();
    ColumnPermutation perm(n + 1);
    perm[0] = n;
    for (std::uint32_t p = 1; p <= n; ++p) perm[p] = field.log({p});
    return perm;
}

LinearCode subcode(const SubcodeSpec& spec, const FieldTable& field) {
    spec.validate();
    if (field.degree() != spec.m) throw std::invalid_argument("subcode: field degree does not match m");
    if (spec.m == 2) return rm2(2);

    const RingPolynomial e = idempotent_sum(idempotent_representatives(spec), field);
    const LinearCode extended = extend_parity(cyclic_code_from_idempotent(e));
    return LinearCode(permute_columns(extended.generator(), cyclic_to_boolean_order(field)));
}

LinearCode subcode(const SubcodeSpec& spec) {
    spec.validate();
    return subcode(spec, FieldTable(spec.m));
}

BooleanFunction CosetDecomposition::representative(std::uint64_t index) const {
    BooleanFunction f(m);
    for (std::size_t i = 0; i < complement.size(); ++i)
        if ((index >> i) & 1u) f ^= complement[i];
    return f;
}

BitMatrix CosetDecomposition::symplectic_matrix(std::uint64_t index) const {
    BitMatrix b(m, m);
    for (std::size_t i = 0; i < symplectic.size(); ++i)
        if ((index >> i) & 1u) b ^= symplectic[i];
    return b;
}

CosetDecomposition decompose_over_rm1(const LinearCode& code, unsigned m) {
    check_m(m, 1, 16, "decompose_over_rm1");
    if (code.length() != (std::size_t{1} << m)) throw std::invalid_argument("decompose_over_rm1: length is not 2^m");
    const BitMatrix base = canonical_rm1_generator(m);
    if (!row_space_subset(base, code.generator()))
        throw std::invalid_argument("decompose_over_rm1: code does not contain R(1," + std::to_string(m) + ")");

    RowEchelon echelon(code.length());
    for (const auto& r : base.row_data()) echelon.insert(r);
    CosetDecomposition out;
    out.m = m;
    for (const auto& r : code.generator().row_data()) {
        if (!echelon.insert(r)) continue;
        BooleanFunction f(m, r);
        out.symplectic.push_back(polarize(f));
        out.complement.push_back(std::move(f));
    }
    return out;
}

std::vector<std::uint64_t> coset_rank_histogram(const CosetDecomposition& cosets, unsigned threads) {
    const unsigned m = cosets.m;
    const std::size_t q = cosets.complement.size();
    if (q > 40) throw std::length_error("coset_rank_histogram: too many cosets");
    std::vector<PackedMatrix> gens;
    gens.reserve(q);
    for (const auto& b : cosets.symplectic) gens.push_back(pack(b));

    threads = std::max(1u, threads);
    std::size_t top_bits = 0;
    while ((std::size_t{1} << top_bits) < threads && top_bits < q) ++top_bits;
    const std::size_t low_bits = q - top_bits;
    const std::size_t cubes = std::size_t{1} << top_bits;
    const std::size_t workers = std::min<std::size_t>(threads, cubes);

    std::vector<std::vector<std::uint64_t>> hists(workers, std::vector<std::uint64_t>(m + 1, 0));
    auto run = [&](std::size_t worker) {
        auto& hist = hists[worker];
        for (std::size_t cube = worker; cube < cubes; cube += workers) {
            PackedMatrix cur{};
            for (std::size_t b = 0; b < top_bits; ++b)
                if ((cube >> b) & 1u)
                    for (unsigned i = 0; i < m; ++i) cur[i] ^= gens[low_bits + b][i];
            ++hist[packed_rank(cur, m)];
            const std::uint64_t steps = std::uint64_t{1} << low_bits;
            for (std::uint64_t g = 1; g < steps; ++g) {
                const auto& step = gens[static_cast<std::size_t>(std::countr_zero(g))];
                for (unsigned i = 0; i < m; ++i) cur[i] ^= step[i];
                ++hist[packed_rank(cur, m)];
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    std::vector<std::uint64_t> total(m + 1, 0);
    for (const auto& h : hists)
        for (unsigned r = 0; r <= m; ++r) total[r] += h[r];
    return total;
}

WeightDistribution weight_distribution_by_cosets(const LinearCode& code, unsigned m, unsigned threads) {
    const auto hist = coset_rank_histogram(decompose_over_rm1(code, m), threads);
    WeightDistribution out;
    for (unsigned r = 0; r <= m; ++r) {
        if (hist[r] == 0) continue;
        if (r % 2 != 0) throw std::logic_error("weight_distribution_by_cosets: odd symplectic rank");
        const WeightDistribution coset = coset_weight_distribution_for_half_rank(r / 2, m);
        for (auto [w, c] : coset.counts()) out.add(w, c * hist[r]);
    }
    return out;
}

std::size_t minimum_distance_by_cosets(const LinearCode& code, unsigned m, unsigned threads) {
    return *weight_distribution_by_cosets(code, m, threads).min_nonzero_weight();
}

bool check_nesting(unsigned m, Family family) {
    SubcodeSpec spec{m, 1, family};
    spec.validate();
    const FieldTable field(m);
    const unsigned top = spec.max_h();
    LinearCode inner = subcode({m, top, family}, field);
    for (unsigned d = top; d > 1; --d) {
        LinearCode outer = subcode({m, d - 1, family}, field);
        if (!is_subcode(inner, outer)) return false;
        inner = std::move(outer);
    }
    return true;
}

bool check_nesting(unsigned m) {
    if (m % 2 == 0) return check_nesting(m, Family::kEven);
    return check_nesting(m, Family::kOddFirst) && check_nesting(m, Family::kOddSecond);
}

bool SymplecticGroup::contains(const BitMatrix& b) const { return std::find(elements.begin(), elements.end(), b) != elements.end(); }

bool SymplecticGroup::is_closed_under_xor() const {
    for (const auto& a : elements)
        for (const auto& b : elements) {
            BitMatrix s = a;
            s ^= b;
            if (!contains(s)) return false;
        }
    return true;
}

SymplecticGroup symplectic_group(unsigned m, const FieldTable& field) {
    if (m % 2 != 0) throw std::invalid_argument("symplectic_group: m must be even");
    check_m(m, 2, 12, "symplectic_group");
    const auto cosets = decompose_over_rm1(subcode({m, m / 2, Family::kEven}, field), m);
    SymplecticGroup g;
    g.m = m;
    for (std::uint64_t c = 0; c < cosets.coset_count(); ++c) g.elements.push_back(cosets.symplectic_matrix(c));
    return g;
}

SymplecticGroup symplectic_group(unsigned m) {
    if (m % 2 != 0) throw std::invalid_argument("symplectic_group: m must be even");
    check_m(m, 2, 12, "symplectic_group");
    return symplectic_group(m, FieldTable(m));
}

bool rank_lower_bound_check(const SubcodeSpec& spec, const FieldTable& field, unsigned threads) {
    spec.validate();
    if (spec.family != Family::kEven) throw std::invalid_argument("rank_lower_bound_check: even family only");
    const auto cosets = decompose_over_rm1(subcode(spec, field), spec.m);
    const auto hist = coset_rank_histogram(cosets, threads);

    // The trivial coset (R(1,m) itself) is the only one allowed below 2d.
    if (hist[0] != 1) return false;
    for (unsigned r = 1; r < 2 * spec.d && r <= spec.m; ++r)
        if (hist[r] != 0) return false;

    if (spec.d == spec.max_h()) {
        if (hist[spec.m] != cosets.coset_count() - 1) return false;
        for (std::uint64_t c = 1; c < cosets.coset_count(); ++c)
            if (!is_bent(cosets.representative(c))) return false;
    }
    return true;
}

}  // namespace rmcodes
