#include "rmcodes/table1.hpp"

namespace rmcodes {

const std::vector<Table1Reference>& table1_reference() {
    static const std::vector<Table1Reference> rows = {
        {{4, 2, Family::kEven}, 16, 7, 6, 6, 6},
        {{6, 3, Family::kEven}, 64, 10, 28, 28, 28},
        {{6, 2, Family::kEven}, 64, 16, 24, 24, 24},
        {{8, 4, Family::kEven}, 256, 13, 120, 120, 122},
        {{8, 3, Family::kEven}, 256, 21, 112, 112, 116},
        {{8, 2, Family::kEven}, 256, 29, 96, 96, 111},
        {{3, 1, Family::kOddFirst}, 8, 7, 2, 2, 2},
        {{5, 2, Family::kOddFirst}, 32, 11, 12, 12, 12},
        {{7, 3, Family::kOddFirst}, 128, 15, 56, 56, 56},
        {{7, 2, Family::kOddFirst}, 128, 22, 48, 48, 52},
    };
    return rows;
}

std::vector<Table1Row> reproduce_table1(unsigned threads, std::size_t enumerate_up_to) {
    std::vector<Table1Row> out;
    for (const auto& ref : table1_reference()) {
        const LinearCode code = subcode(ref.spec);
        Table1Row row;
        row.reference = ref;
        row.length = code.length();
        row.dimension = code.dimension();
        if (code.dimension() <= enumerate_up_to) {
            row.method = "enumerate";
            row.min_distance = minimum_distance(code, {threads, 30});
        } else {
            row.method = "coset-rank";
            row.min_distance = minimum_distance_by_cosets(code, ref.spec.m, threads);
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace rmcodes
