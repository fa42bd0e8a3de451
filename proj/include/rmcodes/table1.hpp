#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rmcodes/rm.hpp"

namespace rmcodes {

/// One published column of the sub-code table. d_minus / d_plus are the
/// best-known lower and upper bounds for linear codes of the same length and
/// dimension, shipped as reference constants (they come from external code
/// tables and are not recomputed).
struct Table1Reference {
    SubcodeSpec spec;
    std::size_t length;
    std::size_t dimension;
    std::size_t d_minus;
    std::size_t min_distance;
    std::size_t d_plus;
};

const std::vector<Table1Reference>& table1_reference();

struct Table1Row {
    Table1Reference reference;
    std::size_t length = 0;        ///< of the constructed code
    std::size_t dimension = 0;     ///< of the constructed code
    std::size_t min_distance = 0;  ///< computed
    std::string method;            ///< "enumerate" or "coset-rank"

    bool matches() const {
        return length == reference.length && dimension == reference.dimension && min_distance == reference.min_distance;
    }
};

/// Rebuilds every code and computes its minimum distance. Codes with
/// dimension above `enumerate_up_to` use the coset-rank method.
std::vector<Table1Row> reproduce_table1(unsigned threads = 1, std::size_t enumerate_up_to = 21);

}  // namespace rmcodes
