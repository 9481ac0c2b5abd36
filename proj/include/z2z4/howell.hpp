#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "z2z4/word.hpp"

namespace z2z4::detail {

using Z4Row = std::vector<std::uint8_t>;

/// Reduced Howell form of a Z4 row module. Rows have strictly increasing
/// pivot columns with pivot value 1 or 2; the double of every 2-pivot row
/// is spanned by later rows, so greedy left-to-right reduction decides
/// membership exactly.
struct HowellForm {
    std::size_t ncols = 0;
    std::vector<Z4Row> rows;
    std::vector<std::size_t> pivot_cols;

    std::uint8_t pivot_value(std::size_t i) const { return rows[i][pivot_cols[i]]; }
    std::size_t unit_pivot_count() const;
    std::size_t two_pivot_count() const { return rows.size() - unit_pivot_count(); }
    /// log2 of the cardinality of the spanned module.
    std::size_t log2_size() const { return 2 * unit_pivot_count() + two_pivot_count(); }
};

HowellForm howell_form(std::vector<Z4Row> work, std::size_t ncols);

/// Greedy residual of v against rows whose pivot column is < col_limit.
Z4Row reduce(const HowellForm& h, Z4Row v, std::size_t col_limit);
bool reduces_to_zero(const HowellForm& h, const Z4Row& v);

/// Reduced row echelon form over Z2; zero rows are dropped.
std::vector<std::vector<std::uint8_t>> binary_rref(std::vector<std::vector<std::uint8_t>> rows,
                                                   std::size_t ncols);

/// Z4 embeddings of mixed words: an X-entry u is stored as 2u so the whole
/// word lives in Z4^(alpha+beta) with the correct coefficient action.
Z4Row embed_xy(const MixedWord& w);  // X columns first
Z4Row embed_yx(const MixedWord& w);  // Y columns first
MixedWord unembed_xy(const Z4Row& v, std::size_t alpha, std::size_t beta);
MixedWord unembed_yx(const Z4Row& v, std::size_t alpha, std::size_t beta);

HowellForm howell_xy(const MixedMatrix& m);
HowellForm howell_yx(const MixedMatrix& m);

}  // namespace z2z4::detail
