#pragma once

// Precomputed index patterns for the brute-force regularity checks. A pattern
// is a square submatrix of one or two stacked lower-triangular Toeplitz
// blocks, described by (source, row) pairs and columns, all 1-based.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "srtz/galois.hpp"
#include "srtz/toeplitz.hpp"

namespace srtz::detail {

inline constexpr std::size_t kMaxPatternDim = 24;

struct Pattern {
    std::uint8_t size = 0;
    std::array<std::uint8_t, kMaxPatternDim> rows{};
    std::array<std::uint8_t, kMaxPatternDim> cols{};
    std::array<std::uint8_t, kMaxPatternDim> src{};

    Selector selector() const;
};

// Proper selectors of an m x m matrix, in proper_selectors order.
const std::vector<Pattern>& single_patterns(std::size_t m);
// Proper selectors with last row l and first column 1.
const std::vector<Pattern>& single_incremental_patterns(std::size_t l);
// Submatrices of [A; B] (t x t blocks, every lower-triangular entry nonzero)
// that are not trivially rank deficient. The incremental set keeps only those
// using column 1 and touching row t of A or B.
const std::vector<Pattern>& joint_patterns(std::size_t t, bool incremental);

// Determinant of a pattern over lower-triangular Toeplitz blocks given by
// their first columns; columns[s] is the block with source id s.
Element pattern_determinant(const Field& field, const Pattern& p, std::span<const Element* const> columns);

// Same, reading entries from a dense matrix (single source).
Element pattern_determinant(const Field& field, const Pattern& p, const Matrix& m);

} // namespace srtz::detail
