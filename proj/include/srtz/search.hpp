#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "srtz/regularity.hpp"
#include "srtz/toeplitz.hpp"

namespace srtz {

enum class SearchStatus {
    Found,
    // Every exponent prefix was tried.
    InsufficientFieldSize,
    // Backtracking disabled and some level had no admissible exponent.
    DeadEnd,
    // SearchOptions::max_candidates reached.
    BudgetExhausted,
};

std::string to_string(SearchStatus s);

struct SearchOptions {
    bool backtracking = true;
    // Upper bound on candidate extensions tested; 0 means unlimited.
    std::uint64_t max_candidates = 0;
};

struct SearchStats {
    std::uint64_t candidates = 0;
    std::uint64_t backtracks = 0;
    // Size of the matrix at which a DeadEnd occurred.
    std::size_t failed_level = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct SearchResult {
    SearchStatus status = SearchStatus::InsufficientFieldSize;
    std::optional<ToeplitzSpec> matrix;
    SearchStats stats;
};

struct PairSearchResult {
    SearchStatus status = SearchStatus::InsufficientFieldSize;
    std::optional<MatrixPair> pair;
    SearchStats stats;
};

// Greedy search with backtracking for an n x n superregular lower-triangular
// Toeplitz matrix. Each level scans exponents 0, 1, ..., 2^p - 2 and accepts
// the first one whose extension keeps every submatrix through the new corner
// entry nonsingular; an exhausted level resumes the previous level just past
// its accepted exponent. The result is the lexicographically first solution.
// Throws UnsupportedDimension for n < 2, NotARoot for a bad omega.
SearchResult greedy_search(const FieldPtr& field, Element omega, std::size_t n, const SearchOptions& options = {});

// The same discipline over exponent pairs (h_a, h_b) in lexicographic order,
// accepting a level when the partial pair is jointly superregular. With
// require_product_preserving the full-size pair must also have a superregular
// product; otherwise the search backtracks.
PairSearchResult greedy_pair_search(const FieldPtr& field, Element omega, std::size_t n,
                                    bool require_product_preserving, const SearchOptions& options = {});

} // namespace srtz
