#include "srtz/search.hpp"

#include <vector>

#include "patterns.hpp"
#include "srtz/error.hpp"

namespace srtz {

namespace {

using Clock = std::chrono::steady_clock;

bool passes(const Field& field, const std::vector<detail::Pattern>& patterns, std::span<const Element* const> cols)
{
    for (const auto& p : patterns)
        if (detail::pattern_determinant(field, p, cols) == 0)
            return false;
    return true;
}

void check_args(const Field& field, Element omega, std::size_t n)
{
    if (n < 2)
        throw UnsupportedDimension("search needs n >= 2");
    if (n > detail::kMaxPatternDim)
        throw UnsupportedDimension("search supports n <= " + std::to_string(detail::kMaxPatternDim));
    field.require_root(omega);
}

// Level-by-level scan with a cursor stack shared by the single and pair
// searches. `width` is the number of candidates per level; `accept(level,
// candidate)` installs the candidate at position level - 1 of the column(s)
// and tests it. Returns the status and leaves the accepted cursors in `chosen`.
template <typename Accept>
SearchStatus scan_levels(std::size_t n, std::uint64_t width, const SearchOptions& options, SearchStats& stats,
                         std::vector<std::uint64_t>& chosen, Accept accept)
{
    chosen.clear();
    std::size_t level = 2;
    std::uint64_t h = 0;
    while (level <= n) {
        bool advanced = false;
        for (; h < width; ++h) {
            if (options.max_candidates != 0 && stats.candidates >= options.max_candidates)
                return SearchStatus::BudgetExhausted;
            ++stats.candidates;
            if (accept(level, h)) {
                chosen.push_back(h);
                ++level;
                h = 0;
                advanced = true;
                break;
            }
        }
        if (advanced)
            continue;
        if (!options.backtracking) {
            stats.failed_level = level;
            return SearchStatus::DeadEnd;
        }
        if (level == 2)
            return SearchStatus::InsufficientFieldSize;
        --level;
        ++stats.backtracks;
        h = chosen.back() + 1;
        chosen.pop_back();
    }
    return SearchStatus::Found;
}

} // namespace

std::string to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::InsufficientFieldSize: return "insufficient field size";
    case SearchStatus::DeadEnd: return "dead end without backtracking";
    case SearchStatus::BudgetExhausted: return "candidate budget exhausted";
    }
    return "?";
}

SearchResult greedy_search(const FieldPtr& field, Element omega, std::size_t n, const SearchOptions& options)
{
    const Field& f = *field;
    check_args(f, omega, n);
    const auto start = Clock::now();
    for (std::size_t l = 2; l <= n; ++l)
        (void)detail::single_incremental_patterns(l);

    std::vector<Element> col(n, 0);
    col[0] = 1;
    const Element* cols[] = {col.data()};
    SearchResult result;
    std::vector<std::uint64_t> chosen;
    result.status = scan_levels(n, f.order(), options, result.stats, chosen, [&](std::size_t level, std::uint64_t h) {
        col[level - 1] = f.omega_pow(omega, static_cast<Exponent>(h));
        return passes(f, detail::single_incremental_patterns(level), cols);
    });
    if (result.status == SearchStatus::Found)
        result.matrix = ToeplitzSpec(field, omega, std::vector<Exponent>(chosen.begin(), chosen.end()));
    result.stats.elapsed = Clock::now() - start;
    return result;
}

PairSearchResult greedy_pair_search(const FieldPtr& field, Element omega, std::size_t n,
                                    bool require_product_preserving, const SearchOptions& options)
{
    const Field& f = *field;
    check_args(f, omega, n);
    const auto start = Clock::now();
    for (std::size_t l = 2; l <= n; ++l)
        (void)detail::joint_patterns(l, true);
    if (require_product_preserving)
        (void)detail::single_patterns(n);

    const std::uint64_t ord = f.order();
    std::vector<Element> ca(n, 0), cb(n, 0);
    ca[0] = cb[0] = 1;
    const Element* cols[] = {ca.data(), cb.data()};
    PairSearchResult result;
    std::vector<std::uint64_t> chosen;
    result.status = scan_levels(n, ord * ord, options, result.stats, chosen, [&](std::size_t level, std::uint64_t h) {
        const auto ha = static_cast<Exponent>(h / ord);
        const auto hb = static_cast<Exponent>(h % ord);
        if (ha == hb)
            return false;
        ca[level - 1] = f.omega_pow(omega, ha);
        cb[level - 1] = f.omega_pow(omega, hb);
        if (!passes(f, detail::joint_patterns(level, true), cols))
            return false;
        if (require_product_preserving && level == n) {
            const auto prod = toeplitz_product_column(f, std::span<const Element>(ca.data(), level),
                                                      std::span<const Element>(cb.data(), level));
            const Element* pc[] = {prod.data()};
            return passes(f, detail::single_patterns(level), pc);
        }
        return true;
    });
    if (result.status == SearchStatus::Found) {
        std::vector<Exponent> ea, eb;
        for (auto h : chosen) {
            ea.push_back(static_cast<Exponent>(h / ord));
            eb.push_back(static_cast<Exponent>(h % ord));
        }
        result.pair = MatrixPair(ToeplitzSpec(field, omega, std::move(ea)), ToeplitzSpec(field, omega, std::move(eb)));
    }
    result.stats.elapsed = Clock::now() - start;
    return result;
}

} // namespace srtz
