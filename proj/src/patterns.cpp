#include "patterns.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

#include "srtz/error.hpp"

namespace srtz::detail {

namespace {

bool next_combination(std::vector<std::size_t>& v, std::size_t hi)
{
    const std::size_t r = v.size();
    for (std::size_t i = r; i-- > 0;) {
        if (v[i] < hi - (r - 1 - i)) {
            ++v[i];
            for (std::size_t j = i + 1; j < r; ++j)
                v[j] = v[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t r)
{
    std::vector<std::size_t> v(r);
    std::iota(v.begin(), v.end(), std::size_t{1});
    return v;
}

void require_dim(std::size_t m)
{
    if (m == 0 || m > kMaxPatternDim)
        throw UnsupportedDimension("brute-force dimension must be in [1, " + std::to_string(kMaxPatternDim) +
                                   "], got " + std::to_string(m));
}

std::vector<Pattern> build_single(std::size_t m, bool incremental)
{
    std::vector<Pattern> out;
    for_each_proper_selector(m, [&](const Selector& s) {
        if (incremental && (s.rows.back() != m || s.cols.front() != 1))
            return true;
        Pattern p;
        p.size = static_cast<std::uint8_t>(s.size());
        for (std::size_t t = 0; t < s.size(); ++t) {
            p.rows[t] = static_cast<std::uint8_t>(s.rows[t]);
            p.cols[t] = static_cast<std::uint8_t>(s.cols[t]);
        }
        out.push_back(p);
        return true;
    });
    return out;
}

// Rows of a lower-triangular block restricted to columns H have prefix
// supports #{h in H : h <= row}; sorted, the matrix is trivially rank
// deficient iff some sorted support falls below its position.
bool trivially_deficient(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& cols)
{
    std::vector<std::size_t> support;
    support.reserve(row_idx.size());
    for (std::size_t j : row_idx)
        support.push_back(static_cast<std::size_t>(std::upper_bound(cols.begin(), cols.end(), j) - cols.begin()));
    std::sort(support.begin(), support.end());
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i] < i + 1)
            return true;
    return false;
}

std::vector<Pattern> build_joint(std::size_t t, bool incremental)
{
    std::vector<Pattern> out;
    for (std::size_t r = 1; r <= 2 * t && r <= t; ++r) {
        for (std::size_t a = std::min(r, t) + 1; a-- > 0;) {
            const std::size_t b = r - a;
            if (b > t)
                continue;
            auto ra = first_combination(a);
            do {
                auto rb = first_combination(b);
                do {
                    std::vector<std::size_t> all(ra);
                    all.insert(all.end(), rb.begin(), rb.end());
                    const std::size_t top = *std::max_element(all.begin(), all.end());
                    if (incremental && top != t)
                        continue;
                    auto h = first_combination(r);
                    do {
                        if (incremental && h.front() != 1)
                            continue;
                        if (trivially_deficient(all, h))
                            continue;
                        Pattern p;
                        p.size = static_cast<std::uint8_t>(r);
                        for (std::size_t i = 0; i < r; ++i) {
                            p.rows[i] = static_cast<std::uint8_t>(all[i]);
                            p.src[i] = i < a ? 0 : 1;
                            p.cols[i] = static_cast<std::uint8_t>(h[i]);
                        }
                        out.push_back(p);
                    } while (next_combination(h, t));
                } while (b > 0 && next_combination(rb, t));
            } while (a > 0 && next_combination(ra, t));
        }
    }
    return out;
}

template <typename Build>
const std::vector<Pattern>& cached(int kind, std::size_t m, Build build)
{
    static std::mutex mu;
    static std::map<std::pair<int, std::size_t>, std::unique_ptr<const std::vector<Pattern>>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{kind, m}];
    if (!slot)
        slot = std::make_unique<const std::vector<Pattern>>(build());
    return *slot;
}

template <typename Entry>
Element det_with(const Field& field, std::size_t n, Entry entry)
{
    std::array<Element, kMaxPatternDim * kMaxPatternDim> buf;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            buf[i * n + j] = entry(i, j);
    return determinant_in_place(field, std::span<Element>(buf.data(), n * n), n);
}

} // namespace

Selector Pattern::selector() const
{
    Selector s;
    for (std::size_t t = 0; t < size; ++t) {
        s.rows.push_back(rows[t]);
        s.cols.push_back(cols[t]);
    }
    return s;
}

const std::vector<Pattern>& single_patterns(std::size_t m)
{
    require_dim(m);
    return cached(0, m, [m] { return build_single(m, false); });
}

const std::vector<Pattern>& single_incremental_patterns(std::size_t l)
{
    require_dim(l);
    return cached(1, l, [l] { return build_single(l, true); });
}

const std::vector<Pattern>& joint_patterns(std::size_t t, bool incremental)
{
    require_dim(t);
    return cached(incremental ? 3 : 2, t, [t, incremental] { return build_joint(t, incremental); });
}

Element pattern_determinant(const Field& field, const Pattern& p, std::span<const Element* const> columns)
{
    return det_with(field, p.size, [&](std::size_t i, std::size_t j) -> Element {
        const std::size_t r = p.rows[i], c = p.cols[j];
        return r >= c ? columns[p.src[i]][r - c] : Element{0};
    });
}

Element pattern_determinant(const Field& field, const Pattern& p, const Matrix& m)
{
    return det_with(field, p.size, [&](std::size_t i, std::size_t j) { return m(p.rows[i] - 1, p.cols[j] - 1); });
}

} // namespace srtz::detail
