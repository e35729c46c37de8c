#include "srtz/codec.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace srtz {

namespace {

// dst ^= c * src.
void axpy(const Field& f, Element c, std::span<const Element> src, std::span<Element> dst, KernelStats* stats)
{
    if (c == 0)
        return;
    const std::size_t n = dst.size();
    if (c == 1) {
        for (std::size_t i = 0; i < n; ++i)
            dst[i] ^= src[i];
        if (stats)
            stats->xors += n;
        return;
    }
    if (const auto table = f.mul_row(c); !table.empty()) {
        for (std::size_t i = 0; i < n; ++i)
            dst[i] ^= table[src[i]];
    } else {
        for (std::size_t i = 0; i < n; ++i)
            dst[i] ^= f.mul(c, src[i]);
    }
    if (stats)
        stats->multiplies += n;
}

// dst = c * src.
void assign_scaled(const Field& f, Element c, std::span<const Element> src, std::span<Element> dst, KernelStats* stats)
{
    if (c == 1) {
        std::copy(src.begin(), src.end(), dst.begin());
        if (stats)
            stats->copies += dst.size();
        return;
    }
    std::fill(dst.begin(), dst.end(), Element{0});
    axpy(f, c, src, dst, stats);
}

void require_same_field(const Field& a, const Field& b)
{
    if (a.degree() != b.degree() || a.poly() != b.poly())
        throw DimensionMismatch("matrices are over different fields");
}

} // namespace

GeneratorStack::GeneratorStack(FieldPtr field, std::size_t k, EmissionOrder order)
    : field_(std::move(field)), k_(k), order_(order)
{
    if (k_ == 0 || k_ > 0xFFFF)
        throw DimensionMismatch("generation size must be in [1, 65535]");
}

GeneratorStack::GeneratorStack(FieldPtr field, const std::vector<ToeplitzSpec>& branches, EmissionOrder order)
    : GeneratorStack(field, branches.empty() ? 0 : branches.front().n(), order)
{
    for (const auto& spec : branches)
        add_branch(spec);
}

void GeneratorStack::add_branch(std::vector<Element> first_column)
{
    if (first_column.size() != k_)
        throw DimensionMismatch("branch has size " + std::to_string(first_column.size()) + ", generation size is " +
                                std::to_string(k_));
    if (first_column.front() == 0)
        throw DimensionMismatch("branch must have a nonzero diagonal");
    if (m() >= 0xFF)
        throw DimensionMismatch("at most 255 branches");
    for (Element e : first_column)
        if (!field_->contains(e))
            throw DimensionMismatch("branch entry outside the field");
    columns_.push_back(std::move(first_column));
}

void GeneratorStack::add_branch(const ToeplitzSpec& spec)
{
    require_same_field(*field_, spec.field());
    add_branch(spec.first_column());
}

std::span<const Element> GeneratorStack::branch_column(std::size_t j) const
{
    if (j == 0 || j >= m())
        throw IndexOutOfBounds("branch " + std::to_string(j) + " out of range");
    return columns_[j - 1];
}

std::vector<Element> GeneratorStack::coefficient_row(RowId id) const
{
    if (id.branch >= m() || id.row == 0 || id.row > k_)
        throw IndexOutOfBounds("row (" + std::to_string(id.branch) + ", " + std::to_string(id.row) +
                               ") out of range");
    std::vector<Element> out(k_, 0);
    const std::size_t t = id.row - 1;
    if (id.branch == 0) {
        out[t] = 1;
        return out;
    }
    const auto& col = columns_[id.branch - 1];
    for (std::size_t s = 0; s <= t; ++s)
        out[s] = col[t - s];
    return out;
}

Matrix GeneratorStack::coefficient_matrix(std::span<const RowId> ids) const
{
    Matrix out(ids.size(), k_);
    std::vector<RowTag> tags;
    tags.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto row = coefficient_row(ids[i]);
        std::copy(row.begin(), row.end(), out.row(i).begin());
        tags.push_back({ids[i].branch, ids[i].row});
    }
    out.set_tags(std::move(tags));
    return out;
}

std::vector<RowId> GeneratorStack::emission_sequence() const
{
    std::vector<RowId> out;
    out.reserve(m() * k_);
    const auto mm = static_cast<std::uint8_t>(m());
    const auto kk = static_cast<std::uint16_t>(k_);
    if (order_ == EmissionOrder::Interleaved) {
        for (std::uint16_t t = 1; t <= kk; ++t)
            for (std::uint8_t j = 0; j < mm; ++j)
                out.push_back({j, t});
    } else {
        for (std::uint8_t j = 0; j < mm; ++j)
            for (std::uint16_t t = 1; t <= kk; ++t)
                out.push_back({j, t});
    }
    return out;
}

GeneratorStack GeneratorStack::recoded(std::size_t j, const ToeplitzSpec& r) const
{
    require_same_field(*field_, r.field());
    if (r.n() != k_)
        throw DimensionMismatch("recoder size " + std::to_string(r.n()) + " != generation size " + std::to_string(k_));
    GeneratorStack out = *this;
    const auto rc = r.first_column();
    out.columns_.at(j - 1) = toeplitz_product_column(*field_, rc, branch_column(j));
    return out;
}

std::size_t unit_subdiagonal_entries(std::span<const Element> first_column)
{
    const std::size_t k = first_column.size();
    std::size_t count = 0;
    for (std::size_t i = 1; i < k; ++i)
        if (first_column[i] == 1)
            count += k - i;
    return count;
}

std::vector<CodedRow> encode(const GeneratorStack& g, const Matrix& source, std::uint32_t generation,
                             KernelStats* stats)
{
    if (source.rows() != g.k())
        throw DimensionMismatch("source has " + std::to_string(source.rows()) + " rows, generation size is " +
                                std::to_string(g.k()));
    const Field& f = g.field();
    const std::size_t l = source.cols();
    std::vector<CodedRow> out;
    for (const RowId id : g.emission_sequence()) {
        CodedRow row{generation, id.branch, id.row, std::vector<Element>(l, 0)};
        const std::size_t t = id.row - 1;
        if (id.branch == 0) {
            assign_scaled(f, 1, source.row(t), row.payload, stats);
        } else {
            const auto col = g.branch_column(id.branch);
            assign_scaled(f, col[0], source.row(t), row.payload, stats);
            for (std::size_t s = 0; s < t; ++s)
                axpy(f, col[t - s], source.row(s), row.payload, stats);
        }
        out.push_back(std::move(row));
    }
    return out;
}

Undecodable::Undecodable(std::size_t rank, std::size_t k)
    : Error("undecodable: rank " + std::to_string(rank) + " < " + std::to_string(k)), rank_(rank)
{
}

DecodeResult try_decode(const GeneratorStack& g, std::span<const CodedRow> received, KernelStats* stats)
{
    const Field& f = g.field();
    const std::size_t k = g.k();
    const std::size_t n = received.size();
    const std::size_t l = n == 0 ? 0 : received.front().payload.size();
    std::vector<std::vector<Element>> coef(n), data(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = received[i];
        if (r.generation != received.front().generation)
            throw DimensionMismatch("received rows span several generations");
        if (r.payload.size() != l)
            throw DimensionMismatch("payload lengths differ within a generation");
        coef[i] = g.coefficient_row(r.id());
        data[i] = r.payload;
    }

    // Gauss-Jordan over row indices; pivots move to the front of `order`.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::size_t rank = 0;
    for (std::size_t c = 0; c < k && rank < n; ++c) {
        std::size_t p = rank;
        while (p < n && coef[order[p]][c] == 0)
            ++p;
        if (p == n)
            continue;
        std::swap(order[rank], order[p]);
        const std::size_t pr = order[rank];
        if (const Element pv = coef[pr][c]; pv != 1) {
            const Element iv = f.inv(pv);
            for (auto& x : coef[pr])
                x = f.mul(iv, x);
            std::vector<Element> scaled(l);
            assign_scaled(f, iv, data[pr], scaled, stats);
            data[pr] = std::move(scaled);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t r = order[i];
            const Element factor = coef[r][c];
            if (i == rank || factor == 0)
                continue;
            for (std::size_t cc = c; cc < k; ++cc)
                coef[r][cc] ^= f.mul(factor, coef[pr][cc]);
            axpy(f, factor, data[pr], data[r], stats);
        }
        ++rank;
    }

    DecodeResult result;
    result.rank = rank;
    if (rank == k) {
        Matrix s(k, l);
        // Full rank means column i found its pivot at position i; that row
        // has been reduced to the unit vector e_i.
        for (std::size_t i = 0; i < k; ++i)
            std::copy(data[order[i]].begin(), data[order[i]].end(), s.row(i).begin());
        result.source = std::move(s);
    }
    return result;
}

Matrix decode(const GeneratorStack& g, std::span<const CodedRow> received, KernelStats* stats)
{
    auto result = try_decode(g, received, stats);
    if (!result.source)
        throw Undecodable(result.rank, g.k());
    return std::move(*result.source);
}

std::vector<CodedRow> recode(std::span<const CodedRow> branch_rows, const ToeplitzSpec& r, KernelStats* stats)
{
    const std::size_t k = r.n();
    if (branch_rows.size() != k)
        throw DimensionMismatch("recoding needs all " + std::to_string(k) + " rows of the branch, got " +
                                std::to_string(branch_rows.size()));
    std::vector<const CodedRow*> by_row(k, nullptr);
    for (const auto& row : branch_rows) {
        if (row.branch != branch_rows.front().branch || row.generation != branch_rows.front().generation)
            throw DimensionMismatch("recoding input mixes branches or generations");
        if (row.row == 0 || row.row > k || by_row[row.row - 1] != nullptr)
            throw DimensionMismatch("recoding input must hold rows 1.." + std::to_string(k) + " exactly once");
        if (row.payload.size() != branch_rows.front().payload.size())
            throw DimensionMismatch("payload lengths differ within a generation");
        by_row[row.row - 1] = &row;
    }
    const Field& f = r.field();
    const auto col = r.first_column();
    std::vector<CodedRow> out;
    out.reserve(k);
    for (std::size_t t = 0; t < k; ++t) {
        const CodedRow& base = *by_row[t];
        CodedRow row{base.generation, base.branch, base.row, std::vector<Element>(base.payload.size(), 0)};
        assign_scaled(f, col[0], base.payload, row.payload, stats);
        for (std::size_t s = 0; s < t; ++s)
            axpy(f, col[t - s], by_row[s]->payload, row.payload, stats);
        out.push_back(std::move(row));
    }
    return out;
}

DecodeOutcome simulate(const GeneratorStack& g, const Matrix& source, const std::set<RowId>& erasures)
{
    DecodeOutcome outcome;
    std::vector<CodedRow> kept;
    for (auto& row : encode(g, source)) {
        if (erasures.count(row.id()))
            continue;
        outcome.received.push_back(row.id());
        kept.push_back(std::move(row));
    }
    auto result = try_decode(g, kept);
    outcome.rank = result.rank;
    outcome.success = result.source.has_value();
    outcome.exact = outcome.success && *result.source == source;
    return outcome;
}

} // namespace srtz
