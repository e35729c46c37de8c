#include "srtz/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <vector>

namespace srtz {

namespace {

// Distinct source blocks cycled through the generations.
constexpr std::size_t kSourcePool = 8;

} // namespace

BenchResult bench_generator(const std::optional<ToeplitzSpec>& matrix, const FieldPtr& field, std::size_t k,
                            const BenchOptions& options)
{
    GeneratorStack g = matrix ? GeneratorStack(matrix->field_ptr(), {*matrix}) : GeneratorStack(field, k);
    const Field& f = g.field();
    const std::uint8_t decode_branch = matrix ? 1 : 0;

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint32_t> sym(0, f.order());
    std::vector<Matrix> sources;
    for (std::size_t i = 0; i < kSourcePool; ++i) {
        Matrix s(g.k(), options.packet_size);
        for (std::size_t r = 0; r < s.rows(); ++r)
            for (auto& x : s.row(r))
                x = static_cast<Element>(sym(rng));
        sources.push_back(std::move(s));
    }

    BenchResult result;
    result.k = g.k();
    result.unit_subdiagonal = matrix ? unit_subdiagonal_entries(g.branch_column(1)) : 0;
    result.source_bytes = options.generations * g.k() * options.packet_size * f.degree() / 8;

    {
        std::vector<CodedRow> rows;
        for (auto& row : encode(g, sources[0], 0, &result.ops))
            if (row.branch == decode_branch)
                rows.push_back(std::move(row));
        (void)decode(g, rows, &result.ops);
    }

    double best = std::numeric_limits<double>::infinity();
    std::vector<CodedRow> kept;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(options.repetitions, 1); ++rep) {
        std::size_t checksum = 0;
        const auto start = std::chrono::steady_clock::now();
        for (std::size_t gen = 0; gen < options.generations; ++gen) {
            const Matrix& src = sources[gen % sources.size()];
            auto coded = encode(g, src, static_cast<std::uint32_t>(gen));
            kept.clear();
            for (auto& row : coded)
                if (row.branch == decode_branch)
                    kept.push_back(std::move(row));
            const Matrix out = decode(g, kept);
            checksum += out(0, 0);
        }
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        // Keeps the work observable.
        if (checksum == std::numeric_limits<std::size_t>::max())
            best = 0;
        best = std::min(best, dt.count());
    }
    result.seconds = best;
    result.bytes_per_second = best > 0 ? static_cast<double>(result.source_bytes) / best : 0;
    return result;
}

BenchResult bench_matrix(const ToeplitzSpec& matrix, const BenchOptions& options)
{
    return bench_generator(matrix, matrix.field_ptr(), matrix.n(), options);
}

} // namespace srtz
