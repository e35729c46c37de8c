#pragma once

// Encode + decode throughput of a rate-1/2 generator, decoding from the
// Toeplitz branch alone so every coefficient of the matrix is exercised.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "srtz/codec.hpp"
#include "srtz/toeplitz.hpp"

namespace srtz {

struct BenchOptions {
    // Symbols per coded row.
    std::size_t packet_size = 1600;
    std::size_t generations = 200;
    // The fastest of this many timed passes is reported.
    std::size_t repetitions = 5;
    std::uint64_t seed = 1;
};

struct BenchResult {
    std::size_t k = 0;
    std::size_t unit_subdiagonal = 0;
    // Kernel operations for one generation (encode + decode).
    KernelStats ops;
    double seconds = 0;
    std::uint64_t source_bytes = 0;
    double bytes_per_second = 0;
};

// With a matrix: identity + matrix, decoded from the matrix rows. Without
// one: identity only (plain copies), decoded from the systematic rows; k is
// then required.
BenchResult bench_generator(const std::optional<ToeplitzSpec>& matrix, const FieldPtr& field, std::size_t k,
                            const BenchOptions& options);
BenchResult bench_matrix(const ToeplitzSpec& matrix, const BenchOptions& options);

} // namespace srtz
