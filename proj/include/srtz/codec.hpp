#pragma once

// Rate-1/m systematic erasure code built from an identity block and m - 1
// lower-triangular Toeplitz blocks. Coded row t of every block depends only
// on source rows 1..t, so rows can be emitted as soon as their source rows
// are available.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "srtz/error.hpp"
#include "srtz/galois.hpp"
#include "srtz/toeplitz.hpp"

namespace srtz {

enum class EmissionOrder {
    // For each t = 1..k: identity row t, branch-1 row t, ..., branch-(m-1) row t.
    Interleaved,
    // All rows of branch 0, then all rows of branch 1, ...
    Blockwise,
};

// Address of a generator row: branch 0 is the identity, row is 1-based.
struct RowId {
    std::uint8_t branch = 0;
    std::uint16_t row = 1;

    friend auto operator<=>(const RowId&, const RowId&) = default;
};

class GeneratorStack {
public:
    // Identity branch only.
    GeneratorStack(FieldPtr field, std::size_t k, EmissionOrder order = EmissionOrder::Interleaved);
    // Identity plus one branch per spec; all specs must share the field and
    // size k. Throws DimensionMismatch.
    GeneratorStack(FieldPtr field, const std::vector<ToeplitzSpec>& branches,
                   EmissionOrder order = EmissionOrder::Interleaved);

    // Appends a lower-triangular Toeplitz branch given by its first column,
    // which must have length k and nonzero leading entry. Throws
    // DimensionMismatch.
    void add_branch(std::vector<Element> first_column);
    void add_branch(const ToeplitzSpec& spec);

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::size_t k() const noexcept { return k_; }
    // Number of branches including the identity.
    std::size_t m() const noexcept { return columns_.size() + 1; }
    EmissionOrder order() const noexcept { return order_; }

    // First column of branch j (1 <= j < m); branch 0 is the identity.
    std::span<const Element> branch_column(std::size_t j) const;

    // Row of the generator named by id, length k. Throws IndexOutOfBounds.
    std::vector<Element> coefficient_row(RowId id) const;
    // Stacked coefficient rows, tagged with their origin.
    Matrix coefficient_matrix(std::span<const RowId> ids) const;

    // All m*k rows in emission order.
    std::vector<RowId> emission_sequence() const;

    // Copy with branch j replaced by r * A_j, the effect of recoding that
    // branch through r at an intermediate node. Throws DimensionMismatch.
    GeneratorStack recoded(std::size_t j, const ToeplitzSpec& r) const;

private:
    FieldPtr field_;
    std::size_t k_;
    EmissionOrder order_;
    std::vector<std::vector<Element>> columns_;
};

struct CodedRow {
    std::uint32_t generation = 0;
    std::uint8_t branch = 0;
    std::uint16_t row = 1;
    std::vector<Element> payload;

    RowId id() const noexcept { return {branch, row}; }
};

// Symbol-level operation counts of the row kernels. A coefficient of 1 is
// applied as a plain XOR (or copy), any other nonzero coefficient through
// the multiplication table.
struct KernelStats {
    std::uint64_t copies = 0;
    std::uint64_t xors = 0;
    std::uint64_t multiplies = 0;
};

// Number of entries equal to 1 strictly below the diagonal of the k x k
// lower-triangular Toeplitz matrix with this first column.
std::size_t unit_subdiagonal_entries(std::span<const Element> first_column);

// Encodes a k x l source block. Throws DimensionMismatch.
std::vector<CodedRow> encode(const GeneratorStack& g, const Matrix& source, std::uint32_t generation = 0,
                             KernelStats* stats = nullptr);

class Undecodable : public Error {
public:
    Undecodable(std::size_t rank, std::size_t k);
    std::size_t rank() const noexcept { return rank_; }

private:
    std::size_t rank_;
};

struct DecodeResult {
    std::size_t rank = 0;
    // Present iff rank == k.
    std::optional<Matrix> source;
};

// Gaussian elimination over the generator rows named by the received rows.
// Rows must come from one generation and share the payload length; duplicates
// are harmless. Throws DimensionMismatch.
DecodeResult try_decode(const GeneratorStack& g, std::span<const CodedRow> received, KernelStats* stats = nullptr);
// Throws Undecodable with the achieved rank when it is below k.
Matrix decode(const GeneratorStack& g, std::span<const CodedRow> received, KernelStats* stats = nullptr);

// Recombines all k rows of one branch through r, producing rows whose
// coefficient matrix is r * A (see GeneratorStack::recoded). Input rows may be
// in any order. Throws DimensionMismatch.
std::vector<CodedRow> recode(std::span<const CodedRow> branch_rows, const ToeplitzSpec& r,
                             KernelStats* stats = nullptr);

struct DecodeOutcome {
    std::vector<RowId> received;
    std::size_t rank = 0;
    bool success = false;
    // Recovered block equals the source bit for bit.
    bool exact = false;
};

// encode -> drop erased rows -> decode.
DecodeOutcome simulate(const GeneratorStack& g, const Matrix& source, const std::set<RowId>& erasures);

} // namespace srtz
