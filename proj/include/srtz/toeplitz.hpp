#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "srtz/galois.hpp"

namespace srtz {

// n x n lower-triangular Toeplitz matrix with first column
// [1, w^i_1, ..., w^i_{n-1}] over a field whose polynomial has root w.
class ToeplitzSpec {
public:
    // Throws NotARoot, or std::out_of_range for an exponent >= 2^p - 1.
    ToeplitzSpec(FieldPtr field, Element omega, std::vector<Exponent> exponents);

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    Element omega() const noexcept { return omega_; }
    std::size_t n() const noexcept { return exponents_.size() + 1; }
    std::span<const Exponent> exponents() const noexcept { return exponents_; }

    // [1, w^i_1, ..., w^i_{n-1}]
    std::vector<Element> first_column() const;

    friend bool operator==(const ToeplitzSpec& a, const ToeplitzSpec& b)
    {
        return a.field_->degree() == b.field_->degree() && a.field_->poly() == b.field_->poly() &&
               a.omega_ == b.omega_ && a.exponents_ == b.exponents_;
    }

private:
    FieldPtr field_;
    Element omega_;
    std::vector<Exponent> exponents_;
};

// Origin of a matrix row when rows of several generator blocks are stacked.
struct RowTag {
    std::uint8_t source = 0;  // 0 = A, 1 = B, ...
    std::uint16_t row = 0;    // 1-based row index within the source

    friend bool operator==(const RowTag&, const RowTag&) = default;
};

// Row-major dense matrix of field elements. The field is supplied to the
// algorithms that need it.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Element> data);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    // 0-based access.
    Element operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Element& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Element> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Element> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Element> data() const noexcept { return data_; }

    // Empty unless rows were assembled from tagged sources.
    std::span<const RowTag> tags() const noexcept { return tags_; }
    void set_tags(std::vector<RowTag> tags);

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
    std::vector<RowTag> tags_;
};

// Square submatrix index lists, 1-based and strictly increasing.
struct Selector {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;

    std::size_t size() const noexcept { return rows.size(); }
    // Rows dominate columns position-wise: rows[t] >= cols[t].
    bool dominated() const noexcept;

    friend bool operator==(const Selector&, const Selector&) = default;
};

Matrix psi(const ToeplitzSpec& spec);

// Lower-triangular Toeplitz matrix from an arbitrary first column.
Matrix lower_toeplitz(std::span<const Element> first_column);

ToeplitzSpec phi_extend(const ToeplitzSpec& spec, Exponent next);

// Inverse exponent map: a ToeplitzSpec whose psi has the given first column,
// or nullopt if the column does not start with 1 or contains a zero.
std::optional<ToeplitzSpec> spec_from_column(FieldPtr field, Element omega, std::span<const Element> column);

// Throws IndexOutOfBounds.
Matrix submatrix(const Matrix& m, const Selector& s);

// Gaussian elimination, pivoting on the first nonzero entry of each column.
// Throws NotSquare.
Element determinant(const Field& field, const Matrix& m);

// Determinant of an n x n row-major matrix held in scratch storage, which is
// destroyed.
Element determinant_in_place(const Field& field, std::span<Element> a, std::size_t n);

// Determinant of m restricted to s without materializing the submatrix.
Element submatrix_determinant(const Field& field, const Matrix& m, const Selector& s);

std::size_t rank(const Field& field, const Matrix& m);

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);

// First column of the product / inverse of lower-triangular Toeplitz matrices
// given by their first columns (Toeplitz matrices of this shape commute).
std::vector<Element> toeplitz_product_column(const Field& field, std::span<const Element> a, std::span<const Element> b);
// Throws DivideByZero if a[0] == 0.
std::vector<Element> toeplitz_inverse_column(const Field& field, std::span<const Element> a);

// Every selector (J, H) of size 1..m with J >= H position-wise. Order: by size,
// then rows lexicographically, then columns lexicographically. The visitor
// returns false to stop early; the function returns false if stopped.
bool for_each_proper_selector(std::size_t m, const std::function<bool(const Selector&)>& visit);
std::vector<Selector> proper_selectors(std::size_t m);

// Proper selectors of an l x l matrix whose last row is l and first column is
// 1, sizes 1..l. For lower-triangular Toeplitz matrices every other proper
// submatrix equals one of the leading (l-1) x (l-1) block, so this is the set
// to test when extending a superregular matrix by one row.
std::vector<Selector> incremental_selectors(std::size_t l);

// Sort rows by nondecreasing support (stable); true if some row i (1-based)
// has support < i. Throws NotSquare.
bool is_trivially_rank_deficient(const Matrix& m);

} // namespace srtz
