#include "srtz/toeplitz.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "srtz/error.hpp"

namespace srtz {

ToeplitzSpec::ToeplitzSpec(FieldPtr field, Element omega, std::vector<Exponent> exponents)
    : field_(std::move(field)), omega_(omega), exponents_(std::move(exponents))
{
    field_->require_root(omega_);
    for (Exponent e : exponents_) {
        if (e >= field_->order())
            throw std::out_of_range("exponent " + std::to_string(e) + " outside [0, 2^p - 2]");
    }
}

std::vector<Element> ToeplitzSpec::first_column() const
{
    std::vector<Element> col;
    col.reserve(n());
    col.push_back(1);
    for (Exponent e : exponents_)
        col.push_back(field_->omega_pow(omega_, e));
    return col;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Element> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows * cols)
        throw DimensionMismatch("matrix data length does not match its shape");
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void Matrix::set_tags(std::vector<RowTag> tags)
{
    if (!tags.empty() && tags.size() != rows_)
        throw DimensionMismatch("one tag per row required");
    tags_ = std::move(tags);
}

bool Selector::dominated() const noexcept
{
    for (std::size_t t = 0; t < rows.size(); ++t)
        if (rows[t] < cols[t])
            return false;
    return true;
}

Matrix lower_toeplitz(std::span<const Element> first_column)
{
    const std::size_t n = first_column.size();
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c <= r; ++c)
            m(r, c) = first_column[r - c];
    return m;
}

Matrix psi(const ToeplitzSpec& spec)
{
    const auto col = spec.first_column();
    return lower_toeplitz(col);
}

ToeplitzSpec phi_extend(const ToeplitzSpec& spec, Exponent next)
{
    std::vector<Exponent> e(spec.exponents().begin(), spec.exponents().end());
    e.push_back(next);
    return ToeplitzSpec(spec.field_ptr(), spec.omega(), std::move(e));
}

std::optional<ToeplitzSpec> spec_from_column(FieldPtr field, Element omega, std::span<const Element> column)
{
    if (column.empty() || column[0] != 1)
        return std::nullopt;
    field->require_root(omega);
    const std::uint32_t ord = field->order();
    const Exponent log_omega = field->log(omega);
    // w^e = x^(e * log w); invert log w modulo the group order.
    std::int64_t t = 0, new_t = 1, r = ord, new_r = log_omega;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    const std::uint64_t inv_log = static_cast<std::uint64_t>((t % ord + ord) % ord);

    std::vector<Exponent> exps;
    for (std::size_t i = 1; i < column.size(); ++i) {
        if (column[i] == 0)
            return std::nullopt;
        exps.push_back(static_cast<Exponent>((field->log(column[i]) * inv_log) % ord));
    }
    return ToeplitzSpec(std::move(field), omega, std::move(exps));
}

Matrix submatrix(const Matrix& m, const Selector& s)
{
    if (s.rows.size() != s.cols.size())
        throw DimensionMismatch("selector row and column lists differ in length");
    Matrix out(s.rows.size(), s.cols.size());
    std::vector<RowTag> tags;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const std::size_t r = s.rows[i];
        if (r < 1 || r > m.rows())
            throw IndexOutOfBounds("row index " + std::to_string(r) + " out of range");
        for (std::size_t j = 0; j < s.cols.size(); ++j) {
            const std::size_t c = s.cols[j];
            if (c < 1 || c > m.cols())
                throw IndexOutOfBounds("column index " + std::to_string(c) + " out of range");
            out(i, j) = m(r - 1, c - 1);
        }
        if (!m.tags().empty())
            tags.push_back(m.tags()[r - 1]);
    }
    out.set_tags(std::move(tags));
    return out;
}

Element determinant_in_place(const Field& field, std::span<Element> a, std::size_t n)
{
    Element det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot * n + c] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != c) {
            // Row swaps flip the sign, which is a no-op in characteristic 2.
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * n),
                             a.begin() + static_cast<std::ptrdiff_t>(pivot * n + n),
                             a.begin() + static_cast<std::ptrdiff_t>(c * n));
        }
        const Element p = a[c * n + c];
        det = field.mul(det, p);
        const Element p_inv = field.inv(p);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Element lead = a[r * n + c];
            if (lead == 0)
                continue;
            const Element f = field.mul(lead, p_inv);
            for (std::size_t k = c; k < n; ++k)
                a[r * n + k] ^= field.mul(f, a[c * n + k]);
        }
    }
    return det;
}

Element determinant(const Field& field, const Matrix& m)
{
    if (!m.square())
        throw NotSquare("determinant of a non-square matrix");
    std::vector<Element> scratch(m.data().begin(), m.data().end());
    return determinant_in_place(field, scratch, m.rows());
}

Element submatrix_determinant(const Field& field, const Matrix& m, const Selector& s)
{
    const std::size_t n = s.size();
    constexpr std::size_t kStack = 16;
    std::array<Element, kStack * kStack> stack_buf;
    std::vector<Element> heap_buf;
    std::span<Element> buf;
    if (n <= kStack) {
        buf = std::span<Element>(stack_buf.data(), n * n);
    } else {
        heap_buf.resize(n * n);
        buf = heap_buf;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            buf[i * n + j] = m(s.rows[i] - 1, s.cols[j] - 1);
    return determinant_in_place(field, buf, n);
}

std::size_t rank(const Field& field, const Matrix& m)
{
    std::vector<Element> a(m.data().begin(), m.data().end());
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot * cols + c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        for (std::size_t k = 0; k < cols; ++k)
            std::swap(a[pivot * cols + k], a[r * cols + k]);
        const Element p_inv = field.inv(a[r * cols + c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Element lead = a[i * cols + c];
            if (lead == 0)
                continue;
            const Element f = field.mul(lead, p_inv);
            for (std::size_t k = c; k < cols; ++k)
                a[i * cols + k] ^= field.mul(f, a[r * cols + k]);
        }
        ++r;
    }
    return r;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product with incompatible shapes");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Element x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) ^= field.mul(x, b(k, j));
        }
    return out;
}

std::vector<Element> toeplitz_product_column(const Field& field, std::span<const Element> a, std::span<const Element> b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("Toeplitz product of different sizes");
    std::vector<Element> c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            c[i] ^= field.mul(a[j], b[i - j]);
    return c;
}

std::vector<Element> toeplitz_inverse_column(const Field& field, std::span<const Element> a)
{
    std::vector<Element> x(a.size(), 0);
    if (a.empty())
        return x;
    const Element a0_inv = field.inv(a[0]);
    x[0] = a0_inv;
    for (std::size_t i = 1; i < a.size(); ++i) {
        Element acc = 0;
        for (std::size_t j = 1; j <= i; ++j)
            acc ^= field.mul(a[j], x[i - j]);
        x[i] = field.mul(acc, a0_inv);
    }
    return x;
}

namespace {

// Advance a strictly increasing combination of size r drawn from [lo, hi].
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

std::vector<std::size_t> first_combination(std::size_t r, std::size_t lo)
{
    std::vector<std::size_t> v(r);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

} // namespace

bool for_each_proper_selector(std::size_t m, const std::function<bool(const Selector&)>& visit)
{
    Selector s;
    for (std::size_t r = 1; r <= m; ++r) {
        s.rows = first_combination(r, 1);
        do {
            s.cols = first_combination(r, 1);
            do {
                if (s.dominated() && !visit(s))
                    return false;
            } while (next_combination(s.cols, m));
        } while (next_combination(s.rows, m));
    }
    return true;
}

std::vector<Selector> proper_selectors(std::size_t m)
{
    std::vector<Selector> out;
    for_each_proper_selector(m, [&](const Selector& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::vector<Selector> incremental_selectors(std::size_t l)
{
    std::vector<Selector> out;
    for_each_proper_selector(l, [&](const Selector& s) {
        if (s.rows.back() == l && s.cols.front() == 1)
            out.push_back(s);
        return true;
    });
    return out;
}

bool is_trivially_rank_deficient(const Matrix& m)
{
    if (!m.square())
        throw NotSquare("trivial rank deficiency of a non-square matrix");
    std::vector<std::size_t> support(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (Element v : m.row(r))
            support[r] += v != 0;
    std::stable_sort(support.begin(), support.end());
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i] < i + 1)
            return true;
    return false;
}

} // namespace srtz
