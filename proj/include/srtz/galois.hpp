#pragma once

// Table-driven arithmetic in GF(2^p), 2 <= p <= 16.
//
// Elements are polynomial-basis bit vectors packed into an integer, bit 0
// holding the coefficient of x^0. The log/antilog tables are keyed to the
// element x (integer 2), which is the smallest root of every primitive
// polynomial. Powers of any other root are obtained by rebasing through its
// discrete logarithm.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace srtz {

using Element = std::uint16_t;
using Exponent = std::uint32_t;

class Field {
public:
    static constexpr unsigned kMinDegree = 2;
    static constexpr unsigned kMaxDegree = 16;

    // Throws UnsupportedDegree or NotPrimitive.
    Field(unsigned degree, std::uint32_t poly);

    unsigned degree() const noexcept { return degree_; }
    std::uint32_t poly() const noexcept { return poly_; }
    // Number of elements, 2^p.
    std::uint32_t size() const noexcept { return size_; }
    // Order of the multiplicative group, 2^p - 1. Exponent arithmetic is modulo this.
    std::uint32_t order() const noexcept { return size_ - 1; }

    bool contains(std::uint32_t value) const noexcept { return value < size_; }

    static Element add(Element x, Element y) noexcept { return static_cast<Element>(x ^ y); }

    Element mul(Element x, Element y) const noexcept
    {
        if (x == 0 || y == 0)
            return 0;
        return exp_[log_[x] + log_[y]];
    }

    Element inv(Element x) const;
    Element div(Element x, Element y) const;
    Element pow(Element x, std::int64_t k) const;

    // Discrete log base x (integer 2); x must be nonzero.
    Exponent log(Element x) const;
    // x^e for e reduced modulo order().
    Element exp(std::uint64_t e) const noexcept { return exp_[e % order()]; }

    std::span<const Element> roots() const noexcept { return roots_; }
    bool is_root(Element x) const noexcept;
    // Throws NotARoot if omega is not a root of the field polynomial.
    void require_root(Element omega) const;

    // omega^i with omega a root of the field polynomial. Throws NotARoot.
    Element omega_pow(Element omega, Exponent i) const;

    // Field polynomial evaluated at x with Horner's rule.
    Element eval_poly(Element x) const noexcept;

    // Row of the multiplication table for a fixed coefficient: row[v] = c * v.
    // Available for p <= 8 only; empty otherwise.
    std::span<const Element> mul_row(Element c) const noexcept;

private:
    unsigned degree_;
    std::uint32_t poly_;
    std::uint32_t size_;
    std::vector<Element> exp_;   // length 2*order so log sums need no reduction
    std::vector<Exponent> log_;  // log_[0] unused
    std::vector<Element> roots_;
    std::vector<Element> mul_table_;  // size_ x size_, p <= 8
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned degree, std::uint32_t poly);

// Ascending list of the p roots of the field polynomial.
std::vector<Element> primitive_roots(const Field& field);

// Multiplicative order of x modulo poly by repeated shift-and-reduce.
// Returns 0 if the powers of x never return to 1 within 2^degree - 1 steps.
std::uint64_t order_of_x(unsigned degree, std::uint32_t poly);

// Primitive polynomials used for the counting tables, indexed by degree 2..8.
std::uint32_t reference_polynomial(unsigned degree);

} // namespace srtz
