#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srtz/galois.hpp"
#include "srtz/toeplitz.hpp"

namespace srtz {

// Two lower-triangular Toeplitz matrices of equal size over the same field
// and root.
class MatrixPair {
public:
    // Throws DimensionMismatch.
    MatrixPair(ToeplitzSpec a, ToeplitzSpec b);

    const ToeplitzSpec& a() const noexcept { return a_; }
    const ToeplitzSpec& b() const noexcept { return b_; }
    std::size_t n() const noexcept { return a_.n(); }
    const Field& field() const noexcept { return a_.field(); }
    Element omega() const noexcept { return a_.omega(); }

    MatrixPair swapped() const { return MatrixPair(b_, a_); }

private:
    ToeplitzSpec a_;
    ToeplitzSpec b_;
};

struct RegularityReport {
    bool verdict = true;
    // First singular submatrix found; rows are 1-based within their source.
    std::optional<Selector> witness;
    // Source of each witness row (0 = A, 1 = B); empty for single matrices.
    std::vector<std::uint8_t> witness_sources;

    explicit operator bool() const noexcept { return verdict; }
};

// Brute force over every proper selector; the witness is the first singular
// one in proper_selectors order.
RegularityReport is_superregular(const ToeplitzSpec& spec);
// Same test for an arbitrary square lower-triangular matrix (e.g. a product
// or inverse whose first column may contain zeros).
RegularityReport is_superregular(const Field& field, const Matrix& m);

// Closed-form conditions for n = 3, 4, 5. Each check includes the conditions
// of the smaller sizes, so check_n5 alone decides superregularity of a 5 x 5
// matrix. Exponents must lie in [0, 2^p - 2]; arithmetic is modulo 2^p - 1.
bool check_n3(const Field& field, Exponent i1, Exponent i2);
bool check_n4(const Field& field, const std::array<Exponent, 3>& i);
bool check_n5(const Field& field, Element omega, const std::array<Exponent, 4>& i);
// Sufficient condition replacing the four field inequalities of check_n5 by a
// single parametrized inequality that must hold for every parameter choice.
bool check_n5_corollary(const Field& field, Element omega, const std::array<Exponent, 4>& i);

// Closed-form superregularity for n <= 5; throws UnsupportedDimension above.
bool check_closed_form(const ToeplitzSpec& spec);

// Every square submatrix assembled from rows of A and rows of B (the same
// row index may be drawn from both) that is not trivially rank deficient must
// be nonsingular. Enumerated by size, then A-row set, then B-row set, then
// column set, A-heavy splits first.
RegularityReport is_jointly_superregular(const MatrixPair& pair);

// Exact for n = 2: i_a1 != i_b1.
bool check_joint_n2(const MatrixPair& pair);
// Necessary for every n: no coordinate of the two exponent vectors coincides.
bool check_joint_any_n_necessary(const MatrixPair& pair);
// Exact for n = 3; includes individual superregularity and the necessary
// condition. Throws DimensionMismatch unless n == 3.
bool check_joint_n3(const MatrixPair& pair);

// Superregularity of A * B (= B * A). Meaningful for jointly superregular pairs.
RegularityReport is_product_preserving(const MatrixPair& pair);
// Closed-form product conditions for pairs already known to be jointly
// superregular. check_product_n4 includes the conditions of the leading
// 3 x 3 pair. Throw DimensionMismatch unless n == 3 / n == 4.
bool check_product_n3(const MatrixPair& pair);
bool check_product_n4(const MatrixPair& pair);

// A^-1 as a ToeplitzSpec. Throws Error if the inverse has a zero entry in its
// first column (never the case for superregular A).
ToeplitzSpec inverse(const ToeplitzSpec& spec);

enum class CountMethod { Lemma, Corollary, BruteForce };

std::string to_string(CountMethod m);
// Throws Error for an unknown name.
CountMethod parse_count_method(const std::string& name);

// Number of exponent tuples in [0, 2^p - 2]^(n-1) passing the predicate.
// Lemma supports n <= 5, Corollary only n = 5; both throw UnsupportedDimension
// otherwise. threads = 0 uses the hardware concurrency. The result does not
// depend on the thread count.
std::uint64_t count_superregular(const FieldPtr& field, Element omega, std::size_t n, CountMethod method,
                                 unsigned threads = 0);

} // namespace srtz
