#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "srtz/error.hpp"
#include "srtz/regularity.hpp"

using namespace srtz;

namespace {

oracle::Dense dense_of(const ToeplitzSpec& s)
{
    const auto col = s.first_column();
    return oracle::toeplitz(std::vector<std::uint32_t>(col.begin(), col.end()));
}

// All exponent tuples of length len over [0, order).
template <typename Visit>
void for_each_tuple(std::size_t len, Exponent order, Visit visit)
{
    std::vector<Exponent> e(len, 0);
    while (true) {
        visit(e);
        std::size_t i = 0;
        while (i < len && ++e[i] == order)
            e[i++] = 0;
        if (i == len)
            return;
    }
}

} // namespace

TEST_CASE("golden 10 x 10 matrices are superregular")
{
    const auto f = make_field(8, 0x11D);
    CHECK(is_superregular(ToeplitzSpec(f, 2, {125, 35, 109, 219, 83, 177, 191, 39, 23})).verdict);
    CHECK(is_superregular(ToeplitzSpec(f, 2, {1, 0, 0, 3, 5, 10, 36, 86, 83})).verdict);
}

TEST_CASE("witness of a singular proper submatrix")
{
    const auto f = make_field(3, 0b1011);
    const ToeplitzSpec a(f, 2, {1, 2});
    const auto r = is_superregular(a);
    CHECK_FALSE(r.verdict);
    REQUIRE(r.witness);
    CHECK(*r.witness == Selector{{2, 3}, {1, 2}});
    CHECK(submatrix_determinant(*f, psi(a), *r.witness) == 0);
    CHECK(is_superregular(ToeplitzSpec(f, 2, {})).verdict);
    CHECK_FALSE(is_superregular(ToeplitzSpec(f, 2, {})).witness);
}

TEST_CASE("brute force agrees with the subset oracle")
{
    const auto f = make_field(3, 0b1011);
    const oracle::Gf g{3, 0b1011};
    for (std::size_t n = 2; n <= 4; ++n)
        for_each_tuple(n - 1, 7, [&](const std::vector<Exponent>& e) {
            const ToeplitzSpec a(f, 2, e);
            REQUIRE(is_superregular(a).verdict == oracle::superregular(g, dense_of(a)));
        });
    // Dense overload on a non-Toeplitz-spec matrix with zeros in its column.
    const std::vector<Element> col{1, 0, 3};
    CHECK_FALSE(is_superregular(*f, lower_toeplitz(col)).verdict);
    CHECK_THROWS_AS(is_superregular(*f, Matrix(2, 3)), NotSquare);
}

TEST_CASE("closed-form examples")
{
    const auto f = make_field(3, 0b1011);
    CHECK_FALSE(check_n3(*f, 0, 0));
    CHECK_FALSE(check_n3(*f, 1, 2));
    CHECK(check_n3(*f, 1, 3));
    CHECK(is_superregular(ToeplitzSpec(f, 2, {1, 3})).verdict);
    CHECK_FALSE(check_n4(*f, {1, 3, 3}));
    CHECK_FALSE(check_n4(*f, {1, 3, 4}));
    CHECK_THROWS_AS(check_closed_form(ToeplitzSpec(f, 2, {1, 3, 5, 6, 0})), UnsupportedDimension);
}

TEST_CASE("closed forms agree with brute force over GF(2^3), every root")
{
    const auto f = make_field(3, 0b1011);
    for (Element w : f->roots())
        for (std::size_t n = 2; n <= 5; ++n)
            for_each_tuple(n - 1, 7, [&](const std::vector<Exponent>& e) {
                const ToeplitzSpec a(f, w, e);
                REQUIRE(check_closed_form(a) == is_superregular(a).verdict);
            });
}

TEST_CASE("corollary condition is sufficient")
{
    const auto f = make_field(4, 0b10011);
    for_each_tuple(4, 15, [&](const std::vector<Exponent>& e) {
        const std::array<Exponent, 4> t{e[0], e[1], e[2], e[3]};
        if (check_n5_corollary(*f, 2, t))
            REQUIRE(check_n5(*f, 2, t));
    });
}

TEST_CASE("counts")
{
    const auto f2 = make_field(2, 0b111);
    const auto f3 = make_field(3, 0b1011);
    const auto f4 = make_field(4, 0b10011);
    CHECK(count_superregular(f2, 2, 5, CountMethod::Lemma) == 0);
    CHECK(count_superregular(f3, 2, 5, CountMethod::Lemma) == 84);
    CHECK(count_superregular(f4, 2, 5, CountMethod::Lemma) == 17280);
    CHECK(count_superregular(f3, 2, 5, CountMethod::BruteForce) == 84);
    CHECK(count_superregular(f4, 2, 5, CountMethod::BruteForce) == 17280);
    CHECK(count_superregular(f3, 2, 5, CountMethod::Corollary) == 0);
    // Independent of the worker count.
    for (unsigned t : {1u, 2u, 3u, 7u})
        CHECK(count_superregular(f4, 2, 5, CountMethod::Lemma, t) == 17280);
    // Smaller sizes: lemma and brute force agree.
    for (std::size_t n = 2; n <= 4; ++n)
        CHECK(count_superregular(f4, 2, n, CountMethod::Lemma) == count_superregular(f4, 2, n, CountMethod::BruteForce));
    CHECK_THROWS_AS(count_superregular(f4, 2, 6, CountMethod::Lemma), UnsupportedDimension);
    CHECK_THROWS_AS(count_superregular(f4, 2, 4, CountMethod::Corollary), UnsupportedDimension);
    CHECK(parse_count_method("brute-force") == CountMethod::BruteForce);
    CHECK_THROWS_AS(parse_count_method("guess"), Error);
}

TEST_CASE("joint superregularity of the printed pairs")
{
    const auto f = make_field(8, 0x11D);
    const MatrixPair six(ToeplitzSpec(f, 2, {0, 2, 5, 0, 15}), ToeplitzSpec(f, 2, {1, 0, 4, 9, 30}));
    CHECK(check_joint_any_n_necessary(six));
    CHECK(is_jointly_superregular(six).verdict);
    CHECK(is_jointly_superregular(six.swapped()).verdict);
    CHECK(is_product_preserving(six).verdict);
}

TEST_CASE("joint checks for n = 2 and 3 agree with the subset oracle over GF(2^3)")
{
    const auto f = make_field(3, 0b1011);
    const oracle::Gf g{3, 0b1011};
    for (Element w : f->roots()) {
        for (Exponent a1 = 0; a1 < 7; ++a1)
            for (Exponent b1 = 0; b1 < 7; ++b1) {
                const MatrixPair p(ToeplitzSpec(f, w, {a1}), ToeplitzSpec(f, w, {b1}));
                const bool bf = is_jointly_superregular(p).verdict;
                REQUIRE(check_joint_n2(p) == bf);
                REQUIRE(bf == oracle::jointly_superregular(g, dense_of(p.a()), dense_of(p.b())));
            }
        for_each_tuple(4, 7, [&](const std::vector<Exponent>& e) {
            const MatrixPair p(ToeplitzSpec(f, w, {e[0], e[1]}), ToeplitzSpec(f, w, {e[2], e[3]}));
            const auto bf = is_jointly_superregular(p);
            REQUIRE(check_joint_n3(p) == bf.verdict);
            REQUIRE(check_joint_n3(p) == check_joint_n3(p.swapped()));
            REQUIRE(bf.verdict == is_jointly_superregular(p.swapped()).verdict);
            if (w == 2)
                REQUIRE(bf.verdict == oracle::jointly_superregular(g, dense_of(p.a()), dense_of(p.b())));
            if (bf.verdict) {
                REQUIRE(is_superregular(p.a()).verdict);
                REQUIRE(is_superregular(p.b()).verdict);
                REQUIRE(check_joint_any_n_necessary(p));
            } else {
                REQUIRE(bf.witness);
                REQUIRE(bf.witness_sources.size() == bf.witness->size());
            }
        });
    }
    const MatrixPair same(ToeplitzSpec(f, 2, {3}), ToeplitzSpec(f, 2, {3}));
    CHECK_FALSE(check_joint_n2(same));
    CHECK_FALSE(is_jointly_superregular(same).verdict);
    const MatrixPair ok(ToeplitzSpec(f, 2, {0}), ToeplitzSpec(f, 2, {1}));
    CHECK(check_joint_n2(ok));
    CHECK(is_jointly_superregular(ok).verdict);
    // i_a1 + i_b1 = i_a2.
    CHECK_FALSE(check_joint_n3(MatrixPair(ToeplitzSpec(f, 2, {1, 3}), ToeplitzSpec(f, 2, {2, 5}))));
}

TEST_CASE("pair validation")
{
    const auto f = make_field(3, 0b1011);
    const auto g = make_field(4, 0b10011);
    CHECK_THROWS_AS(MatrixPair(ToeplitzSpec(f, 2, {1}), ToeplitzSpec(f, 2, {1, 2})), DimensionMismatch);
    CHECK_THROWS_AS(MatrixPair(ToeplitzSpec(f, 2, {1}), ToeplitzSpec(g, 2, {1})), DimensionMismatch);
    CHECK_THROWS_AS(MatrixPair(ToeplitzSpec(f, 2, {1}), ToeplitzSpec(f, 4, {1})), DimensionMismatch);
    CHECK_THROWS_AS(check_joint_n3(MatrixPair(ToeplitzSpec(f, 2, {1}), ToeplitzSpec(f, 2, {2}))), DimensionMismatch);
    CHECK_THROWS_AS(check_product_n4(MatrixPair(ToeplitzSpec(f, 2, {1}), ToeplitzSpec(f, 2, {2}))),
                    DimensionMismatch);
}

TEST_CASE("product checks agree with brute force")
{
    const auto f3 = make_field(3, 0b1011);
    for (Element w : f3->roots())
        for_each_tuple(4, 7, [&](const std::vector<Exponent>& e) {
            const MatrixPair p(ToeplitzSpec(f3, w, {e[0], e[1]}), ToeplitzSpec(f3, w, {e[2], e[3]}));
            if (is_jointly_superregular(p).verdict)
                REQUIRE(check_product_n3(p) == is_product_preserving(p).verdict);
        });

    const auto f4 = make_field(4, 0b10011);
    std::mt19937 rng(99);
    std::uniform_int_distribution<Exponent> d(0, 14);
    int compared = 0;
    while (compared < 2000) {
        const Element w = f4->roots()[rng() % 4];
        const MatrixPair p(ToeplitzSpec(f4, w, {d(rng), d(rng), d(rng)}), ToeplitzSpec(f4, w, {d(rng), d(rng), d(rng)}));
        if (!check_joint_any_n_necessary(p) || !is_jointly_superregular(p).verdict)
            continue;
        ++compared;
        REQUIRE(check_product_n4(p) == is_product_preserving(p).verdict);
        REQUIRE(is_product_preserving(p).verdict == is_product_preserving(p.swapped()).verdict);
    }
}

TEST_CASE("inverse closure, root invariance and the inverse pair")
{
    const auto f = make_field(3, 0b1011);
    for (std::size_t n = 2; n <= 5; ++n)
        for_each_tuple(n - 1, 7, [&](const std::vector<Exponent>& e) {
            const ToeplitzSpec a(f, 2, e);
            const bool sr = is_superregular(a).verdict;
            for (Element w : f->roots())
                REQUIRE(is_superregular(ToeplitzSpec(f, w, e)).verdict == sr);
            if (!sr)
                return;
            const ToeplitzSpec ai = inverse(a);
            REQUIRE(multiply(*f, psi(a), psi(ai)) == Matrix::identity(n));
            REQUIRE(is_superregular(ai).verdict);
            const MatrixPair pair(a, ai);
            REQUIRE_FALSE(is_jointly_superregular(pair).verdict);
            const auto prod = toeplitz_product_column(*f, a.first_column(), ai.first_column());
            REQUIRE_FALSE(is_superregular(*f, lower_toeplitz(prod)).verdict);
        });
}
