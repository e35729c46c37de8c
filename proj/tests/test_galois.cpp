#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "srtz/error.hpp"
#include "srtz/galois.hpp"

using namespace srtz;

TEST_CASE("roots of the GF(2^8) polynomial 0x11D")
{
    const auto f = make_field(8, 0x11D);
    const std::vector<Element> expected{2, 4, 16, 29, 76, 95, 133, 157};
    CHECK(std::vector<Element>(f->roots().begin(), f->roots().end()) == expected);
    CHECK(primitive_roots(*f) == expected);
    for (Element r : expected)
        CHECK(f->is_root(r));
    CHECK_FALSE(f->is_root(3));
}

TEST_CASE("GF(4) has roots 2 and 3")
{
    const auto f = make_field(2, 0b111);
    CHECK(f->size() == 4);
    CHECK(f->order() == 3);
    CHECK(std::vector<Element>(f->roots().begin(), f->roots().end()) == std::vector<Element>{2, 3});
}

TEST_CASE("roots agree with exhaustive polynomial evaluation")
{
    for (unsigned p = 2; p <= 8; ++p) {
        const auto poly = reference_polynomial(p);
        const auto f = make_field(p, poly);
        const oracle::Gf g{p, poly};
        std::vector<Element> expected;
        for (std::uint32_t x = 0; x < f->size(); ++x)
            if (g.eval(x) == 0)
                expected.push_back(static_cast<Element>(x));
        CHECK(std::vector<Element>(f->roots().begin(), f->roots().end()) == expected);
        CHECK(expected.size() == p);
    }
}

TEST_CASE("non-primitive and malformed polynomials are rejected")
{
    CHECK(order_of_x(8, 0x11B) == 51);
    CHECK_THROWS_AS(make_field(8, 0x11B), NotPrimitive);
    CHECK_THROWS_AS(make_field(1, 0b11), UnsupportedDegree);
    CHECK_THROWS_AS(make_field(17, 0x2002D), UnsupportedDegree);
    // Wrong degree bit.
    CHECK_THROWS(make_field(8, 0x1D));
    // Reducible: x^4 + x^2 + 1 = (x^2 + x + 1)^2.
    CHECK_THROWS_AS(make_field(4, 0b10101), NotPrimitive);
}

TEST_CASE("reference polynomials are primitive")
{
    for (unsigned p = 2; p <= 8; ++p)
        CHECK(order_of_x(p, reference_polynomial(p)) == (1u << p) - 1);
    CHECK_THROWS_AS(reference_polynomial(9), UnsupportedDegree);
}

TEST_CASE("addition is XOR")
{
    const auto f = make_field(8, 0x11D);
    CHECK(f->add(51, 156) == 175);
    for (Element a : {0, 1, 77, 255}) {
        CHECK(f->add(a, a) == 0);
        CHECK(f->add(a, 0) == a);
    }
}

TEST_CASE("multiplication matches carry-less multiply and reduce")
{
    const auto f = make_field(8, 0x11D);
    CHECK(f->mul(2, 128) == 29);
    for (unsigned p : {3u, 4u, 8u}) {
        const auto poly = reference_polynomial(p);
        const auto fp = make_field(p, poly);
        for (std::uint32_t a = 0; a < fp->size(); ++a)
            for (std::uint32_t b = 0; b < fp->size(); ++b)
                REQUIRE(fp->mul(static_cast<Element>(a), static_cast<Element>(b)) == oracle::clmul_mod(a, b, p, poly));
    }
    // A 16-bit field on a sample.
    const auto f16 = make_field(16, 0x1100B);
    for (std::uint32_t a = 1; a < 65536; a += 997)
        for (std::uint32_t b = 3; b < 65536; b += 1231)
            REQUIRE(f16->mul(static_cast<Element>(a), static_cast<Element>(b)) == oracle::clmul_mod(a, b, 16, 0x1100B));
}

TEST_CASE("mul_row is the multiplication table row for p <= 8")
{
    const auto f = make_field(8, 0x11D);
    for (Element c : {0, 1, 2, 200}) {
        const auto row = f->mul_row(c);
        REQUIRE(row.size() == 256);
        for (std::uint32_t v = 0; v < 256; ++v)
            CHECK(row[v] == f->mul(c, static_cast<Element>(v)));
    }
    CHECK(make_field(10, 0b10000001001)->mul_row(5).empty());
}

TEST_CASE("inverse, division and powers")
{
    const auto f = make_field(8, 0x11D);
    for (std::uint32_t x = 1; x < 256; ++x) {
        const auto e = static_cast<Element>(x);
        CHECK(f->mul(e, f->inv(e)) == 1);
        CHECK(f->div(e, e) == 1);
        CHECK(f->exp(f->log(e)) == e);
    }
    CHECK(f->pow(2, 10) == 116);
    CHECK(f->pow(2, 0) == 1);
    CHECK(f->pow(0, 0) == 1);
    CHECK(f->pow(0, 5) == 0);
    CHECK(f->pow(3, -1) == f->inv(3));
    CHECK(f->pow(3, 255) == 1);
    const oracle::Gf g{8, 0x11D};
    for (Element x : {3, 29, 200})
        for (int k = 0; k < 40; ++k)
            CHECK(f->pow(x, k) == g.pow(x, static_cast<std::uint64_t>(k)));
    CHECK_THROWS_AS(f->inv(0), DivideByZero);
    CHECK_THROWS_AS(f->div(5, 0), DivideByZero);
    CHECK_THROWS_AS(f->log(0), DivideByZero);
    CHECK_THROWS_AS(f->pow(0, -1), DivideByZero);
}

TEST_CASE("omega_pow rebases through the root's discrete log")
{
    const auto f = make_field(8, 0x11D);
    CHECK(f->omega_pow(2, 0) == 1);
    CHECK(f->omega_pow(2, 125) == 51);
    CHECK(f->omega_pow(2, 83) == 187);
    const oracle::Gf g{8, 0x11D};
    for (Element w : f->roots())
        for (Exponent i : {0u, 1u, 7u, 100u, 254u})
            CHECK(f->omega_pow(w, i) == g.pow(w, i));
    CHECK_THROWS_AS(f->omega_pow(3, 1), NotARoot);
    CHECK_THROWS_AS(f->require_root(0), NotARoot);
}
