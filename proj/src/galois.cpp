#include "srtz/galois.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <string>

#include "srtz/error.hpp"

namespace srtz {

namespace {

std::uint32_t xtime(std::uint32_t v, unsigned degree, std::uint32_t poly)
{
    v <<= 1;
    if (v & (1u << degree))
        v ^= poly;
    return v;
}

std::string hex(std::uint32_t v)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%X", v);
    return buf;
}

} // namespace

std::uint64_t order_of_x(unsigned degree, std::uint32_t poly)
{
    const std::uint64_t limit = (std::uint64_t{1} << degree) - 1;
    std::uint32_t v = 1;
    for (std::uint64_t k = 1; k <= limit; ++k) {
        v = xtime(v, degree, poly);
        if (v == 1)
            return k;
        if (v == 0)
            return 0;
    }
    return 0;
}

Field::Field(unsigned degree, std::uint32_t poly) : degree_(degree), poly_(poly), size_(0)
{
    if (degree < kMinDegree || degree > kMaxDegree)
        throw UnsupportedDegree("field degree must be in [2, 16], got " + std::to_string(degree));
    if (std::bit_width(poly) != degree + 1)
        throw UnsupportedDegree("polynomial degree does not match p = " + std::to_string(degree));

    size_ = 1u << degree;
    const std::uint32_t ord = size_ - 1;
    if (order_of_x(degree, poly) != ord)
        throw NotPrimitive("polynomial " + hex(poly) + " is not primitive");

    exp_.resize(2 * static_cast<std::size_t>(ord));
    log_.assign(size_, 0);
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < ord; ++i) {
        exp_[i] = static_cast<Element>(v);
        exp_[i + ord] = static_cast<Element>(v);
        log_[v] = i;
        v = xtime(v, degree, poly);
    }

    for (std::uint32_t x = 0; x < size_; ++x) {
        if (eval_poly(static_cast<Element>(x)) == 0)
            roots_.push_back(static_cast<Element>(x));
    }

    if (degree <= 8) {
        mul_table_.resize(static_cast<std::size_t>(size_) * size_);
        for (std::uint32_t a = 0; a < size_; ++a)
            for (std::uint32_t b = 0; b < size_; ++b)
                mul_table_[a * size_ + b] = mul(static_cast<Element>(a), static_cast<Element>(b));
    }
}

Element Field::inv(Element x) const
{
    if (x == 0)
        throw DivideByZero();
    return exp_[(order() - log_[x]) % order()];
}

Element Field::div(Element x, Element y) const
{
    if (y == 0)
        throw DivideByZero();
    if (x == 0)
        return 0;
    return exp_[log_[x] + order() - log_[y]];
}

Element Field::pow(Element x, std::int64_t k) const
{
    if (x == 0) {
        if (k < 0)
            throw DivideByZero();
        return k == 0 ? 1 : 0;
    }
    const std::int64_t ord = order();
    std::int64_t e = (static_cast<std::int64_t>(log_[x]) * (k % ord)) % ord;
    if (e < 0)
        e += ord;
    return exp_[static_cast<std::size_t>(e)];
}

Exponent Field::log(Element x) const
{
    if (x == 0 || x >= size_)
        throw DivideByZero();
    return log_[x];
}

bool Field::is_root(Element x) const noexcept
{
    return std::binary_search(roots_.begin(), roots_.end(), x);
}

void Field::require_root(Element omega) const
{
    if (!is_root(omega))
        throw NotARoot(std::to_string(omega) + " is not a root of the field polynomial");
}

Element Field::omega_pow(Element omega, Exponent i) const
{
    require_root(omega);
    return exp(static_cast<std::uint64_t>(log_[omega]) * (i % order()));
}

Element Field::eval_poly(Element x) const noexcept
{
    Element acc = 0;
    for (int bit = static_cast<int>(degree_); bit >= 0; --bit) {
        acc = mul(acc, x);
        if (poly_ & (1u << bit))
            acc ^= 1;
    }
    return acc;
}

std::span<const Element> Field::mul_row(Element c) const noexcept
{
    if (mul_table_.empty())
        return {};
    return {mul_table_.data() + static_cast<std::size_t>(c) * size_, size_};
}

FieldPtr make_field(unsigned degree, std::uint32_t poly)
{
    return std::make_shared<const Field>(degree, poly);
}

std::vector<Element> primitive_roots(const Field& field)
{
    auto r = field.roots();
    return {r.begin(), r.end()};
}

std::uint32_t reference_polynomial(unsigned degree)
{
    switch (degree) {
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 5: return 0b100101;
    case 6: return 0b1000011;
    case 7: return 0b10001001;
    case 8: return 0x11D;
    default:
        throw UnsupportedDegree("no reference polynomial for p = " + std::to_string(degree));
    }
}

} // namespace srtz
