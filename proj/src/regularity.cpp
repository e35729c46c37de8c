#include "srtz/regularity.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "patterns.hpp"
#include "srtz/error.hpp"

namespace srtz {

namespace {

using detail::Pattern;

// w^e for a fixed root w, e taken modulo 2^p - 1.
class RootPowers {
public:
    RootPowers(const Field& field, Element omega) : ord_(field.order())
    {
        field.require_root(omega);
        table_.resize(ord_);
        for (std::uint32_t e = 0; e < ord_; ++e)
            table_[e] = field.omega_pow(omega, e);
    }

    Element operator()(std::uint64_t e) const noexcept { return table_[e % ord_]; }
    std::uint32_t order() const noexcept { return ord_; }

private:
    std::uint32_t ord_;
    std::vector<Element> table_;
};

bool n3_modular(std::uint64_t ord, std::uint64_t i1, std::uint64_t i2)
{
    return (2 * i1) % ord != i2 % ord;
}

bool n4_modular(std::uint64_t ord, std::uint64_t i1, std::uint64_t i2, std::uint64_t i3)
{
    return (3 * i1) % ord != i3 % ord && (i1 + i2) % ord != i3 % ord && (2 * i2) % ord != (i1 + i3) % ord;
}

bool n5_modular(std::uint64_t ord, std::uint64_t i1, std::uint64_t i2, std::uint64_t i3, std::uint64_t i4)
{
    const auto m = [ord](std::uint64_t v) { return v % ord; };
    return m(i4) != m(2 * i1 + i2) && m(i4) != m(i1 + i3) && m(i4) != m(2 * i2) && m(2 * i3) != m(i2 + i4) &&
           m(i2 + i3) != m(i1 + i4);
}

template <typename Pow>
bool n5_field(const Pow& w, std::uint64_t i1, std::uint64_t i2, std::uint64_t i3, std::uint64_t i4)
{
    return (w(2 * i2 + i1) ^ w(i2 + i3) ^ w(2 * i1 + i3) ^ w(i1 + i4)) != 0 &&
           (w(2 * i1 + i4) ^ w(i2 + i4) ^ w(3 * i2) ^ w(2 * i3)) != 0 &&
           (w(2 * i1 + i2) ^ w(i1 + i3) ^ w(2 * i2) ^ w(i4)) != 0 &&
           (w(2 * i1 + i2) ^ w(4 * i1) ^ w(2 * i2) ^ w(i4)) != 0;
}

template <typename Pow>
bool corollary_field(const Pow& w, std::uint64_t i1, std::uint64_t i2, std::uint64_t i3, std::uint64_t i4)
{
    static constexpr std::array<std::uint64_t, 3> kAce{0, 1, 2};
    static constexpr std::array<std::uint64_t, 3> kB{1, 2, 3};
    static constexpr std::array<std::uint64_t, 4> kD{0, 1, 2, 4};
    static constexpr std::array<std::uint64_t, 2> kF{1, 2};
    static constexpr std::array<std::uint64_t, 2> kGh{0, 1};
    for (auto a : kAce)
        for (auto b : kB) {
            const Element t1 = w(a * i1 + b * i2);
            for (auto c : kAce) {
                const Element t12 = t1 ^ w(c * i1 + i4);
                for (auto d : kD)
                    for (auto e : kAce) {
                        const Element t123 = t12 ^ w(d * i1 + e * i3);
                        for (auto f : kF)
                            for (auto g : kGh)
                                for (auto h : kGh)
                                    if ((t123 ^ w(f * i2 + g * i3 + h * i4)) == 0)
                                        return false;
                    }
            }
        }
    return true;
}

RegularityReport scan_single(const Field& field, std::span<const Element> column)
{
    const Element* cols[] = {column.data()};
    RegularityReport report;
    for (const Pattern& p : detail::single_patterns(column.size())) {
        if (detail::pattern_determinant(field, p, cols) == 0) {
            report.verdict = false;
            report.witness = p.selector();
            return report;
        }
    }
    return report;
}

unsigned worker_count(unsigned requested)
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Parallel sum over the leading exponent; work is handed out one value at a
// time so the partition does not affect the total.
template <typename CountFor>
std::uint64_t parallel_over_first(std::uint32_t ord, unsigned threads, CountFor count_for)
{
    std::atomic<std::uint32_t> next{0};
    std::atomic<std::uint64_t> total{0};
    auto work = [&] {
        std::uint64_t local = 0;
        for (std::uint32_t i1; (i1 = next.fetch_add(1)) < ord;)
            local += count_for(i1);
        total += local;
    };
    const unsigned n = std::min<unsigned>(worker_count(threads), ord);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
    return total.load();
}

std::uint64_t count_bruteforce(const Field& field, Element omega, std::size_t n, unsigned threads)
{
    if (n <= 1)
        return 1;
    if (n > detail::kMaxPatternDim)
        throw UnsupportedDimension("brute-force counting supports n <= " + std::to_string(detail::kMaxPatternDim));
    const RootPowers w(field, omega);
    const std::uint32_t ord = field.order();
    // Warm the pattern caches before the workers start.
    for (std::size_t l = 2; l <= n; ++l)
        (void)detail::single_incremental_patterns(l);

    return parallel_over_first(ord, threads, [&](std::uint32_t i1) {
        std::vector<Element> col(n, 0);
        std::vector<std::uint32_t> cursor(n, 0);
        col[0] = 1;
        col[1] = w(i1);
        const Element* cols[] = {col.data()};
        std::uint64_t found = 0;
        if (n == 2)
            return std::uint64_t{1};
        // Depth-first over positions 2..n-1 with the incremental check at each level.
        std::size_t level = 2;
        cursor[2] = 0;
        while (level >= 2) {
            if (cursor[level] == ord) {
                --level;
                if (level >= 2)
                    ++cursor[level];
                continue;
            }
            col[level] = w(cursor[level]);
            bool ok = true;
            for (const Pattern& p : detail::single_incremental_patterns(level + 1)) {
                if (detail::pattern_determinant(field, p, cols) == 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                ++cursor[level];
            } else if (level + 1 == n) {
                ++found;
                ++cursor[level];
            } else {
                ++level;
                cursor[level] = 0;
            }
        }
        return found;
    });
}

RegularityReport scan_joint(const MatrixPair& pair)
{
    const auto ca = pair.a().first_column();
    const auto cb = pair.b().first_column();
    const Element* cols[] = {ca.data(), cb.data()};
    RegularityReport report;
    for (const Pattern& p : detail::joint_patterns(pair.n(), false)) {
        if (detail::pattern_determinant(pair.field(), p, cols) == 0) {
            report.verdict = false;
            report.witness = p.selector();
            report.witness_sources.assign(p.src.begin(), p.src.begin() + p.size);
            return report;
        }
    }
    return report;
}

// Exponent vector of a pair member as 64-bit values.
std::vector<std::uint64_t> exps(const ToeplitzSpec& s)
{
    return {s.exponents().begin(), s.exponents().end()};
}

} // namespace

MatrixPair::MatrixPair(ToeplitzSpec a, ToeplitzSpec b) : a_(std::move(a)), b_(std::move(b))
{
    if (a_.n() != b_.n())
        throw DimensionMismatch("pair members differ in size");
    if (a_.field().degree() != b_.field().degree() || a_.field().poly() != b_.field().poly())
        throw DimensionMismatch("pair members use different fields");
    if (a_.omega() != b_.omega())
        throw DimensionMismatch("pair members use different roots");
}

RegularityReport is_superregular(const ToeplitzSpec& spec)
{
    const auto col = spec.first_column();
    return scan_single(spec.field(), col);
}

RegularityReport is_superregular(const Field& field, const Matrix& m)
{
    if (!m.square())
        throw NotSquare("superregularity of a non-square matrix");
    RegularityReport report;
    if (m.rows() == 0)
        return report;
    for (const Pattern& p : detail::single_patterns(m.rows())) {
        if (detail::pattern_determinant(field, p, m) == 0) {
            report.verdict = false;
            report.witness = p.selector();
            return report;
        }
    }
    return report;
}

bool check_n3(const Field& field, Exponent i1, Exponent i2)
{
    return n3_modular(field.order(), i1, i2);
}

bool check_n4(const Field& field, const std::array<Exponent, 3>& i)
{
    const std::uint64_t ord = field.order();
    return n3_modular(ord, i[0], i[1]) && n4_modular(ord, i[0], i[1], i[2]);
}

bool check_n5(const Field& field, Element omega, const std::array<Exponent, 4>& i)
{
    field.require_root(omega);
    const std::uint64_t ord = field.order();
    const auto w = [&](std::uint64_t e) { return field.omega_pow(omega, static_cast<Exponent>(e % ord)); };
    return n3_modular(ord, i[0], i[1]) && n4_modular(ord, i[0], i[1], i[2]) &&
           n5_modular(ord, i[0], i[1], i[2], i[3]) && n5_field(w, i[0], i[1], i[2], i[3]);
}

bool check_n5_corollary(const Field& field, Element omega, const std::array<Exponent, 4>& i)
{
    field.require_root(omega);
    const std::uint64_t ord = field.order();
    const auto w = [&](std::uint64_t e) { return field.omega_pow(omega, static_cast<Exponent>(e % ord)); };
    return n3_modular(ord, i[0], i[1]) && n4_modular(ord, i[0], i[1], i[2]) &&
           n5_modular(ord, i[0], i[1], i[2], i[3]) && corollary_field(w, i[0], i[1], i[2], i[3]);
}

bool check_closed_form(const ToeplitzSpec& spec)
{
    const auto e = spec.exponents();
    switch (spec.n()) {
    case 1:
    case 2: return true;
    case 3: return check_n3(spec.field(), e[0], e[1]);
    case 4: return check_n4(spec.field(), {e[0], e[1], e[2]});
    case 5: return check_n5(spec.field(), spec.omega(), {e[0], e[1], e[2], e[3]});
    default: throw UnsupportedDimension("closed-form conditions exist only for n <= 5");
    }
}

RegularityReport is_jointly_superregular(const MatrixPair& pair)
{
    return scan_joint(pair);
}

bool check_joint_n2(const MatrixPair& pair)
{
    if (pair.n() < 2)
        throw DimensionMismatch("joint conditions need n >= 2");
    return pair.a().exponents()[0] != pair.b().exponents()[0];
}

bool check_joint_any_n_necessary(const MatrixPair& pair)
{
    const auto a = pair.a().exponents();
    const auto b = pair.b().exponents();
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] == b[j])
            return false;
    return true;
}

bool check_joint_n3(const MatrixPair& pair)
{
    if (pair.n() != 3)
        throw DimensionMismatch("check_joint_n3 needs 3 x 3 matrices");
    const Field& f = pair.field();
    const std::uint64_t ord = f.order();
    const auto a = exps(pair.a());
    const auto b = exps(pair.b());
    if (!check_joint_any_n_necessary(pair) || !n3_modular(ord, a[0], a[1]) || !n3_modular(ord, b[0], b[1]))
        return false;
    const auto m = [ord](std::uint64_t v) { return v % ord; };
    if (m(a[0] + b[0]) == a[1] || m(a[0] + b[0]) == b[1] || m(a[0] + b[1]) == m(a[1] + b[0]))
        return false;
    const RootPowers w(f, pair.omega());
    const Element common = w(a[1]) ^ w(b[1]) ^ w(a[0] + b[0]);
    return (common ^ w(2 * a[0])) != 0 && (common ^ w(2 * b[0])) != 0;
}

RegularityReport is_product_preserving(const MatrixPair& pair)
{
    const Field& f = pair.field();
    const auto prod = toeplitz_product_column(f, pair.a().first_column(), pair.b().first_column());
    return scan_single(f, prod);
}

namespace {

// Leading 3 x 3 product conditions: c2 != 0 and c2 != c1^2 for the product
// column [1, c1, c2, ...].
template <typename Exps>
bool product_n3(const RootPowers& w, const Exps& a, const Exps& b)
{
    const Element c2 = w(a[1]) ^ w(b[1]) ^ w(a[0] + b[0]);
    return c2 != 0 && (c2 ^ w(2 * a[0]) ^ w(2 * b[0])) != 0;
}

} // namespace

bool check_product_n3(const MatrixPair& pair)
{
    if (pair.n() != 3)
        throw DimensionMismatch("check_product_n3 needs 3 x 3 matrices");
    const auto a = exps(pair.a());
    const auto b = exps(pair.b());
    return product_n3(RootPowers(pair.field(), pair.omega()), a, b);
}

bool check_product_n4(const MatrixPair& pair)
{
    if (pair.n() != 4)
        throw DimensionMismatch("check_product_n4 needs 4 x 4 matrices");
    const auto a = exps(pair.a());
    const auto b = exps(pair.b());
    const RootPowers w(pair.field(), pair.omega());
    const auto a1 = a[0], a2 = a[1], a3 = a[2];
    const auto b1 = b[0], b2 = b[1], b3 = b[2];
    const Element first = w(b1 + a3) ^ w(b3 + a1) ^ w(a1 + a3) ^ w(b2 + 2 * a1) ^ w(2 * b1 + a2) ^ w(2 * b2) ^
                          w(2 * b1 + 2 * a1) ^ w(2 * a2) ^ w(b1 + b3) ^ w(b1 + b2 + a1) ^ w(b1 + a1 + a2);
    const Element last = w(a3) ^ w(b3) ^ w(b1 + a2) ^ w(b2 + a1);
    const Element second = last ^ w(b1 + 2 * a1) ^ w(2 * b1 + a1) ^ w(3 * b1) ^ w(3 * a1);
    // The three inequalities only cover submatrices reaching the new corner;
    // the leading 3 x 3 product must be superregular as well.
    return first != 0 && second != 0 && last != 0 && product_n3(w, a, b);
}

ToeplitzSpec inverse(const ToeplitzSpec& spec)
{
    const auto inv = toeplitz_inverse_column(spec.field(), spec.first_column());
    auto out = spec_from_column(spec.field_ptr(), spec.omega(), inv);
    if (!out)
        throw Error("inverse has a zero entry in its first column");
    return *out;
}

std::string to_string(CountMethod m)
{
    switch (m) {
    case CountMethod::Lemma: return "lemma";
    case CountMethod::Corollary: return "corollary";
    case CountMethod::BruteForce: return "bruteforce";
    }
    return "?";
}

CountMethod parse_count_method(const std::string& name)
{
    if (name == "lemma")
        return CountMethod::Lemma;
    if (name == "corollary")
        return CountMethod::Corollary;
    if (name == "bruteforce" || name == "brute-force")
        return CountMethod::BruteForce;
    throw Error("unknown count method '" + name + "' (expected lemma, corollary or bruteforce)");
}

std::uint64_t count_superregular(const FieldPtr& field, Element omega, std::size_t n, CountMethod method,
                                 unsigned threads)
{
    const Field& f = *field;
    f.require_root(omega);
    const std::uint64_t ord = f.order();
    if (method == CountMethod::BruteForce)
        return count_bruteforce(f, omega, n, threads);
    if (n == 0)
        throw UnsupportedDimension("n must be at least 1");
    if (method == CountMethod::Corollary && n != 5)
        throw UnsupportedDimension("the corollary condition is stated for n = 5 only");
    if (n > 5)
        throw UnsupportedDimension("closed-form counting supports n <= 5");

    switch (n) {
    case 1: return 1;
    case 2: return ord;
    case 3: {
        std::uint64_t c = 0;
        for (std::uint64_t i1 = 0; i1 < ord; ++i1)
            for (std::uint64_t i2 = 0; i2 < ord; ++i2)
                c += n3_modular(ord, i1, i2);
        return c;
    }
    case 4: {
        std::uint64_t c = 0;
        for (std::uint64_t i1 = 0; i1 < ord; ++i1)
            for (std::uint64_t i2 = 0; i2 < ord; ++i2)
                for (std::uint64_t i3 = 0; i3 < ord; ++i3)
                    c += n3_modular(ord, i1, i2) && n4_modular(ord, i1, i2, i3);
        return c;
    }
    default: break;
    }

    const RootPowers w(f, omega);
    const bool corollary = method == CountMethod::Corollary;
    return parallel_over_first(f.order(), threads, [&](std::uint64_t i1) {
        std::uint64_t c = 0;
        for (std::uint64_t i2 = 0; i2 < ord; ++i2) {
            if (!n3_modular(ord, i1, i2))
                continue;
            for (std::uint64_t i3 = 0; i3 < ord; ++i3) {
                if (!n4_modular(ord, i1, i2, i3))
                    continue;
                for (std::uint64_t i4 = 0; i4 < ord; ++i4) {
                    if (!n5_modular(ord, i1, i2, i3, i4))
                        continue;
                    c += corollary ? corollary_field(w, i1, i2, i3, i4) : n5_field(w, i1, i2, i3, i4);
                }
            }
        }
        return c;
    });
}

} // namespace srtz
