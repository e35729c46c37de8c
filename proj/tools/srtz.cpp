// srtz: search, verify and count superregular lower-triangular Toeplitz
// matrices over GF(2^p), and run the matching erasure codec on files.
//
// Exit codes: 0 success, 1 verification false / undecodable / search failed,
// 2 usage or input error, 3 insufficient field size.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "srtz/bench.hpp"
#include "srtz/codec.hpp"
#include "srtz/error.hpp"
#include "srtz/galois.hpp"
#include "srtz/matrix_file.hpp"
#include "srtz/packet.hpp"
#include "srtz/regularity.hpp"
#include "srtz/search.hpp"
#include "srtz/toeplitz.hpp"

namespace {

using namespace srtz;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInsufficientField = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Decimal, 0x-prefixed hex or 0b-prefixed binary.
std::uint64_t parse_number(const std::string& text)
{
    std::string s = text;
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        base = 16;
        s = s.substr(2);
    } else if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
        base = 2;
        s = s.substr(2);
    }
    if (s.empty() || s.find_first_of("+- \t") != std::string::npos)
        throw CLI::ValidationError("invalid number: " + text);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used, base);
    } catch (const std::exception&) {
        throw CLI::ValidationError("invalid number: " + text);
    }
    if (used != s.size())
        throw CLI::ValidationError("invalid number: " + text);
    return v;
}

template <typename T>
CLI::Option* add_number(CLI::App* app, const std::string& name, T& target, const std::string& help)
{
    return app->add_option_function<std::string>(
                  name,
                  [&target, name](const std::string& s) {
                      const auto v = parse_number(s);
                      if (v > std::numeric_limits<T>::max())
                          throw CLI::ValidationError(name + ": value out of range: " + s);
                      target = static_cast<T>(v);
                  },
                  help)
        ->type_name("NUM");
}

std::string hex(std::uint32_t v)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%X", v);
    return buf;
}

std::string join(std::span<const Exponent> v)
{
    std::string out;
    for (auto e : v)
        out += (out.empty() ? "" : " ") + std::to_string(e);
    return out;
}

std::string join_elements(std::span<const Element> v)
{
    std::string out;
    for (auto e : v)
        out += (out.empty() ? "" : " ") + std::to_string(e);
    return out;
}

std::string describe(const ToeplitzSpec& s)
{
    return "n=" + std::to_string(s.n()) + " p=" + std::to_string(s.field().degree()) + " poly=" +
           hex(s.field().poly()) + " omega=" + std::to_string(s.omega()) + " exponents=(" + join(s.exponents()) + ")";
}

std::string describe_witness(const RegularityReport& r)
{
    if (!r.witness)
        return {};
    std::string rows, cols;
    for (std::size_t t = 0; t < r.witness->size(); ++t) {
        const char* src = r.witness_sources.empty() ? "" : (r.witness_sources[t] == 0 ? "A" : "B");
        rows += (t ? "," : "") + std::string(src) + std::to_string(r.witness->rows[t]);
        cols += (t ? "," : "") + std::to_string(r.witness->cols[t]);
    }
    return "  singular submatrix: rows {" + rows + "} cols {" + cols + "}";
}

struct FieldArgs {
    unsigned p = 8;
    std::uint32_t poly = 0;
    std::uint32_t omega = 2;

    void add(CLI::App* app, bool with_omega)
    {
        add_number(app, "--p", p, "field degree, GF(2^p)")->required();
        add_number(app, "--poly", poly, "primitive polynomial mask (default: built-in for p <= 8)");
        if (with_omega)
            add_number(app, "--omega", omega, "root of the polynomial (default 2)");
    }

    FieldPtr field() const
    {
        std::uint32_t f = poly;
        if (f == 0) {
            try {
                f = reference_polynomial(p);
            } catch (const Error&) {
                throw UsageError("--poly is required for p = " + std::to_string(p));
            }
        }
        return make_field(p, f);
    }
};

// ----------------------------------------------------------------- search

struct SearchArgs {
    FieldArgs field;
    std::size_t n = 0;
    bool pair = false;
    bool product = false;
    bool no_backtracking = false;
    std::uint64_t max_candidates = 0;
    std::string out;
};

int run_search(const SearchArgs& a)
{
    const auto field = a.field.field();
    const auto omega = static_cast<Element>(a.field.omega);
    field->require_root(omega);
    SearchOptions opts;
    opts.backtracking = !a.no_backtracking;
    opts.max_candidates = a.max_candidates;

    SearchStatus status;
    SearchStats stats;
    std::vector<ToeplitzSpec> found;
    if (a.pair || a.product) {
        auto r = greedy_pair_search(field, omega, a.n, a.product, opts);
        status = r.status;
        stats = r.stats;
        if (r.pair)
            found = {r.pair->a(), r.pair->b()};
    } else {
        auto r = greedy_search(field, omega, a.n, opts);
        status = r.status;
        stats = r.stats;
        if (r.matrix)
            found = {*r.matrix};
    }
    const double ms = std::chrono::duration<double, std::milli>(stats.elapsed).count();
    std::printf("status: %s\n", to_string(status).c_str());
    for (std::size_t i = 0; i < found.size(); ++i) {
        const char* label = found.size() == 1 ? "" : (i == 0 ? "A " : "B ");
        std::printf("%sexponents: %s\n", label, join(found[i].exponents()).c_str());
        std::printf("%sfirst column: %s\n", label, join_elements(found[i].first_column()).c_str());
    }
    std::printf("candidates: %llu\nbacktracks: %llu\n", static_cast<unsigned long long>(stats.candidates),
                static_cast<unsigned long long>(stats.backtracks));
    if (status == SearchStatus::DeadEnd)
        std::printf("failed at size: %zu\n", stats.failed_level);
    std::printf("elapsed: %.3f ms\n", ms);

    switch (status) {
    case SearchStatus::Found:
        if (!a.out.empty())
            write_matrices(a.out, found);
        return kExitOk;
    case SearchStatus::InsufficientFieldSize: return kExitInsufficientField;
    default: return kExitFalse;
    }
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    std::string matrix;
    std::string matrix_b;
    bool joint = false;
    bool product = false;
};

int run_verify(const VerifyArgs& a)
{
    auto specs = read_matrices(a.matrix);
    if (!a.matrix_b.empty()) {
        auto more = read_matrices(a.matrix_b);
        specs.insert(specs.end(), more.begin(), more.end());
    }
    if (specs.size() > 2)
        throw UsageError("verify takes one matrix or one pair");
    if ((a.joint || a.product) && specs.size() != 2)
        throw UsageError("--joint and --product need a pair (a pair file or --matrix-b)");

    bool ok = true;
    auto print = [&](const std::string& label, const RegularityReport& r) {
        std::printf("%s: %s\n", label.c_str(), r.verdict ? "true" : "false");
        if (!r.verdict)
            std::printf("%s\n", describe_witness(r).c_str());
        ok = ok && r.verdict;
    };
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const std::string tag = specs.size() == 1 ? "" : (i == 0 ? "A " : "B ");
        std::printf("%smatrix: %s\n", tag.c_str(), describe(specs[i]).c_str());
        print(tag + "superregular", is_superregular(specs[i]));
    }
    if (specs.size() == 2) {
        const MatrixPair pair(specs[0], specs[1]);
        if (a.joint)
            print("jointly superregular", is_jointly_superregular(pair));
        if (a.product)
            print("product preserving", is_product_preserving(pair));
    }
    return ok ? kExitOk : kExitFalse;
}

// ------------------------------------------------------------------ count

struct CountArgs {
    FieldArgs field;
    std::size_t n = 5;
    std::string method = "lemma";
    unsigned threads = 0;
    bool allow_long = false;
};

int run_count(const CountArgs& a)
{
    const auto field = a.field.field();
    const auto omega = static_cast<Element>(a.field.omega);
    field->require_root(omega);
    CountMethod method;
    try {
        method = parse_count_method(a.method);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (a.field.p >= 7 && !a.allow_long)
        throw UsageError("counting over GF(2^" + std::to_string(a.field.p) +
                         ") scans billions of tuples; pass --allow-long to run it");
    const auto start = std::chrono::steady_clock::now();
    const auto count = count_superregular(field, omega, a.n, method, a.threads);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%llu\n", static_cast<unsigned long long>(count));
    std::fprintf(stderr, "p=%u poly=%s n=%zu method=%s elapsed=%.3f s\n", field->degree(), hex(field->poly()).c_str(),
                 a.n, to_string(method).c_str(), s);
    return kExitOk;
}

// ------------------------------------------------------------- field-info

int run_field_info(const FieldArgs& a)
{
    const auto field = a.field();
    const Field& f = *field;
    std::printf("field: GF(2^%u)\npoly: %s\nelements: %u\nmultiplicative order: %u\n", f.degree(),
                hex(f.poly()).c_str(), f.size(), f.order());
    std::printf("roots:");
    for (Element r : f.roots())
        std::printf(" %u", r);
    std::printf("\n");

    // Table sanity: log/exp round trip, inverses, and every root having full order.
    bool ok = f.exp(f.order()) == 1;
    for (std::uint32_t x = 1; x < f.size(); ++x) {
        const auto e = static_cast<Element>(x);
        ok = ok && f.exp(f.log(e)) == e && f.mul(e, f.inv(e)) == 1;
    }
    for (Element r : f.roots())
        for (std::uint32_t d = 1; d < f.order(); ++d)
            if (f.order() % d == 0 && f.pow(r, d) == 1)
                ok = false;
    std::printf("table checks: %s\n", ok ? "ok" : "FAILED");
    return ok ? kExitOk : kExitFalse;
}

// ------------------------------------------------------------------ codec

struct GeneratorArgs {
    std::vector<std::string> generators;
    FieldArgs field;  // used when no generator files are given
    std::size_t k = 0;
    std::string order = "interleaved";

    void add(CLI::App* app)
    {
        app->add_option("--generator", generators, "branch matrix file (repeat for rate 1/3, 1/4, ...)")
            ->check(CLI::ExistingFile);
        add_number(app, "--k", k, "generation size when no --generator is given");
        add_number(app, "--p", field.p, "field degree when no --generator is given");
        add_number(app, "--poly", field.poly, "field polynomial when no --generator is given");
        app->add_option("--order", order, "emission order")
            ->check(CLI::IsMember({"interleaved", "blockwise"}));
    }

    GeneratorStack build() const
    {
        const auto emit = order == "blockwise" ? EmissionOrder::Blockwise : EmissionOrder::Interleaved;
        if (generators.empty()) {
            if (k == 0)
                throw UsageError("give --generator files or --k for a systematic-only code");
            return GeneratorStack(field.field(), k, emit);
        }
        std::vector<ToeplitzSpec> specs;
        for (const auto& path : generators)
            specs.push_back(read_matrix(path));
        if (k != 0 && k != specs.front().n())
            throw UsageError("--k disagrees with the generator size");
        return GeneratorStack(specs.front().field_ptr(), specs, emit);
    }
};

std::vector<std::uint8_t> read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Packet> read_packets(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open " + path);
    std::vector<Packet> out;
    while (auto p = read_packet(in))
        out.push_back(std::move(*p));
    return out;
}

void write_packets(const std::string& path, const std::vector<Packet>& packets)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write " + path);
    for (const auto& p : packets)
        write_packet(out, p);
}

struct EncodeArgs {
    GeneratorArgs gen;
    std::size_t packet_size = 1600;
    std::string input;
    std::string output;
};

int run_encode(const EncodeArgs& a)
{
    const GeneratorStack g = a.gen.build();
    const Field& f = g.field();
    const auto bytes = read_file(a.input);
    auto symbols = bytes_to_symbols(bytes, f.degree());
    const std::size_t per_gen = g.k() * a.packet_size;
    const std::size_t gens = std::max<std::size_t>(1, (symbols.size() + per_gen - 1) / per_gen);
    const std::uint64_t pad_bits = static_cast<std::uint64_t>(gens) * per_gen * f.degree() - bytes.size() * 8;
    if (pad_bits > std::numeric_limits<std::uint32_t>::max() || gens > std::numeric_limits<std::uint32_t>::max())
        throw UsageError("generation or input too large for the packet format");
    symbols.resize(gens * per_gen, 0);

    std::vector<Packet> packets;
    for (std::size_t gi = 0; gi < gens; ++gi) {
        Matrix source(g.k(), a.packet_size,
                      std::vector<Element>(symbols.begin() + static_cast<std::ptrdiff_t>(gi * per_gen),
                                           symbols.begin() + static_cast<std::ptrdiff_t>((gi + 1) * per_gen)));
        for (auto& row : encode(g, source, static_cast<std::uint32_t>(gi))) {
            Packet p{f.degree(), f.poly(), static_cast<std::uint16_t>(g.k()), std::move(row), std::nullopt};
            if (gi + 1 == gens)
                p.pad_bits = static_cast<std::uint32_t>(pad_bits);
            packets.push_back(std::move(p));
        }
    }
    write_packets(a.output, packets);
    std::printf("encoded %zu bytes into %zu generations, %zu packets (k=%zu, m=%zu, l=%zu)\n", bytes.size(), gens,
                packets.size(), g.k(), g.m(), a.packet_size);
    return kExitOk;
}

// Comma-separated items "b:r", "b:r1-r2" or "b:*", applied to every generation.
std::set<RowId> parse_erasures(const std::string& text, const GeneratorStack& g)
{
    std::set<RowId> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw UsageError("erasure item must look like branch:row, branch:lo-hi or branch:*: " + item);
        const auto branch = parse_number(item.substr(0, colon));
        const std::string rows = item.substr(colon + 1);
        std::uint64_t lo = 1, hi = g.k();
        if (rows != "*") {
            const auto dash = rows.find('-');
            lo = parse_number(rows.substr(0, dash));
            hi = dash == std::string::npos ? lo : parse_number(rows.substr(dash + 1));
        }
        if (branch >= g.m() || lo == 0 || hi > g.k() || lo > hi)
            throw UsageError("erasure item out of range: " + item);
        for (auto r = lo; r <= hi; ++r)
            out.insert({static_cast<std::uint8_t>(branch), static_cast<std::uint16_t>(r)});
    }
    return out;
}

void check_packet_field(const Packet& p, const GeneratorStack& g)
{
    if (p.p != g.field().degree() || p.poly != g.field().poly() || p.k != g.k())
        throw FormatError("packet (p=" + std::to_string(p.p) + ", poly=" + hex(p.poly) + ", k=" +
                          std::to_string(p.k) + ") does not match the generator");
    if (p.row.branch >= g.m() || p.row.row == 0 || p.row.row > g.k())
        throw FormatError("packet names row (" + std::to_string(p.row.branch) + ", " + std::to_string(p.row.row) +
                          ") outside the generator");
}

struct DecodeArgs {
    GeneratorArgs gen;
    std::string input;
    std::string output;
    std::string erase;
    std::string recoder;
    std::size_t recode_branch = 1;
};

int run_decode(const DecodeArgs& a)
{
    GeneratorStack g = a.gen.build();
    if (!a.recoder.empty())
        g = g.recoded(a.recode_branch, read_matrix(a.recoder));
    const auto erasures = parse_erasures(a.erase, g);
    const auto packets = read_packets(a.input);
    if (packets.empty())
        throw FormatError("no packets in " + a.input);

    std::map<std::uint32_t, std::vector<CodedRow>> by_gen;
    std::optional<std::uint32_t> pad_bits;
    std::uint32_t last_gen = 0;
    for (const auto& p : packets) {
        check_packet_field(p, g);
        last_gen = std::max(last_gen, p.row.generation);
        if (p.pad_bits)
            pad_bits = p.pad_bits;
        if (!erasures.count(p.row.id()))
            by_gen[p.row.generation].push_back(p.row);
    }
    if (!pad_bits)
        throw FormatError("no packet of the final generation carries the padding length");
    const std::size_t l = packets.front().row.payload.size();

    std::vector<Element> symbols;
    bool ok = true;
    for (std::uint32_t gi = 0; gi <= last_gen; ++gi) {
        const auto it = by_gen.find(gi);
        const auto res = it == by_gen.end() ? DecodeResult{} : try_decode(g, it->second);
        if (!res.source) {
            std::printf("generation %u: undecodable (rank %zu of %zu)\n", gi, res.rank, g.k());
            ok = false;
            continue;
        }
        const auto data = res.source->data();
        symbols.insert(symbols.end(), data.begin(), data.end());
    }
    if (!ok)
        return kExitFalse;
    const std::uint64_t total_bits = static_cast<std::uint64_t>(symbols.size()) * g.field().degree();
    if (*pad_bits > total_bits || (total_bits - *pad_bits) % 8 != 0 || symbols.size() != (last_gen + 1) * g.k() * l)
        throw FormatError("inconsistent padding length");
    const auto bytes = symbols_to_bytes(symbols, g.field().degree(), (total_bits - *pad_bits) / 8);
    std::ofstream out(a.output, std::ios::binary);
    if (!out)
        throw FormatError("cannot write " + a.output);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    std::printf("decoded %u generations, %zu bytes\n", last_gen + 1, bytes.size());
    return kExitOk;
}

struct RecodeArgs {
    std::string recoder;
    std::size_t branch = 1;
    std::string input;
    std::string output;
};

int run_recode(const RecodeArgs& a)
{
    const ToeplitzSpec r = read_matrix(a.recoder);
    auto packets = read_packets(a.input);
    std::map<std::uint32_t, std::vector<std::size_t>> slots;
    for (std::size_t i = 0; i < packets.size(); ++i) {
        const auto& p = packets[i];
        if (p.row.branch != a.branch)
            continue;
        if (p.p != r.field().degree() || p.poly != r.field().poly() || p.k != r.n())
            throw FormatError("recoder does not match the packets' field or generation size");
        slots[p.row.generation].push_back(i);
    }
    if (slots.empty())
        throw FormatError("no packets of branch " + std::to_string(a.branch));
    for (const auto& [gen, idx] : slots) {
        std::vector<CodedRow> rows;
        for (auto i : idx)
            rows.push_back(packets[i].row);
        auto out = recode(rows, r);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            auto& slot = packets[idx[j]].row;
            slot = out[slot.row - 1];
        }
    }
    write_packets(a.output, packets);
    std::printf("recoded branch %zu in %zu generations\n", a.branch, slots.size());
    return kExitOk;
}

// ------------------------------------------------------------------ bench

struct BenchArgs {
    std::vector<std::string> matrices;
    FieldArgs field;
    std::size_t k = 0;
    BenchOptions opts;
};

int run_bench(const BenchArgs& a)
{
    std::vector<std::optional<ToeplitzSpec>> runs;
    for (const auto& path : a.matrices)
        runs.emplace_back(read_matrix(path));
    if (runs.empty()) {
        if (a.k == 0)
            throw UsageError("give --matrix files, or --p and --k for the systematic baseline");
        runs.emplace_back(std::nullopt);
    }
    std::vector<double> rates;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const auto field = runs[i] ? runs[i]->field_ptr() : a.field.field();
        const std::size_t k = runs[i] ? runs[i]->n() : a.k;
        const auto r = bench_generator(runs[i], field, k, a.opts);
        const std::string name = runs[i] ? a.matrices[i] : "identity";
        std::printf("%s: k=%zu unit-subdiagonal=%zu xor-symbols=%llu multiply-symbols=%llu throughput=%.2f MB/s\n",
                    name.c_str(), r.k, r.unit_subdiagonal, static_cast<unsigned long long>(r.ops.xors),
                    static_cast<unsigned long long>(r.ops.multiplies), r.bytes_per_second / 1e6);
        rates.push_back(r.bytes_per_second);
    }
    if (rates.size() == 2 && rates[0] > 0)
        std::printf("gain of second over first: %+.1f %%\n", 100.0 * (rates[1] / rates[0] - 1.0));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Superregular lower-triangular Toeplitz matrices over GF(2^p) and their erasure codes"};
    app.require_subcommand(1);
    int rc = kExitOk;

    SearchArgs search;
    auto* cs = app.add_subcommand("search", "greedy search with backtracking for a superregular matrix or pair");
    search.field.add(cs, true);
    add_number(cs, "--n", search.n, "matrix size")->required();
    cs->add_flag("--pair", search.pair, "search a jointly superregular pair");
    cs->add_flag("--product-preserving", search.product, "require the pair's product to be superregular");
    cs->add_flag("--no-backtracking", search.no_backtracking, "stop at the first level without a candidate");
    add_number(cs, "--max-candidates", search.max_candidates, "candidate budget, 0 = unlimited");
    cs->add_option("--out", search.out, "write the matrix (or pair) file here");
    cs->callback([&] { rc = run_search(search); });

    VerifyArgs verify;
    auto* cv = app.add_subcommand("verify", "brute-force superregularity, joint and product checks");
    cv->add_option("--matrix", verify.matrix, "matrix or pair file")->required()->check(CLI::ExistingFile);
    cv->add_option("--matrix-b", verify.matrix_b, "second matrix file")->check(CLI::ExistingFile);
    cv->add_flag("--joint", verify.joint, "check joint superregularity of the pair");
    cv->add_flag("--product", verify.product, "check that the pair's product is superregular");
    cv->callback([&] { rc = run_verify(verify); });

    CountArgs count;
    auto* cc = app.add_subcommand("count", "count superregular n x n matrices for one root");
    count.field.add(cc, true);
    add_number(cc, "--n", count.n, "matrix size (default 5)");
    cc->add_option("--method", count.method, "lemma, corollary or brute-force")
        ->check(CLI::IsMember({"lemma", "corollary", "bruteforce", "brute-force"}));
    add_number(cc, "--threads", count.threads, "worker threads, 0 = all cores");
    cc->add_flag("--allow-long", count.allow_long, "permit counts over GF(2^7) and larger");
    cc->callback([&] { rc = run_count(count); });

    FieldArgs info;
    auto* cf = app.add_subcommand("field-info", "print the roots of the polynomial and check the tables");
    info.add(cf, false);
    cf->callback([&] { rc = run_field_info(info); });

    EncodeArgs enc;
    auto* ce = app.add_subcommand("encode", "encode a file into coded packets");
    enc.gen.add(ce);
    add_number(ce, "--packet-size", enc.packet_size, "symbols per packet (default 1600)");
    ce->add_option("--input", enc.input, "input file")->required()->check(CLI::ExistingFile);
    ce->add_option("--output", enc.output, "packet file")->required();
    ce->callback([&] {
        if (enc.packet_size == 0 || enc.packet_size > 0xFFFF)
            throw UsageError("--packet-size must be in [1, 65535]");
        rc = run_encode(enc);
    });

    DecodeArgs dec;
    auto* cd = app.add_subcommand("decode", "decode packets back into the original file");
    dec.gen.add(cd);
    cd->add_option("--input", dec.input, "packet file")->required()->check(CLI::ExistingFile);
    cd->add_option("--output", dec.output, "output file")->required();
    cd->add_option("--erase", dec.erase, "drop rows before decoding, e.g. 0:*,1:2-3");
    cd->add_option("--recoder", dec.recoder, "matrix the packets of one branch were recoded with")
        ->check(CLI::ExistingFile);
    add_number(cd, "--recode-branch", dec.recode_branch, "branch that was recoded (default 1)");
    cd->callback([&] { rc = run_decode(dec); });

    RecodeArgs rec;
    auto* cr = app.add_subcommand("recode", "recombine one branch's packets through another matrix");
    cr->add_option("--recoder", rec.recoder, "recoding matrix file")->required()->check(CLI::ExistingFile);
    add_number(cr, "--branch", rec.branch, "branch to recode (default 1)");
    cr->add_option("--input", rec.input, "packet file")->required()->check(CLI::ExistingFile);
    cr->add_option("--output", rec.output, "packet file")->required();
    cr->callback([&] { rc = run_recode(rec); });

    BenchArgs bench;
    auto* cb = app.add_subcommand("bench", "encode + decode throughput, optionally comparing two matrices");
    cb->add_option("--matrix", bench.matrices, "matrix file (give two to compare)")
        ->check(CLI::ExistingFile)
        ->expected(0, 2);
    add_number(cb, "--p", bench.field.p, "field degree for the systematic baseline");
    add_number(cb, "--poly", bench.field.poly, "field polynomial for the systematic baseline");
    add_number(cb, "--k", bench.k, "generation size for the systematic baseline");
    add_number(cb, "--packet-size", bench.opts.packet_size, "symbols per packet (default 1600)");
    add_number(cb, "--generations", bench.opts.generations, "generations per pass (default 200)");
    add_number(cb, "--repetitions", bench.opts.repetitions, "timed passes, fastest reported (default 5)");
    cb->callback([&] { rc = run_bench(bench); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const Undecodable& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitFalse;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return rc;
}
