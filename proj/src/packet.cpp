#include "srtz/packet.hpp"

#include <array>
#include <cstring>
#include <string>

#include "srtz/error.hpp"

namespace srtz {

namespace {

constexpr std::array<char, 4> kMagic{'S', 'R', 'T', 'Z'};

template <std::size_t N>
void put_be(std::ostream& out, std::uint64_t v)
{
    std::array<char, N> buf;
    for (std::size_t i = 0; i < N; ++i)
        buf[i] = static_cast<char>((v >> (8 * (N - 1 - i))) & 0xFF);
    out.write(buf.data(), N);
}

template <std::size_t N>
std::uint64_t get_be(std::istream& in)
{
    std::array<unsigned char, N> buf;
    if (!in.read(reinterpret_cast<char*>(buf.data()), N))
        throw FormatError("truncated packet");
    std::uint64_t v = 0;
    for (auto b : buf)
        v = (v << 8) | b;
    return v;
}

} // namespace

void write_packet(std::ostream& out, const Packet& packet)
{
    if (packet.p < Field::kMinDegree || packet.p > Field::kMaxDegree)
        throw FormatError("unsupported degree " + std::to_string(packet.p));
    if (packet.row.payload.size() > 0xFFFF)
        throw FormatError("payload longer than 65535 symbols");
    out.write(kMagic.data(), kMagic.size());
    put_be<1>(out, kPacketVersion | (packet.pad_bits ? kFinalGenerationFlag : 0));
    put_be<1>(out, packet.p);
    put_be<2>(out, packet.poly & 0xFFFF);
    put_be<2>(out, packet.k);
    put_be<4>(out, packet.row.generation);
    put_be<1>(out, packet.row.branch);
    put_be<2>(out, packet.row.row);
    put_be<2>(out, packet.row.payload.size());
    if (packet.p <= 8) {
        std::vector<char> bytes(packet.row.payload.begin(), packet.row.payload.end());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    } else {
        for (Element s : packet.row.payload)
            put_be<2>(out, s);
    }
    if (packet.pad_bits)
        put_be<4>(out, *packet.pad_bits);
    if (!out)
        throw FormatError("write failed");
}

std::optional<Packet> read_packet(std::istream& in)
{
    std::array<char, 4> magic;
    in.read(magic.data(), magic.size());
    if (in.gcount() == 0 && in.eof())
        return std::nullopt;
    if (in.gcount() != static_cast<std::streamsize>(magic.size()) || magic != kMagic)
        throw FormatError("bad packet magic");
    const auto version = static_cast<std::uint8_t>(get_be<1>(in));
    if ((version & ~kFinalGenerationFlag) != kPacketVersion)
        throw FormatError("unsupported packet version " + std::to_string(version & ~kFinalGenerationFlag));
    Packet p;
    p.p = static_cast<unsigned>(get_be<1>(in));
    if (p.p < Field::kMinDegree || p.p > Field::kMaxDegree)
        throw FormatError("unsupported degree " + std::to_string(p.p));
    p.poly = static_cast<std::uint32_t>(get_be<2>(in)) | (std::uint32_t{1} << p.p);
    p.k = static_cast<std::uint16_t>(get_be<2>(in));
    p.row.generation = static_cast<std::uint32_t>(get_be<4>(in));
    p.row.branch = static_cast<std::uint8_t>(get_be<1>(in));
    p.row.row = static_cast<std::uint16_t>(get_be<2>(in));
    const auto l = static_cast<std::size_t>(get_be<2>(in));
    p.row.payload.resize(l);
    if (p.p <= 8) {
        std::vector<unsigned char> bytes(l);
        if (!in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(l)))
            throw FormatError("truncated payload");
        std::copy(bytes.begin(), bytes.end(), p.row.payload.begin());
    } else {
        for (auto& s : p.row.payload)
            s = static_cast<Element>(get_be<2>(in));
    }
    for (Element s : p.row.payload)
        if (s >> p.p)
            throw FormatError("payload symbol outside GF(2^" + std::to_string(p.p) + ")");
    if (version & kFinalGenerationFlag)
        p.pad_bits = static_cast<std::uint32_t>(get_be<4>(in));
    return p;
}

std::vector<Element> bytes_to_symbols(std::span<const std::uint8_t> bytes, unsigned p)
{
    std::vector<Element> out;
    out.reserve((bytes.size() * 8 + p - 1) / p);
    std::uint32_t acc = 0;
    unsigned bits = 0;
    for (std::uint8_t b : bytes) {
        acc = (acc << 8) | b;
        bits += 8;
        while (bits >= p) {
            bits -= p;
            out.push_back(static_cast<Element>((acc >> bits) & ((1u << p) - 1)));
        }
        acc &= (1u << bits) - 1;
    }
    if (bits > 0)
        out.push_back(static_cast<Element>((acc << (p - bits)) & ((1u << p) - 1)));
    return out;
}

std::vector<std::uint8_t> symbols_to_bytes(std::span<const Element> symbols, unsigned p, std::size_t nbytes)
{
    std::vector<std::uint8_t> out;
    out.reserve(nbytes);
    std::uint32_t acc = 0;
    unsigned bits = 0;
    for (Element s : symbols) {
        if (out.size() == nbytes)
            break;
        acc = (acc << p) | s;
        bits += p;
        while (bits >= 8 && out.size() < nbytes) {
            bits -= 8;
            out.push_back(static_cast<std::uint8_t>(acc >> bits));
        }
        acc &= (1u << bits) - 1;
    }
    if (out.size() != nbytes)
        throw FormatError("not enough symbols for " + std::to_string(nbytes) + " bytes");
    return out;
}

} // namespace srtz
