#pragma once

// Binary packet framing for coded rows, plus the byte <-> symbol packing used
// to carry files through the codec.
//
// Layout (multi-byte fields big-endian):
//   "SRTZ" | version (1) | p (1) | poly (2) | k (2) | generation (4) |
//   branch (1) | row (2) | l (2) | payload | [pad bits (4)]
// The payload holds l symbols, one byte each for p <= 8 and two bytes each
// otherwise. The poly field stores the polynomial without its x^p term, so
// degree 16 fits. Packets of the final generation set bit 0x80 of the version
// byte and append the number of zero bits padded onto the end of the input.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "srtz/codec.hpp"
#include "srtz/galois.hpp"

namespace srtz {

inline constexpr std::uint8_t kPacketVersion = 1;
inline constexpr std::uint8_t kFinalGenerationFlag = 0x80;

struct Packet {
    unsigned p = 8;
    std::uint32_t poly = 0x11D;
    std::uint16_t k = 0;
    CodedRow row;
    // Present only on packets of the final generation.
    std::optional<std::uint32_t> pad_bits;
};

void write_packet(std::ostream& out, const Packet& packet);
// Returns nullopt at a clean end of stream. Throws FormatError on a truncated
// or malformed packet.
std::optional<Packet> read_packet(std::istream& in);

// Packs bytes into p-bit symbols, most significant bit first, zero-filling
// the final symbol.
std::vector<Element> bytes_to_symbols(std::span<const std::uint8_t> bytes, unsigned p);
// Inverse of bytes_to_symbols, keeping the first nbytes bytes.
std::vector<std::uint8_t> symbols_to_bytes(std::span<const Element> symbols, unsigned p, std::size_t nbytes);

} // namespace srtz
