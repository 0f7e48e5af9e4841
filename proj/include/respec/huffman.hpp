#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "respec/core.hpp"

namespace respec {

inline constexpr unsigned kHuffmanSymbols = 256;
inline constexpr unsigned kMaxCodeLen = 32;

// Canonical 256-symbol prefix code. Codes are fully determined by the
// lengths: they are assigned in (length, symbol) order, so any two builds
// from the same frequencies are bit-identical.
struct HuffmanTable {
    std::array<std::uint8_t, kHuffmanSymbols> lengths{};   // 1..=32 bits each
    std::array<std::uint32_t, kHuffmanSymbols> codes{};    // low `length` bits

    // Checks lengths in range, exact Kraft equality, and that the stored
    // codes are the canonical assignment; throws ConfigError.
    void validate() const;

    bool operator==(const HuffmanTable&) const = default;
};

// Optimal prefix-code lengths for an arbitrary positive-weight alphabet
// (plain pairwise merge). Deterministic: ties break on the earlier-created
// node, with leaves ordered by symbol.
std::vector<std::uint8_t> huffman_code_lengths(
    std::span<const std::uint64_t> weights);

// Canonical code assignment from a 256-entry length vector (all in 1..=32,
// exact Kraft equality required).
std::array<std::uint32_t, kHuffmanSymbols> canonical_codes(
    const std::array<std::uint8_t, kHuffmanSymbols>& lengths);

// Exact completeness test: sum of 2^-length over all symbols equals 1.
bool kraft_equality(std::span<const std::uint8_t> lengths);

// Builds the speculated table from byte frequencies. Every count is
// Laplace-smoothed (+1) so bytes unseen in training stay encodable; attack
// traces produce exactly such bytes and must still be logged.
HuffmanTable build_table(const std::array<std::uint64_t, kHuffmanSymbols>& frequencies);

void huffman_encode_append(const HuffmanTable& table,
                           std::span<const std::uint8_t> bytes, BitStream& out);
BitStream huffman_encode(const HuffmanTable& table,
                         std::span<const std::uint8_t> bytes);

// Requires the stream to be consumed by whole codewords; throws DecodeError
// on a trailing partial codeword.
std::vector<std::uint8_t> huffman_decode(const HuffmanTable& table,
                                         const BitStream& stream);

// Blob layout: 256 length bytes, then all 256 codewords bit-packed in symbol
// order (zero-padded to a byte). Codes are redundant given the lengths; the
// deserializer recomputes them and treats a mismatch as corruption.
std::vector<std::uint8_t> serialize_table(const HuffmanTable& table);
HuffmanTable deserialize_table(std::span<const std::uint8_t> blob);

// Canonical-code decoder state, reusable across calls.
class HuffmanDecoder {
public:
    explicit HuffmanDecoder(const HuffmanTable& table);

    std::uint8_t decode_one(BitReader& reader) const;

private:
    std::array<std::uint8_t, kHuffmanSymbols> sorted_syms_{};
    std::array<std::uint32_t, kMaxCodeLen + 1> first_code_{};
    std::array<std::uint16_t, kMaxCodeLen + 1> first_index_{};
    std::array<std::uint16_t, kMaxCodeLen + 1> count_{};
};

}  // namespace respec
