#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace respec {

// ---------------------------------------------------------------------------
// Error taxonomy
// ---------------------------------------------------------------------------

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A genuine suffix matched a reserved marker byte pattern. The wire grammar
// is no longer self-framing, so the encoding session must abort.
class MarkerCollisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DecodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ProtocolError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TransportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Addresses
// ---------------------------------------------------------------------------

// Branch destinations are 32-bit program-memory addresses. Prefix/suffix
// splits are byte-granular and big-endian: the prefix is the leading bytes
// of the usual hex rendering, the suffix the trailing ones.
using Address = std::uint32_t;

inline constexpr unsigned kAddressBytes = 4;

std::array<std::uint8_t, kAddressBytes> address_bytes(Address a);
Address address_from_bytes(std::span<const std::uint8_t> bytes);

// prefix_len in 0..=3 bytes
std::vector<std::uint8_t> address_prefix(Address a, unsigned prefix_len);
std::vector<std::uint8_t> address_suffix(Address a, unsigned prefix_len);
Address address_join(std::span<const std::uint8_t> prefix,
                     std::span<const std::uint8_t> suffix);

// ---------------------------------------------------------------------------
// Log tokens
// ---------------------------------------------------------------------------

inline constexpr std::uint8_t kMaxSubPathId = 8;

// One element of the (pre-serialization) control-flow log: a raw branch
// destination, a prefix-change marker, or a sub-path symbol.
struct Token {
    enum class Kind : std::uint8_t { Addr, PrefixMark, SubPath };

    Kind kind = Kind::Addr;
    Address addr = 0;                  // Kind::Addr
    std::vector<std::uint8_t> prefix;  // Kind::PrefixMark
    std::uint8_t subpath_id = 0;       // Kind::SubPath, in 1..=8

    static Token make_addr(Address a);
    static Token make_prefix_mark(std::vector<std::uint8_t> prefix);
    static Token make_subpath(std::uint8_t id);

    bool operator==(const Token&) const = default;
};

// ---------------------------------------------------------------------------
// Bit stream
// ---------------------------------------------------------------------------

// MSB-first bit packing: the first appended bit lands in the high bit of
// byte 0. Bits past bit_len in the final byte are always zero.
class BitStream {
public:
    BitStream() = default;

    // code occupies the low code_len bits of code_bits; code_len in 1..=32
    void append(std::uint32_t code_bits, unsigned code_len);
    void append_byte(std::uint8_t b) { append(b, 8); }

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::uint32_t bit_len() const { return bit_len_; }
    bool empty() const { return bit_len_ == 0; }

    // Reconstitute from wire parts. Requires bytes.size() == ceil(bit_len/8)
    // and zeroed padding bits; throws DecodeError otherwise.
    static BitStream from_parts(std::vector<std::uint8_t> bytes,
                                std::uint32_t bit_len);

    bool operator==(const BitStream&) const = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::uint32_t bit_len_ = 0;
};

class BitReader {
public:
    BitReader(std::span<const std::uint8_t> bytes, std::uint32_t bit_len);

    bool read_bit();  // throws DecodeError past the end
    std::uint32_t remaining() const { return bit_len_ - pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::uint32_t bit_len_ = 0;
    std::uint32_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Small shared helpers
// ---------------------------------------------------------------------------

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(const std::string& hex);

// "deadbeef" or "0xdeadbeef", at most 8 digits; throws ParseError on
// overflow or junk.
Address parse_address(const std::string& text);
std::string format_address(Address a);  // 8 lowercase hex digits

}  // namespace respec
