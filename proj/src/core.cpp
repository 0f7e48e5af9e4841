#include "respec/core.hpp"

#include <algorithm>
#include <cctype>

namespace respec {

std::array<std::uint8_t, kAddressBytes> address_bytes(Address a) {
    return {static_cast<std::uint8_t>(a >> 24), static_cast<std::uint8_t>(a >> 16),
            static_cast<std::uint8_t>(a >> 8), static_cast<std::uint8_t>(a)};
}

Address address_from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kAddressBytes)
        throw std::invalid_argument("address_from_bytes: need exactly 4 bytes");
    return (Address(bytes[0]) << 24) | (Address(bytes[1]) << 16) |
           (Address(bytes[2]) << 8) | Address(bytes[3]);
}

std::vector<std::uint8_t> address_prefix(Address a, unsigned prefix_len) {
    if (prefix_len > 3)
        throw std::invalid_argument("address_prefix: prefix_len must be 0..3");
    const auto b = address_bytes(a);
    return {b.begin(), b.begin() + prefix_len};
}

std::vector<std::uint8_t> address_suffix(Address a, unsigned prefix_len) {
    if (prefix_len > 3)
        throw std::invalid_argument("address_suffix: prefix_len must be 0..3");
    const auto b = address_bytes(a);
    return {b.begin() + prefix_len, b.end()};
}

Address address_join(std::span<const std::uint8_t> prefix,
                     std::span<const std::uint8_t> suffix) {
    if (prefix.size() + suffix.size() != kAddressBytes)
        throw std::invalid_argument("address_join: prefix+suffix must total 4 bytes");
    std::array<std::uint8_t, kAddressBytes> b{};
    std::copy(prefix.begin(), prefix.end(), b.begin());
    std::copy(suffix.begin(), suffix.end(), b.begin() + prefix.size());
    return address_from_bytes(b);
}

Token Token::make_addr(Address a) {
    Token t;
    t.kind = Kind::Addr;
    t.addr = a;
    return t;
}

Token Token::make_prefix_mark(std::vector<std::uint8_t> prefix) {
    Token t;
    t.kind = Kind::PrefixMark;
    t.prefix = std::move(prefix);
    return t;
}

Token Token::make_subpath(std::uint8_t id) {
    if (id < 1 || id > kMaxSubPathId)
        throw std::invalid_argument("Token::make_subpath: id must be 1..8");
    Token t;
    t.kind = Kind::SubPath;
    t.subpath_id = id;
    return t;
}

void BitStream::append(std::uint32_t code_bits, unsigned code_len) {
    if (code_len < 1 || code_len > 32)
        throw std::invalid_argument("BitStream::append: code_len must be 1..32");
    if (code_len < 32) code_bits &= (std::uint32_t(1) << code_len) - 1;

    unsigned left = code_len;
    while (left > 0) {
        const unsigned used = bit_len_ % 8;
        if (used == 0) bytes_.push_back(0);
        const unsigned room = 8 - used;
        const unsigned take = std::min(room, left);
        const std::uint32_t chunk =
            (code_bits >> (left - take)) & ((std::uint32_t(1) << take) - 1);
        bytes_.back() |= static_cast<std::uint8_t>(chunk << (room - take));
        left -= take;
        bit_len_ += take;
    }
}

BitStream BitStream::from_parts(std::vector<std::uint8_t> bytes,
                                std::uint32_t bit_len) {
    const std::size_t want = (std::size_t(bit_len) + 7) / 8;
    if (bytes.size() != want)
        throw DecodeError("BitStream::from_parts: byte count does not match bit length");
    if (bit_len % 8 != 0) {
        const std::uint8_t pad_mask = static_cast<std::uint8_t>(0xFF >> (bit_len % 8));
        if ((bytes.back() & pad_mask) != 0)
            throw DecodeError("BitStream::from_parts: nonzero padding bits");
    }
    BitStream s;
    s.bytes_ = std::move(bytes);
    s.bit_len_ = bit_len;
    return s;
}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::uint32_t bit_len)
    : bytes_(bytes), bit_len_(bit_len) {
    if (std::size_t(bit_len) > bytes.size() * 8)
        throw DecodeError("BitReader: bit length exceeds buffer");
}

bool BitReader::read_bit() {
    if (pos_ >= bit_len_) throw DecodeError("BitReader: bit stream exhausted");
    const bool bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1;
    ++pos_;
    return bit;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

namespace {

int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::vector<std::uint8_t> from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw ParseError("from_hex: odd digit count");
    std::vector<std::uint8_t> out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const int hi = hex_val(hex[i]);
        const int lo = hex_val(hex[i + 1]);
        if (hi < 0 || lo < 0) throw ParseError("from_hex: invalid hex digit");
        out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return out;
}

Address parse_address(const std::string& text) {
    std::size_t pos = 0;
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
        pos = 2;
    if (pos == text.size()) throw ParseError("empty address");
    std::uint64_t value = 0;
    std::size_t digits = 0;
    for (; pos < text.size(); ++pos) {
        const int v = hex_val(text[pos]);
        if (v < 0) throw ParseError("invalid address digit in '" + text + "'");
        value = value << 4 | std::uint64_t(v);
        if (++digits > 8) throw ParseError("address overflows 32 bits: '" + text + "'");
    }
    return static_cast<Address>(value);
}

std::string format_address(Address a) {
    return to_hex(address_bytes(a));
}

}  // namespace respec
