#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "respec/cfg.hpp"
#include "respec/core.hpp"

namespace respec {

// Suffix-width framed byte grammar (the pre-Huffman log representation):
//
//   entry := suffix | prefix_marker prefix | subpath_marker id
//
// Both markers occupy exactly the suffix width, so the stream stays
// self-framing. The Verifier must pick markers that no genuine suffix can
// equal (check_marker_collision); the encoder raises MarkerCollisionError if
// that premise is ever violated at runtime.
struct PrefixConfig {
    unsigned prefix_len = 0;                    // bytes, 0..=3
    std::vector<std::uint8_t> prefix_marker;    // suffix-width bytes
    std::vector<std::uint8_t> subpath_marker;   // suffix-width bytes

    unsigned suffix_len() const { return kAddressBytes - prefix_len; }

    static PrefixConfig with_default_markers(unsigned prefix_len);
    static PrefixConfig with_marker_bytes(unsigned prefix_len,
                                          std::uint8_t prefix_fill,
                                          std::uint8_t subpath_fill);

    void validate() const;  // throws ConfigError

    bool operator==(const PrefixConfig&) const = default;
};

inline constexpr std::uint8_t kDefaultPrefixMarkerByte = 0xA5;
inline constexpr std::uint8_t kDefaultSubPathMarkerByte = 0x5A;

struct PrefixState {
    // absent before the first address of a session (prefix_len > 0)
    std::optional<std::vector<std::uint8_t>> active_prefix;

    bool operator==(const PrefixState&) const = default;
};

// Appends the encoding of one token to `out` and advances the state:
//   - Addr whose prefix equals the active prefix -> suffix bytes only
//   - Addr with a new prefix (or the first one)  -> marker, prefix, suffix
//   - SubPath(id) -> subpath marker, id byte; active prefix unchanged
// PrefixMark tokens are produced by this stage, never consumed.
void prefix_encode_step(const PrefixConfig& cfg, PrefixState& state,
                        const Token& token, std::vector<std::uint8_t>& out);

std::vector<std::uint8_t> prefix_encode(const PrefixConfig& cfg,
                                        std::span<const Token> tokens);

// Inverse of the encoder; reconstructs the exact Addr/SubPath token stream.
// Throws DecodeError on truncation or on a suffix before any prefix is
// established (prefix_len > 0).
std::vector<Token> prefix_decode(const PrefixConfig& cfg,
                                 std::span<const std::uint8_t> bytes);

struct CollisionReport {
    std::vector<Address> colliding;  // node addresses whose suffix is a marker
    bool safe() const { return colliding.empty(); }
};

CollisionReport check_marker_collision(const PrefixConfig& cfg,
                                       const CfgModel& model);

}  // namespace respec
