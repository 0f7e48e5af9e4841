#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "respec/core.hpp"
#include "respec/huffman.hpp"
#include "respec/prefix.hpp"
#include "respec/subpath.hpp"

namespace respec {

struct StageFlags {
    bool subpath = false;
    bool prefix = false;
    bool huffman = false;

    bool operator==(const StageFlags&) const = default;
};

// Everything one attestation session needs to build (and later invert) the
// log: stage selection, marker grammar, speculated table, sub-path specs.
struct SessionConfig {
    StageFlags stages;
    PrefixConfig prefix = PrefixConfig::with_default_markers(0);
    HuffmanTable table;                // meaningful when stages.huffman
    std::vector<SubPathSpec> specs;    // meaningful when stages.subpath

    // Sub-path symbols need the marker grammar for framing even when prefix
    // elision itself is off; in that case the grammar runs with prefix_len 0.
    bool marker_grammar() const { return stages.prefix || stages.subpath; }
    PrefixConfig effective_prefix() const;

    void validate() const;  // throws ConfigError

    bool operator==(const SessionConfig&) const = default;
};

// Per-branch streaming encoder: the Secure-World log path. Destinations flow
// through sub-path replacement, prefix elision, and Huffman coding in that
// order; whatever bytes the front stages release are appended to the
// bitstream immediately.
class Encoder {
public:
    explicit Encoder(SessionConfig config);  // session_init

    void log_branch(Address dest);

    struct Output {
        std::vector<std::uint8_t> bytes;
        std::uint32_t bit_len = 0;
    };

    // Flushes any partial sub-path buffer verbatim and seals the session;
    // further log_branch calls are rejected.
    Output finalize();

    std::uint32_t entries() const { return entries_; }
    bool sealed() const { return sealed_; }
    const SessionConfig& config() const { return config_; }
    const PrefixState& prefix_state() const { return prefix_state_; }

private:
    void emit(std::span<const Token> tokens);

    SessionConfig config_;
    PrefixConfig effective_prefix_;
    std::optional<SubPathMatcher> matcher_;
    std::optional<SubPathMatcher::Session> match_session_;
    PrefixState prefix_state_;
    BitStream out_;
    std::uint32_t entries_ = 0;
    bool sealed_ = false;
};

// One-shot encode of a whole destination sequence.
Encoder::Output encode_trace(const SessionConfig& config,
                             std::span<const Address> destinations);

// Full inverse: Huffman -> prefix -> sub-path, yielding the verbatim
// destination sequence. The config must equal the encoder's.
std::vector<Address> decode_log(const SessionConfig& config,
                                std::span<const std::uint8_t> bytes,
                                std::uint32_t bit_len);

}  // namespace respec
