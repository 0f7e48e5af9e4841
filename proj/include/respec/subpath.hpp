#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "respec/core.hpp"

namespace respec {

inline constexpr std::size_t kMaxSubPaths = 8;

// A sub-path the Verifier expects to occur often; occurrences are replaced
// by a one-byte symbol in the log.
struct SubPathSpec {
    std::uint8_t id = 0;            // 1..=8
    std::vector<Address> pattern;   // length >= 2

    bool operator==(const SubPathSpec&) const = default;
};

// Streaming leftmost, non-overlapping replacement of configured sub-paths.
// The spec set is prefix-free (no pattern is a prefix of another), so at any
// position at most one pattern can match and "longest" is unambiguous.
class SubPathMatcher {
public:
    // Validates the spec set invariants; throws ConfigError.
    static SubPathMatcher compile(std::vector<SubPathSpec> specs);

    const std::vector<SubPathSpec>& specs() const { return specs_; }

    // Per-encoding-session mutable match state. A token is emitted as soon
    // as it can no longer begin a match; finish() flushes any partial match
    // verbatim.
    class Session {
    public:
        explicit Session(const SubPathMatcher& m) : matcher_(&m) {}

        std::vector<Token> push(Address dest);
        std::vector<Token> finish();

    private:
        void drain(bool final, std::vector<Token>& out);

        const SubPathMatcher* matcher_;
        std::vector<Address> pending_;
    };

    Session session() const { return Session(*this); }

private:
    // index of the spec whose whole pattern sits at the front of buf, or -1
    int complete_match(std::span<const Address> buf) const;
    bool is_proper_prefix_of_pattern(std::span<const Address> buf) const;

    std::vector<SubPathSpec> specs_;
};

// Whole-stream convenience around a one-shot session.
std::vector<Token> subpath_encode(const SubPathMatcher& matcher,
                                  std::span<const Address> addresses);

// Expands SubPath symbols back into their address sequences. Runs before
// prefix encoding / after prefix decoding, so PrefixMark tokens are
// rejected. Throws DecodeError on unknown ids.
std::vector<Token> subpath_decode(const std::vector<SubPathSpec>& specs,
                                  std::span<const Token> tokens);

// Text format: lines `subpath <id> <hex32> <hex32> ...`
std::vector<SubPathSpec> parse_subpaths(const std::string& text);
std::string write_subpaths(const std::vector<SubPathSpec>& specs);

}  // namespace respec
