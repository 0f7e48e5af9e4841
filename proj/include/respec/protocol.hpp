#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "respec/hmac.hpp"
#include "respec/prefix.hpp"
#include "respec/subpath.hpp"

namespace respec {

// Wire format, bit-exact. Every message is
//
//   magic "RSPC" (52 53 50 43) | version 0x01 | msg type | fields | tag
//
// with 4-byte little-endian length prefixes on variable fields and the
// 32-byte HMAC-SHA-256 tag last. Transport framing adds a 4-byte
// little-endian total-length prefix on top.
inline constexpr std::array<std::uint8_t, 4> kWireMagic{0x52, 0x53, 0x50, 0x43};
inline constexpr std::uint8_t kWireVersion = 0x01;
inline constexpr std::uint8_t kMsgRequest = 0x01;
inline constexpr std::uint8_t kMsgReport = 0x02;

// Shared symmetric attestation key. Never serialized into any message.
struct AttestKey {
    std::array<std::uint8_t, 32> key{};

    static AttestKey from_hex(const std::string& hex);  // 64 hex digits
    std::string to_hex() const;
};

// Optional speculation payload of a REQUEST. Absent fields mean "keep the
// previously configured value" on the Prover.
struct SpeculationUpdate {
    std::optional<std::vector<std::uint8_t>> table_blob;
    std::optional<PrefixConfig> prefix;
    std::optional<std::vector<SubPathSpec>> specs;

    bool operator==(const SpeculationUpdate&) const = default;
};

struct Request {
    std::uint64_t chal = 0;
    SpeculationUpdate spec;
    std::array<std::uint8_t, kMacTagSize> sigma{};

    bool operator==(const Request&) const = default;
};

struct Report {
    std::uint64_t chal = 0;
    std::uint32_t cflog_bit_len = 0;
    std::vector<std::uint8_t> cflog;
    std::array<std::uint8_t, kMacTagSize> h{};

    bool operator==(const Report&) const = default;
};

// The attested application's program-memory image. The immutability flag is
// set for the whole attested execution.
struct PmemImage {
    std::vector<std::uint8_t> bytes;
    bool locked = false;
};

enum class RejectReason : std::uint8_t {
    None = 0,
    MalformedWire,
    BadMac,
    StaleChallenge,
};

std::string to_string(RejectReason r);

struct BuiltRequest {
    Request request;
    std::vector<std::uint8_t> wire;
};

// chal := chal_prev + 1; sigma is the HMAC over the exact wire bytes that
// precede it. Throws ProtocolError when the counter is exhausted.
BuiltRequest build_request(const AttestKey& key, std::uint64_t chal_prev,
                           const SpeculationUpdate& spec);

struct RequestVerdict {
    bool accepted = false;
    RejectReason reason = RejectReason::None;
    Request request;  // decoded fields, valid when accepted
};

// Accepts iff the tag verifies under the key and chal > chal_prev.
RequestVerdict verify_request(const AttestKey& key, std::uint64_t chal_prev,
                              std::span<const std::uint8_t> wire);

struct BuiltReport {
    Report report;
    std::vector<std::uint8_t> wire;
};

// h binds Chal, PMEM, and CF_Log (the latter as bit length plus bytes, each
// variable field length-prefixed) so no wire field is outside the MAC.
BuiltReport build_report(const AttestKey& key, std::uint64_t chal,
                         const PmemImage& pmem,
                         std::span<const std::uint8_t> cflog,
                         std::uint32_t cflog_bit_len);

struct ReportVerdict {
    bool accepted = false;
    RejectReason reason = RejectReason::None;
    Report report;  // valid when accepted
};

// Recomputes h over the Verifier-expected PMEM'; a mismatch covers tampered
// logs, modified application code, and wrong challenges alike.
ReportVerdict verify_report(const AttestKey& key, std::uint64_t chal,
                            std::span<const std::uint8_t> expected_pmem,
                            std::span<const std::uint8_t> wire);

// Exposed for tests that reassemble the MAC input independently.
std::vector<std::uint8_t> report_mac_input(std::uint64_t chal,
                                           std::span<const std::uint8_t> pmem,
                                           std::span<const std::uint8_t> cflog,
                                           std::uint32_t cflog_bit_len);

}  // namespace respec
