#include "respec/prefix.hpp"

#include <algorithm>

namespace respec {

PrefixConfig PrefixConfig::with_default_markers(unsigned prefix_len) {
    return with_marker_bytes(prefix_len, kDefaultPrefixMarkerByte,
                             kDefaultSubPathMarkerByte);
}

PrefixConfig PrefixConfig::with_marker_bytes(unsigned prefix_len,
                                             std::uint8_t prefix_fill,
                                             std::uint8_t subpath_fill) {
    PrefixConfig cfg;
    cfg.prefix_len = prefix_len;
    cfg.prefix_marker.assign(kAddressBytes - prefix_len, prefix_fill);
    cfg.subpath_marker.assign(kAddressBytes - prefix_len, subpath_fill);
    cfg.validate();
    return cfg;
}

void PrefixConfig::validate() const {
    if (prefix_len > 3) throw ConfigError("prefix_len must be 0..3");
    if (prefix_marker.size() != suffix_len())
        throw ConfigError("prefix marker must be suffix-width");
    if (subpath_marker.size() != suffix_len())
        throw ConfigError("sub-path marker must be suffix-width");
    if (prefix_marker == subpath_marker)
        throw ConfigError("prefix and sub-path markers must differ");
}

namespace {

void append(std::vector<std::uint8_t>& out, std::span<const std::uint8_t> bytes) {
    out.insert(out.end(), bytes.begin(), bytes.end());
}

}  // namespace

void prefix_encode_step(const PrefixConfig& cfg, PrefixState& state,
                        const Token& token, std::vector<std::uint8_t>& out) {
    switch (token.kind) {
        case Token::Kind::Addr: {
            const auto suffix = address_suffix(token.addr, cfg.prefix_len);
            if (suffix == cfg.prefix_marker || suffix == cfg.subpath_marker)
                throw MarkerCollisionError(
                    "suffix of " + format_address(token.addr) +
                    " equals a reserved marker");
            auto prefix = address_prefix(token.addr, cfg.prefix_len);
            // prefix_len == 0: the empty prefix trivially matches, so the
            // address always goes out verbatim and no marker is ever emitted
            if (cfg.prefix_len == 0 || state.active_prefix == prefix) {
                append(out, suffix);
            } else {
                append(out, cfg.prefix_marker);
                append(out, prefix);
                append(out, suffix);
                state.active_prefix = std::move(prefix);
            }
            break;
        }
        case Token::Kind::SubPath:
            append(out, cfg.subpath_marker);
            out.push_back(token.subpath_id);
            break;
        case Token::Kind::PrefixMark:
            throw std::invalid_argument(
                "prefix_encode_step: PrefixMark is produced here, not consumed");
    }
}

std::vector<std::uint8_t> prefix_encode(const PrefixConfig& cfg,
                                        std::span<const Token> tokens) {
    PrefixState state;
    std::vector<std::uint8_t> out;
    for (const Token& t : tokens) prefix_encode_step(cfg, state, t, out);
    return out;
}

std::vector<Token> prefix_decode(const PrefixConfig& cfg,
                                 std::span<const std::uint8_t> bytes) {
    cfg.validate();
    const std::size_t sw = cfg.suffix_len();
    std::vector<Token> out;
    std::optional<std::vector<std::uint8_t>> active;
    if (cfg.prefix_len == 0) active.emplace();

    std::size_t pos = 0;
    while (pos < bytes.size()) {
        if (bytes.size() - pos < sw)
            throw DecodeError("truncated log entry at byte " + std::to_string(pos));
        const std::span<const std::uint8_t> group = bytes.subspan(pos, sw);
        pos += sw;
        if (std::equal(group.begin(), group.end(), cfg.prefix_marker.begin(),
                       cfg.prefix_marker.end())) {
            if (bytes.size() - pos < cfg.prefix_len)
                throw DecodeError("prefix marker followed by truncated prefix");
            active.emplace(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                           bytes.begin() +
                               static_cast<std::ptrdiff_t>(pos + cfg.prefix_len));
            pos += cfg.prefix_len;
        } else if (std::equal(group.begin(), group.end(),
                              cfg.subpath_marker.begin(),
                              cfg.subpath_marker.end())) {
            if (bytes.size() - pos < 1)
                throw DecodeError("sub-path marker followed by truncated id");
            Token t;
            t.kind = Token::Kind::SubPath;
            t.subpath_id = bytes[pos];
            out.push_back(std::move(t));
            pos += 1;
        } else {
            if (!active)
                throw DecodeError("address suffix before any prefix was established");
            out.push_back(Token::make_addr(address_join(*active, group)));
        }
    }
    return out;
}

CollisionReport check_marker_collision(const PrefixConfig& cfg,
                                       const CfgModel& model) {
    CollisionReport report;
    for (Address node : model.nodes) {
        const auto suffix = address_suffix(node, cfg.prefix_len);
        if (suffix == cfg.prefix_marker || suffix == cfg.subpath_marker)
            report.colliding.push_back(node);
    }
    return report;
}

}  // namespace respec
