#include "respec/pipeline.hpp"

namespace respec {

PrefixConfig SessionConfig::effective_prefix() const {
    if (stages.prefix) return prefix;
    PrefixConfig flat = prefix;
    flat.prefix_len = 0;
    flat.prefix_marker.assign(kAddressBytes, prefix.prefix_marker.empty()
                                                 ? kDefaultPrefixMarkerByte
                                                 : prefix.prefix_marker[0]);
    flat.subpath_marker.assign(kAddressBytes, prefix.subpath_marker.empty()
                                                  ? kDefaultSubPathMarkerByte
                                                  : prefix.subpath_marker[0]);
    return flat;
}

void SessionConfig::validate() const {
    if (marker_grammar()) effective_prefix().validate();
    if (stages.prefix) prefix.validate();
    if (stages.subpath) {
        if (specs.empty())
            throw ConfigError("sub-path stage enabled with no specs");
        SubPathMatcher::compile(specs);  // full invariant check
    }
    if (stages.huffman) table.validate();
}

Encoder::Encoder(SessionConfig config)
    : config_(std::move(config)), effective_prefix_(config_.effective_prefix()) {
    config_.validate();
    if (config_.stages.subpath) {
        matcher_.emplace(SubPathMatcher::compile(config_.specs));
        match_session_.emplace(matcher_->session());
    }
}

void Encoder::emit(std::span<const Token> tokens) {
    std::vector<std::uint8_t> bytes;
    if (config_.marker_grammar()) {
        for (const Token& t : tokens)
            prefix_encode_step(effective_prefix_, prefix_state_, t, bytes);
    } else {
        for (const Token& t : tokens) {
            // without the marker grammar the log is plain 4-byte addresses
            const auto b = address_bytes(t.addr);
            bytes.insert(bytes.end(), b.begin(), b.end());
        }
    }
    if (config_.stages.huffman) {
        huffman_encode_append(config_.table, bytes, out_);
    } else {
        for (std::uint8_t b : bytes) out_.append_byte(b);
    }
}

void Encoder::log_branch(Address dest) {
    if (sealed_) throw std::logic_error("log_branch on a sealed session");
    ++entries_;
    if (match_session_) {
        emit(match_session_->push(dest));
    } else {
        const Token t = Token::make_addr(dest);
        emit({&t, 1});
    }
}

Encoder::Output Encoder::finalize() {
    if (sealed_) throw std::logic_error("finalize on a sealed session");
    if (match_session_) emit(match_session_->finish());
    sealed_ = true;
    return {out_.bytes(), out_.bit_len()};
}

Encoder::Output encode_trace(const SessionConfig& config,
                             std::span<const Address> destinations) {
    Encoder enc(config);
    for (Address a : destinations) enc.log_branch(a);
    return enc.finalize();
}

std::vector<Address> decode_log(const SessionConfig& config,
                                std::span<const std::uint8_t> bytes,
                                std::uint32_t bit_len) {
    config.validate();

    std::vector<std::uint8_t> pre;
    if (config.stages.huffman) {
        const BitStream stream = BitStream::from_parts(
            std::vector<std::uint8_t>(bytes.begin(), bytes.end()), bit_len);
        pre = huffman_decode(config.table, stream);
    } else {
        if (bit_len % 8 != 0 || bytes.size() != bit_len / 8)
            throw DecodeError("unencoded log must be whole bytes");
        pre.assign(bytes.begin(), bytes.end());
    }

    std::vector<Token> tokens;
    if (config.marker_grammar()) {
        tokens = prefix_decode(config.effective_prefix(), pre);
    } else {
        if (pre.size() % kAddressBytes != 0)
            throw DecodeError("verbatim log length not a multiple of 4");
        for (std::size_t i = 0; i < pre.size(); i += kAddressBytes)
            tokens.push_back(Token::make_addr(
                address_from_bytes({pre.data() + i, kAddressBytes})));
    }

    if (config.stages.subpath) {
        tokens = subpath_decode(config.specs, tokens);
    } else {
        for (const Token& t : tokens)
            if (t.kind == Token::Kind::SubPath)
                throw DecodeError("sub-path symbol in log but stage disabled");
    }

    std::vector<Address> out;
    out.reserve(tokens.size());
    for (const Token& t : tokens) out.push_back(t.addr);
    return out;
}

}  // namespace respec
