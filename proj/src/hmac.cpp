#include "respec/hmac.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <stdexcept>

namespace respec {

std::array<std::uint8_t, kMacTagSize> hmac_sha256(
    std::span<const std::uint8_t> key, std::span<const std::uint8_t> message) {
    std::array<std::uint8_t, kMacTagSize> tag{};
    unsigned int tag_len = 0;
    if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
             message.data(), message.size(), tag.data(), &tag_len) == nullptr ||
        tag_len != kMacTagSize)
        throw std::runtime_error("HMAC-SHA-256 failed");
    return tag;
}

bool mac_equal(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) return false;
    return CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

}  // namespace respec
