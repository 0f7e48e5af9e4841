#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace respec {

inline constexpr std::size_t kMacTagSize = 32;

std::array<std::uint8_t, kMacTagSize> hmac_sha256(
    std::span<const std::uint8_t> key, std::span<const std::uint8_t> message);

// constant-time tag comparison
bool mac_equal(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

}  // namespace respec
