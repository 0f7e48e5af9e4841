#include "respec/huffman.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace respec {

std::vector<std::uint8_t> huffman_code_lengths(
    std::span<const std::uint64_t> weights) {
    const std::size_t n = weights.size();
    if (n == 0) return {};
    if (n == 1) return {1};

    struct Node {
        std::uint64_t weight;
        std::uint32_t order;   // creation order; leaves first, by symbol
        int left = -1, right = -1;
    };
    std::vector<Node> nodes;
    nodes.reserve(2 * n - 1);

    auto cmp = [&](int a, int b) {
        if (nodes[a].weight != nodes[b].weight)
            return nodes[a].weight > nodes[b].weight;
        return nodes[a].order > nodes[b].order;
    };
    std::priority_queue<int, std::vector<int>, decltype(cmp)> heap(cmp);

    for (std::size_t i = 0; i < n; ++i) {
        if (weights[i] == 0)
            throw std::invalid_argument("huffman_code_lengths: zero weight");
        nodes.push_back({weights[i], static_cast<std::uint32_t>(i)});
        heap.push(static_cast<int>(i));
    }
    while (heap.size() > 1) {
        const int a = heap.top(); heap.pop();
        const int b = heap.top(); heap.pop();
        nodes.push_back({nodes[a].weight + nodes[b].weight,
                         static_cast<std::uint32_t>(nodes.size()), a, b});
        heap.push(static_cast<int>(nodes.size() - 1));
    }

    std::vector<std::uint8_t> lengths(n, 0);
    // depth-first from the root, assigning leaf depths
    std::vector<std::pair<int, unsigned>> stack{{heap.top(), 0}};
    while (!stack.empty()) {
        const auto [idx, depth] = stack.back();
        stack.pop_back();
        const Node& node = nodes[idx];
        if (node.left < 0) {
            lengths[node.order] = static_cast<std::uint8_t>(depth);
            continue;
        }
        stack.push_back({node.left, depth + 1});
        stack.push_back({node.right, depth + 1});
    }
    return lengths;
}

bool kraft_equality(std::span<const std::uint8_t> lengths) {
    // exact arithmetic: sum 2^(32 - len) must equal 2^32
    std::uint64_t sum = 0;
    for (std::uint8_t len : lengths) {
        if (len < 1 || len > kMaxCodeLen) return false;
        sum += std::uint64_t(1) << (32 - len);
    }
    return sum == (std::uint64_t(1) << 32);
}

std::array<std::uint32_t, kHuffmanSymbols> canonical_codes(
    const std::array<std::uint8_t, kHuffmanSymbols>& lengths) {
    if (!kraft_equality(lengths))
        throw ConfigError("code lengths violate Kraft equality");
    std::array<std::uint32_t, kMaxCodeLen + 1> bl_count{};
    for (std::uint8_t len : lengths) bl_count[len]++;
    std::array<std::uint32_t, kMaxCodeLen + 1> next_code{};
    std::uint64_t code = 0;
    for (unsigned bits = 1; bits <= kMaxCodeLen; ++bits) {
        code = (code + bl_count[bits - 1]) << 1;
        next_code[bits] = static_cast<std::uint32_t>(code);
    }
    // symbol-ascending iteration realizes the (length, symbol) ordering
    std::array<std::uint32_t, kHuffmanSymbols> codes{};
    for (unsigned s = 0; s < kHuffmanSymbols; ++s)
        codes[s] = next_code[lengths[s]]++;
    return codes;
}

void HuffmanTable::validate() const {
    for (std::uint8_t len : lengths)
        if (len < 1 || len > kMaxCodeLen)
            throw ConfigError("code length out of range 1..32");
    if (!kraft_equality(lengths))
        throw ConfigError("code lengths violate Kraft equality");
    if (codes != canonical_codes(lengths))
        throw ConfigError("codes are not the canonical assignment");
}

HuffmanTable build_table(
    const std::array<std::uint64_t, kHuffmanSymbols>& frequencies) {
    std::array<std::uint64_t, kHuffmanSymbols> weights{};
    for (unsigned s = 0; s < kHuffmanSymbols; ++s)
        weights[s] = frequencies[s] + 1;

    const auto lens = huffman_code_lengths(weights);
    HuffmanTable table;
    for (unsigned s = 0; s < kHuffmanSymbols; ++s) {
        // smoothing keeps depths far below the cap at any realistic count
        if (lens[s] > kMaxCodeLen)
            throw ConfigError("code length exceeds 32-bit cap");
        table.lengths[s] = lens[s];
    }
    table.codes = canonical_codes(table.lengths);
    return table;
}

void huffman_encode_append(const HuffmanTable& table,
                           std::span<const std::uint8_t> bytes, BitStream& out) {
    for (std::uint8_t b : bytes) out.append(table.codes[b], table.lengths[b]);
}

BitStream huffman_encode(const HuffmanTable& table,
                         std::span<const std::uint8_t> bytes) {
    BitStream out;
    huffman_encode_append(table, bytes, out);
    return out;
}

HuffmanDecoder::HuffmanDecoder(const HuffmanTable& table) {
    std::array<std::uint16_t, kHuffmanSymbols> order{};
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint16_t a, std::uint16_t b) {
                         return table.lengths[a] < table.lengths[b];
                     });
    for (unsigned i = 0; i < kHuffmanSymbols; ++i) {
        const std::uint16_t sym = order[i];
        sorted_syms_[i] = static_cast<std::uint8_t>(sym);
        const std::uint8_t len = table.lengths[sym];
        if (count_[len]++ == 0) {
            first_index_[len] = static_cast<std::uint16_t>(i);
            first_code_[len] = table.codes[sym];
        }
    }
}

std::uint8_t HuffmanDecoder::decode_one(BitReader& reader) const {
    std::uint32_t acc = 0;
    for (unsigned len = 1; len <= kMaxCodeLen; ++len) {
        acc = acc << 1 | (reader.read_bit() ? 1u : 0u);
        if (count_[len] != 0 && acc >= first_code_[len] &&
            std::uint64_t(acc) < std::uint64_t(first_code_[len]) + count_[len])
            return sorted_syms_[first_index_[len] + (acc - first_code_[len])];
    }
    throw DecodeError("no codeword within 32 bits");
}

std::vector<std::uint8_t> huffman_decode(const HuffmanTable& table,
                                         const BitStream& stream) {
    const HuffmanDecoder decoder(table);
    BitReader reader(stream.bytes(), stream.bit_len());
    std::vector<std::uint8_t> out;
    while (reader.remaining() > 0) {
        try {
            out.push_back(decoder.decode_one(reader));
        } catch (const DecodeError&) {
            throw DecodeError("trailing bits do not complete a codeword");
        }
    }
    return out;
}

std::vector<std::uint8_t> serialize_table(const HuffmanTable& table) {
    std::vector<std::uint8_t> blob(table.lengths.begin(), table.lengths.end());
    BitStream packed;
    for (unsigned s = 0; s < kHuffmanSymbols; ++s)
        packed.append(table.codes[s], table.lengths[s]);
    blob.insert(blob.end(), packed.bytes().begin(), packed.bytes().end());
    return blob;
}

HuffmanTable deserialize_table(std::span<const std::uint8_t> blob) {
    if (blob.size() < kHuffmanSymbols)
        throw DecodeError("table blob truncated before length section");
    HuffmanTable table;
    std::uint64_t total_bits = 0;
    for (unsigned s = 0; s < kHuffmanSymbols; ++s) {
        const std::uint8_t len = blob[s];
        if (len < 1 || len > kMaxCodeLen)
            throw DecodeError("table blob has code length out of range");
        table.lengths[s] = len;
        total_bits += len;
    }
    if (!kraft_equality(table.lengths))
        throw DecodeError("table blob violates Kraft equality");
    table.codes = canonical_codes(table.lengths);

    const std::size_t packed_bytes = static_cast<std::size_t>((total_bits + 7) / 8);
    if (blob.size() != kHuffmanSymbols + packed_bytes)
        throw DecodeError("table blob size does not match code section");

    // the packed codes are redundant; use them as an integrity check
    BitReader reader(blob.subspan(kHuffmanSymbols),
                     static_cast<std::uint32_t>(total_bits));
    for (unsigned s = 0; s < kHuffmanSymbols; ++s) {
        std::uint32_t code = 0;
        for (unsigned i = 0; i < table.lengths[s]; ++i)
            code = code << 1 | (reader.read_bit() ? 1u : 0u);
        if (code != table.codes[s])
            throw DecodeError("packed codes inconsistent with lengths");
    }
    if (total_bits % 8 != 0) {
        const std::uint8_t pad_mask =
            static_cast<std::uint8_t>(0xFF >> (total_bits % 8));
        if ((blob.back() & pad_mask) != 0)
            throw DecodeError("table blob has nonzero padding bits");
    }
    return table;
}

}  // namespace respec
