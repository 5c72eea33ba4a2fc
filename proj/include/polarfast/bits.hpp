#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polarfast {

// Bits are stored one per byte with value 0 or 1. Hex strings read the bit
// sequence left to right: the first bit sits in the most-significant position
// of the first digit, matching the way frozen-bit patterns are printed.
using BitVector = std::vector<std::uint8_t>;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline int log2_exact(std::size_t n) {
    if (!is_power_of_two(n)) throw std::invalid_argument("length must be a power of two");
    int m = 0;
    while ((std::size_t{1} << m) < n) ++m;
    return m;
}

inline int popcount32(std::uint32_t v) {
    int c = 0;
    while (v) {
        v &= v - 1;
        ++c;
    }
    return c;
}

inline std::string bits_to_hex(const BitVector& bits) {
    static const char* digits = "0123456789ABCDEF";
    std::string out;
    out.reserve((bits.size() + 3) / 4);
    unsigned acc = 0;
    int fill = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        acc = (acc << 1) | (bits[i] & 1u);
        if (++fill == 4) {
            out.push_back(digits[acc]);
            acc = 0;
            fill = 0;
        }
    }
    if (fill > 0) out.push_back(digits[acc << (4 - fill)]);
    return out;
}

inline BitVector hex_to_bits(const std::string& hex, std::size_t nbits) {
    if (hex.size() != (nbits + 3) / 4)
        throw std::invalid_argument("hex string has wrong length for " + std::to_string(nbits) + " bits");
    BitVector bits(nbits, 0);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        char c = hex[d];
        unsigned v;
        if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') v = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') v = static_cast<unsigned>(c - 'A' + 10);
        else throw std::invalid_argument("invalid hex digit");
        for (int b = 0; b < 4; ++b) {
            std::size_t pos = d * 4 + static_cast<std::size_t>(b);
            unsigned bit = (v >> (3 - b)) & 1u;
            if (pos < nbits) {
                bits[pos] = static_cast<std::uint8_t>(bit);
            } else if (bit) {
                throw std::invalid_argument("nonzero padding bits in hex string");
            }
        }
    }
    return bits;
}

}  // namespace polarfast
