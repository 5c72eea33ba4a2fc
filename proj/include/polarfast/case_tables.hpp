#pragma once

// Frozen-bit masks for one R-bit block and the canonical case tables that
// drive block-decoder selection. The tables are stored as data: per mask its
// case id (= number of information bits), minimum distance, and whether a
// dedicated fast decoder exists for it (9 masks for R = 8, 21 for R = 16).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarfast/bits.hpp"
#include "polarfast/domination.hpp"

namespace polarfast {

// Position p of the block maps to bit (r - 1 - p) of `bits`, so the hex
// rendering reads positions left to right: FE at r = 8 freezes 0..6.
struct FrozenMask {
    std::uint32_t bits = 0;
    int r = 8;

    FrozenMask() = default;
    FrozenMask(std::uint32_t b, int block_size) : bits(b), r(block_size) {
        if (block_size <= 0 || block_size > 32 || !is_power_of_two(static_cast<std::size_t>(block_size)))
            throw std::invalid_argument("FrozenMask: block size must be a power of two <= 32");
        if (block_size < 32 && (b >> block_size) != 0)
            throw std::invalid_argument("FrozenMask: bits exceed block size");
    }

    bool frozen(int pos) const { return ((bits >> (r - 1 - pos)) & 1u) != 0; }
    int k() const { return r - popcount32(bits); }

    IndexSet good_set() const {
        std::vector<int> good;
        for (int p = 0; p < r; ++p)
            if (!frozen(p)) good.push_back(p);
        return IndexSet(log2_exact(static_cast<std::size_t>(r)), std::move(good));
    }

    static FrozenMask from_good_set(const IndexSet& good, int r) {
        if ((1 << good.width) != r)
            throw std::invalid_argument("FrozenMask: good set width does not match block size");
        std::uint32_t b = r == 32 ? 0xFFFFFFFFu : ((1u << r) - 1u);
        for (int p : good.elements) b &= ~(1u << (r - 1 - p));
        return FrozenMask(b, r);
    }

    std::string hex() const {
        static const char* digits = "0123456789ABCDEF";
        std::string out(static_cast<std::size_t>(r / 4), '0');
        for (int d = 0; d < r / 4; ++d)
            out[static_cast<std::size_t>(d)] = digits[(bits >> (r - 4 - 4 * d)) & 0xFu];
        return out;
    }

    bool operator==(const FrozenMask& o) const { return bits == o.bits && r == o.r; }
};

struct CaseTableEntry {
    FrozenMask mask;
    int case_id = 0;  // equals the number of information bits in the block
    int k = 0;
    int d_min = 0;  // 0 when the block carries no information bits
    bool retained = false;
};

inline const std::vector<CaseTableEntry>& canonical_table(int r) {
    auto entry = [](std::uint32_t bits, int r_, int dmin, bool retained) {
        CaseTableEntry e;
        e.mask = FrozenMask(bits, r_);
        e.k = e.mask.k();
        e.case_id = e.k;
        e.d_min = dmin;
        e.retained = retained;
        return e;
    };
    if (r == 8) {
        static const std::vector<CaseTableEntry> table8 = {
            entry(0xFF, 8, 0, true),  entry(0xFE, 8, 8, true),  entry(0xFC, 8, 4, true),
            entry(0xFA, 8, 4, false), entry(0xEE, 8, 4, false), entry(0xF8, 8, 4, true),
            entry(0xEC, 8, 4, false), entry(0xEA, 8, 4, false), entry(0xE8, 8, 4, true),
            entry(0xF0, 8, 2, false), entry(0xCC, 8, 2, false), entry(0xAA, 8, 2, false),
            entry(0xE0, 8, 2, true),  entry(0xC8, 8, 2, false), entry(0xA8, 8, 2, false),
            entry(0xC0, 8, 2, true),  entry(0xA0, 8, 2, false), entry(0x88, 8, 2, false),
            entry(0x80, 8, 2, true),  entry(0x00, 8, 1, true),
        };
        return table8;
    }
    if (r == 16) {
        static const std::vector<CaseTableEntry> table16 = {
            entry(0xFFFF, 16, 0, true),  entry(0xFFFE, 16, 16, true), entry(0xFFFC, 16, 8, true),
            entry(0xFFF8, 16, 8, true),  entry(0xFFE8, 16, 8, true),  entry(0xFEE8, 16, 8, true),
            entry(0xFFC0, 16, 4, true),  entry(0xFEE0, 16, 4, true),  entry(0xFF80, 16, 4, true),
            entry(0xFEC0, 16, 4, true),  entry(0xFE80, 16, 4, true),  entry(0xFCC0, 16, 4, true),
            entry(0xFC80, 16, 4, true),  entry(0xF880, 16, 4, true),  entry(0xE880, 16, 4, true),
            entry(0xE800, 16, 2, true),  entry(0xC0C0, 16, 2, true),  entry(0xE000, 16, 2, true),
            entry(0xC000, 16, 2, true),  entry(0x8000, 16, 2, true),  entry(0x0000, 16, 1, true),
        };
        return table16;
    }
    throw std::invalid_argument("canonical_table: only block sizes 8 and 16 are tabulated");
}

inline bool is_retained_mask(const FrozenMask& mask) {
    for (const auto& e : canonical_table(mask.r))
        if (e.mask.bits == mask.bits) return e.retained;
    return false;
}

}  // namespace polarfast
