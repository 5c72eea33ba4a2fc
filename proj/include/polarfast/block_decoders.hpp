#pragma once

// Fast decoders for single R-bit blocks, R in {8, 16}. A frozen mask is
// classified against the canonical case tables; each retained mask has a
// dedicated decoder exploiting the block's structure (repetition sums,
// Wagner decoding of single-parity-check components, extended-Hamming
// subcodes, and hidden pair-sum variables that decouple the two halves).
// Unknown masks fall back to in-block SC. A brute-force maximum-likelihood
// decoder and a minimum-distance search are included as validation oracles.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polarfast/bits.hpp"
#include "polarfast/case_tables.hpp"
#include "polarfast/llr_ops.hpp"
#include "polarfast/sc_decoder.hpp"
#include "polarfast/transform.hpp"

namespace polarfast {

enum class BlockCaseKind {
    // R = 8
    Rate0,
    Rep1,
    Rep2,
    RepSpc3,
    ExtHamming4,
    Case5,
    DualSpc6,
    Spc7,
    Rate1,
    // R = 16, one kind per retained mask
    R16_FFFF,
    R16_FFFE,
    R16_FFFC,
    R16_FFF8,
    R16_FFE8,
    R16_FEE8,
    R16_FFC0,
    R16_FEE0,
    R16_FF80,
    R16_FEC0,
    R16_FE80,
    R16_FCC0,
    R16_FC80,
    R16_F880,
    R16_E880,
    R16_E800,
    R16_C0C0,
    R16_E000,
    R16_C000,
    R16_8000,
    R16_0000,
    Fallback,
};

struct BlockCase {
    BlockCaseKind kind = BlockCaseKind::Fallback;
    int case_id = -1;  // -1 for fallback

    bool fallback() const { return kind == BlockCaseKind::Fallback; }
};

enum class DecodeMode { Optimal, LowComplexity };

inline BlockCase classify_block(const FrozenMask& mask) {
    if (mask.r == 8) {
        switch (mask.bits) {
            case 0xFF: return {BlockCaseKind::Rate0, 0};
            case 0xFE: return {BlockCaseKind::Rep1, 1};
            case 0xFC: return {BlockCaseKind::Rep2, 2};
            case 0xF8: return {BlockCaseKind::RepSpc3, 3};
            case 0xE8: return {BlockCaseKind::ExtHamming4, 4};
            case 0xE0: return {BlockCaseKind::Case5, 5};
            case 0xC0: return {BlockCaseKind::DualSpc6, 6};
            case 0x80: return {BlockCaseKind::Spc7, 7};
            case 0x00: return {BlockCaseKind::Rate1, 8};
            default: return {BlockCaseKind::Fallback, -1};
        }
    }
    if (mask.r == 16) {
        switch (mask.bits) {
            case 0xFFFF: return {BlockCaseKind::R16_FFFF, 0};
            case 0xFFFE: return {BlockCaseKind::R16_FFFE, 1};
            case 0xFFFC: return {BlockCaseKind::R16_FFFC, 2};
            case 0xFFF8: return {BlockCaseKind::R16_FFF8, 3};
            case 0xFFE8: return {BlockCaseKind::R16_FFE8, 4};
            case 0xFEE8: return {BlockCaseKind::R16_FEE8, 5};
            case 0xFFC0: return {BlockCaseKind::R16_FFC0, 6};
            case 0xFEE0: return {BlockCaseKind::R16_FEE0, 6};
            case 0xFF80: return {BlockCaseKind::R16_FF80, 7};
            case 0xFEC0: return {BlockCaseKind::R16_FEC0, 7};
            case 0xFE80: return {BlockCaseKind::R16_FE80, 8};
            case 0xFCC0: return {BlockCaseKind::R16_FCC0, 8};
            case 0xFC80: return {BlockCaseKind::R16_FC80, 9};
            case 0xF880: return {BlockCaseKind::R16_F880, 10};
            case 0xE880: return {BlockCaseKind::R16_E880, 11};
            case 0xE800: return {BlockCaseKind::R16_E800, 12};
            case 0xC0C0: return {BlockCaseKind::R16_C0C0, 12};
            case 0xE000: return {BlockCaseKind::R16_E000, 13};
            case 0xC000: return {BlockCaseKind::R16_C000, 14};
            case 0x8000: return {BlockCaseKind::R16_8000, 15};
            case 0x0000: return {BlockCaseKind::R16_0000, 16};
            default: return {BlockCaseKind::Fallback, -1};
        }
    }
    throw std::invalid_argument("classify_block: block size must be 8 or 16");
}

namespace detail {

// Wagner rule restricted to `idx`, forcing the given overall parity: hard
// decisions, then flip the least-reliable position (lowest index on ties)
// if the parity disagrees.
inline void wagner_at(const LlrBlock& y, const std::vector<int>& idx, int target_parity,
                      BitVector& out) {
    note_min_search();
    int parity = 0;
    std::size_t flip = 0;
    double min_abs = -1.0;
    for (int i : idx) {
        int b = hard_bit(y[static_cast<std::size_t>(i)]);
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(b);
        parity ^= b;
        double a = std::fabs(y[static_cast<std::size_t>(i)]);
        if (min_abs < 0.0 || a < min_abs) {
            min_abs = a;
            flip = static_cast<std::size_t>(i);
        }
    }
    if (parity != target_parity) out[flip] ^= 1u;
}

inline std::vector<int> iota_indices(int n) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    return idx;
}

// Packs a block codeword so that position 0 is the most significant bit;
// smaller packed value = lexicographically smaller codeword.
inline std::uint32_t pack_block(const BitVector& x) {
    std::uint32_t w = 0;
    for (std::size_t p = 0; p < x.size(); ++p)
        w |= static_cast<std::uint32_t>(x[p] & 1u) << (x.size() - 1 - p);
    return w;
}

inline BitVector unpack_block(std::uint32_t w, int r) {
    BitVector x(static_cast<std::size_t>(r));
    for (int p = 0; p < r; ++p)
        x[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>((w >> (r - 1 - p)) & 1u);
    return x;
}

// Systematic basis of the block code: packed codeword per information bit,
// in ascending good-position order.
inline std::vector<std::uint32_t> systematic_basis(const FrozenMask& mask) {
    std::vector<std::uint32_t> basis;
    int k = mask.k();
    basis.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        BitVector info(static_cast<std::size_t>(k), 0);
        info[static_cast<std::size_t>(j)] = 1;
        basis.push_back(pack_block(block_systematic_codeword(mask, info)));
    }
    return basis;
}

inline int count_trailing_zeros(std::uint32_t v) {
    int c = 0;
    while (!(v & 1u)) {
        v >>= 1;
        ++c;
    }
    return c;
}

}  // namespace detail

// Soft-decision Wagner decoding of a single parity-check code: hard
// decisions, then flip the least-reliable bit if overall parity is odd.
// Ties on the minimum |LLR| flip the lowest index. ML for SPC codes.
inline BitVector wagner_decode(const LlrBlock& y) {
    if (y.size() < 2) throw std::invalid_argument("wagner_decode: need at least 2 LLRs");
    BitVector out(y.size(), 0);
    detail::wagner_at(y, detail::iota_indices(static_cast<int>(y.size())), 0, out);
    return out;
}

// Grouped repetition decoding: each group gets the sign of its LLR sum.
// ML for repetition codes; a zero sum decodes to bit 0.
inline BitVector repetition_decode(const LlrBlock& y, const std::vector<std::vector<int>>& groups) {
    std::vector<std::uint8_t> seen(y.size(), 0);
    BitVector out(y.size(), 0);
    for (const auto& g : groups) {
        double sum = 0.0;
        for (int i : g) {
            if (i < 0 || static_cast<std::size_t>(i) >= y.size() || seen[static_cast<std::size_t>(i)])
                throw std::invalid_argument("repetition_decode: groups must partition the block");
            seen[static_cast<std::size_t>(i)] = 1;
            sum += y[static_cast<std::size_t>(i)];
        }
        std::uint8_t bit = static_cast<std::uint8_t>(hard_bit(sum));
        for (int i : g) out[static_cast<std::size_t>(i)] = bit;
    }
    for (std::uint8_t s : seen)
        if (!s) throw std::invalid_argument("repetition_decode: groups must cover the block");
    return out;
}

namespace detail {

// Case 4 (mask E8), the (8,4) extended Hamming block. The pair sums
// x_j + x_{4+j} all equal z = x_3 + x_7; the low-complexity decoder
// estimates z from four parallel check-node outputs, folds the top LLRs
// into the bottom (4,3) SPC, Wagner-decodes it and lifts the result.
inline BitVector decode8_e8_lowcomplexity(const LlrBlock& y) {
    double lz = 0.0;
    for (int j = 0; j < 4; ++j) lz += cn_op(y[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(j + 4)]);
    const int z = hard_bit(lz);
    LlrBlock f(4);
    for (int j = 0; j < 4; ++j)
        f[static_cast<std::size_t>(j)] =
            clamp_llr(y[static_cast<std::size_t>(j + 4)] + (z ? -y[static_cast<std::size_t>(j)] : y[static_cast<std::size_t>(j)]));
    BitVector c = wagner_decode(f);
    BitVector x(8);
    for (int j = 0; j < 4; ++j) {
        x[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(c[static_cast<std::size_t>(j)] ^ z);
        x[static_cast<std::size_t>(j + 4)] = c[static_cast<std::size_t>(j)];
    }
    return x;
}

// Exhaustive ML over the 16 codewords, built from the systematic pattern
// (x_356, x_357, x_367, x_3, x_567, x_5, x_6, x_7). Ties pick the
// lexicographically smallest codeword.
inline BitVector decode8_e8_optimal(const LlrBlock& y) {
    double best_score = 0.0;
    std::uint32_t best_word = 0;
    bool first = true;
    for (int m = 0; m < 16; ++m) {
        const int x3 = m & 1, x5 = (m >> 1) & 1, x6 = (m >> 2) & 1, x7 = (m >> 3) & 1;
        std::array<int, 8> x{x3 ^ x5 ^ x6, x3 ^ x5 ^ x7, x3 ^ x6 ^ x7, x3,
                             x5 ^ x6 ^ x7, x5,           x6,           x7};
        double score = 0.0;
        std::uint32_t word = 0;
        for (int p = 0; p < 8; ++p) {
            score += (1 - 2 * x[static_cast<std::size_t>(p)]) * y[static_cast<std::size_t>(p)];
            word |= static_cast<std::uint32_t>(x[static_cast<std::size_t>(p)]) << (7 - p);
        }
        if (first || score > best_score || (score == best_score && word < best_word)) {
            first = false;
            best_score = score;
            best_word = word;
        }
    }
    return unpack_block(best_word, 8);
}

// Case 5 (mask E0): the bottom half is unconstrained and the top half
// repeats it up to z = x_3 + x_7.
inline BitVector decode8_e0(const LlrBlock& y, DecodeMode mode) {
    int z;
    if (mode == DecodeMode::LowComplexity) {
        double lz = 0.0;
        for (int j = 0; j < 4; ++j) lz += cn_op(y[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(j + 4)]);
        z = hard_bit(lz);
    } else {
        // Exact block ML: z = 0 scores sum |y_j + y_{4+j}|, z = 1 scores
        // sum |y_j - y_{4+j}|; the per-pair optimum is then a hard decision.
        double s0 = 0.0, s1 = 0.0;
        for (int j = 0; j < 4; ++j) {
            s0 += std::fabs(y[static_cast<std::size_t>(j)] + y[static_cast<std::size_t>(j + 4)]);
            s1 += std::fabs(y[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>(j + 4)]);
        }
        z = s1 > s0 ? 1 : 0;
    }
    BitVector x(8);
    for (int j = 0; j < 4; ++j) {
        double f = clamp_llr(y[static_cast<std::size_t>(j + 4)] +
                             (z ? -y[static_cast<std::size_t>(j)] : y[static_cast<std::size_t>(j)]));
        std::uint8_t b = static_cast<std::uint8_t>(hard_bit(f));
        x[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(b ^ z);
        x[static_cast<std::size_t>(j + 4)] = b;
    }
    return x;
}

}  // namespace detail

inline BitVector decode_block8(const FrozenMask& mask, const LlrBlock& y,
                               DecodeMode mode = DecodeMode::LowComplexity) {
    if (mask.r != 8 || y.size() != 8)
        throw std::invalid_argument("decode_block8: expects an 8-bit block");
    switch (mask.bits) {
        case 0xFF:
            return BitVector(8, 0);
        case 0xFE:
            return repetition_decode(y, {detail::iota_indices(8)});
        case 0xFC:
            return repetition_decode(y, {{0, 2, 4, 6}, {1, 3, 5, 7}});
        case 0xF8: {
            // (4,3) SPC repeated twice: positions j and j+4 carry the same bit
            LlrBlock f(4);
            for (int j = 0; j < 4; ++j)
                f[static_cast<std::size_t>(j)] =
                    clamp_llr(y[static_cast<std::size_t>(j)] + y[static_cast<std::size_t>(j + 4)]);
            BitVector c = wagner_decode(f);
            BitVector x(8);
            for (int j = 0; j < 4; ++j)
                x[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j + 4)] = c[static_cast<std::size_t>(j)];
            return x;
        }
        case 0xE8:
            return mode == DecodeMode::Optimal ? detail::decode8_e8_optimal(y)
                                               : detail::decode8_e8_lowcomplexity(y);
        case 0xE0:
            return detail::decode8_e0(y, mode);
        case 0xC0: {
            BitVector x(8, 0);
            detail::wagner_at(y, {0, 2, 4, 6}, 0, x);
            detail::wagner_at(y, {1, 3, 5, 7}, 0, x);
            return x;
        }
        case 0x80:
            return wagner_decode(y);
        case 0x00: {
            BitVector x(8);
            for (int p = 0; p < 8; ++p)
                x[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(hard_bit(y[static_cast<std::size_t>(p)]));
            return x;
        }
        default:
            return sc_decode_block(mask, y);
    }
}

namespace detail {

// Hidden-variable fold for R = 16: with zhat[j] estimating x_j + x_{8+j},
// the bottom-half LLRs become y_{8+j} +- y_j and the top half lifts back as
// bottom xor zhat.
inline LlrBlock fold16(const LlrBlock& y, const std::array<int, 8>& zhat) {
    LlrBlock f(8);
    for (int j = 0; j < 8; ++j)
        f[static_cast<std::size_t>(j)] = clamp_llr(
            y[static_cast<std::size_t>(j + 8)] +
            (zhat[static_cast<std::size_t>(j)] ? -y[static_cast<std::size_t>(j)] : y[static_cast<std::size_t>(j)]));
    return f;
}

inline BitVector lift16(const BitVector& bottom, const std::array<int, 8>& zhat) {
    BitVector x(16);
    for (int j = 0; j < 8; ++j) {
        x[static_cast<std::size_t>(j)] =
            static_cast<std::uint8_t>(bottom[static_cast<std::size_t>(j)] ^ zhat[static_cast<std::size_t>(j)]);
        x[static_cast<std::size_t>(j + 8)] = bottom[static_cast<std::size_t>(j)];
    }
    return x;
}

// Single shared z = x_j + x_{8+j} for all j: estimate it from the eight
// parallel check-node outputs, decode the folded bottom half with `inner`,
// and lift.
template <typename InnerDecoder>
inline BitVector decode16_zfold(const LlrBlock& y, InnerDecoder&& inner) {
    double lz = 0.0;
    for (int j = 0; j < 8; ++j) lz += cn_op(y[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(j + 8)]);
    const int z = hard_bit(lz);
    std::array<int, 8> zhat;
    zhat.fill(z);
    LlrBlock f = fold16(y, zhat);
    BitVector bottom = inner(f);
    return lift16(bottom, zhat);
}

// Case 13 (mask E000): the four interleaved quartets {i, i+4, i+8, i+12}
// are SPC codes sharing the parity z = x_3 + x_7 + x_b + x_f.
inline BitVector decode16_e000(const LlrBlock& y, DecodeMode mode) {
    std::array<std::vector<int>, 4> quartets;
    for (int i = 0; i < 4; ++i) quartets[static_cast<std::size_t>(i)] = {i, i + 4, i + 8, i + 12};
    int z;
    if (mode == DecodeMode::LowComplexity) {
        double lz = 0.0;
        for (int i = 0; i < 4; ++i)
            lz += cn_op(cn_op(y[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i + 4)]),
                        cn_op(y[static_cast<std::size_t>(i + 8)], y[static_cast<std::size_t>(i + 12)]));
        z = hard_bit(lz);
    } else {
        // Exact block ML: per quartet, forcing the wrong parity costs twice
        // its smallest |LLR|.
        double score0 = 0.0, score1 = 0.0;
        for (const auto& q : quartets) {
            int parity = 0;
            double sum = 0.0, min_abs = kLlrMax + 1.0;
            for (int i : q) {
                parity ^= hard_bit(y[static_cast<std::size_t>(i)]);
                double a = std::fabs(y[static_cast<std::size_t>(i)]);
                sum += a;
                min_abs = std::min(min_abs, a);
            }
            score0 += sum - (parity != 0 ? 2.0 * min_abs : 0.0);
            score1 += sum - (parity != 1 ? 2.0 * min_abs : 0.0);
        }
        z = score1 > score0 ? 1 : 0;
    }
    BitVector x(16, 0);
    for (const auto& q : quartets) wagner_at(y, q, z, x);
    return x;
}

}  // namespace detail

inline BitVector decode_block16(const FrozenMask& mask, const LlrBlock& y,
                                DecodeMode mode = DecodeMode::LowComplexity) {
    if (mask.r != 16 || y.size() != 16)
        throw std::invalid_argument("decode_block16: expects a 16-bit block");
    auto fold_halves = [&] {
        LlrBlock f(8);
        for (int j = 0; j < 8; ++j)
            f[static_cast<std::size_t>(j)] =
                clamp_llr(y[static_cast<std::size_t>(j)] + y[static_cast<std::size_t>(j + 8)]);
        return f;
    };
    auto tile_halves = [](const BitVector& c) {
        BitVector x(16);
        for (int j = 0; j < 8; ++j)
            x[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j + 8)] = c[static_cast<std::size_t>(j)];
        return x;
    };
    switch (mask.bits) {
        case 0xFFFF:
            return BitVector(16, 0);
        case 0xFFFE:
            return repetition_decode(y, {detail::iota_indices(16)});
        case 0xFFFC:
            return repetition_decode(
                y, {{0, 2, 4, 6, 8, 10, 12, 14}, {1, 3, 5, 7, 9, 11, 13, 15}});
        case 0xFFF8: {
            // (4,3) SPC repeated four times across the quartets
            LlrBlock f(4);
            for (int j = 0; j < 4; ++j)
                f[static_cast<std::size_t>(j)] = clamp_llr(
                    y[static_cast<std::size_t>(j)] + y[static_cast<std::size_t>(j + 4)] +
                    y[static_cast<std::size_t>(j + 8)] + y[static_cast<std::size_t>(j + 12)]);
            BitVector c = wagner_decode(f);
            BitVector x(16);
            for (int j = 0; j < 4; ++j)
                for (int m = 0; m < 4; ++m)
                    x[static_cast<std::size_t>(j + 4 * m)] = c[static_cast<std::size_t>(j)];
            return x;
        }
        case 0xFFE8:
            // extended Hamming block repeated over the two halves
            return tile_halves(decode_block8(FrozenMask(0xE8, 8), fold_halves(), mode));
        case 0xFEE8:
            return detail::decode16_zfold(y, [&](const LlrBlock& f) {
                return decode_block8(FrozenMask(0xE8, 8), f, mode);
            });
        case 0xFFC0:
            // two interleaved (4,3) SPCs repeated over the halves
            return tile_halves(decode_block8(FrozenMask(0xC0, 8), fold_halves(), mode));
        case 0xFEE0:
            return detail::decode16_zfold(y, [&](const LlrBlock& f) {
                return decode_block8(FrozenMask(0xE0, 8), f, mode);
            });
        case 0xFF80:
            // (8,7) SPC repeated over the halves
            return tile_halves(wagner_decode(fold_halves()));
        case 0xFEC0:
            return detail::decode16_zfold(y, [&](const LlrBlock& f) {
                return decode_block8(FrozenMask(0xC0, 8), f, mode);
            });
        case 0xFE80:
            return detail::decode16_zfold(y, [&](const LlrBlock& f) { return wagner_decode(f); });
        case 0xFCC0: {
            // even and odd positions form two independent extended Hamming codes
            LlrBlock even(8), odd(8);
            for (int j = 0; j < 8; ++j) {
                even[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(2 * j)];
                odd[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(2 * j + 1)];
            }
            BitVector ce = decode_block8(FrozenMask(0xE8, 8), even, mode);
            BitVector co = decode_block8(FrozenMask(0xE8, 8), odd, mode);
            BitVector x(16);
            for (int j = 0; j < 8; ++j) {
                x[static_cast<std::size_t>(2 * j)] = ce[static_cast<std::size_t>(j)];
                x[static_cast<std::size_t>(2 * j + 1)] = co[static_cast<std::size_t>(j)];
            }
            return x;
        }
        case 0xFC80: {
            // z_0 couples the even pairs, z_1 the odd pairs; bottom is (8,7) SPC
            double lz0 = 0.0, lz1 = 0.0;
            for (int j = 0; j < 8; j += 2) {
                lz0 += cn_op(y[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(j + 8)]);
                lz1 += cn_op(y[static_cast<std::size_t>(j + 1)], y[static_cast<std::size_t>(j + 9)]);
            }
            std::array<int, 8> zhat;
            for (int j = 0; j < 8; ++j) zhat[static_cast<std::size_t>(j)] = (j & 1) ? hard_bit(lz1) : hard_bit(lz0);
            BitVector bottom = wagner_decode(detail::fold16(y, zhat));
            return detail::lift16(bottom, zhat);
        }
        case 0xF880: {
            // four pair-sum variables z_i = x_i + x_{8+i} = x_{4+i} + x_{12+i};
            // they satisfy z_0 = z_1 + z_2 + z_3, so the z vector is itself a
            // (4,3) SPC and gets the Wagner rule, not independent decisions
            LlrBlock lz(4);
            for (int i = 0; i < 4; ++i)
                lz[static_cast<std::size_t>(i)] =
                    cn_op(y[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i + 8)]) +
                    cn_op(y[static_cast<std::size_t>(i + 4)], y[static_cast<std::size_t>(i + 12)]);
            BitVector zv = wagner_decode(lz);
            std::array<int, 8> zhat;
            for (int i = 0; i < 4; ++i)
                zhat[static_cast<std::size_t>(i)] = zhat[static_cast<std::size_t>(i + 4)] = zv[static_cast<std::size_t>(i)];
            BitVector bottom = wagner_decode(detail::fold16(y, zhat));
            return detail::lift16(bottom, zhat);
        }
        case 0xE880: {
            // the eight pair sums form an (8,4) extended Hamming code
            LlrBlock lz(8);
            for (int j = 0; j < 8; ++j)
                lz[static_cast<std::size_t>(j)] =
                    cn_op(y[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(j + 8)]);
            BitVector zvec = decode_block8(FrozenMask(0xE8, 8), lz, mode);
            std::array<int, 8> zhat;
            for (int j = 0; j < 8; ++j) zhat[static_cast<std::size_t>(j)] = zvec[static_cast<std::size_t>(j)];
            BitVector bottom = wagner_decode(detail::fold16(y, zhat));
            return detail::lift16(bottom, zhat);
        }
        case 0xE800: {
            // as E880, but the bottom half is unconstrained: plain hard decisions
            LlrBlock lz(8);
            for (int j = 0; j < 8; ++j)
                lz[static_cast<std::size_t>(j)] =
                    cn_op(y[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(j + 8)]);
            BitVector zvec = decode_block8(FrozenMask(0xE8, 8), lz, mode);
            std::array<int, 8> zhat;
            for (int j = 0; j < 8; ++j) zhat[static_cast<std::size_t>(j)] = zvec[static_cast<std::size_t>(j)];
            LlrBlock f = detail::fold16(y, zhat);
            BitVector bottom(8);
            for (int j = 0; j < 8; ++j)
                bottom[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(hard_bit(f[static_cast<std::size_t>(j)]));
            return detail::lift16(bottom, zhat);
        }
        case 0xC0C0: {
            BitVector x(16, 0);
            detail::wagner_at(y, {0, 2, 4, 6}, 0, x);
            detail::wagner_at(y, {1, 3, 5, 7}, 0, x);
            detail::wagner_at(y, {8, 10, 12, 14}, 0, x);
            detail::wagner_at(y, {9, 11, 13, 15}, 0, x);
            return x;
        }
        case 0xE000:
            return detail::decode16_e000(y, mode);
        case 0xC000: {
            BitVector x(16, 0);
            detail::wagner_at(y, {0, 2, 4, 6, 8, 10, 12, 14}, 0, x);
            detail::wagner_at(y, {1, 3, 5, 7, 9, 11, 13, 15}, 0, x);
            return x;
        }
        case 0x8000:
            return wagner_decode(y);
        case 0x0000: {
            BitVector x(16);
            for (int p = 0; p < 16; ++p)
                x[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(hard_bit(y[static_cast<std::size_t>(p)]));
            return x;
        }
        default:
            return sc_decode_block(mask, y);
    }
}

inline BitVector decode_block(const FrozenMask& mask, const LlrBlock& y,
                              DecodeMode mode = DecodeMode::LowComplexity) {
    if (mask.r == 8) return decode_block8(mask, y, mode);
    if (mask.r == 16) return decode_block16(mask, y, mode);
    throw std::invalid_argument("decode_block: block size must be 8 or 16");
}

// Brute-force ML: walks all 2^k systematic codewords in Gray-code order and
// maximizes the correlation sum (1 - 2 x_i) y_i. Ties pick the
// lexicographically smallest codeword.
inline BitVector ml_oracle_decode(const FrozenMask& mask, const LlrBlock& y) {
    if (static_cast<int>(y.size()) != mask.r)
        throw std::invalid_argument("ml_oracle_decode: LLR length mismatch");
    const int k = mask.k();
    if (k > 16) throw std::invalid_argument("ml_oracle_decode: too many information bits");
    if (k == 0) return BitVector(static_cast<std::size_t>(mask.r), 0);

    // Maximizing the correlation equals minimizing the sum of y over the set
    // positions; per-byte tables make that sum O(1) per codeword.
    const int r = mask.r;
    std::array<double, 256> wlo{}, whi{};
    const int lo_bits = std::min(r, 8);
    for (int m = 1; m < (1 << lo_bits); ++m) {
        int b = detail::count_trailing_zeros(static_cast<std::uint32_t>(m));
        wlo[static_cast<std::size_t>(m)] =
            wlo[static_cast<std::size_t>(m & (m - 1))] + y[static_cast<std::size_t>(r - 1 - b)];
    }
    if (r > 8) {
        for (int m = 1; m < (1 << (r - 8)); ++m) {
            int b = detail::count_trailing_zeros(static_cast<std::uint32_t>(m));
            whi[static_cast<std::size_t>(m)] =
                whi[static_cast<std::size_t>(m & (m - 1))] + y[static_cast<std::size_t>(r - 9 - b)];
        }
    }
    auto weight = [&](std::uint32_t w) {
        return wlo[w & 0xFFu] + whi[(w >> 8) & 0xFFu];
    };

    const auto basis = detail::systematic_basis(mask);
    std::uint32_t word = 0;
    std::uint32_t best_word = 0;
    double best_w = 0.0;  // codeword 0 has weight sum 0
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << k); ++m) {
        word ^= basis[static_cast<std::size_t>(detail::count_trailing_zeros(m))];
        double w = weight(word);
        if (w < best_w || (w == best_w && word < best_word)) {
            best_w = w;
            best_word = word;
        }
    }
    return detail::unpack_block(best_word, r);
}

// Minimum Hamming weight over the nonzero codewords of the block code.
inline int min_distance(const FrozenMask& mask) {
    const int k = mask.k();
    if (k == 0) throw std::domain_error("min_distance: undefined for an all-frozen block");
    if (k > 16) throw std::invalid_argument("min_distance: too many information bits");
    const auto basis = detail::systematic_basis(mask);
    std::uint32_t word = 0;
    int best = mask.r + 1;
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << k); ++m) {
        word ^= basis[static_cast<std::size_t>(detail::count_trailing_zeros(m))];
        best = std::min(best, popcount32(word));
    }
    return best;
}

}  // namespace polarfast
