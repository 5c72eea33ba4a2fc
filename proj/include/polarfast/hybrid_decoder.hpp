#pragma once

// Hybrid decoder: identical tree traversal to plain SC down to subtrees of
// R bits, where the fast block decoders take over. Each block returns its
// subtree codeword estimate, which propagates upward exactly as in SC; the
// per-block input estimate is recovered through the width-R transform.

#include <functional>
#include <stdexcept>
#include <vector>

#include "polarfast/block_decoders.hpp"
#include "polarfast/construction.hpp"
#include "polarfast/sc_decoder.hpp"
#include "polarfast/transform.hpp"

namespace polarfast {

using BlockDecodeFn = std::function<BitVector(const FrozenMask&, const LlrBlock&)>;

namespace detail {

class HybridEngine {
  public:
    HybridEngine(int levels, int block_levels)
        : levels_(levels), block_levels_(block_levels), stage_(static_cast<std::size_t>(levels) + 1) {
        for (int m = block_levels; m <= levels; ++m)
            stage_[static_cast<std::size_t>(m)].resize(std::size_t{1} << m);
    }

    void run(const LlrBlock& y, const std::vector<FrozenMask>& masks, const BlockDecodeFn& fn,
             BitVector& xhat, BitVector& uhat) {
        const std::size_t n = std::size_t{1} << levels_;
        if (y.size() != n) throw std::invalid_argument("hybrid decode: LLR length mismatch");
        stage_[static_cast<std::size_t>(levels_)] = y;
        xhat.assign(n, 0);
        uhat.assign(n, 0);
        node(levels_, 0, masks, fn, xhat, uhat);
    }

  private:
    void node(int level, std::size_t base, const std::vector<FrozenMask>& masks,
              const BlockDecodeFn& fn, BitVector& xhat, BitVector& uhat) {
        auto& cur = stage_[static_cast<std::size_t>(level)];
        if (level == block_levels_) {
            const std::size_t block = base >> block_levels_;
            BitVector xblock = fn(masks[block], cur);
            BitVector ublock = recover_input_block(xblock);
            for (std::size_t i = 0; i < xblock.size(); ++i) {
                xhat[base + i] = xblock[i];
                uhat[base + i] = ublock[i];
            }
            return;
        }
        const std::size_t half = std::size_t{1} << (level - 1);
        auto& child = stage_[static_cast<std::size_t>(level - 1)];
        for (std::size_t i = 0; i < half; ++i) child[i] = cn_op(cur[i], cur[i + half]);
        node(level - 1, base, masks, fn, xhat, uhat);
        for (std::size_t i = 0; i < half; ++i)
            child[i] = vn_op(cur[i], cur[i + half], xhat[base + i]);
        node(level - 1, base + half, masks, fn, xhat, uhat);
        for (std::size_t i = 0; i < half; ++i) xhat[base + i] ^= xhat[base + half + i];
    }

    int levels_;
    int block_levels_;
    std::vector<std::vector<double>> stage_;
};

}  // namespace detail

// Hybrid decode with a caller-supplied block decoder (used by tests to force
// every block through in-block SC).
inline DecodeResult hybrid_decode_custom(const CodeConfig& code, const LlrBlock& y, int r,
                                         const BlockDecodeFn& fn) {
    if (r > code.block_length())
        throw std::invalid_argument("hybrid_decode: R must not exceed N");
    detail::HybridEngine engine(code.n, log2_exact(static_cast<std::size_t>(r)));
    auto masks = block_masks(code, r);
    DecodeResult res;
    engine.run(y, masks, fn, res.xhat, res.uhat);
    return res;
}

inline DecodeResult hybrid_decode(const CodeConfig& code, const LlrBlock& y, int r,
                                  DecodeMode mode = DecodeMode::LowComplexity) {
    if (r != 8 && r != 16)
        throw std::invalid_argument("hybrid_decode: R must be 8 or 16");
    return hybrid_decode_custom(code, y, r, [mode](const FrozenMask& mask, const LlrBlock& block) {
        return decode_block(mask, block, mode);
    });
}

}  // namespace polarfast
