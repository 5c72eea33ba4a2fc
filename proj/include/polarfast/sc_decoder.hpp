#pragma once

// Successive-cancellation decoding. The recursion sends check-node outputs to
// the left child, decodes it, sends variable-node outputs to the right child,
// decodes it, and combines the halves; frozen leaves emit 0, information
// leaves a hard decision. The same engine decodes whole codes and single
// R-bit blocks (the fallback path of the fast block decoders).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polarfast/bits.hpp"
#include "polarfast/case_tables.hpp"
#include "polarfast/construction.hpp"
#include "polarfast/llr_ops.hpp"

namespace polarfast {

struct DecodeResult {
    BitVector xhat;  // codeword estimate
    BitVector uhat;  // input estimate; equals polar_transform(xhat)
};

namespace detail {

// Scratch-holding recursive SC core over 2^levels LLRs. `frozen(i)` marks
// frozen leaf positions; xhat/uhat are written over [0, 2^levels).
class ScEngine {
  public:
    explicit ScEngine(int levels) : levels_(levels), stage_(static_cast<std::size_t>(levels) + 1) {
        for (int m = 0; m <= levels; ++m) stage_[static_cast<std::size_t>(m)].resize(std::size_t{1} << m);
    }

    template <typename FrozenPred>
    void run(const LlrBlock& y, FrozenPred&& frozen, BitVector& xhat, BitVector& uhat) {
        const std::size_t n = std::size_t{1} << levels_;
        if (y.size() != n) throw std::invalid_argument("sc decode: LLR length mismatch");
        stage_[static_cast<std::size_t>(levels_)] = y;
        xhat.assign(n, 0);
        uhat.assign(n, 0);
        node(levels_, 0, frozen, xhat, uhat);
    }

  private:
    template <typename FrozenPred>
    void node(int level, std::size_t base, FrozenPred& frozen, BitVector& xhat, BitVector& uhat) {
        auto& cur = stage_[static_cast<std::size_t>(level)];
        if (level == 0) {
            std::uint8_t bit = frozen(base) ? 0 : static_cast<std::uint8_t>(hard_bit(cur[0]));
            xhat[base] = bit;
            uhat[base] = bit;
            return;
        }
        const std::size_t half = std::size_t{1} << (level - 1);
        auto& child = stage_[static_cast<std::size_t>(level - 1)];
        for (std::size_t i = 0; i < half; ++i) child[i] = cn_op(cur[i], cur[i + half]);
        node(level - 1, base, frozen, xhat, uhat);
        for (std::size_t i = 0; i < half; ++i)
            child[i] = vn_op(cur[i], cur[i + half], xhat[base + i]);
        node(level - 1, base + half, frozen, xhat, uhat);
        for (std::size_t i = 0; i < half; ++i) xhat[base + i] ^= xhat[base + half + i];
    }

    int levels_;
    std::vector<std::vector<double>> stage_;
};

}  // namespace detail

inline DecodeResult sc_decode(const CodeConfig& code, const LlrBlock& y) {
    detail::ScEngine engine(code.n);
    auto good = code.good_indicator();
    DecodeResult res;
    engine.run(y, [&](std::size_t i) { return !good[i]; }, res.xhat, res.uhat);
    return res;
}

// In-block SC over one R-bit frozen mask; returns the block codeword estimate.
inline BitVector sc_decode_block(const FrozenMask& mask, const LlrBlock& y) {
    detail::ScEngine engine(log2_exact(static_cast<std::size_t>(mask.r)));
    BitVector xhat, uhat;
    engine.run(y, [&](std::size_t i) { return mask.frozen(static_cast<int>(i)); }, xhat, uhat);
    return xhat;
}

}  // namespace polarfast
