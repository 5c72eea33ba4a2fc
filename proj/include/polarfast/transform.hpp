#pragma once

// The polar transform x = u * F^{(x)n} over GF(2) as an in-place butterfly,
// the systematic and non-systematic encoders built on it, and the R-bit
// parallel last-stage variant that replaces log2(R) butterfly stages with one
// combinational step per block. The transform is an involution, which is what
// the two-pass systematic encoder and the per-block input recovery rely on.

#include <array>
#include <cstdint>
#include <stdexcept>

#include "polarfast/bits.hpp"
#include "polarfast/case_tables.hpp"
#include "polarfast/construction.hpp"

namespace polarfast {

inline void polar_transform_inplace(BitVector& v) {
    std::size_t n = v.size();
    (void)log2_exact(n);
    for (std::size_t h = 1; h < n; h *= 2)
        for (std::size_t i = 0; i < n; i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) v[j] ^= v[j + h];
}

inline BitVector polar_transform(BitVector v) {
    polar_transform_inplace(v);
    return v;
}

inline BitVector encode_nonsystematic(const CodeConfig& code, const BitVector& info) {
    if (static_cast<int>(info.size()) != code.k)
        throw std::invalid_argument("encode_nonsystematic: info length must equal K");
    BitVector u(static_cast<std::size_t>(code.block_length()), 0);
    for (std::size_t i = 0; i < info.size(); ++i)
        u[static_cast<std::size_t>(code.good.elements[i])] = info[i] & 1u;
    polar_transform_inplace(u);
    return u;
}

namespace detail {

// Two-pass systematic encoder over an arbitrary good-indicator vector:
// transform, zero the frozen coordinates, transform again. Exact whenever
// the good set is dominance closed.
inline BitVector systematic_two_pass(const std::vector<std::uint8_t>& good_ind,
                                     const BitVector& info) {
    BitVector x(good_ind.size(), 0);
    std::size_t j = 0;
    for (std::size_t i = 0; i < good_ind.size(); ++i)
        if (good_ind[i]) x[i] = info[j++] & 1u;
    if (j != info.size())
        throw std::invalid_argument("systematic encode: info length must equal K");
    polar_transform_inplace(x);
    for (std::size_t i = 0; i < good_ind.size(); ++i)
        if (!good_ind[i]) x[i] = 0;
    polar_transform_inplace(x);
    return x;
}

}  // namespace detail

inline BitVector encode_systematic(const CodeConfig& code, const BitVector& info) {
    if (static_cast<int>(info.size()) != code.k)
        throw std::invalid_argument("encode_systematic: info length must equal K");
    return detail::systematic_two_pass(code.good_indicator(), info);
}

// Systematic codeword of a single R-bit block given its frozen mask.
inline BitVector block_systematic_codeword(const FrozenMask& mask, const BitVector& info) {
    std::vector<std::uint8_t> good_ind(static_cast<std::size_t>(mask.r));
    for (int p = 0; p < mask.r; ++p) good_ind[static_cast<std::size_t>(p)] = !mask.frozen(p);
    return detail::systematic_two_pass(good_ind, info);
}

namespace detail {

// Row masks of F^{(x)t}: output bit j of one block is the parity of the
// input bits at positions dominating j.
template <int R>
inline const std::array<std::uint32_t, R>& block_row_masks() {
    static const std::array<std::uint32_t, R> masks = [] {
        std::array<std::uint32_t, R> m{};
        for (int j = 0; j < R; ++j)
            for (int i = 0; i < R; ++i)
                if ((i & j) == j) m[static_cast<std::size_t>(j)] |= 1u << i;
        return m;
    }();
    return masks;
}

template <int R>
inline void block_step(BitVector& v, std::size_t base) {
    const auto& masks = block_row_masks<R>();
    std::uint32_t in = 0;
    for (int p = 0; p < R; ++p) in |= static_cast<std::uint32_t>(v[base + static_cast<std::size_t>(p)] & 1u) << p;
    for (int p = 0; p < R; ++p)
        v[base + static_cast<std::size_t>(p)] =
            static_cast<std::uint8_t>(popcount32(in & masks[static_cast<std::size_t>(p)]) & 1);
}

}  // namespace detail

// Applies F^{(x)log2 R} to each consecutive R-bit block in one step; the
// remaining butterfly stages (h >= R) then reproduce polar_transform exactly.
inline BitVector block_parallel_transform(BitVector v, int r) {
    if (r != 8 && r != 16)
        throw std::invalid_argument("block_parallel_transform: R must be 8 or 16");
    if (v.size() % static_cast<std::size_t>(r) != 0)
        throw std::invalid_argument("block_parallel_transform: length not divisible by R");
    (void)log2_exact(v.size());
    for (std::size_t base = 0; base < v.size(); base += static_cast<std::size_t>(r)) {
        if (r == 8)
            detail::block_step<8>(v, base);
        else
            detail::block_step<16>(v, base);
    }
    for (std::size_t h = static_cast<std::size_t>(r); h < v.size(); h *= 2)
        for (std::size_t i = 0; i < v.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) v[j] ^= v[j + h];
    return v;
}

// Input estimate of one block from its codeword estimate; the transform is
// its own inverse, so this is the same butterfly at width R.
inline BitVector recover_input_block(const BitVector& xhat) {
    BitVector u = xhat;
    polar_transform_inplace(u);
    return u;
}

// Moves position i to position p.apply(i); used to express conjugate codes.
inline BitVector permute_positions(const BitVector& v, const BitPermutation& p) {
    if (v.size() != (std::size_t{1} << p.width()))
        throw std::invalid_argument("permute_positions: size mismatch");
    BitVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[static_cast<std::size_t>(p.apply(static_cast<int>(i)))] = v[i];
    return out;
}

}  // namespace polarfast
