#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include <polarfast/channel.hpp>
#include <polarfast/construction.hpp>
#include <polarfast/transform.hpp>

using namespace polarfast;

namespace {

BitVector random_bits(FrameRng& rng, std::size_t n) {
    BitVector v(n);
    for (auto& b : v) b = static_cast<std::uint8_t>(rng.next_bit());
    return v;
}

}  // namespace

TEST_CASE("transform of unit vectors") {
    BitVector e3{0, 0, 0, 1};
    CHECK(polar_transform(e3) == BitVector{1, 1, 1, 1});
    BitVector e1{0, 1, 0, 0};
    CHECK(polar_transform(e1) == BitVector{1, 1, 0, 0});
    BitVector zero(8, 0);
    CHECK(polar_transform(zero) == zero);
    BitVector bad(3, 0);
    CHECK_THROWS_AS(polar_transform(bad), std::invalid_argument);
}

TEST_CASE("transform is an involution and linear") {
    FrameRng rng(1, 0, 0);
    for (std::size_t n = 2; n <= 1024; n *= 2) {
        for (int trial = 0; trial < 50; ++trial) {
            BitVector a = random_bits(rng, n);
            BitVector b = random_bits(rng, n);
            CHECK(polar_transform(polar_transform(a)) == a);
            BitVector sum(n);
            for (std::size_t i = 0; i < n; ++i) sum[i] = a[i] ^ b[i];
            BitVector ta = polar_transform(a), tb = polar_transform(b);
            BitVector tsum(n);
            for (std::size_t i = 0; i < n; ++i) tsum[i] = ta[i] ^ tb[i];
            CHECK(polar_transform(sum) == tsum);
        }
    }
}

TEST_CASE("transform commutes with bit permutations of positions") {
    FrameRng rng(2, 0, 0);
    for (int t = 1; t <= 6; ++t) {
        std::vector<int> mapping(static_cast<std::size_t>(t));
        std::iota(mapping.begin(), mapping.end(), 0);
        for (int trial = 0; trial < 40; ++trial) {
            for (int i = t - 1; i > 0; --i)
                std::swap(mapping[static_cast<std::size_t>(i)],
                          mapping[rng.next_u64() % static_cast<std::uint64_t>(i + 1)]);
            BitPermutation p(mapping);
            BitVector v = random_bits(rng, std::size_t{1} << t);
            CHECK(polar_transform(permute_positions(v, p)) ==
                  permute_positions(polar_transform(v), p));
        }
    }
}

TEST_CASE("non-systematic encoding") {
    auto code = build_code(3, 1, ConstructionMethod::Huawei);
    REQUIRE(code.good.elements == std::vector<int>{7});
    CHECK(encode_nonsystematic(code, {1}) == BitVector(8, 1));
    CHECK(encode_nonsystematic(code, {0}) == BitVector(8, 0));
    CHECK_THROWS_AS(encode_nonsystematic(code, {1, 0}), std::invalid_argument);

    // transform of the codeword vanishes on the frozen set
    FrameRng rng(3, 0, 0);
    auto big = build_code(6, 30, ConstructionMethod::Bec, 0.4);
    for (int trial = 0; trial < 100; ++trial) {
        BitVector info = random_bits(rng, 30);
        BitVector x = encode_nonsystematic(big, info);
        BitVector u = polar_transform(x);
        auto good = big.good_indicator();
        for (std::size_t i = 0; i < u.size(); ++i)
            if (!good[i]) CHECK(u[i] == 0);
    }
}

TEST_CASE("systematic encoding per-block patterns") {
    // mask FE: single information bit repeated across the block
    CHECK(block_systematic_codeword(FrozenMask(0xFE, 8), {1}) == BitVector(8, 1));
    // mask FC: information bits alternate over even and odd positions
    CHECK(block_systematic_codeword(FrozenMask(0xFC, 8), {1, 0}) ==
          BitVector{1, 0, 1, 0, 1, 0, 1, 0});
    CHECK(block_systematic_codeword(FrozenMask(0xFC, 8), {0, 0}) == BitVector(8, 0));
}

TEST_CASE("systematic property on random codes") {
    FrameRng rng(4, 0, 0);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng.next_u64() % 5);
        int size = 1 << n;
        int k = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(size + 1));
        auto code = build_code(n, k, ConstructionMethod::Huawei);
        BitVector info = random_bits(rng, static_cast<std::size_t>(k));
        BitVector x = encode_systematic(code, info);
        for (std::size_t i = 0; i < info.size(); ++i)
            CHECK(x[static_cast<std::size_t>(code.good.elements[i])] == info[i]);
        BitVector u = polar_transform(x);
        auto good = code.good_indicator();
        for (std::size_t i = 0; i < u.size(); ++i)
            if (!good[i]) CHECK(u[i] == 0);
    }
}

TEST_CASE("block-parallel transform equals the staged transform") {
    FrameRng rng(5, 0, 0);
    for (int r : {8, 16}) {
        // degenerate composition: a single block
        BitVector v = random_bits(rng, static_cast<std::size_t>(r));
        CHECK(block_parallel_transform(v, r) == polar_transform(v));
        BitVector zero(256, 0);
        CHECK(block_parallel_transform(zero, r) == zero);
        for (int trial = 0; trial < 200; ++trial) {
            BitVector w = random_bits(rng, 256);
            CHECK(block_parallel_transform(w, r) == polar_transform(w));
        }
    }
    CHECK_THROWS_AS(block_parallel_transform(BitVector(12, 0), 8), std::invalid_argument);
}

TEST_CASE("input recovery from block codewords") {
    BitVector ones(8, 1);
    BitVector e7(8, 0);
    e7[7] = 1;
    CHECK(recover_input_block(ones) == e7);
    CHECK(recover_input_block(BitVector(8, 0)) == BitVector(8, 0));
    BitVector fc{1, 0, 1, 0, 1, 0, 1, 0};
    BitVector u = recover_input_block(fc);
    BitVector expected(8, 0);
    expected[6] = 1;
    CHECK(u == expected);
}
