#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <polarfast/simulation.hpp>

using namespace polarfast;

TEST_CASE("frame rng is reproducible and stream-separated") {
    FrameRng a(1, 2, 3), b(1, 2, 3), c(1, 2, 4);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    bool any_diff = false;
    FrameRng a2(1, 2, 3);
    for (int i = 0; i < 100; ++i) any_diff |= a2.next_u64() != c.next_u64();
    CHECK(any_diff);
}

TEST_CASE("AWGN LLRs have the right first moment") {
    // all-zero word: llr ~ N(2/sigma^2, 4/sigma^2)
    const double snr_db = 0.0;
    const double var = awgn_noise_variance(snr_db);
    FrameRng rng(7, 0, 0);
    BitVector zero(1000, 0);
    double sum = 0.0;
    const int reps = 1000;  // 10^6 samples total
    for (int rep = 0; rep < reps; ++rep) {
        LlrBlock llrs = awgn_bpsk_llrs(zero, snr_db, rng);
        for (double v : llrs) sum += v;
    }
    double mean = sum / (1000.0 * reps);
    CHECK(mean == Catch::Approx(2.0 / var).epsilon(0.01));
}

TEST_CASE("AWGN LLRs saturate with the right signs as noise vanishes") {
    FrameRng rng(8, 0, 0);
    BitVector x{0, 1, 0, 1};
    LlrBlock llrs = awgn_bpsk_llrs(x, 60.0, rng);
    CHECK(llrs[0] == kLlrMax);
    CHECK(llrs[1] == -kLlrMax);
    CHECK(llrs[2] == kLlrMax);
    CHECK(llrs[3] == -kLlrMax);
}

TEST_CASE("channel spec dispatch is reproducible") {
    ChannelSpec awgn;
    awgn.kind = ChannelSpec::Kind::Awgn;
    awgn.snr_db = 1.5;
    awgn.rng_seed = 77;
    BitVector x{0, 1, 1, 0, 0, 1, 0, 1};
    CHECK(channel_llrs(awgn, x, 0, 3) == channel_llrs(awgn, x, 0, 3));
    CHECK(channel_llrs(awgn, x, 0, 3) != channel_llrs(awgn, x, 0, 4));

    ChannelSpec bec;
    bec.kind = ChannelSpec::Kind::Bec;
    bec.eps = 0.4;
    bec.rng_seed = 77;
    auto llrs = channel_llrs(bec, x, 0, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK((llrs[i] == 0.0 || llrs[i] == (x[i] ? -kLlrMax : kLlrMax)));
}

TEST_CASE("erasure channel LLRs") {
    FrameRng rng(9, 0, 0);
    BitVector x{0, 1, 0, 1, 0, 1, 0, 1};
    LlrBlock llrs = bec_llrs(x, 0.5, rng);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (llrs[i] == 0.0) continue;
        CHECK(llrs[i] == (x[i] ? -kLlrMax : kLlrMax));
    }
    LlrBlock all_erased = bec_llrs(x, 1.0, rng);
    for (double v : all_erased) CHECK(v == 0.0);
    CHECK_THROWS_AS(bec_llrs(x, 1.5, rng), std::invalid_argument);
}

TEST_CASE("sweeps are reproducible and worker-independent") {
    auto code = build_code(5, 16, ConstructionMethod::Bec, 0.3678794411714423);
    StopRule stop{50, 2000};
    std::vector<double> snrs{0.0, 1.0};
    auto p1 = ber_sweep(code, DecoderChoice::sc(), true, snrs, stop, 99, 1);
    auto p2 = ber_sweep(code, DecoderChoice::sc(), true, snrs, stop, 99, 1);
    auto p4 = ber_sweep(code, DecoderChoice::sc(), true, snrs, stop, 99, 4);
    REQUIRE(p1.size() == 2);
    CHECK(ber_points_csv(p1, code.k) == ber_points_csv(p2, code.k));
    CHECK(ber_points_csv(p1, code.k) == ber_points_csv(p4, code.k));
    CHECK(p1[0].frames > 0);
    CHECK(p1[0].decoder_id == "sc");

    auto csv = ber_points_csv(p1, code.k);
    CHECK(csv.rfind("snr_db,frames,bit_errors,frame_errors,ber,fer,decoder_id,systematic,seed\n",
                    0) == 0);
}

TEST_CASE("noiseless and hopeless limits") {
    auto code = build_code(5, 16, ConstructionMethod::Bec, 0.3678794411714423);
    StopRule stop{0, 300};  // fixed frame budget
    auto clean = ber_sweep(code, DecoderChoice::sc(), true, {60.0}, stop, 5, 1);
    CHECK(clean[0].bit_errors == 0);
    CHECK(clean[0].frame_errors == 0);

    auto noisy = ber_sweep(code, DecoderChoice::fast(8, DecodeMode::LowComplexity), true, {-40.0},
                           stop, 5, 1);
    CHECK(noisy[0].ber(code.k) == Catch::Approx(0.5).margin(0.1));
}

TEST_CASE("codeword estimate does not depend on the systematic flag") {
    auto code = build_code(6, 32, ConstructionMethod::Bec, 0.3678794411714423);
    FrameRng rng(11, 0, 0);
    for (int trial = 0; trial < 100; ++trial) {
        LlrBlock llrs(64);
        for (auto& v : llrs) v = 3.0 * rng.next_gauss();
        auto res = sc_decode(code, llrs);
        auto res_again = sc_decode(code, llrs);
        CHECK(res.xhat == res_again.xhat);  // the decoder has no systematic input at all
        for (int r : {8, 16}) {
            auto fast = hybrid_decode(code, llrs, r, DecodeMode::LowComplexity);
            auto fast_again = hybrid_decode(code, llrs, r, DecodeMode::LowComplexity);
            CHECK(fast.xhat == fast_again.xhat);
        }
    }
}

TEST_CASE("stop rules are validated") {
    StopRule bad{0, 0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    auto code = build_code(4, 8, ConstructionMethod::Huawei);
    CHECK_THROWS_AS(ber_sweep(code, DecoderChoice::sc(), false, {1.0}, bad, 1, 1),
                    std::invalid_argument);
}

TEST_CASE("simulation counts bound their budgets") {
    auto code = build_code(5, 16, ConstructionMethod::Bec, 0.3678794411714423);
    StopRule stop{10, 5000};
    auto pts = ber_sweep(code, DecoderChoice::sc(), false, {-2.0}, stop, 13, 1);
    CHECK(pts[0].frames <= 5000);
    CHECK(pts[0].frame_errors >= 10);
    CHECK(pts[0].frame_errors <= pts[0].frames);
    CHECK(pts[0].bit_errors <= pts[0].frames * static_cast<std::uint64_t>(code.k));
}
