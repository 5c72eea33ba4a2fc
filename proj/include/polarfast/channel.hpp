#pragma once

// Channel models with reproducible, stream-splittable randomness. Every frame
// draws from its own generator keyed by (seed, stream, frame), so results do
// not depend on how frames are scheduled across workers. The generator is
// splitmix64; Gaussians come from a Box-Muller transform over its output,
// keeping LLR streams byte-identical across platforms.

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "polarfast/bits.hpp"
#include "polarfast/llr_ops.hpp"

namespace polarfast {

struct ChannelSpec {
    enum class Kind { Awgn, Bec };
    Kind kind = Kind::Awgn;
    double snr_db = 0.0;  // E_c/N_0 per code bit, AWGN only
    double eps = 0.0;     // erasure probability, BEC only
    std::uint64_t rng_seed = 0;
};

// Unit-energy BPSK at E_c/N_0 = snr_db gives noise variance 1 / (2 * 10^(snr_db/10)).
inline double awgn_noise_variance(double snr_db) {
    return 1.0 / (2.0 * std::pow(10.0, snr_db / 10.0));
}

class FrameRng {
  public:
    FrameRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t frame) {
        state_ = mix(mix(mix(seed) ^ stream) ^ frame);
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in (0, 1]
    double next_unit() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    int next_bit() { return static_cast<int>(next_u64() >> 63); }

    double next_gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        double mag = std::sqrt(-2.0 * std::log(u1));
        double ang = 2.0 * 3.14159265358979323846 * u2;
        spare_ = mag * std::sin(ang);
        have_spare_ = true;
        return mag * std::cos(ang);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// BPSK over AWGN: bit 0 -> +1, bit 1 -> -1, y = s + noise, llr = 2 y / sigma^2.
inline LlrBlock awgn_bpsk_llrs(const BitVector& x, double snr_db, FrameRng& rng) {
    const double var = awgn_noise_variance(snr_db);
    const double sigma = std::sqrt(var);
    LlrBlock llrs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double s = x[i] ? -1.0 : 1.0;
        double y = s + sigma * rng.next_gauss();
        llrs[i] = clamp_llr(2.0 * y / var);
    }
    return llrs;
}

// Binary erasure channel: erased positions carry no information (LLR 0),
// the rest are certain.
inline LlrBlock bec_llrs(const BitVector& x, double eps, FrameRng& rng) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("bec_llrs: eps out of range");
    LlrBlock llrs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (rng.next_unit() <= eps)
            llrs[i] = 0.0;
        else
            llrs[i] = x[i] ? -kLlrMax : kLlrMax;
    }
    return llrs;
}

inline LlrBlock channel_llrs(const ChannelSpec& spec, const BitVector& x, std::uint64_t stream,
                             std::uint64_t frame) {
    FrameRng rng(spec.rng_seed, stream, frame);
    return spec.kind == ChannelSpec::Kind::Awgn ? awgn_bpsk_llrs(x, spec.snr_db, rng)
                                                : bec_llrs(x, spec.eps, rng);
}

}  // namespace polarfast
