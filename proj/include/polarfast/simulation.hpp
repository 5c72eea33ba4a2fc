#pragma once

// Monte-Carlo BER/FER harness. Frames are independent and keyed by
// (seed, snr index, frame index), simulated in fixed-size batches; the stop
// rule is evaluated at batch boundaries. Counts are exact integers merged
// commutatively, so a sweep is reproducible and independent of the worker
// count.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "polarfast/channel.hpp"
#include "polarfast/construction.hpp"
#include "polarfast/hybrid_decoder.hpp"
#include "polarfast/sc_decoder.hpp"
#include "polarfast/transform.hpp"

namespace polarfast {

struct DecoderChoice {
    enum class Kind { Sc, Fast };
    Kind kind = Kind::Sc;
    int r = 8;
    DecodeMode mode = DecodeMode::LowComplexity;

    static DecoderChoice sc() { return DecoderChoice{}; }
    static DecoderChoice fast(int r, DecodeMode mode) {
        DecoderChoice d;
        d.kind = Kind::Fast;
        d.r = r;
        d.mode = mode;
        return d;
    }

    std::string id() const {
        if (kind == Kind::Sc) return "sc";
        return std::string("fast-") + std::to_string(r) + "-" +
               (mode == DecodeMode::Optimal ? "optimal" : "lowcomplexity");
    }
};

struct StopRule {
    std::uint64_t min_frame_errors = 100;
    std::uint64_t max_frames = 1000000;

    void validate() const {
        if (min_frame_errors == 0 && max_frames == 0)
            throw std::invalid_argument("stop rule: need a positive frame-error or frame budget");
        if (max_frames == 0) throw std::invalid_argument("stop rule: max_frames must be positive");
    }
};

struct BerPoint {
    double snr_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::string decoder_id;
    bool systematic = false;
    std::uint64_t seed = 0;

    double ber(int k) const {
        return k > 0 && frames > 0 ? static_cast<double>(bit_errors) / (static_cast<double>(frames) * k)
                                   : 0.0;
    }
    double fer() const {
        return frames > 0 ? static_cast<double>(frame_errors) / static_cast<double>(frames) : 0.0;
    }
};

namespace detail {

struct FrameOutcome {
    std::uint32_t bit_errors = 0;
    bool frame_error = false;
};

inline FrameOutcome simulate_frame(const CodeConfig& code, const DecoderChoice& decoder,
                                   bool systematic, double snr_db, std::uint64_t seed,
                                   std::uint64_t stream, std::uint64_t frame) {
    FrameRng rng(seed, stream, frame);
    BitVector info(static_cast<std::size_t>(code.k));
    for (auto& b : info) b = static_cast<std::uint8_t>(rng.next_bit());
    BitVector x = systematic ? encode_systematic(code, info) : encode_nonsystematic(code, info);
    LlrBlock llrs = awgn_bpsk_llrs(x, snr_db, rng);
    DecodeResult res = decoder.kind == DecoderChoice::Kind::Sc
                           ? sc_decode(code, llrs)
                           : hybrid_decode(code, llrs, decoder.r, decoder.mode);
    const BitVector& decided = systematic ? res.xhat : res.uhat;
    FrameOutcome out;
    for (std::size_t i = 0; i < info.size(); ++i) {
        std::size_t pos = static_cast<std::size_t>(code.good.elements[i]);
        if (decided[pos] != info[i]) ++out.bit_errors;
    }
    out.frame_error = out.bit_errors > 0;
    return out;
}

}  // namespace detail

inline std::vector<BerPoint> ber_sweep(const CodeConfig& code, const DecoderChoice& decoder,
                                       bool systematic, const std::vector<double>& snr_list,
                                       const StopRule& stop, std::uint64_t seed,
                                       unsigned workers = 1) {
    stop.validate();
    if (workers == 0) workers = 1;
    constexpr std::uint64_t kBatch = 256;
    std::vector<BerPoint> points;
    for (std::size_t si = 0; si < snr_list.size(); ++si) {
        BerPoint point;
        point.snr_db = snr_list[si];
        point.decoder_id = decoder.id();
        point.systematic = systematic;
        point.seed = seed;
        std::uint64_t done = 0;
        while (done < stop.max_frames &&
               (stop.min_frame_errors == 0 || point.frame_errors < stop.min_frame_errors)) {
            std::uint64_t batch = std::min(kBatch, stop.max_frames - done);
            std::vector<std::uint64_t> bit_acc(workers, 0), frame_acc(workers, 0);
            auto work = [&](unsigned w) {
                for (std::uint64_t f = done + w; f < done + batch; f += workers) {
                    auto outcome = detail::simulate_frame(code, decoder, systematic,
                                                          snr_list[si], seed, si, f);
                    bit_acc[w] += outcome.bit_errors;
                    frame_acc[w] += outcome.frame_error ? 1 : 0;
                }
            };
            if (workers == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
                for (auto& t : pool) t.join();
            }
            for (unsigned w = 0; w < workers; ++w) {
                point.bit_errors += bit_acc[w];
                point.frame_errors += frame_acc[w];
            }
            done += batch;
        }
        point.frames = done;
        points.push_back(std::move(point));
    }
    return points;
}

inline std::string ber_points_csv(const std::vector<BerPoint>& points, int k) {
    std::ostringstream out;
    out << "snr_db,frames,bit_errors,frame_errors,ber,fer,decoder_id,systematic,seed\n";
    char buf[64];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%.6g", p.snr_db);
        out << buf << "," << p.frames << "," << p.bit_errors << "," << p.frame_errors << ",";
        std::snprintf(buf, sizeof(buf), "%.9e", p.ber(k));
        out << buf << ",";
        std::snprintf(buf, sizeof(buf), "%.9e", p.fer());
        out << buf << "," << p.decoder_id << "," << (p.systematic ? 1 : 0) << "," << p.seed << "\n";
    }
    return out.str();
}

inline void write_ber_csv(const std::vector<BerPoint>& points, int k, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << ber_points_csv(points, k);
}

}  // namespace polarfast
