// Command-line frontend: code construction, encoding, decoding, Monte-Carlo
// BER sweeps, admissible-set enumeration, table self-checks, and the
// cycle-latency report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <polarfast/polarfast.hpp>

namespace {

using namespace polarfast;

LlrBlock read_llr_file(const std::string& path, std::size_t expected) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    LlrBlock llrs;
    double v;
    while (in >> v) llrs.push_back(clamp_llr(v));
    if (llrs.size() != expected)
        throw std::runtime_error("expected " + std::to_string(expected) + " LLRs, got " +
                                 std::to_string(llrs.size()));
    return llrs;
}

DecodeMode parse_mode(const std::string& mode) {
    if (mode == "optimal") return DecodeMode::Optimal;
    if (mode == "lowcomplexity") return DecodeMode::LowComplexity;
    throw CLI::ValidationError("--mode must be optimal or lowcomplexity");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fast flexible-rate polar encoding/decoding toolbox"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a code and write its description file");
    int c_n = 0, c_k = 0;
    std::string c_method, c_out;
    double c_eps = 0.36787944117144233;  // e^-1, the usual erasure design point
    construct->add_option("--n", c_n, "length exponent, N = 2^n")->required();
    construct->add_option("--k", c_k, "information length K")->required();
    construct->add_option("--method", c_method, "construction method: bec|huawei")->required();
    construct->add_option("--eps", c_eps, "BEC erasure probability (default e^-1)");
    construct->add_option("--out", c_out, "output code file")->required();

    // encode
    auto* encode = app.add_subcommand("encode", "encode an information word, print hex codeword");
    std::string e_code, e_info;
    bool e_systematic = false;
    encode->add_option("--code", e_code, "code file")->required();
    encode->add_flag("--systematic", e_systematic, "systematic encoding");
    encode->add_option("--info", e_info, "information bits as hex, first bit in the MSB")->required();

    // decode
    auto* decode = app.add_subcommand("decode", "decode an LLR file, print hex codeword and input estimates");
    std::string d_code, d_decoder = "sc", d_mode = "lowcomplexity", d_llrs;
    int d_r = 8;
    decode->add_option("--code", d_code, "code file")->required();
    decode->add_option("--decoder", d_decoder, "sc|fast")->check(CLI::IsMember({"sc", "fast"}));
    decode->add_option("--r", d_r, "fast-decoder block size 8|16")->check(CLI::IsMember({8, 16}));
    decode->add_option("--mode", d_mode, "optimal|lowcomplexity");
    decode->add_option("--llrs", d_llrs, "file with one LLR per line (positive favours bit 0)")->required();

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte-Carlo BER/FER sweep over an AWGN channel");
    std::string s_code, s_decoder = "sc", s_mode = "lowcomplexity", s_out;
    int s_r = 8;
    bool s_systematic = false;
    double s_start = 0.0, s_stop = 0.0, s_step = 1.0;
    std::uint64_t s_min_errors = 100, s_max_frames = 1000000, s_seed = 1;
    simulate->add_option("--code", s_code)->required();
    simulate->add_option("--decoder", s_decoder, "sc|fast")->check(CLI::IsMember({"sc", "fast"}));
    simulate->add_option("--r", s_r, "fast-decoder block size 8|16")->check(CLI::IsMember({8, 16}));
    simulate->add_option("--mode", s_mode, "optimal|lowcomplexity");
    simulate->add_flag("--systematic", s_systematic, "systematic encoding");
    simulate->add_option("--snr-start", s_start, "first E_c/N_0 point in dB (per code bit)")->required();
    simulate->add_option("--snr-stop", s_stop, "last E_c/N_0 point in dB")->required();
    simulate->add_option("--snr-step", s_step, "E_c/N_0 step in dB");
    simulate->add_option("--min-errors", s_min_errors, "stop a point after this many frame errors");
    simulate->add_option("--max-frames", s_max_frames, "hard frame cap per point");
    simulate->add_option("--seed", s_seed, "RNG seed");
    simulate->add_option("--out", s_out, "output CSV")->required();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "count admissible good-index sets per block");
    int en_r = 8;
    enumerate->add_option("--r", en_r, "block size 1|2|4|8|16|32")
        ->check(CLI::IsMember({1, 2, 4, 8, 16, 32}))
        ->required();

    // verify-tables
    app.add_subcommand("verify-tables", "re-derive and check the case tables, counts and latencies");

    // latency
    auto* latency = app.add_subcommand("latency", "per-block cycle latency report");
    std::string l_code, l_out;
    int l_r = 8, l_tc = 1, l_tm = 1;
    latency->add_option("--code", l_code)->required();
    latency->add_option("--r", l_r, "block size 8|16")->check(CLI::IsMember({8, 16}));
    latency->add_option("--tc", l_tc, "cycles per check-node operation")->required();
    latency->add_option("--tm", l_tm, "cycles per list minimum")->required();
    latency->add_option("--out", l_out, "output CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) {
            auto method = method_from_name(c_method);
            CodeConfig code = build_code(c_n, c_k, method, c_eps);
            save_code(code, c_out);
            std::cout << "wrote " << c_out << " (N=" << code.block_length() << ", K=" << code.k
                      << ", " << method_name(code.method) << ")\n";
        } else if (*encode) {
            CodeConfig code = load_code(e_code);
            BitVector info = hex_to_bits(e_info, static_cast<std::size_t>(code.k));
            BitVector x = e_systematic ? encode_systematic(code, info) : encode_nonsystematic(code, info);
            std::cout << bits_to_hex(x) << "\n";
        } else if (*decode) {
            CodeConfig code = load_code(d_code);
            LlrBlock llrs = read_llr_file(d_llrs, static_cast<std::size_t>(code.block_length()));
            DecodeResult res = d_decoder == "sc"
                                   ? sc_decode(code, llrs)
                                   : hybrid_decode(code, llrs, d_r, parse_mode(d_mode));
            std::cout << bits_to_hex(res.xhat) << "\n" << bits_to_hex(res.uhat) << "\n";
        } else if (*simulate) {
            CodeConfig code = load_code(s_code);
            DecoderChoice choice = s_decoder == "sc" ? DecoderChoice::sc()
                                                     : DecoderChoice::fast(s_r, parse_mode(s_mode));
            std::vector<double> snrs;
            if (s_step <= 0.0) throw std::runtime_error("--snr-step must be positive");
            for (double snr = s_start; snr <= s_stop + 1e-9; snr += s_step) snrs.push_back(snr);
            StopRule stop{s_min_errors, s_max_frames};
            auto points = ber_sweep(code, choice, s_systematic, snrs, stop, s_seed);
            write_ber_csv(points, code.k, s_out);
            for (const auto& p : points)
                std::printf("%6.2f dB  frames=%-9llu ber=%.3e fer=%.3e\n", p.snr_db,
                            static_cast<unsigned long long>(p.frames), p.ber(code.k), p.fer());
            std::cout << "wrote " << s_out << "\n";
        } else if (*enumerate) {
            auto sets = enumerate_admissible_sets(en_r);
            std::cout << "count " << sets.size() << "\n";
            if (en_r < 32) {
                for (const auto& s : sets) {
                    std::cout << "{";
                    for (std::size_t i = 0; i < s.elements.size(); ++i)
                        std::cout << (i ? "," : "") << s.elements[i];
                    std::cout << "}\n";
                }
            }
        } else if (app.get_subcommand("verify-tables")->parsed()) {
            return verify_tables(std::cout) ? 0 : 1;
        } else if (*latency) {
            CodeConfig code = load_code(l_code);
            LatencyParams params{l_tc, l_tm};
            LatencyReport report = code_latency_report(code, l_r, params);
            write_latency_report(report, l_out);
            std::printf("block totals: fast=%lld sc=%lld cycles, speedup %.2fx\n",
                        report.fast_total, report.sc_total, report.speedup);
            std::printf("shared tree overhead above blocks: %lld cycles\n", report.internal_cycles);
            std::cout << "wrote " << l_out << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
