#pragma once

// Cycle-latency model. Bit operations and real additions cost one cycle, a
// check-node operation T_c cycles, a list minimum T_m cycles. Per retained
// mask the model stores the latency expression as the maximum of two affine
// forms in (T_c, T_m), which covers every tabulated case including
// max{1 + T_c, T_m}. The serial SC baseline for an R-bit block is
// R + (R - 1) T_c cycles regardless of the frozen pattern.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarfast/block_decoders.hpp"
#include "polarfast/case_tables.hpp"
#include "polarfast/construction.hpp"

namespace polarfast {

struct LatencyParams {
    int t_c = 1;  // cycles per check-node operation
    int t_m = 1;  // cycles per list minimum

    void validate() const {
        if (t_c < 1 || t_m < 1) throw std::invalid_argument("latency params must be >= 1");
    }
};

struct LatencyExpr {
    struct Affine {
        int c0 = 0;
        int tc = 0;
        int tm = 0;
        int eval(const LatencyParams& p) const { return c0 + tc * p.t_c + tm * p.t_m; }
    };
    Affine first;
    Affine second;  // equals `first` when the expression has a single form

    int eval(const LatencyParams& p) const { return std::max(first.eval(p), second.eval(p)); }
};

namespace detail {

struct LatencyRow {
    std::uint32_t mask_bits;
    LatencyExpr expr;
};

// c0 + a T_c + b T_m, optionally + max(T_c, T_m) as two affine branches.
inline LatencyExpr affine(int c0, int a, int b, bool plus_max = false) {
    LatencyExpr e;
    e.first = {c0, a + (plus_max ? 1 : 0), b};
    e.second = {c0, a, b + (plus_max ? 1 : 0)};
    return e;
}

inline LatencyExpr max_of(int c0a, int a_tc, int a_tm, int c0b, int b_tc, int b_tm) {
    LatencyExpr e;
    e.first = {c0a, a_tc, a_tm};
    e.second = {c0b, b_tc, b_tm};
    return e;
}

inline const std::vector<LatencyRow>& latency_rows(int r) {
    if (r == 8) {
        static const std::vector<LatencyRow> rows8 = {
            {0xFF, affine(0, 0, 0)}, {0xFE, affine(1, 0, 0)},       {0xFC, affine(1, 0, 0)},
            {0xF8, affine(1, 0, 1)}, {0xE8, affine(1, 0, 0, true)}, {0xE0, affine(1, 1, 0)},
            {0xC0, affine(0, 0, 1)}, {0x80, affine(0, 0, 1)},       {0x00, affine(0, 0, 0)},
        };
        return rows8;
    }
    if (r == 16) {
        static const std::vector<LatencyRow> rows16 = {
            {0xFFFF, affine(0, 0, 0)},
            {0xFFFE, affine(1, 0, 0)},
            {0xFFFC, affine(1, 0, 0)},
            {0xFFF8, affine(1, 0, 1)},
            {0xFFE8, affine(2, 0, 0, true)},
            {0xFEE8, affine(3, 0, 0, true)},
            {0xFFC0, affine(1, 0, 1)},
            {0xFEE0, affine(3, 1, 0)},
            {0xFF80, affine(1, 0, 1)},
            {0xFEC0, affine(2, 0, 1)},
            {0xFE80, affine(2, 0, 1)},
            {0xFCC0, affine(1, 0, 0, true)},
            {0xFC80, affine(1, 0, 0, true)},
            {0xF880, affine(3, 1, 1)},
            {0xE880, affine(3, 1, 1, true)},
            {0xE800, affine(3, 1, 0, true)},
            {0xC0C0, affine(0, 0, 1)},
            {0xE000, max_of(1, 1, 0, 0, 0, 1)},  // max(1 + T_c, T_m)
            {0xC000, affine(0, 0, 1)},
            {0x8000, affine(0, 0, 1)},
            {0x0000, affine(0, 0, 0)},
        };
        return rows16;
    }
    throw std::invalid_argument("latency model covers block sizes 8 and 16 only");
}

}  // namespace detail

inline int case_latency(const FrozenMask& mask, const LatencyParams& params) {
    params.validate();
    for (const auto& row : detail::latency_rows(mask.r))
        if (row.mask_bits == mask.bits) return row.expr.eval(params);
    throw std::invalid_argument("case_latency: mask " + mask.hex() + " has no dedicated decoder");
}

inline int sc_block_latency(int r, const LatencyParams& params) {
    params.validate();
    if (!is_power_of_two(static_cast<std::size_t>(r)))
        throw std::invalid_argument("sc_block_latency: R must be a power of two");
    return r + (r - 1) * params.t_c;
}

struct LatencyReportRow {
    int block_index = 0;
    FrozenMask mask;
    int case_id = -1;  // -1 for fallback blocks
    int fast_cycles = 0;
    int sc_cycles = 0;
};

struct LatencyReport {
    std::vector<LatencyReportRow> rows;
    long long fast_total = 0;       // block-level cycles, fast decoders
    long long sc_total = 0;         // block-level cycles, SC baseline
    long long internal_cycles = 0;  // tree stages above the blocks, same for both
    double speedup = 0.0;           // sc_total / fast_total at block level
};

// Per-block latency figures. Fallback blocks run in-block SC and are charged
// the SC baseline. Stages above the block level cost the same for both
// decoders and are reported separately, outside the speedup ratio.
inline LatencyReport code_latency_report(const CodeConfig& code, int r,
                                         const LatencyParams& params) {
    params.validate();
    LatencyReport report;
    const int sc_cycles = sc_block_latency(r, params);
    auto masks = block_masks(code, r);
    for (std::size_t b = 0; b < masks.size(); ++b) {
        LatencyReportRow row;
        row.block_index = static_cast<int>(b);
        row.mask = masks[b];
        BlockCase bc = classify_block(masks[b]);
        row.case_id = bc.case_id;
        row.fast_cycles = bc.fallback() ? sc_cycles : case_latency(masks[b], params);
        row.sc_cycles = sc_cycles;
        report.fast_total += row.fast_cycles;
        report.sc_total += row.sc_cycles;
        report.rows.push_back(row);
    }
    // One check-node pass (T_c) plus one-cycle variable-node and combine
    // passes per internal tree node of size > R.
    const int t = log2_exact(static_cast<std::size_t>(r));
    for (int m = t + 1; m <= code.n; ++m)
        report.internal_cycles += static_cast<long long>(code.block_length() >> m) * (params.t_c + 2);
    report.speedup = report.fast_total == 0
                         ? std::numeric_limits<double>::infinity()
                         : static_cast<double>(report.sc_total) / static_cast<double>(report.fast_total);
    return report;
}

inline std::string latency_report_csv(const LatencyReport& report) {
    std::ostringstream out;
    out << "block_index,mask_hex,case_id,fast_cycles,sc_cycles\n";
    for (const auto& row : report.rows)
        out << row.block_index << "," << row.mask.hex() << "," << row.case_id << ","
            << row.fast_cycles << "," << row.sc_cycles << "\n";
    return out.str();
}

inline void write_latency_report(const LatencyReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << latency_report_csv(report);
}

}  // namespace polarfast
