#pragma once

// Code construction: per-bit-channel reliabilities (binary-erasure recursion
// or the closed-form quarter-power metric used for 5G control channels),
// selection of the K most reliable channels, and extraction of per-block
// frozen masks. A constructed code whose good set is not dominance closed is
// rejected outright; every fast-decoding guarantee depends on that property.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polarfast/case_tables.hpp"
#include "polarfast/domination.hpp"

namespace polarfast {

enum class ConstructionMethod { Bec, Huawei };

struct NotProperlyDesignedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodeConfig {
    int n = 0;                // block length N = 2^n
    int k = 0;                // information length
    IndexSet good;            // the K good bit-channel indexes, width n
    ConstructionMethod method = ConstructionMethod::Huawei;
    double eps = 0.0;         // erasure probability, BEC construction only

    int block_length() const { return 1 << n; }

    std::vector<std::uint8_t> good_indicator() const {
        std::vector<std::uint8_t> ind(static_cast<std::size_t>(block_length()), 0);
        for (int g : good.elements) ind[static_cast<std::size_t>(g)] = 1;
        return ind;
    }
};

struct ReliabilityVector {
    std::vector<double> values;  // one score per bit channel
    bool higher_is_better = true;
};

// Bhattacharyya recursion from Z = eps: each polarization stage splits a
// value z into 2z - z^2 (first branch) and z^2 (second branch); channel i
// follows the branches named by its bits from most- to least-significant.
inline ReliabilityVector bec_reliabilities(int n, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("bec_reliabilities: eps must be in (0, 1)");
    if (n < 0) throw std::invalid_argument("bec_reliabilities: negative exponent");
    std::vector<double> z{eps};
    for (int stage = 0; stage < n; ++stage) {
        std::vector<double> next(z.size() * 2);
        for (std::size_t i = 0; i < z.size(); ++i) {
            next[2 * i] = 2.0 * z[i] - z[i] * z[i];
            next[2 * i + 1] = z[i] * z[i];
        }
        z = std::move(next);
    }
    return ReliabilityVector{std::move(z), /*higher_is_better=*/false};
}

// Q_j = sum over set bits of 2^((k-1)/4), k the 1-based bit position.
inline ReliabilityVector huawei_reliabilities(int n) {
    if (n < 0) throw std::invalid_argument("huawei_reliabilities: negative exponent");
    std::vector<double> q(std::size_t{1} << n, 0.0);
    for (std::size_t j = 0; j < q.size(); ++j)
        for (int k = 1; k <= n; ++k)
            if ((j >> (k - 1)) & 1u) q[j] += std::pow(2.0, (k - 1) / 4.0);
    return ReliabilityVector{std::move(q), /*higher_is_better=*/true};
}

// Channel indexes sorted best first. Exact score ties go to the larger
// index; a dominating channel never sorts behind one it dominates.
inline std::vector<int> reliability_order(const ReliabilityVector& rel) {
    std::vector<int> order(rel.values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double va = rel.values[static_cast<std::size_t>(a)];
        double vb = rel.values[static_cast<std::size_t>(b)];
        if (va != vb) return rel.higher_is_better ? va > vb : va < vb;
        return a > b;
    });
    return order;
}

inline CodeConfig build_code(int n, int k, ConstructionMethod method, double eps = 0.0) {
    if (n < 0 || k < 0 || k > (1 << n))
        throw std::invalid_argument("build_code: need 0 <= K <= 2^n");
    ReliabilityVector rel = method == ConstructionMethod::Bec
                                ? bec_reliabilities(n, eps)
                                : huawei_reliabilities(n);
    std::vector<int> order = reliability_order(rel);
    std::vector<int> good(order.begin(), order.begin() + k);
    CodeConfig code;
    code.n = n;
    code.k = k;
    code.good = IndexSet(n, std::move(good));
    code.method = method;
    code.eps = method == ConstructionMethod::Bec ? eps : 0.0;
    if (!is_dominance_closed(code.good))
        throw NotProperlyDesignedError("constructed good set is not dominance closed");
    return code;
}

// Per-block frozen masks: block i, position p is frozen iff global channel
// i*R + p is not good. Each block's good set inherits dominance closure.
inline std::vector<FrozenMask> block_masks(const CodeConfig& code, int r) {
    int n_blocks_len = code.block_length();
    if (r > n_blocks_len || !is_power_of_two(static_cast<std::size_t>(r)))
        throw std::invalid_argument("block_masks: R must be a power of two <= N");
    auto good = code.good_indicator();
    std::vector<FrozenMask> masks;
    masks.reserve(static_cast<std::size_t>(n_blocks_len / r));
    for (int b = 0; b < n_blocks_len / r; ++b) {
        std::uint32_t bits = 0;
        for (int p = 0; p < r; ++p)
            if (!good[static_cast<std::size_t>(b * r + p)]) bits |= 1u << (r - 1 - p);
        FrozenMask mask(bits, r);
        if (!is_dominance_closed(mask.good_set()))
            throw NotProperlyDesignedError("block good set is not dominance closed");
        masks.push_back(mask);
    }
    return masks;
}

inline std::string method_name(ConstructionMethod m) {
    return m == ConstructionMethod::Bec ? "bec" : "huawei";
}

inline ConstructionMethod method_from_name(const std::string& s) {
    if (s == "bec") return ConstructionMethod::Bec;
    if (s == "huawei") return ConstructionMethod::Huawei;
    throw std::invalid_argument("unknown construction method: " + s);
}

inline std::string code_to_string(const CodeConfig& code) {
    std::ostringstream out;
    out << "version 1\n";
    out << "n " << code.n << "\n";
    out << "K " << code.k << "\n";
    out << "method " << method_name(code.method) << "\n";
    if (code.method == ConstructionMethod::Bec) {
        out.precision(17);
        out << "eps " << code.eps << "\n";
    }
    out << "good_indices";
    for (int g : code.good.elements) out << " " << g;
    out << "\n";
    return out.str();
}

inline CodeConfig code_from_string(const std::string& text) {
    std::istringstream in(text);
    std::string key;
    CodeConfig code;
    bool have_n = false, have_k = false, have_method = false, have_good = false;
    int version = 0;
    std::vector<int> good;
    while (in >> key) {
        if (key == "version") {
            in >> version;
        } else if (key == "n") {
            in >> code.n;
            have_n = true;
        } else if (key == "K") {
            in >> code.k;
            have_k = true;
        } else if (key == "method") {
            std::string m;
            in >> m;
            code.method = method_from_name(m);
            have_method = true;
        } else if (key == "eps") {
            in >> code.eps;
        } else if (key == "good_indices") {
            int g;
            while (in >> g) good.push_back(g);
            have_good = true;
        } else {
            throw std::invalid_argument("code file: unknown field " + key);
        }
    }
    if (version != 1) throw std::invalid_argument("code file: unsupported version");
    if (!have_n || !have_k || !have_method || !have_good)
        throw std::invalid_argument("code file: missing fields");
    code.good = IndexSet(code.n, std::move(good));
    if (static_cast<int>(code.good.size()) != code.k)
        throw std::invalid_argument("code file: K does not match good_indices");
    if (!is_dominance_closed(code.good))
        throw NotProperlyDesignedError("code file: good set is not dominance closed");
    return code;
}

inline void save_code(const CodeConfig& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << code_to_string(code);
}

inline CodeConfig load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return code_from_string(buf.str());
}

}  // namespace polarfast
