#pragma once

// Self-checks behind the `verify-tables` command: admissible-set counts per
// block size, consistency of the canonical case tables (membership in the
// enumeration, minimum distances against brute force, conjugacy structure),
// and the latency table against independently frozen sample evaluations.

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <vector>

#include "polarfast/block_decoders.hpp"
#include "polarfast/case_tables.hpp"
#include "polarfast/domination.hpp"
#include "polarfast/latency.hpp"

namespace polarfast {

namespace detail {

inline bool check(std::ostream& out, bool ok, const std::string& what) {
    out << (ok ? "ok   " : "FAIL ") << what << "\n";
    return ok;
}

}  // namespace detail

inline bool verify_admissible_counts(std::ostream& out) {
    const std::vector<std::pair<int, std::size_t>> expected = {
        {1, 2}, {2, 3}, {4, 6}, {8, 20}, {16, 168}, {32, 7581}};
    bool ok = true;
    for (auto [r, count] : expected) {
        auto sets = enumerate_admissible_sets(r);
        bool match = sets.size() == count;
        ok &= detail::check(out, match,
                            "admissible sets R=" + std::to_string(r) + ": " +
                                std::to_string(sets.size()) + " (expect " + std::to_string(count) + ")");
        if (r <= 16) {
            bool closed = true;
            for (const auto& s : sets) closed &= is_dominance_closed(s) && is_domination_contiguous(s);
            ok &= detail::check(out, closed, "R=" + std::to_string(r) + " sets closed and convex");
        }
    }
    return ok;
}

inline bool verify_case_table(std::ostream& out, int r, std::size_t expect_rows,
                              std::size_t expect_retained) {
    const auto& table = canonical_table(r);
    bool ok = detail::check(out, table.size() == expect_rows,
                            "case table R=" + std::to_string(r) + " has " +
                                std::to_string(table.size()) + " rows (expect " +
                                std::to_string(expect_rows) + ")");
    std::size_t retained = 0;
    bool k_ok = true, unique_ok = true;
    std::set<std::uint32_t> seen;
    for (const auto& e : table) {
        if (e.retained) ++retained;
        k_ok &= e.k == e.mask.k() && e.case_id == e.k;
        unique_ok &= seen.insert(e.mask.bits).second;
    }
    ok &= detail::check(out, retained == expect_retained,
                        "retained masks R=" + std::to_string(r) + ": " + std::to_string(retained) +
                            " (expect " + std::to_string(expect_retained) + ")");
    ok &= detail::check(out, k_ok, "case ids equal information counts");
    ok &= detail::check(out, unique_ok, "masks are distinct");

    // every tabulated good set must be an admissible set for the block size
    auto admissible = enumerate_admissible_sets(r);
    std::set<std::uint64_t> adm_masks;
    for (const auto& s : admissible) adm_masks.insert(s.to_mask());
    bool member_ok = true;
    for (const auto& e : table) member_ok &= adm_masks.count(e.mask.good_set().to_mask()) != 0;
    ok &= detail::check(out, member_ok, "tabulated good sets are admissible");

    bool dmin_ok = true;
    for (const auto& e : table) {
        if (e.k == 0) {
            dmin_ok &= e.d_min == 0;
            continue;
        }
        dmin_ok &= min_distance(e.mask) == e.d_min;
    }
    ok &= detail::check(out, dmin_ok, "tabulated minimum distances match brute force");
    return ok;
}

// The 20 admissible R=8 sets split into 10 conjugacy classes; the retained
// masks cover 9 of them (the three 2-distance k=4 conjugates keep none), and
// class members share a minimum distance.
inline bool verify_r8_conjugacy(std::ostream& out) {
    auto sets = enumerate_admissible_sets(8);
    auto classes = conjugacy_classes(sets);
    bool ok = detail::check(out, classes.size() == 10,
                            "R=8 conjugacy classes: " + std::to_string(classes.size()) + " (expect 10)");

    std::map<std::uint64_t, int> retained_good;
    for (const auto& e : canonical_table(8))
        if (e.retained) retained_good[e.mask.good_set().to_mask()] = e.d_min;

    int classes_with_retained = 0;
    bool dmin_consistent = true;
    for (const auto& cls : classes) {
        int found = 0;
        for (const auto& s : cls)
            if (retained_good.count(s.to_mask())) ++found;
        if (found > 0) ++classes_with_retained;
        dmin_consistent &= found <= 1;
        int dmin = -1;
        for (const auto& s : cls) {
            if (s.size() == 0) continue;
            int d = min_distance(FrozenMask::from_good_set(s, 8));
            if (dmin < 0) dmin = d;
            dmin_consistent &= d == dmin;
        }
    }
    ok &= detail::check(out, classes_with_retained == 9, "retained masks cover 9 of 10 classes");
    ok &= detail::check(out, dmin_consistent, "conjugate sets share their minimum distance");
    return ok;
}

inline bool verify_latency_table(std::ostream& out) {
    struct Sample {
        int r;
        std::uint32_t mask;
        int at_3_2;  // T_c = 3, T_m = 2
        int at_2_3;  // T_c = 2, T_m = 3
    };
    // frozen by hand from the latency expressions
    const std::vector<Sample> samples = {
        {8, 0xFF, 0, 0},      {8, 0xFE, 1, 1},      {8, 0xFC, 1, 1},      {8, 0xF8, 3, 4},
        {8, 0xE8, 4, 4},      {8, 0xE0, 4, 3},      {8, 0xC0, 2, 3},      {8, 0x80, 2, 3},
        {8, 0x00, 0, 0},      {16, 0xFFFF, 0, 0},   {16, 0xFFFE, 1, 1},   {16, 0xFFFC, 1, 1},
        {16, 0xFFF8, 3, 4},   {16, 0xFFE8, 5, 5},   {16, 0xFEE8, 6, 6},   {16, 0xFFC0, 3, 4},
        {16, 0xFEE0, 6, 5},   {16, 0xFF80, 3, 4},   {16, 0xFEC0, 4, 5},   {16, 0xFE80, 4, 5},
        {16, 0xFCC0, 4, 4},   {16, 0xFC80, 4, 4},   {16, 0xF880, 8, 8},   {16, 0xE880, 11, 11},
        {16, 0xE800, 9, 8},   {16, 0xC0C0, 2, 3},   {16, 0xE000, 4, 3},   {16, 0xC000, 2, 3},
        {16, 0x8000, 2, 3},   {16, 0x0000, 0, 0},
    };
    bool ok = true;
    for (const auto& s : samples) {
        FrozenMask mask(s.mask, s.r);
        bool match = case_latency(mask, {3, 2}) == s.at_3_2 && case_latency(mask, {2, 3}) == s.at_2_3;
        if (!match)
            detail::check(out, false,
                          "latency mismatch for mask " + mask.hex() + " R=" + std::to_string(s.r));
        ok &= match;
    }
    ok &= detail::check(out, ok, "latency table matches frozen samples");
    ok &= detail::check(out, sc_block_latency(8, {3, 1}) == 29, "SC baseline R=8, T_c=3 is 29");
    ok &= detail::check(out, sc_block_latency(16, {3, 1}) == 61, "SC baseline R=16, T_c=3 is 61");
    return ok;
}

inline bool verify_tables(std::ostream& out) {
    bool ok = true;
    ok &= verify_admissible_counts(out);
    ok &= verify_case_table(out, 8, 20, 9);
    ok &= verify_case_table(out, 16, 21, 21);
    ok &= verify_r8_conjugacy(out);
    ok &= verify_latency_table(out);
    out << (ok ? "all table checks passed\n" : "table checks FAILED\n");
    return ok;
}

}  // namespace polarfast
