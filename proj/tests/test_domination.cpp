#include <catch2/catch_amalgamated.hpp>

#include <bitset>
#include <set>

#include <polarfast/case_tables.hpp>
#include <polarfast/domination.hpp>

using namespace polarfast;

TEST_CASE("binary domination basics") {
    CHECK(binary_dominates(7, 5, 3));
    CHECK_FALSE(binary_dominates(6, 5, 3));
    for (int i = 0; i < 8; ++i) CHECK(binary_dominates(i, i, 3));
    CHECK_THROWS_AS(binary_dominates(8, 0, 3), std::invalid_argument);
}

TEST_CASE("binary domination is a partial order up to width 5") {
    const int t = 5, n = 1 << t;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool ij = binary_dominates(i, j, t);
            bool ji = binary_dominates(j, i, t);
            if (ij && ji) CHECK(i == j);
            if (!ij) continue;
            for (int k = 0; k < n; ++k)
                if (binary_dominates(j, k, t)) CHECK(binary_dominates(i, k, t));
        }
}

TEST_CASE("dominance closure predicate") {
    CHECK(is_dominance_closed(IndexSet(3, {3, 5, 6, 7})));
    CHECK_FALSE(is_dominance_closed(IndexSet(3, {5, 6})));
    CHECK(is_dominance_closed(IndexSet(3, {})));
}

TEST_CASE("domination contiguity predicate") {
    CHECK(is_domination_contiguous(IndexSet(3, {3, 5, 6, 7})));
    // convex but not upward closed
    CHECK(is_domination_contiguous(IndexSet(3, {5, 6})));
    CHECK_FALSE(is_dominance_closed(IndexSet(3, {5, 6})));
    // 7 covers 1 through both 3 and 5, so {7, 1} is not convex
    CHECK_FALSE(is_domination_contiguous(IndexSet(3, {1, 7})));
    CHECK(is_domination_contiguous(IndexSet(3, {3, 7})));
}

TEST_CASE("bit permutations act on index sets") {
    BitPermutation swap2({1, 0});
    CHECK(apply_permutation(IndexSet(2, {0, 2, 3}), swap2) == IndexSet(2, {0, 1, 3}));
    auto id3 = BitPermutation::identity(3);
    IndexSet s(3, {1, 3, 6});
    CHECK(apply_permutation(s, id3) == s);
    BitPermutation rot({1, 2, 0});
    CHECK(apply_permutation(s, rot).size() == s.size());
    CHECK_THROWS_AS(apply_permutation(IndexSet(3, {1}), swap2), std::invalid_argument);
    CHECK_THROWS_AS(BitPermutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("admissible set counts match the known sequence") {
    CHECK(enumerate_admissible_sets(1).size() == 2);
    CHECK(enumerate_admissible_sets(2).size() == 3);
    CHECK(enumerate_admissible_sets(4).size() == 6);
    CHECK(enumerate_admissible_sets(8).size() == 20);
    CHECK(enumerate_admissible_sets(16).size() == 168);
    CHECK(enumerate_admissible_sets(32).size() == 7581);
    CHECK_THROWS_AS(enumerate_admissible_sets(3), std::invalid_argument);
}

TEST_CASE("admissible sets are closed and convex") {
    for (int r : {1, 2, 4, 8, 16}) {
        for (const auto& s : enumerate_admissible_sets(r)) {
            CHECK(is_dominance_closed(s));
            CHECK(is_domination_contiguous(s));
        }
    }
}

TEST_CASE("width-5 composition agrees with closure") {
    // every composed set must be dominance closed; spot check against the
    // direct predicate instead of a second full scan
    auto sets = enumerate_admissible_sets(32);
    for (std::size_t i = 0; i < sets.size(); i += 97) CHECK(is_dominance_closed(sets[i]));
    std::set<std::uint64_t> distinct;
    for (const auto& s : sets) distinct.insert(s.to_mask());
    CHECK(distinct.size() == sets.size());
}

TEST_CASE("convexity is preserved by bit permutations, exhaustively at width 4") {
    // precompute convexity for all subsets of {0..15}
    std::vector<std::uint32_t> between(256);
    for (int h = 0; h < 16; ++h)
        for (int j = 0; j < 16; ++j) {
            if ((h & j) != j) continue;
            std::uint32_t m = 0;
            int free = h & ~j;
            for (int sub = free;; sub = (sub - 1) & free) {
                m |= 1u << (j | sub);
                if (sub == 0) break;
            }
            between[static_cast<std::size_t>(h * 16 + j)] = m;
        }
    std::bitset<65536> convex;
    for (std::uint32_t m = 0; m < 65536; ++m) {
        bool ok = true;
        for (int h = 0; h < 16 && ok; ++h) {
            if (!((m >> h) & 1u)) continue;
            for (int j = 0; j < 16; ++j) {
                if (!((m >> j) & 1u) || (h & j) != j) continue;
                if ((between[static_cast<std::size_t>(h * 16 + j)] & ~m) != 0) {
                    ok = false;
                    break;
                }
            }
        }
        convex[m] = ok;
    }
    // sanity: convexity includes all 168 admissible sets
    std::size_t admissible_convex = 0;
    for (const auto& s : enumerate_admissible_sets(16))
        admissible_convex += convex[s.to_mask()] ? 1 : 0;
    REQUIRE(admissible_convex == 168);

    std::vector<int> perm{0, 1, 2, 3};
    std::size_t checked = 0;
    do {
        BitPermutation p(perm);
        for (std::uint32_t m = 0; m < 65536; ++m) {
            if (!convex[m]) continue;
            std::uint32_t pm = 0;
            for (int e = 0; e < 16; ++e)
                if ((m >> e) & 1u) pm |= 1u << p.apply(e);
            if (!convex[pm]) {
                CAPTURE(m, pm);
                REQUIRE(convex[pm]);
            }
            ++checked;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(checked > 0);
}

TEST_CASE("conjugacy classes of the R=8 admissible sets") {
    auto sets = enumerate_admissible_sets(8);
    auto classes = conjugacy_classes(sets);
    CHECK(classes.size() == 10);

    auto find_class = [&](const IndexSet& s) -> const std::vector<IndexSet>* {
        for (const auto& cls : classes)
            for (const auto& member : cls)
                if (member == s) return &cls;
        return nullptr;
    };

    // the three (8,2) sets are conjugates of one another
    auto* k2 = find_class(IndexSet(3, {6, 7}));
    REQUIRE(k2 != nullptr);
    CHECK(k2->size() == 3);
    std::set<std::uint64_t> k2_masks;
    for (const auto& s : *k2) k2_masks.insert(s.to_mask());
    CHECK(k2_masks.count(IndexSet(3, {5, 7}).to_mask()) == 1);
    CHECK(k2_masks.count(IndexSet(3, {3, 7}).to_mask()) == 1);

    // k = 4 splits into the extended-Hamming singleton and three repetitions
    auto* hamming = find_class(IndexSet(3, {3, 5, 6, 7}));
    REQUIRE(hamming != nullptr);
    CHECK(hamming->size() == 1);
    auto* reps = find_class(IndexSet(3, {4, 5, 6, 7}));
    REQUIRE(reps != nullptr);
    CHECK(reps->size() == 3);
    std::set<std::uint64_t> rep_masks;
    for (const auto& s : *reps) rep_masks.insert(s.to_mask());
    CHECK(rep_masks.count(IndexSet(3, {2, 3, 6, 7}).to_mask()) == 1);
    CHECK(rep_masks.count(IndexSet(3, {1, 3, 5, 7}).to_mask()) == 1);

    // the full set is permutation invariant
    auto* full = find_class(IndexSet(3, {0, 1, 2, 3, 4, 5, 6, 7}));
    REQUIRE(full != nullptr);
    CHECK(full->size() == 1);
}

TEST_CASE("canonical tables") {
    const auto& t8 = canonical_table(8);
    CHECK(t8.size() == 20);
    std::size_t retained8 = 0;
    for (const auto& e : t8) retained8 += e.retained ? 1 : 0;
    CHECK(retained8 == 9);

    std::set<std::uint32_t> retained_masks8;
    for (const auto& e : t8)
        if (e.retained) retained_masks8.insert(e.mask.bits);
    CHECK(retained_masks8 ==
          std::set<std::uint32_t>{0xFF, 0xFE, 0xFC, 0xF8, 0xE8, 0xE0, 0xC0, 0x80, 0x00});

    for (const auto& e : t8) {
        CHECK(e.k == e.mask.k());
        if (e.mask.bits == 0xFE) CHECK(e.d_min == 8);
        if (e.mask.bits == 0xE8) CHECK(e.d_min == 4);
        if (e.mask.bits == 0xF0) CHECK(e.d_min == 2);
    }

    const auto& t16 = canonical_table(16);
    CHECK(t16.size() == 21);
    for (const auto& e : t16) CHECK(e.retained);

    // every retained good set appears in the admissible enumeration
    for (int r : {8, 16}) {
        std::set<std::uint64_t> admissible;
        for (const auto& s : enumerate_admissible_sets(r)) admissible.insert(s.to_mask());
        for (const auto& e : canonical_table(r))
            if (e.retained) CHECK(admissible.count(e.mask.good_set().to_mask()) == 1);
    }
    CHECK_THROWS_AS(canonical_table(32), std::invalid_argument);
}

TEST_CASE("frozen mask conventions") {
    FrozenMask fe(0xFE, 8);
    CHECK(fe.hex() == "FE");
    CHECK(fe.k() == 1);
    CHECK(fe.frozen(0));
    CHECK_FALSE(fe.frozen(7));
    CHECK(fe.good_set() == IndexSet(3, {7}));

    FrozenMask e8(0xE8, 8);
    CHECK(e8.good_set() == IndexSet(3, {3, 5, 6, 7}));
    CHECK(FrozenMask::from_good_set(IndexSet(3, {3, 5, 6, 7}), 8) == e8);

    FrozenMask e800(0xE800, 16);
    CHECK(e800.hex() == "E800");
    CHECK(e800.k() == 12);
}
