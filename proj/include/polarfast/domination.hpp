#pragma once

// Binary-domination order on {0, ..., 2^t - 1}: i dominates j when every bit
// set in j is also set in i. Good-index sets of well-designed polar codes are
// closed upward under this order, which is what makes few block decoders
// sufficient. This header provides the order predicates, bit permutations,
// and enumeration of all admissible (dominance-closed) sets per block size.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "polarfast/bits.hpp"

namespace polarfast {

// A subset of {0, ..., 2^width - 1}, elements kept sorted ascending.
struct IndexSet {
    int width = 0;
    std::vector<int> elements;

    IndexSet() = default;
    IndexSet(int w, std::vector<int> elems) : width(w), elements(std::move(elems)) {
        std::sort(elements.begin(), elements.end());
        validate();
    }

    static IndexSet from_mask(std::uint64_t mask, int width) {
        IndexSet s;
        s.width = width;
        for (int e = 0; e < (1 << width); ++e)
            if ((mask >> e) & 1u) s.elements.push_back(e);
        return s;
    }

    // Membership bitmask: bit e set <-> e in the set. Width <= 6 in this library.
    std::uint64_t to_mask() const {
        std::uint64_t m = 0;
        for (int e : elements) m |= std::uint64_t{1} << e;
        return m;
    }

    std::size_t size() const { return elements.size(); }
    bool contains(int e) const {
        return std::binary_search(elements.begin(), elements.end(), e);
    }

    void validate() const {
        int limit = 1 << width;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (elements[i] < 0 || elements[i] >= limit)
                throw std::invalid_argument("index set element out of range");
            if (i > 0 && elements[i] == elements[i - 1])
                throw std::invalid_argument("index set has duplicate elements");
        }
    }

    bool operator==(const IndexSet& o) const {
        return width == o.width && elements == o.elements;
    }
};

// mapping[k] = destination bit position of source bit k; a bijection on [0, t).
struct BitPermutation {
    std::vector<int> mapping;

    explicit BitPermutation(std::vector<int> m) : mapping(std::move(m)) {
        std::vector<bool> seen(mapping.size(), false);
        for (int v : mapping) {
            if (v < 0 || v >= static_cast<int>(mapping.size()) || seen[v])
                throw std::invalid_argument("bit permutation is not a bijection");
            seen[v] = true;
        }
    }

    static BitPermutation identity(int t) {
        std::vector<int> m(t);
        std::iota(m.begin(), m.end(), 0);
        return BitPermutation(std::move(m));
    }

    int width() const { return static_cast<int>(mapping.size()); }

    int apply(int x) const {
        int y = 0;
        for (int k = 0; k < width(); ++k)
            if ((x >> k) & 1) y |= 1 << mapping[k];
        return y;
    }
};

inline bool binary_dominates(int i, int j, int t) {
    if (t < 0 || i < 0 || j < 0 || i >= (1 << t) || j >= (1 << t))
        throw std::invalid_argument("binary_dominates: index out of range");
    return (i & j) == j;
}

// Up-set test: S contains every dominator of each of its members. Closure
// under single-bit raises is equivalent and cheaper.
inline bool is_dominance_closed(const IndexSet& s) {
    std::uint64_t m = s.to_mask();
    for (int e : s.elements)
        for (int b = 0; b < s.width; ++b) {
            int up = e | (1 << b);
            if (!((m >> up) & 1u)) return false;
        }
    return true;
}

// Order-convexity: h, j in S and h >= i >= j imply i in S.
inline bool is_domination_contiguous(const IndexSet& s) {
    std::uint64_t m = s.to_mask();
    for (int h : s.elements)
        for (int j : s.elements) {
            if ((h & j) != j) continue;  // need h >= j
            // every i between h and j shares j's bits and stays inside h's
            int free = h & ~j;
            for (int sub = free; ; sub = (sub - 1) & free) {
                int i = j | sub;
                if (!((m >> i) & 1u)) return false;
                if (sub == 0) break;
            }
        }
    return true;
}

inline IndexSet apply_permutation(const IndexSet& s, const BitPermutation& p) {
    if (p.width() != s.width)
        throw std::invalid_argument("apply_permutation: width mismatch");
    std::vector<int> out;
    out.reserve(s.elements.size());
    for (int e : s.elements) out.push_back(p.apply(e));
    return IndexSet(s.width, std::move(out));
}

namespace detail {

// All dominance-closed subsets of {0,...,2^t - 1} as membership bitmasks,
// found by scanning every subset. Fine up to t = 4 (65536 candidates).
inline std::vector<std::uint32_t> upset_masks_exhaustive(int t) {
    int universe = 1 << t;
    std::vector<std::uint32_t> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << universe); ++m) {
        bool ok = true;
        for (int e = 0; e < universe && ok; ++e) {
            if (!((m >> e) & 1u)) continue;
            for (int b = 0; b < t; ++b) {
                int up = e | (1 << b);
                if (!((m >> up) & 1u)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.push_back(static_cast<std::uint32_t>(m));
    }
    return out;
}

}  // namespace detail

// All admissible good-index sets for one R-bit block. Exhaustive scan for
// R <= 16; for R = 32 a width-5 up-set splits into two width-4 up-sets
// (S0 from the bottom half, S1 from the shifted top half) with S0 inside S1,
// so composing such pairs enumerates them without a 2^32 scan.
inline std::vector<IndexSet> enumerate_admissible_sets(int r) {
    switch (r) {
        case 1:
        case 2:
        case 4:
        case 8:
        case 16: {
            int t = log2_exact(static_cast<std::size_t>(r));
            auto masks = detail::upset_masks_exhaustive(t);
            std::vector<IndexSet> out;
            out.reserve(masks.size());
            for (std::uint32_t m : masks) out.push_back(IndexSet::from_mask(m, t));
            return out;
        }
        case 32: {
            auto halves = detail::upset_masks_exhaustive(4);
            std::vector<IndexSet> out;
            for (std::uint32_t s1 : halves) {
                for (std::uint32_t s0 : halves) {
                    if ((s0 & ~s1) != 0) continue;  // need S0 subset of S1
                    std::uint64_t m = static_cast<std::uint64_t>(s0) |
                                      (static_cast<std::uint64_t>(s1) << 16);
                    out.push_back(IndexSet::from_mask(m, 5));
                }
            }
            std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
                return a.to_mask() < b.to_mask();
            });
            return out;
        }
        default:
            throw std::invalid_argument("enumerate_admissible_sets: unsupported block size");
    }
}

// Partition into classes of sets that map onto each other under some bit
// permutation. Brute force over all t! permutations; t <= 5 here.
inline std::vector<std::vector<IndexSet>> conjugacy_classes(const std::vector<IndexSet>& sets) {
    if (sets.empty()) return {};
    int t = sets.front().width;
    for (const auto& s : sets)
        if (s.width != t) throw std::invalid_argument("conjugacy_classes: mixed widths");

    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<BitPermutation> perms;
    do {
        perms.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<std::uint64_t, std::vector<IndexSet>> classes;
    for (const auto& s : sets) {
        std::uint64_t canon = ~std::uint64_t{0};
        for (const auto& p : perms)
            canon = std::min(canon, apply_permutation(s, p).to_mask());
        classes[canon].push_back(s);
    }
    std::vector<std::vector<IndexSet>> out;
    out.reserve(classes.size());
    for (auto& [canon, members] : classes) {
        std::sort(members.begin(), members.end(), [](const IndexSet& a, const IndexSet& b) {
            return a.to_mask() < b.to_mask();
        });
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace polarfast
