#pragma once

// LLR arithmetic shared by every decoder. Positive LLR favours bit 0; a hard
// decision at exactly 0 yields bit 0. All results are clamped to +-kLlrMax,
// beyond which tanh saturates in double precision anyway.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace polarfast {

inline constexpr double kLlrMax = 40.0;

using LlrBlock = std::vector<double>;

inline double clamp_llr(double v) { return std::clamp(v, -kLlrMax, kLlrMax); }

inline int hard_bit(double llr) { return llr < 0.0 ? 1 : 0; }

namespace detail {
inline thread_local std::uint64_t* g_cn_counter = nullptr;
inline thread_local std::uint64_t* g_min_counter = nullptr;

class CounterScope {
  public:
    explicit CounterScope(std::uint64_t*& slot) : slot_(slot), prev_(slot) { slot_ = &count_; }
    ~CounterScope() { slot_ = prev_; }
    CounterScope(const CounterScope&) = delete;
    CounterScope& operator=(const CounterScope&) = delete;
    std::uint64_t count() const { return count_; }

  private:
    std::uint64_t*& slot_;
    std::uint64_t count_ = 0;
    std::uint64_t* prev_;
};

}  // namespace detail

// Count check-node operations / list-minimum searches performed on the
// current thread while the scope is alive.
class CnOpCounterScope : public detail::CounterScope {
  public:
    CnOpCounterScope() : CounterScope(detail::g_cn_counter) {}
};

class MinOpCounterScope : public detail::CounterScope {
  public:
    MinOpCounterScope() : CounterScope(detail::g_min_counter) {}
};

inline void note_min_search() {
    if (detail::g_min_counter) ++*detail::g_min_counter;
}

// Check-node operation 2 atanh(tanh(a/2) tanh(b/2)), evaluated in a
// sign-magnitude form that stays finite for large inputs:
//   |out| = min(x, y) + log1p(e^-(x+y)) - log1p(e^-|x-y|),  x = |a|, y = |b|.
inline double cn_op(double a, double b) {
    if (detail::g_cn_counter) ++*detail::g_cn_counter;
    const bool negative = (a < 0.0) != (b < 0.0);
    const double x = std::fabs(a), y = std::fabs(b);
    double m = std::min(x, y) + std::log1p(std::exp(-(x + y))) - std::log1p(std::exp(-std::fabs(x - y)));
    if (m < 0.0) m = 0.0;  // round-off guard; |out| <= min(x, y) must hold
    return clamp_llr(negative ? -m : m);
}

// Variable-node update: the partial-sum bit decides whether the upper-branch
// LLR is added or subtracted.
inline double vn_op(double a, double b, int bit) {
    return clamp_llr(bit ? b - a : a + b);
}

}  // namespace polarfast
