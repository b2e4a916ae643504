#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cclique {

/// Min-plus value: a signed integer or the infinity sentinel. Infinity is a
/// dedicated state, never a large integer, and addition saturates so that
/// inf + x == inf and no finite value can wrap into the sentinel.
class Weight {
public:
    constexpr Weight() : v_(0) {}
    constexpr explicit Weight(long long v) : v_(v) {
        if (v == kInf) throw std::invalid_argument("Weight: value collides with sentinel");
    }

    static constexpr Weight inf() {
        Weight w;
        w.v_ = kInf;
        return w;
    }

    constexpr bool is_inf() const { return v_ == kInf; }
    constexpr long long value() const {
        return is_inf() ? throw std::domain_error("Weight: value() on inf") : v_;
    }

    /// Saturating addition.
    friend Weight operator+(Weight a, Weight b) {
        if (a.is_inf() || b.is_inf()) return inf();
        Weight r;
        if (__builtin_add_overflow(a.v_, b.v_, &r.v_) || r.v_ == kInf)
            throw std::overflow_error("Weight: finite addition overflow");
        return r;
    }

    friend Weight min(Weight a, Weight b) { return a <= b ? a : b; }

    friend constexpr bool operator==(Weight a, Weight b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Weight a, Weight b) { return a.v_ != b.v_; }
    /// Total order with inf greater than every finite value.
    friend constexpr bool operator<(Weight a, Weight b) {
        if (a.is_inf()) return false;
        if (b.is_inf()) return true;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator<=(Weight a, Weight b) { return a < b || a == b; }
    friend constexpr bool operator>(Weight a, Weight b) { return b < a; }
    friend constexpr bool operator>=(Weight a, Weight b) { return b <= a; }

    std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, Weight w) { return os << w.str(); }

    /// Raw representation used by the word codec; kInf encodes infinity.
    constexpr long long raw() const { return v_; }
    static constexpr Weight from_raw(long long r) {
        Weight w;
        w.v_ = r;
        return w;
    }

private:
    static constexpr long long kInf = std::numeric_limits<long long>::max();
    long long v_;
};

}  // namespace cclique
