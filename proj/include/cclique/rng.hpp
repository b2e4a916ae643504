#pragma once

#include <cstdint>

namespace cclique {

/// Deterministic 64-bit generator (splitmix64). Used everywhere instead of
/// <random> engines so that runs are bit-reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound >= 1. Multiply-shift; the bias is
    /// negligible for the bounds used here and the result is deterministic.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Uniform integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Bernoulli(p) with p given as numerator/denominator.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    /// Derive an independent stream (for per-node or per-trial generators).
    Rng fork(std::uint64_t stream) const {
        Rng r(state_ ^ (0x6a09e667f3bcc909ULL + stream * 0xd1342543de82ef95ULL));
        r.next();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace cclique
