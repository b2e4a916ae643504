#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cclique {

/// Per-phase slice of the round ledger. Word counts are per node and include
/// free loopback words; the ledgered maxima below do not.
struct PhaseStats {
    std::string label;
    long long rounds = 0;
    std::vector<long long> words_out;  // indexed by node
    std::vector<long long> words_in;

    long long max_words_out() const {
        long long m = 0;
        for (auto w : words_out) m = std::max(m, w);
        return m;
    }
    long long max_words_in() const {
        long long m = 0;
        for (auto w : words_in) m = std::max(m, w);
        return m;
    }
};

/// Round ledger summary for one network run.
struct RoundStats {
    int n = 0;
    std::uint64_t seed = 0;
    long long rounds_total = 0;
    std::vector<PhaseStats> phases;
    long long max_out = 0;       // ledgered words sent by any node in any round
    long long max_in = 0;        // ledgered words received by any node in any round
    long long total_words = 0;   // ledgered (loopback excluded)

    const PhaseStats* phase(const std::string& label) const {
        for (const auto& p : phases)
            if (p.label == label) return &p;
        return nullptr;
    }
};

}  // namespace cclique
