#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cclique/core.hpp"
#include "cclique/parallel.hpp"
#include "cclique/rng.hpp"
#include "cclique/stats.hpp"

namespace cclique {

/// Outgoing words of one routing step, bucketed by sender so that node-local
/// code can enqueue concurrently. Word order within a sender is the enqueue
/// order; the global order (sender asc, then enqueue order) is the stable
/// order every schedule is derived from.
class Batch {
public:
    explicit Batch(int n) : by_src_(n) {}

    int n() const { return static_cast<int>(by_src_.size()); }

    void push(NodeId src, NodeId dst, Word payload) {
        by_src_[src].push_back(Pending{dst, payload});
    }

    std::size_t size() const {
        std::size_t s = 0;
        for (const auto& b : by_src_) s += b.size();
        return s;
    }

    struct Pending {
        NodeId dst;
        Word payload;
    };
    const std::vector<Pending>& from(NodeId src) const { return by_src_[src]; }

private:
    std::vector<std::vector<Pending>> by_src_;
};

/// Delivered words in CSR layout keyed by (dst, src), each run in the
/// sender's enqueue order.
class Inbox {
public:
    Inbox() = default;
    Inbox(int n, const Batch& batch);

    int n() const { return n_; }

    /// Words src sent to dst, in enqueue order.
    const Word* begin(NodeId dst, NodeId src) const { return data_.data() + off(dst, src); }
    std::size_t count(NodeId dst, NodeId src) const { return off(dst, src + 1) - off(dst, src); }

private:
    std::size_t off(NodeId dst, NodeId src) const {
        return offsets_[static_cast<std::size_t>(dst) * n_ + src];
    }
    int n_ = 0;
    std::vector<std::size_t> offsets_;  // n*n + 1
    std::vector<Word> data_;
};

/// Sequential reader over an inbox with one cursor per (dst, src) pair.
class InboxReader {
public:
    explicit InboxReader(const Inbox& inbox)
        : inbox_(&inbox), cursor_(static_cast<std::size_t>(inbox.n()) * inbox.n(), 0) {}

    Word next(NodeId dst, NodeId src) {
        std::size_t& c = cursor_[static_cast<std::size_t>(dst) * inbox_->n() + src];
        return inbox_->begin(dst, src)[c++];
    }

private:
    const Inbox* inbox_;
    std::vector<std::size_t> cursor_;
};

enum class RelayMode { Auto, Direct, Relay };
enum class TraceMode { HashOnly, Full };

struct TraceEntry {
    long long round;
    NodeId src, dst;
    Word payload;
    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

namespace detail {
struct ScheduledSend {
    long long round;  // relative to the routing call
    NodeId src, dst;
    Word payload;
};
}  // namespace detail

struct NetworkOptions {
    TraceMode trace = TraceMode::HashOnly;
    ExecMode exec = default_exec_mode();
};

/// Simulated congested clique: n nodes, synchronous rounds, and a ledger
/// enforcing one word per ordered pair per round. Loopback delivery is free
/// and unledgered.
class CliqueNetwork {
public:
    explicit CliqueNetwork(int n, std::uint64_t seed = 0, NetworkOptions opt = {});

    int n() const { return n_; }
    std::uint64_t seed() const { return seed_; }
    ExecMode exec_mode() const { return opt_.exec; }
    Rng rng(std::uint64_t stream) const { return Rng(seed_).fork(stream); }

    /// Start (or switch to) a labeled accounting phase.
    void begin_phase(const std::string& label);

    /// Every node contributes one word; afterwards every node holds all n
    /// values. Consumes exactly one round.
    std::vector<Word> broadcast_all(const std::vector<Word>& one_per_node);

    /// Deliver a batch whose (src,dst) pattern is globally known. The greedy
    /// schedule is deterministic in the pattern alone; with relaying the
    /// words are spread over intermediates and legs are pipelined.
    Inbox route_oblivious(const Batch& batch, RelayMode mode = RelayMode::Auto);

    /// Two-phase relay for batches with per-node load at most c*n words in
    /// and out; rejects overloaded batches with a per-node report. Consumes
    /// at most 2*ceil(c*n/(n-1)) + 2 rounds.
    Inbox route_balanced(const Batch& batch, long long c);

    /// Idle padding: advance the clock so the current phase spans at least
    /// `target` rounds (used by fixed-budget algorithms).
    void pad_phase_to(long long target);
    void idle_rounds(long long k);

    const RoundStats& stats() const { return stats_; }
    std::string stats_json(const std::string& algorithm) const;

    /// Order-insensitive digest of the (src,dst,round) multiset.
    std::uint64_t pattern_hash() const { return pattern_hash_; }
    const std::vector<TraceEntry>& trace() const { return trace_; }

private:
    // Applies scheduled sends to the ledger; returns rounds consumed.
    long long commit_rounds(const std::vector<std::vector<detail::ScheduledSend>>& by_round);
    void count_phase_words(const Batch& batch);
    PhaseStats& current_phase();

    int n_;
    std::uint64_t seed_;
    NetworkOptions opt_;
    RoundStats stats_;
    std::uint64_t pattern_hash_ = 0;
    std::vector<TraceEntry> trace_;

    // Round-scoped scratch (epoch-stamped).
    std::vector<long long> pair_stamp_;
    std::vector<long long> node_stamp_out_, node_stamp_in_;
    std::vector<long long> node_out_, node_in_;
    long long epoch_ = 0;
};

}  // namespace cclique
