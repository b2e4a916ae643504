#pragma once

// Internal routing machinery: word flattening, balanced intermediate
// assignment, and round schedules. Everything here is deterministic in the
// (src, dst) pattern; payloads are carried along untouched.

#include <vector>

#include "cclique/network.hpp"

namespace cclique {
namespace detail {

/// Batch flattened to parallel arrays in the stable global order
/// (src ascending, enqueue order within src).
struct FlatBatch {
    int n = 0;
    std::vector<NodeId> src, dst;
    std::vector<Word> payload;

    std::size_t size() const { return src.size(); }
};

FlatBatch flatten(const Batch& batch);

/// Max multiplicity over ordered pairs, loopback excluded. Direct delivery
/// needs exactly this many rounds.
long long direct_round_count(const FlatBatch& fb);

/// Max over nodes of words sent or received, loopback excluded.
long long max_node_load(const FlatBatch& fb);

/// Per-word intermediate for two-hop relaying. The assignment is balanced:
/// at most ceil(L/n) words share any (src, intermediate) or (intermediate,
/// dst) pair, where L = max_node_load. For power-of-two n this uses
/// recursive Euler splits; otherwise an exact bipartite edge colouring (or,
/// above a size cutoff, a folded Euler split within a factor of two).
std::vector<NodeId> assign_intermediates(const FlatBatch& fb);

using Schedule = std::vector<std::vector<ScheduledSend>>;

/// One round per multiplicity level on each ordered pair.
Schedule schedule_direct(const FlatBatch& fb);

/// Strict two phases: all first legs, then all second legs.
Schedule schedule_relay_strict(const FlatBatch& fb, const std::vector<NodeId>& inter);

/// Pipelined greedy execution of the two-hop plan: second legs forward as
/// soon as their word has arrived and the pair is free; first legs are paced
/// one slice per round.
Schedule schedule_relay_pipelined(const FlatBatch& fb, const std::vector<NodeId>& inter);

}  // namespace detail
}  // namespace cclique
