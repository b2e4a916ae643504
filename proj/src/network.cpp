#include "cclique/network.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "scheduler.hpp"

namespace cclique {

namespace {
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
std::uint64_t hash_chain(std::uint64_t h, std::uint64_t v) {
    return mix64(h ^ (v + 0x517cc1b727220a95ULL));
}
}  // namespace

Inbox::Inbox(int n, const Batch& batch) : n_(n) {
    offsets_.assign(static_cast<std::size_t>(n) * n + 1, 0);
    for (NodeId s = 0; s < n; ++s)
        for (const auto& p : batch.from(s)) ++offsets_[static_cast<std::size_t>(p.dst) * n + s + 1];
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    data_.resize(offsets_.back());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (NodeId s = 0; s < n; ++s)
        for (const auto& p : batch.from(s))
            data_[cursor[static_cast<std::size_t>(p.dst) * n + s]++] = p.payload;
}

CliqueNetwork::CliqueNetwork(int n, std::uint64_t seed, NetworkOptions opt)
    : n_(n), seed_(seed), opt_(opt) {
    if (n < 1) throw std::invalid_argument("CliqueNetwork: need at least one node");
    stats_.n = n;
    stats_.seed = seed;
    pair_stamp_.assign(static_cast<std::size_t>(n) * n, -1);
    node_stamp_out_.assign(n, -1);
    node_stamp_in_.assign(n, -1);
    node_out_.assign(n, 0);
    node_in_.assign(n, 0);
    begin_phase("init");
}

PhaseStats& CliqueNetwork::current_phase() { return stats_.phases.back(); }

void CliqueNetwork::begin_phase(const std::string& label) {
    // Reuse an empty trailing phase instead of stacking no-op entries.
    if (!stats_.phases.empty() && stats_.phases.back().rounds == 0 &&
        stats_.phases.back().max_words_out() == 0) {
        stats_.phases.back().label = label;
        return;
    }
    PhaseStats p;
    p.label = label;
    p.words_out.assign(n_, 0);
    p.words_in.assign(n_, 0);
    stats_.phases.push_back(std::move(p));
}

void CliqueNetwork::count_phase_words(const Batch& batch) {
    auto& phase = current_phase();
    for (NodeId s = 0; s < n_; ++s) {
        phase.words_out[s] += static_cast<long long>(batch.from(s).size());
        for (const auto& p : batch.from(s)) ++phase.words_in[p.dst];
    }
}

long long CliqueNetwork::commit_rounds(const std::vector<std::vector<detail::ScheduledSend>>& by_round) {
    for (std::size_t r = 0; r < by_round.size(); ++r) {
        ++epoch_;
        std::uint64_t round_hash = 0;
        for (const auto& s : by_round[r]) {
            if (s.src == s.dst) throw std::logic_error("ledger: loopback send scheduled");
            std::size_t key = static_cast<std::size_t>(s.src) * n_ + s.dst;
            if (pair_stamp_[key] == epoch_)
                throw std::logic_error("ledger: ordered pair used twice in a round");
            pair_stamp_[key] = epoch_;
            if (node_stamp_out_[s.src] != epoch_) {
                node_stamp_out_[s.src] = epoch_;
                node_out_[s.src] = 0;
            }
            if (node_stamp_in_[s.dst] != epoch_) {
                node_stamp_in_[s.dst] = epoch_;
                node_in_[s.dst] = 0;
            }
            stats_.max_out = std::max(stats_.max_out, ++node_out_[s.src]);
            stats_.max_in = std::max(stats_.max_in, ++node_in_[s.dst]);
            ++stats_.total_words;
            round_hash += mix64(static_cast<std::uint64_t>(key) + 1);
            if (opt_.trace == TraceMode::Full)
                trace_.push_back(TraceEntry{stats_.rounds_total + static_cast<long long>(r), s.src,
                                            s.dst, s.payload});
        }
        pattern_hash_ = hash_chain(pattern_hash_, round_hash);
    }
    stats_.rounds_total += static_cast<long long>(by_round.size());
    current_phase().rounds += static_cast<long long>(by_round.size());
    return static_cast<long long>(by_round.size());
}

std::vector<Word> CliqueNetwork::broadcast_all(const std::vector<Word>& one_per_node) {
    if (static_cast<int>(one_per_node.size()) != n_)
        throw std::invalid_argument("broadcast_all: need exactly one word per node");
    std::vector<std::vector<detail::ScheduledSend>> round(1);
    round[0].reserve(static_cast<std::size_t>(n_) * (n_ - 1));
    for (NodeId v = 0; v < n_; ++v)
        for (NodeId u = 0; u < n_; ++u)
            if (u != v) round[0].push_back(detail::ScheduledSend{0, v, u, one_per_node[v]});
    auto& phase = current_phase();
    for (NodeId v = 0; v < n_; ++v) {
        phase.words_out[v] += n_ - 1;
        phase.words_in[v] += n_ - 1;
    }
    commit_rounds(round);
    return one_per_node;
}

Inbox CliqueNetwork::route_oblivious(const Batch& batch, RelayMode mode) {
    if (batch.n() != n_) throw std::invalid_argument("route: batch node count mismatch");
    count_phase_words(batch);
    auto fb = detail::flatten(batch);
    long long direct = detail::direct_round_count(fb);
    if (direct > 0) {
        bool relay = false;
        if (mode == RelayMode::Relay) relay = true;
        if (mode == RelayMode::Auto) {
            long long q = (detail::max_node_load(fb) + n_ - 1) / n_;
            relay = direct > q + 2;
        }
        if (relay) {
            auto inter = detail::assign_intermediates(fb);
            commit_rounds(detail::schedule_relay_pipelined(fb, inter));
        } else {
            commit_rounds(detail::schedule_direct(fb));
        }
    }
    return Inbox(n_, batch);
}

Inbox CliqueNetwork::route_balanced(const Batch& batch, long long c) {
    if (batch.n() != n_) throw std::invalid_argument("route: batch node count mismatch");
    if (c < 1) throw std::invalid_argument("route_balanced: bound must be >= 1");
    std::vector<long long> out(n_, 0), in(n_, 0);
    for (NodeId s = 0; s < n_; ++s) {
        out[s] = static_cast<long long>(batch.from(s).size());
        for (const auto& p : batch.from(s)) ++in[p.dst];
    }
    const long long cap = c * n_;
    std::ostringstream offenders;
    for (NodeId v = 0; v < n_; ++v)
        if (out[v] > cap || in[v] > cap)
            offenders << " node " << v << " out=" << out[v] << " in=" << in[v];
    if (offenders.tellp() > 0)
        throw std::invalid_argument("route_balanced: load above " + std::to_string(cap) +
                                    " words:" + offenders.str());

    count_phase_words(batch);
    auto fb = detail::flatten(batch);
    long long direct = detail::direct_round_count(fb);
    if (direct > 0) {
        if (direct <= 2) {
            commit_rounds(detail::schedule_direct(fb));
        } else {
            auto inter = detail::assign_intermediates(fb);
            auto relay = detail::schedule_relay_strict(fb, inter);
            if (direct <= static_cast<long long>(relay.size()))
                commit_rounds(detail::schedule_direct(fb));
            else
                commit_rounds(relay);
        }
    }
    return Inbox(n_, batch);
}

void CliqueNetwork::idle_rounds(long long k) {
    for (long long i = 0; i < k; ++i) pattern_hash_ = hash_chain(pattern_hash_, 0);
    stats_.rounds_total += k;
    current_phase().rounds += k;
}

void CliqueNetwork::pad_phase_to(long long target) {
    long long cur = current_phase().rounds;
    if (cur < target) idle_rounds(target - cur);
}

std::string CliqueNetwork::stats_json(const std::string& algorithm) const {
    nlohmann::ordered_json j;
    j["algorithm"] = algorithm;
    j["n"] = n_;
    j["rounds_total"] = stats_.rounds_total;
    j["phases"] = nlohmann::ordered_json::array();
    for (const auto& p : stats_.phases) {
        nlohmann::ordered_json pj;
        pj["label"] = p.label;
        pj["rounds"] = p.rounds;
        pj["max_words_out"] = p.max_words_out();
        pj["max_words_in"] = p.max_words_in();
        j["phases"].push_back(pj);
    }
    j["max_out"] = stats_.max_out;
    j["max_in"] = stats_.max_in;
    j["total_words"] = stats_.total_words;
    j["seed"] = seed_;
    return j.dump();
}

}  // namespace cclique
