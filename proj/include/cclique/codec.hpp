#pragma once

#include <vector>

#include "cclique/network.hpp"

namespace cclique {

/// Fragments semiring elements into network words and back. Each element
/// costs exactly sr.words_per_element() ledger slots. One codec per node
/// keeps the scratch buffer thread-private.
template <class SR>
class WordCodec {
public:
    explicit WordCodec(const SR& sr) : sr_(sr), buf_(sr.words_per_element()) {}

    void send(Batch& batch, NodeId src, NodeId dst, const typename SR::value_type& v) {
        sr_.encode(v, buf_.data());
        for (Word w : buf_) batch.push(src, dst, w);
    }

    typename SR::value_type recv(InboxReader& reader, NodeId dst, NodeId src) {
        for (auto& w : buf_) w = reader.next(dst, src);
        return sr_.decode(buf_.data());
    }

private:
    SR sr_;
    std::vector<Word> buf_;
};

}  // namespace cclique
