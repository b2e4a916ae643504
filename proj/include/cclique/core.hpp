#pragma once

#include <cstdint>

namespace cclique {

/// One network word: the O(log n)-bit message unit of the model. Multi-word
/// elements are fragmented into several of these.
using Word = std::uint64_t;

using NodeId = int;

}  // namespace cclique
