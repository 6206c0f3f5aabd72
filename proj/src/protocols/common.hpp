#pragma once

#include <algorithm>
#include <vector>

#include "gsm/dag.hpp"

namespace gsm::detail {

/// Genesis-first walk along first parents.
inline std::vector<BlockId> first_parent_chain(const Dag& dag, BlockId tip) {
    std::vector<BlockId> out{tip};
    while (!dag.parents(out.back()).empty())
        out.push_back(dag.parents(out.back()).front());
    std::reverse(out.begin(), out.end());
    return out;
}

inline BlockSet as_set(const std::vector<BlockId>& bs) {
    BlockSet s = 0;
    for (BlockId b : bs)
        s |= bit(b);
    return s;
}

}  // namespace gsm::detail
