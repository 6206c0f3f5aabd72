#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gsm/attack.hpp"
#include "gsm/canonical.hpp"

namespace gsm::test {

struct BlockSpec {
    std::vector<BlockId> parents;
    Miner miner;
};

// Builds a state from blocks 1..n and masks, replaying each miner's local
// state in id order over the blocks it knows.
inline AttackState make_state(const Protocol& rules, const std::vector<BlockSpec>& blocks, BlockSet ignored,
                              BlockSet withheld, BlockSet visible) {
    AttackState s;
    for (const auto& b : blocks)
        s.dag.append(b.parents, b.miner);
    s.ignored = ignored;
    s.withheld = withheld;
    s.visible = visible;
    AttackState replay = s;
    replay.visible = 1;
    replay.ignored = s.dag.all() & ~BlockSet{1};
    s.att = rules.init(View(s.dag, 1));
    s.def = rules.init(View(s.dag, 1));
    for (BlockId b = 1; b < s.dag.size(); ++b) {
        BlockSet upto = (bit(b) << 1) - 1;
        if (!contains(ignored, b))
            s.att = rules.update(s.att, View(s.dag, upto & ~ignored), b);
        if (contains(visible, b))
            s.def = rules.update(s.def, View(s.dag, upto & visible), b);
    }
    return s;
}

// Every topological relabeling with genesis fixed, as old-to-new maps.
inline void for_each_relabeling(const Dag& dag, const std::function<void(const std::vector<BlockId>&)>& f) {
    int n = dag.size();
    std::vector<BlockId> order(n);
    std::iota(order.begin(), order.end(), BlockId{0});
    do {
        std::vector<BlockId> perm(n);
        for (int i = 0; i < n; ++i)
            perm[order[i]] = static_cast<BlockId>(i);
        bool ok = true;
        for (int c = 1; c < n && ok; ++c)
            for (BlockId p : dag.parents(static_cast<BlockId>(c)))
                if (perm[p] >= perm[c])
                    ok = false;
        if (ok)
            f(perm);
    } while (std::next_permutation(order.begin() + 1, order.end()));
}

inline std::size_t count_relabelings(const Dag& dag) {
    std::size_t n = 0;
    for_each_relabeling(dag, [&](const std::vector<BlockId>&) { ++n; });
    return n;
}

inline bool isomorphic(const AttackState& a, const AttackState& b, const Protocol& rules) {
    if (a.dag.size() != b.dag.size())
        return false;
    bool positional = rules.positional_first_parent();
    std::vector<BlockId> id(b.dag.size());
    std::iota(id.begin(), id.end(), BlockId{0});
    AttackState target = relabel(b, id, positional);
    bool found = false;
    for_each_relabeling(a.dag, [&](const std::vector<BlockId>& perm) {
        if (!found && relabel(a, perm, positional) == target)
            found = true;
    });
    return found;
}

// Breadth-first walk over raw attack states, visiting each at most once.
inline std::vector<AttackState> reachable(const AttackSpace& space, std::size_t limit) {
    std::vector<AttackState> out;
    std::unordered_set<std::string> seen;
    std::deque<AttackState> queue{space.initial()};
    seen.insert(queue.front().key());
    while (!queue.empty() && out.size() < limit) {
        AttackState s = std::move(queue.front());
        queue.pop_front();
        for (Action a : space.actions(s))
            for (auto& o : space.apply(s, a))
                if (seen.insert(o.state.key()).second)
                    queue.push_back(o.state);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace gsm::test
