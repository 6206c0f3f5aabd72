#pragma once

#include "support.hpp"

namespace gsm::test {

constexpr Miner D = Miner::Defender;
constexpr Miner A = Miner::Attacker;

inline BlockSet set_of(std::initializer_list<int> ids) {
    BlockSet s = 0;
    for (int b : ids)
        s |= bit(static_cast<BlockId>(b));
    return s;
}

// Eight blocks after genesis; attacker withholds 6 and 7 and ignores 3, 5 and 8.
inline AttackState eight_blocks(const Protocol& rules) {
    return make_state(rules,
                      {{{0}, D}, {{0}, A}, {{1}, D}, {{1}, A}, {{3, 2}, D}, {{4, 2}, A}, {{6}, A}, {{5, 4}, D}},
                      set_of({3, 5, 8}), set_of({6, 7}), set_of({0, 1, 2, 3, 4, 5}));
}

// Bitcoin fork: defender chain 1-3-5, attacker chain 2-4-6-7 with 6 and 7 withheld.
inline AttackState bitcoin_fork(const Protocol& rules) {
    return make_state(rules, {{{0}, D}, {{0}, A}, {{1}, D}, {{2}, A}, {{3}, D}, {{4}, A}, {{6}, A}},
                      set_of({1, 3, 5}), set_of({6, 7}), set_of({0, 1, 2, 3, 4}));
}

}  // namespace gsm::test
