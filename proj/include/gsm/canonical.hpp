#pragma once

#include <array>
#include <stdexcept>

#include "gsm/state.hpp"

namespace gsm {

class CanonizationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Label-independent block color: miner, visible, ignored, withheld, then the
/// protocol hints of the attacker's and the defender's local state.
using BlockColor = std::array<int, 6>;

BlockColor color_of(const AttackState& s, const Protocol& rules, BlockId b);

/// Relabels s by the lexicographically smallest encoding over all
/// color-preserving topological orders with genesis fixed.
AttackState canonical_form(const AttackState& s, const Protocol& rules);

/// Applies perm (old id to new id) to dag, masks and local states. Parent lists
/// are normalized: sorted, or first parent kept and the rest sorted.
AttackState relabel(const AttackState& s, const std::vector<BlockId>& perm, bool positional_first_parent);

}  // namespace gsm
