#pragma once

#include <string>

#include "gsm/dag.hpp"
#include "gsm/protocol.hpp"

namespace gsm {

struct AttackState {
    Dag dag;
    BlockSet ignored = 0;   // attacker has not considered these yet
    BlockSet withheld = 0;  // attacker-mined, not released
    BlockSet visible = 1;   // delivered to the defender
    LocalState att;
    LocalState def;

    View full() const { return View(dag, dag.all()); }
    View attacker_view() const { return View(dag, dag.all() & ~ignored); }
    View defender_view() const { return View(dag, visible); }

    /// Applies an old-to-new id mapping produced by Dag::restrict or a
    /// permutation; masks and local states follow.
    void remap_masks(const std::vector<BlockId>& map);

    /// Compact byte encoding; equal iff the states are equal.
    std::string key() const;

    /// Edge list followed by mask and local state lines.
    std::string dump() const;

    bool operator==(const AttackState&) const = default;
};

/// Throws std::logic_error naming the first violated mask constraint.
void check_masks(const AttackState& s);

}  // namespace gsm
