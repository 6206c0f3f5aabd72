#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsm {

using BlockId = std::uint8_t;
using BlockSet = std::uint64_t;

inline constexpr int kMaxBlocks = 64;

enum class Miner : std::uint8_t { Genesis = 0, Defender = 1, Attacker = 2 };

const char* to_string(Miner m);

constexpr BlockSet bit(BlockId b) { return BlockSet{1} << b; }
constexpr bool contains(BlockSet s, BlockId b) { return (s >> b) & 1u; }
constexpr int count(BlockSet s) { return std::popcount(s); }

/// Ascending block ids contained in s.
std::vector<BlockId> members(BlockSet s);

class DagError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Block DAG with topological ids: every parent id is smaller than its child's.
class Dag {
public:
    Dag();

    BlockId append(std::vector<BlockId> parents, Miner miner);

    int size() const { return static_cast<int>(parents_.size()); }
    BlockSet all() const;

    const std::vector<BlockId>& parents(BlockId b) const;
    Miner miner(BlockId b) const;
    BlockSet children(BlockId b) const;

    int height(BlockId b) const;
    BlockSet past(BlockId b) const;
    BlockSet future(BlockId b) const;

    /// Renames block i to perm[i]. The permutation must keep parents below children.
    Dag relabel(const std::vector<BlockId>& perm) const;

    /// Keeps the listed blocks, compacting ids in ascending order. Parent
    /// references to dropped blocks vanish. Returns old-to-new id mapping with
    /// 0xff for dropped blocks.
    std::vector<BlockId> restrict(BlockSet keep, Dag& out) const;

    void set_miner(BlockId b, Miner m) { check(b); miners_[b] = m; }
    void set_parents(BlockId b, std::vector<BlockId> ps) { check(b); parents_[b] = std::move(ps); rebuild(); }

    /// One line per block: `child <- parent,parent`.
    std::string edge_list() const;

    bool operator==(const Dag& o) const { return parents_ == o.parents_ && miners_ == o.miners_; }

private:
    void check(BlockId b) const;
    void rebuild();

    std::vector<std::vector<BlockId>> parents_;
    std::vector<Miner> miners_;
    std::vector<BlockSet> past_;
    std::vector<std::uint8_t> height_;
};

inline constexpr BlockId kDropped = 0xff;

/// Restricted view of a Dag. Parent lists are never filtered.
class View {
public:
    View(const Dag& dag, BlockSet blocks) : dag_(&dag), blocks_(blocks & dag.all()) {}

    const Dag& dag() const { return *dag_; }
    BlockSet blocks() const { return blocks_; }
    bool has(BlockId b) const { return contains(blocks_, b); }

    const std::vector<BlockId>& parents(BlockId b) const { return dag_->parents(b); }
    BlockSet children(BlockId b) const { return dag_->children(b) & blocks_; }
    Miner miner(BlockId b) const { return dag_->miner(b); }
    int height(BlockId b) const { return dag_->height(b); }
    BlockSet past(BlockId b) const { return dag_->past(b); }
    BlockSet future(BlockId b) const { return dag_->future(b) & blocks_; }
    BlockSet tips() const;

private:
    const Dag* dag_;
    BlockSet blocks_;
};

}  // namespace gsm
